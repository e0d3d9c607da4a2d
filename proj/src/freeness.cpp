#include "csa/freeness.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace csa {

ExponentMultiset sorted_exponents(ExponentMultiset e) {
    std::sort(e.begin(), e.end());
    return e;
}

namespace {

ExponentMultiset pad_pair(int len, ExpPair p) {
    ExponentMultiset out(static_cast<size_t>(len), 0);
    if (len >= 1) out[len - 1] = p.e2;
    if (len >= 2) out[len - 2] = p.e1;
    return sorted_exponents(out);
}

// big = small + {x}: returns x, or nullopt when the multisets differ more.
std::optional<long> multiset_single_extra(const ExponentMultiset& big,
                                          const ExponentMultiset& small) {
    if (big.size() != small.size() + 1) return std::nullopt;
    std::optional<long> extra;
    size_t i = 0, j = 0;
    while (i < big.size()) {
        if (j < small.size() && big[i] == small[j]) {
            ++i;
            ++j;
        } else {
            if (extra) return std::nullopt;
            extra = big[i];
            ++i;
        }
    }
    return extra;
}

std::vector<bool> support_mask(const Multiplicity& mu) {
    std::vector<bool> m(mu.size());
    for (size_t i = 0; i < mu.size(); ++i) m[i] = mu[i] > 0;
    return m;
}

std::array<Int, 2> project_pair(const IntMatrix& basis, const std::vector<Int>& normal) {
    auto coords = coordinates_in_row_space(basis, normal);
    Int l = 1;
    for (const auto& q : coords) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Int> v(2, 0);
    for (size_t j = 0; j < coords.size() && j < 2; ++j) {
        Rat scaled = coords[j] * Rat(l);
        v[j] = scaled.get_num();
    }
    v = primitive_vector(std::move(v));
    return {v[0], v[1]};
}

// Geometry of one rank-2 flat through a fixed hyperplane h0: the members
// (full-arrangement indices), their 2-dimensional forms, and the trace
// normal inside h0. Shared across all multiplicity states; Euler values are
// cached per member-multiplicity vector.
struct FlatGeom {
    std::vector<int> members;
    int h0_pos = -1;
    std::vector<std::array<Int, 2>> forms;
    std::vector<Int> trace;  // primitive normal of the trace inside h0
    std::map<Multiplicity, long> euler_cache;
};

// All rank-2 flats through h0 in the full arrangement; per support mask the
// relevant subset is filtered (a flat survives when it has a positive-
// multiplicity member besides h0).
struct HyperplaneGeom {
    std::vector<FlatGeom> flats;
};

// Restriction data for one (support mask, h0) pair.
struct RestrView {
    std::vector<int> flat_ids;  // indices into HyperplaneGeom::flats, trace-sorted
    Arrangement restr;          // ambient dim-1
    int restr_rank = 0;
    std::vector<std::array<Int, 2>> proj2;  // 2D frames when restr_rank <= 2
    std::map<Multiplicity, ExpPair> rank2_cache;
};

HyperplaneGeom build_hyperplane_geom(const Arrangement& a, int h0) {
    HyperplaneGeom g;
    IntMatrix frame = kernel_basis(IntMatrix::from_rows({a.hyperplanes[h0].normal}));
    std::map<std::vector<int>, FlatGeom> flats;
    for (int j = 0; j < a.size(); ++j) {
        if (j == h0) continue;
        IntMatrix basis = canonical_row_space(
            IntMatrix::from_rows({a.hyperplanes[h0].normal, a.hyperplanes[j].normal}));
        std::vector<int> members;
        for (int i = 0; i < a.size(); ++i)
            if (in_row_space_rref(basis, a.hyperplanes[i].normal)) members.push_back(i);
        if (flats.count(members)) continue;
        FlatGeom fg;
        fg.members = members;
        for (size_t p = 0; p < members.size(); ++p) {
            if (members[p] == h0) fg.h0_pos = static_cast<int>(p);
            fg.forms.push_back(project_pair(basis, a.hyperplanes[members[p]].normal));
        }
        std::vector<Int> v(frame.rows, 0);
        for (int r = 0; r < frame.rows; ++r) {
            Int s = 0;
            for (int c = 0; c < a.dim; ++c) s += a.hyperplanes[j].normal[c] * frame.at(r, c);
            v[r] = s;
        }
        fg.trace = primitive_vector(std::move(v));
        flats.emplace(std::move(members), std::move(fg));
    }
    for (auto& [members, fg] : flats) g.flats.push_back(std::move(fg));
    return g;
}

// Euler multiplicity of the flat for the given member multiplicities
// (zeros allowed; h0 must be positive).
long euler_of_flat(FlatGeom& fg, const Multiplicity& member_mults) {
    auto it = fg.euler_cache.find(member_mults);
    if (it != fg.euler_cache.end()) return it->second;
    Rank2MultiArrangement loc{fg.forms, member_mults};
    ExpPair full = rank2_exponents(loc);
    loc.mults[fg.h0_pos] -= 1;
    ExpPair del = rank2_exponents(loc);
    long val = shared_exponent(full, del);
    fg.euler_cache.emplace(member_mults, val);
    return val;
}

RestrView build_restr_view(const Arrangement& a, HyperplaneGeom& geom, int h0,
                           const std::vector<bool>& mask) {
    RestrView view;
    std::vector<std::pair<std::vector<Int>, int>> traced;
    for (size_t f = 0; f < geom.flats.size(); ++f) {
        const FlatGeom& fg = geom.flats[f];
        bool alive = false;
        for (int m : fg.members)
            if (m != h0 && mask[m]) alive = true;
        if (alive) traced.emplace_back(fg.trace, static_cast<int>(f));
    }
    std::sort(traced.begin(), traced.end());
    view.restr.dim = a.dim - 1;
    for (auto& [normal, idx] : traced) {
        view.restr.hyperplanes.push_back({normal});
        view.flat_ids.push_back(idx);
    }
    view.restr_rank = view.restr.size() ? rank(view.restr.normal_matrix()) : 0;
    if (view.restr_rank <= 2 && view.restr.size() > 0) {
        IntMatrix basis = canonical_row_space(view.restr.normal_matrix());
        for (const auto& h : view.restr.hyperplanes)
            view.proj2.push_back(project_pair(basis, h.normal));
    }
    return view;
}

struct MemoVal {
    enum Kind { FreeV, NotIF } kind = NotIF;
    ExponentMultiset exp;
    int h = -1;
    ExponentMultiset rexp;
};

struct ArrState {
    Arrangement arr;
    std::map<Multiplicity, MemoVal> memo;
    std::vector<HyperplaneGeom> geom;  // lazily built, one per hyperplane
    std::vector<bool> geom_built;
    std::map<std::pair<std::vector<bool>, int>, RestrView> views;

    HyperplaneGeom& geometry(int h0) {
        if (geom.empty()) {
            geom.resize(arr.size());
            geom_built.assign(arr.size(), false);
        }
        if (!geom_built[h0]) {
            geom[h0] = build_hyperplane_geom(arr, h0);
            geom_built[h0] = true;
        }
        return geom[h0];
    }

    RestrView& view(const std::vector<bool>& mask, int h0) {
        auto key = std::make_pair(mask, h0);
        auto it = views.find(key);
        if (it == views.end())
            it = views.emplace(key, build_restr_view(arr, geometry(h0), h0, mask)).first;
        return it->second;
    }
};

struct SearchCtx {
    uint64_t budget = kDefaultBudget;
    uint64_t states = 0;
    bool exhausted = false;
    std::map<std::string, ArrState> arrs;

    ArrState& get(const Arrangement& a) {
        auto [it, fresh] = arrs.try_emplace(a.key());
        if (fresh) it->second.arr = a;
        return it->second;
    }
};

const MemoVal* search_in(SearchCtx& ctx, ArrState& st, const Multiplicity& mu) {
    auto it = st.memo.find(mu);
    if (it != st.memo.end()) return &it->second;
    if (ctx.exhausted || ctx.states >= ctx.budget) {
        ctx.exhausted = true;
        return nullptr;
    }
    ++ctx.states;

    const int dim = st.arr.dim;
    if (mult_sum(mu) == 0) {
        MemoVal v;
        v.kind = MemoVal::FreeV;
        v.exp.assign(dim, 0);
        return &st.memo.emplace(mu, std::move(v)).first->second;
    }

    std::vector<int> candidates;
    for (int h = 0; h < st.arr.size(); ++h)
        if (mu[h] >= 1) candidates.push_back(h);
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](int x, int y) { return mu[x] > mu[y]; });

    auto mask = support_mask(mu);
    for (int h : candidates) {
        // Deletion side first: it is memoized and prunes most candidates.
        Multiplicity smaller = mu;
        smaller[h] -= 1;
        const MemoVal* sub = search_in(ctx, st, smaller);
        if (ctx.exhausted) return nullptr;
        if (!sub || sub->kind != MemoVal::FreeV) continue;
        const ExponentMultiset& del_exp = sub->exp;

        RestrView& view = st.view(mask, h);
        HyperplaneGeom& geom = st.geometry(h);
        Multiplicity euler;
        euler.reserve(view.flat_ids.size());
        for (int id : view.flat_ids) {
            FlatGeom& fg = geom.flats[id];
            Multiplicity member_mults(fg.members.size());
            for (size_t p = 0; p < fg.members.size(); ++p) member_mults[p] = mu[fg.members[p]];
            euler.push_back(euler_of_flat(fg, member_mults));
        }

        ExponentMultiset rexp;
        if (view.restr_rank <= 2) {
            auto cit = view.rank2_cache.find(euler);
            ExpPair pair;
            if (cit != view.rank2_cache.end()) {
                pair = cit->second;
            } else {
                pair = rank2_exponents({view.proj2, euler});
                view.rank2_cache.emplace(euler, pair);
            }
            rexp = pad_pair(dim - 1, pair);
        } else {
            // The only admissible restriction exponents are the deletion's
            // with the forced element removed; skip the nested search when
            // that element is absent.
            long forced = mult_sum(smaller) - mult_sum(euler);
            if (!std::binary_search(del_exp.begin(), del_exp.end(), forced)) continue;
            ArrState& nested = ctx.get(view.restr);
            const MemoVal* res = search_in(ctx, nested, euler);
            if (ctx.exhausted) return nullptr;
            if (!res || res->kind != MemoVal::FreeV) continue;
            rexp = res->exp;
        }

        auto extra = multiset_single_extra(del_exp, rexp);
        if (!extra) continue;  // restriction exponents not contained in the deletion's

        ExponentMultiset full = rexp;
        full.push_back(*extra + 1);
        full = sorted_exponents(full);
        MemoVal v;
        v.kind = MemoVal::FreeV;
        v.exp = std::move(full);
        v.h = h;
        v.rexp = std::move(rexp);
        return &st.memo.emplace(mu, std::move(v)).first->second;
    }
    MemoVal v;  // every hyperplane fails: not inductively free
    return &st.memo.emplace(mu, std::move(v)).first->second;
}

}  // namespace

Triple triple(const Arrangement& a, const Multiplicity& mu, int h0) {
    if (h0 < 0 || h0 >= a.size()) throw std::invalid_argument("triple: bad hyperplane index");
    if (static_cast<int>(mu.size()) != a.size())
        throw std::invalid_argument("triple: multiplicity length mismatch");
    if (mu[h0] < 1) throw std::invalid_argument("triple: mu(h0) must be >= 1");

    Triple t;
    t.deleted_mu = mu;
    t.deleted_mu[h0] -= 1;

    Support sup = support(a, mu);
    int h0s = -1;
    for (size_t i = 0; i < sup.index_map.size(); ++i)
        if (sup.index_map[i] == h0) h0s = static_cast<int>(i);

    Restriction res = restriction_simple(sup.arr, h0s);
    t.restriction = res.arr;
    for (const Flat& f : res.source_flats) {
        t.euler.push_back(euler_multiplicity(sup.arr, sup.mu, h0s, f));
        std::vector<int> orig;
        for (int i : f.closure) orig.push_back(sup.index_map[i]);
        t.flats.push_back(std::move(orig));
    }
    return t;
}

SearchResult inductive_free_search(const Arrangement& a, const Multiplicity& mu, uint64_t budget) {
    if (static_cast<int>(mu.size()) != a.size())
        throw std::invalid_argument("inductive_free_search: multiplicity length mismatch");
    SearchCtx ctx;
    ctx.budget = budget;
    ArrState& st = ctx.get(a);
    const MemoVal* res = search_in(ctx, st, mu);

    SearchResult out;
    out.states_visited = ctx.states;
    if (!res) {
        out.kind = SearchResult::Exhausted;
        return out;
    }
    if (res->kind != MemoVal::FreeV) {
        out.kind = SearchResult::NotInductivelyFree;
        return out;
    }
    out.kind = SearchResult::Free;
    out.exponents = res->exp;

    Certificate cert;
    cert.arrangement = a;
    Multiplicity cur = mu;
    while (mult_sum(cur) > 0) {
        const MemoVal& v = st.memo.at(cur);
        CertStep step;
        step.op = "delete";
        step.hyperplane = a.label(v.h);
        step.mult_before = cur;
        step.exponents = v.exp;
        step.restriction_exponents = v.rexp;
        cert.steps.push_back(std::move(step));
        cur[v.h] -= 1;
    }
    out.certificate = std::move(cert);
    return out;
}

namespace {

// Exponents of the Euler restriction of (a, mu) at h, certified from
// scratch (rank <= 2 directly, otherwise by a nested inductive search).
std::optional<ExponentMultiset> certified_restriction_exponents(const Arrangement& a,
                                                                const Multiplicity& mu, int h,
                                                                uint64_t budget) {
    Triple t = triple(a, mu, h);
    int r = t.restriction.size() ? rank(t.restriction.normal_matrix()) : 0;
    if (r <= 2) {
        ExpPair p = rank2_exponents(project_to_rank2(t.restriction, t.euler));
        return pad_pair(a.dim - 1, p);
    }
    SearchResult res = inductive_free_search(t.restriction, t.euler, budget);
    if (res.kind != SearchResult::Free) return std::nullopt;
    return res.exponents;
}

std::string exps_str(const ExponentMultiset& e) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << ")";
    return os.str();
}

}  // namespace

VerifyResult verify_certificate(const Certificate& cert, uint64_t budget) {
    const Arrangement& a = cert.arrangement;
    auto fail = [](int step, std::string reason) {
        return VerifyResult{false, step, std::move(reason)};
    };
    if (cert.steps.empty()) return fail(-1, "empty chain");

    for (size_t i = 0; i < cert.steps.size(); ++i) {
        const CertStep& s = cert.steps[i];
        const int si = static_cast<int>(i);
        if (static_cast<int>(s.mult_before.size()) != a.size())
            return fail(si, "multiplicity length mismatch");
        for (long m : s.mult_before)
            if (m < 0) return fail(si, "negative multiplicity");
        if (s.op != "delete" && s.op != "add") return fail(si, "unknown op '" + s.op + "'");

        int h = a.index_of(s.hyperplane);
        if (h < 0) return fail(si, "unknown hyperplane label '" + s.hyperplane + "'");

        ExponentMultiset cur = sorted_exponents(s.exponents);
        if (static_cast<int>(cur.size()) != a.dim) return fail(si, "exponent count != dim");
        if (std::accumulate(cur.begin(), cur.end(), 0L) != mult_sum(s.mult_before))
            return fail(si, "exponents do not sum to |mu|");

        // State after this step, and the larger side of the triple.
        Multiplicity next_mu = s.mult_before;
        Multiplicity big_mu = s.mult_before;
        if (s.op == "delete") {
            if (s.mult_before[h] < 1) return fail(si, "deleting a multiplicity-0 hyperplane");
            next_mu[h] -= 1;
        } else {
            next_mu[h] += 1;
            big_mu = next_mu;
        }

        if (i + 1 < cert.steps.size() && cert.steps[i + 1].mult_before != next_mu)
            return fail(si + 1, "multiplicity vector inconsistent with previous step");

        auto rexp = certified_restriction_exponents(a, big_mu, h, budget);
        if (!rexp) return fail(si, "restriction could not be certified free");
        if (sorted_exponents(s.restriction_exponents) != *rexp)
            return fail(si, "restriction exponents recompute to " + exps_str(*rexp));

        // Exponents of the next state: the next row, a fresh search when the
        // chain ends early, or all zeros at the empty multiarrangement.
        ExponentMultiset next_exp;
        if (i + 1 < cert.steps.size()) {
            next_exp = sorted_exponents(cert.steps[i + 1].exponents);
        } else if (mult_sum(next_mu) == 0) {
            next_exp.assign(a.dim, 0);
        } else {
            SearchResult tail = inductive_free_search(a, next_mu, budget);
            if (tail.kind != SearchResult::Free)
                return fail(si, "chain ends at an uncertified state");
            next_exp = tail.exponents;
        }

        const ExponentMultiset& big_exp = (s.op == "delete") ? cur : next_exp;
        const ExponentMultiset& small_exp = (s.op == "delete") ? next_exp : cur;
        auto b = multiset_single_extra(big_exp, *rexp);
        if (!b) return fail(si, "exponents do not extend the restriction exponents");
        auto b1 = multiset_single_extra(small_exp, *rexp);
        if (!b1 || *b1 != *b - 1)
            return fail(si, "deletion exponents do not drop the last exponent by 1");
    }
    return {true, -1, ""};
}

Poly defining_polynomial(const Arrangement& a, const Multiplicity& mu) {
    Poly q = Poly::constant(a.dim, 1);
    for (int i = 0; i < a.size(); ++i)
        q = q * Poly::linear_form(a.hyperplanes[i].normal).pow(static_cast<int>(mu[i]));
    return q;
}

bool saito_verify(const Arrangement& a, const Multiplicity& mu,
                  const std::vector<PolyDerivation>& basis) {
    const int l = a.dim;
    if (static_cast<int>(basis.size()) != l)
        throw std::invalid_argument("saito_verify: need dim derivations");
    for (const auto& theta : basis) {
        if (static_cast<int>(theta.size()) != l)
            throw std::invalid_argument("saito_verify: derivation arity mismatch");
        int deg = -1;
        for (const auto& f : theta) {
            if (f.is_zero()) continue;
            if (!f.is_homogeneous()) throw std::invalid_argument("saito_verify: non-homogeneous");
            if (deg < 0) deg = f.total_degree();
            else if (deg != f.total_degree())
                throw std::invalid_argument("saito_verify: mixed degrees in one derivation");
        }
    }
    // Membership: theta(alpha_H) divisible by alpha_H^mu(H).
    for (const auto& theta : basis) {
        for (int i = 0; i < a.size(); ++i) {
            if (mu[i] == 0) continue;
            Poly v(l);
            for (int j = 0; j < l; ++j) {
                if (a.hyperplanes[i].normal[j] == 0) continue;
                v = v + theta[j] * Rat(a.hyperplanes[i].normal[j]);
            }
            if (v.order_along(a.hyperplanes[i].normal) < mu[i]) return false;
        }
    }
    std::vector<std::vector<Poly>> m(l, std::vector<Poly>(l, Poly(l)));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) m[i][j] = basis[i][j];
    Poly det = poly_determinant(m);
    Poly q = defining_polynomial(a, mu);
    if (mult_sum(mu) == 0) return !det.is_zero() && det.total_degree() == 0;
    return det.is_constant_multiple_of(q);
}

B2FamilyData b2_family(int case_id, long k) {
    auto b2_forms = std::vector<std::vector<Int>>{{1, 0}, {0, 1}, {1, 1}, {2, 1}};
    auto basis_forms = std::vector<std::vector<Int>>{{1, 0}, {0, 1}, {1, 1}, {1, -1}};
    B2FamilyData d;
    auto x1 = Poly::variable(2, 0), x2 = Poly::variable(2, 1);
    auto zero = Poly(2);
    switch (case_id) {
        case 1: {
            if (k < 1) throw std::invalid_argument("b2_family: case 1 needs k >= 1");
            d.mu = {2 * k, 1, 2 * k, 1};
            d.exponents = {2 * k + 1, 2 * k + 1};
            d.basis_arrangement = make_arrangement(2, basis_forms);
            d.basis_mu = {2 * k, 2 * k, 1, 1};
            d.basis = {{x1.pow(2 * k) * x2, x1 * x2.pow(2 * k)},
                       {x1.pow(2 * k + 1), x2.pow(2 * k + 1)}};
            break;
        }
        case 2: {
            if (k < 1) throw std::invalid_argument("b2_family: case 2 needs k >= 1");
            d.mu = {2 * k + 1, 1, 2 * k + 1, 1};
            d.exponents = {2 * k + 1, 2 * k + 3};
            d.basis_arrangement = make_arrangement(2, basis_forms);
            d.basis_mu = {2 * k + 1, 2 * k + 1, 1, 1};
            d.basis = {{x1.pow(2 * k + 1), x2.pow(2 * k + 1)},
                       {zero, x1 * x1 * x2.pow(2 * k + 1) - x2.pow(2 * k + 3)}};
            break;
        }
        case 3: {
            if (k < 2) throw std::invalid_argument("b2_family: case 3 needs k >= 2");
            d.mu = {k, 1, k, 2 * k - 4};
            d.exponents = {2 * k - 2, 2 * k - 1};
            d.chain_mu = Multiplicity{k, 0, k, 2 * k - 4};
            d.chain_exponents = {2 * k - 2, 2 * k - 2};
            d.chain_hyperplane = 1;
            break;
        }
        case 4: {
            if (k < 2) throw std::invalid_argument("b2_family: case 4 needs k >= 2");
            d.mu = {k + 1, 1, k + 1, 2 * k - 4};
            d.exponents = {2 * k - 1, 2 * k};
            d.chain_mu = Multiplicity{k + 1, 0, k + 1, 2 * k - 4};
            d.chain_exponents = {2 * k - 1, 2 * k - 1};
            d.chain_hyperplane = 1;
            break;
        }
        default: throw std::invalid_argument("b2_family: case must be 1..4");
    }
    return d;
}

FreenessVerdict supersolvable_verify(const Arrangement& a, const Multiplicity& mu,
                                     const std::vector<std::vector<int>>& filtration) {
    Support sup = support(a, mu);
    std::map<int, int> to_sup;
    for (size_t i = 0; i < sup.index_map.size(); ++i) to_sup[sup.index_map[i]] = static_cast<int>(i);

    // Filtration sets in support indices; zero-multiplicity entries drop out.
    std::vector<std::vector<int>> filt;
    for (const auto& level : filtration) {
        std::vector<int> s;
        for (int i : level) {
            if (i < 0 || i >= a.size())
                throw std::invalid_argument("supersolvable_verify: bad hyperplane index");
            if (to_sup.count(i)) s.push_back(to_sup[i]);
        }
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        filt.push_back(std::move(s));
    }
    const int r = static_cast<int>(filt.size());
    for (int i = 1; i < r; ++i)
        if (!std::includes(filt[i].begin(), filt[i].end(), filt[i - 1].begin(), filt[i - 1].end()))
            throw std::invalid_argument("supersolvable_verify: filtration not nested");
    if (r < 1 || static_cast<int>(filt.back().size()) != sup.arr.size())
        throw std::invalid_argument("supersolvable_verify: last set must be the whole arrangement");
    for (int i = 0; i < r; ++i) {
        std::vector<std::vector<Int>> rows;
        for (int h : filt[i]) rows.push_back(sup.arr.hyperplanes[h].normal);
        if (rank(IntMatrix::from_rows(rows)) != i + 1)
            throw std::invalid_argument("supersolvable_verify: filtration level has wrong rank");
    }

    FreenessVerdict out;
    out.evidence = "supersolvable";

    // Modularity: every pairwise intersection inside A_i lies in some
    // hyperplane of A_{i-1}.
    for (int i = 1; i < r; ++i) {
        for (size_t p = 0; p < filt[i].size(); ++p) {
            for (size_t q = p + 1; q < filt[i].size(); ++q) {
                IntMatrix span = canonical_row_space(
                    IntMatrix::from_rows({sup.arr.hyperplanes[filt[i][p]].normal,
                                          sup.arr.hyperplanes[filt[i][q]].normal}));
                bool found = false;
                for (int h : filt[i - 1])
                    if (in_row_space_rref(span, sup.arr.hyperplanes[h].normal)) {
                        found = true;
                        break;
                    }
                if (!found) {
                    out.detail = "modularity fails at level " + std::to_string(i + 1);
                    return out;
                }
            }
        }
    }

    // Multiplicity inequalities of the inductive-freeness criterion.
    for (int d = 2; d < r; ++d) {
        std::vector<int> newly;
        for (int h : filt[d])
            if (!std::binary_search(filt[d - 1].begin(), filt[d - 1].end(), h)) newly.push_back(h);
        for (int hp : newly) {
            for (int hpp : filt[d - 1]) {
                IntMatrix span = canonical_row_space(IntMatrix::from_rows(
                    {sup.arr.hyperplanes[hp].normal, sup.arr.hyperplanes[hpp].normal}));
                std::vector<int> closure;
                for (int h : filt[d])
                    if (in_row_space_rref(span, sup.arr.hyperplanes[h].normal)) closure.push_back(h);
                if (closure.size() == 2) continue;
                long rhs = -1;
                for (int h : newly)
                    if (in_row_space_rref(span, sup.arr.hyperplanes[h].normal)) rhs += sup.mu[h];
                if (sup.mu[hpp] < rhs) {
                    out.detail = "multiplicity inequality fails at " + sup.arr.label(hpp);
                    return out;
                }
            }
        }
    }

    // Exponents: rank-2 stage exponents, then the multiplicity increments.
    Arrangement a2;
    a2.dim = sup.arr.dim;
    Multiplicity mu2;
    for (int h : filt[std::min(1, r - 1)]) {
        a2.hyperplanes.push_back(sup.arr.hyperplanes[h]);
        mu2.push_back(sup.mu[h]);
    }
    ExpPair e12 = rank2_exponents(project_to_rank2(a2, mu2));
    ExponentMultiset exps = {e12.e1, e12.e2};
    if (r == 1) exps = {0, mult_sum(mu2)};
    long prev = mult_sum(mu2);
    for (int d = 2; d < r; ++d) {
        long cur = 0;
        for (int h : filt[d]) cur += sup.mu[h];
        exps.push_back(cur - prev);
        prev = cur;
    }
    while (static_cast<int>(exps.size()) < a.dim) exps.push_back(0);
    out.status = FreenessVerdict::Free;
    out.exponents = sorted_exponents(exps);
    return out;
}

std::optional<Flat> totally_nonfree_witness(const Arrangement& a) {
    auto levels = full_lattice(a);
    for (int k = 3; k < static_cast<int>(levels.size()); ++k) {
        for (const Flat& f : levels[k]) {
            if (static_cast<int>(f.closure.size()) <= k) continue;
            auto [loc, loc_mu] = localization(a, ones(a.size()), f);
            if (is_generic(loc)) return f;
        }
    }
    return std::nullopt;
}

FreenessVerdict simple_free_rank3(const Arrangement& a) {
    Arrangement e = essentialize(a);
    if (e.dim != 3) throw std::invalid_argument("simple_free_rank3: rank must be 3");
    CharPoly chi = char_poly(e);
    auto [res, kappa] = ziegler_restriction(e, 0);
    ExpPair z = rank2_exponents(project_to_rank2(res.arr, kappa));

    CharPoly target;
    Int e1(z.e1), e2(z.e2);
    target.coeffs = {-(e1 * e2), e1 * e2 + e1 + e2, -(1 + e1 + e2), Int(1)};
    FreenessVerdict out;
    out.evidence = "rank3-criterion";
    if (chi == target) {
        out.status = FreenessVerdict::Free;
        out.exponents = sorted_exponents({1, z.e1, z.e2});
    } else {
        out.status = FreenessVerdict::NotFree;
        out.detail = "characteristic polynomial does not match Ziegler exponents (" +
                     std::to_string(z.e1) + "," + std::to_string(z.e2) + ")";
    }
    return out;
}

FreenessVerdict free_check(const Arrangement& a, const Multiplicity& mu, uint64_t budget) {
    FreenessVerdict out;
    Support sup = support(a, mu);
    if (sup.arr.size() == 0) {
        out.status = FreenessVerdict::Free;
        out.exponents.assign(a.dim, 0);
        out.evidence = "rank2";
        return out;
    }
    int r = rank(sup.arr.normal_matrix());
    if (r <= 2) {
        out.status = FreenessVerdict::Free;
        out.exponents = pad_pair(a.dim, rank2_exponents(project_to_rank2(sup.arr, sup.mu)));
        out.evidence = "rank2";
        return out;
    }
    if (nonfree_by_mixed_products(a, mu)) {
        out.status = FreenessVerdict::NotFree;
        out.evidence = "mixed-product";
        Int l = lmp2(a, mu);
        out.detail = "LMP(2) = " + l.get_str() + " exceeds best GMP(2)";
        return out;
    }
    if (auto w = totally_nonfree_witness(sup.arr)) {
        out.status = FreenessVerdict::NotFree;
        out.evidence = "generic-localization";
        out.detail = "generic localization of rank " + std::to_string(w->rank) + " on " +
                     std::to_string(w->closure.size()) + " hyperplanes";
        return out;
    }
    bool simple = std::all_of(sup.mu.begin(), sup.mu.end(), [](long m) { return m == 1; });
    if (simple && r == 3) {
        FreenessVerdict v = simple_free_rank3(sup.arr);
        if (v.status == FreenessVerdict::Free) {
            ExponentMultiset e = v.exponents;
            while (static_cast<int>(e.size()) < a.dim) e.push_back(0);
            v.exponents = sorted_exponents(e);
        }
        return v;
    }
    SearchResult res = inductive_free_search(a, mu, budget);
    if (res.kind == SearchResult::Free) {
        out.status = FreenessVerdict::Free;
        out.exponents = res.exponents;
        out.evidence = "certificate";
        return out;
    }
    out.status = FreenessVerdict::Unknown;
    out.evidence = res.kind == SearchResult::Exhausted ? "budget-exhausted" : "not-inductively-free";
    out.detail = "states visited: " + std::to_string(res.states_visited);
    return out;
}

}  // namespace csa
