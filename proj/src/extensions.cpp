#include "csa/extensions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "csa/invariants.hpp"

namespace csa {

Arrangement c3_arrangement() {
    return make_arrangement(3,
                            {{1, 0, 0},
                             {0, 1, 0},
                             {0, 0, 1},
                             {1, 1, 0},
                             {1, 0, 1},
                             {0, 1, 1},
                             {1, 1, 1}},
                            {"H_1", "H_2", "H_3", "H_12", "H_13", "H_23", "H_123"});
}

Arrangement deleted_c3() {
    return make_arrangement(
        3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}},
        {"H_1", "H_2", "H_3", "H_12", "H_13", "H_23"});
}

bool is_locally_a2(const Arrangement& a) {
    for (const Flat& f : rank2_flats(a))
        if (f.closure.size() > 3) return false;
    return true;
}

namespace {

struct TripleFlat {
    int i, j, k;          // hyperplane indices
    Int li, lj, lk;       // dependency li*ni + lj*nj + lk*nk = 0, entries +-1
};

// 3-element rank-2 localizations with their (primitive) linear dependency.
// nullopt when some dependency has a coefficient other than +-1.
std::optional<std::vector<TripleFlat>> triple_flats(const Arrangement& a) {
    std::vector<TripleFlat> out;
    for (const Flat& f : rank2_flats(a)) {
        if (f.closure.size() < 3) continue;
        if (f.closure.size() > 3) return std::nullopt;  // not locally A2
        IntMatrix cols(a.dim, 3);
        for (int c = 0; c < 3; ++c)
            for (int r = 0; r < a.dim; ++r)
                cols.at(r, c) = a.hyperplanes[f.closure[c]].normal[r];
        IntMatrix ker = kernel_basis(cols);
        if (ker.rows != 1) return std::nullopt;
        auto lam = primitive_vector(ker.row(0));
        for (const auto& x : lam)
            if (x != 1 && x != -1) return std::nullopt;
        out.push_back({f.closure[0], f.closure[1], f.closure[2], lam[0], lam[1], lam[2]});
    }
    return out;
}

}  // namespace

std::optional<std::vector<int>> positive_system(const Arrangement& a) {
    auto triples = triple_flats(a);
    if (!triples) return std::nullopt;

    // eps_i * lambda_i must not be all equal on any triple (then exactly one
    // signed form is the sum of the other two).
    std::vector<int> eps(a.size(), 0);
    std::function<bool(int)> assign = [&](int v) -> bool {
        if (v == a.size()) return true;
        for (int s : {1, -1}) {
            eps[v] = s;
            bool ok = true;
            for (const auto& t : *triples) {
                if (eps[t.i] == 0 || eps[t.j] == 0 || eps[t.k] == 0) continue;
                long pi = eps[t.i] * (t.li > 0 ? 1 : -1);
                long pj = eps[t.j] * (t.lj > 0 ? 1 : -1);
                long pk = eps[t.k] * (t.lk > 0 ? 1 : -1);
                if (pi == pj && pj == pk) {
                    ok = false;
                    break;
                }
            }
            if (ok && assign(v + 1)) return true;
        }
        eps[v] = 0;
        return false;
    };
    if (!assign(0)) return std::nullopt;
    return eps;
}

bool check_star(const Arrangement& a, const Multiplicity& mu) {
    auto eps = positive_system(a);
    if (!eps) throw std::runtime_error("check_star: no positive system");
    auto triples = triple_flats(a);
    for (const auto& t : *triples) {
        // Which signed form is the sum of the other two?
        int idx[3] = {t.i, t.j, t.k};
        Int lam[3] = {t.li, t.lj, t.lk};
        int sum_pos = -1;
        for (int p = 0; p < 3; ++p) {
            // eps*lam all equal except position p flipped
            long s0 = (*eps)[idx[0]] * (lam[0] > 0 ? 1 : -1);
            long s1 = (*eps)[idx[1]] * (lam[1] > 0 ? 1 : -1);
            long s2 = (*eps)[idx[2]] * (lam[2] > 0 ? 1 : -1);
            long v[3] = {s0, s1, s2};
            v[p] = -v[p];
            if (v[0] == v[1] && v[1] == v[2]) {
                sum_pos = p;
                break;
            }
        }
        if (sum_pos < 0) throw std::runtime_error("check_star: inconsistent orientation");
        int si = idx[sum_pos];
        int oj = idx[(sum_pos + 1) % 3], ok = idx[(sum_pos + 2) % 3];
        if (mu[si] % 2 != 0 && mu[oj] % 2 == 0 && mu[ok] % 2 == 0) return false;
    }
    return true;
}

namespace {
long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
}  // namespace

Arrangement extend(const Arrangement& a, const Multiplicity& mu, const SigmaShift& sigma) {
    if (static_cast<int>(mu.size()) != a.size() || static_cast<int>(sigma.size()) != a.size())
        throw std::invalid_argument("extend: length mismatch");
    std::vector<std::vector<Int>> normals;
    std::vector<std::string> labels;
    std::vector<Int> last(a.dim + 1, 0);
    last[a.dim] = 1;
    normals.push_back(last);
    labels.push_back("H_inf");
    for (int i = 0; i < a.size(); ++i) {
        if (mu[i] <= 0) continue;
        long lo = sigma[i] - floor_div(mu[i] - 1, 2);
        long hi = sigma[i] + floor_div(mu[i], 2);
        for (long k = lo; k <= hi; ++k) {
            std::vector<Int> v(a.dim + 1, 0);
            for (int c = 0; c < a.dim; ++c) v[c] = a.hyperplanes[i].normal[c];
            v[a.dim] = -k;
            normals.push_back(std::move(v));
            labels.push_back(a.label(i) + "[" + std::to_string(k) + "]");
        }
    }
    return make_arrangement(a.dim + 1, normals, labels);
}

LocalFreeness locally_free_along(const Arrangement& a, int h) {
    if (h < 0 || h >= a.size()) throw std::invalid_argument("locally_free_along: bad index");
    // Enumerate only the flats inside h, level by level. Rank <= 2
    // localizations are free automatically; rank 3 is decided by the
    // characteristic polynomial criterion; deeper localizations (possible
    // only in ambient dimension >= 5) stay undecided.
    const int max_rank = a.dim - 1;  // the origin is excluded
    std::vector<Flat> level = rank2_flats_through(a, h);
    bool unresolved = false;
    for (int k = 3; k <= max_rank; ++k) {
        std::map<std::vector<int>, Flat> next;
        for (const Flat& x : level) {
            for (int j = 0; j < a.size(); ++j) {
                if (std::binary_search(x.closure.begin(), x.closure.end(), j)) continue;
                std::vector<std::vector<Int>> rows;
                for (int r = 0; r < x.basis.rows; ++r) rows.push_back(x.basis.row(r));
                rows.push_back(a.hyperplanes[j].normal);
                IntMatrix basis = canonical_row_space(IntMatrix::from_rows(rows));
                if (basis.rows != k) continue;
                Flat f;
                f.basis = basis;
                f.rank = k;
                for (int i = 0; i < a.size(); ++i)
                    if (in_row_space_rref(basis, a.hyperplanes[i].normal)) f.closure.push_back(i);
                next.emplace(f.closure, std::move(f));
            }
        }
        level.clear();
        for (auto& [cl, f] : next) {
            if (k == 3) {
                auto [loc, loc_mu] = localization(a, ones(a.size()), f);
                if (simple_free_rank3(loc).status == FreenessVerdict::NotFree)
                    return {LocalFreeness::No, f};
            } else {
                unresolved = true;
            }
            level.push_back(std::move(f));
        }
    }
    if (unresolved) return {LocalFreeness::Unknown, std::nullopt};
    return {LocalFreeness::Yes, std::nullopt};
}

bool is_d_free_pattern(const Multiplicity& mu) {
    if (mu.size() != 6) throw std::invalid_argument("is_d_free_pattern: need 6 multiplicities");
    return mu[0] >= 2 && mu[0] % 2 == 0 && mu[0] == mu[1] && mu[1] == mu[2] && mu[3] == 1 &&
           mu[4] == 1 && mu[5] == 1;
}

namespace {

int pair_index(int i, int j) {
    if (i > j) std::swap(i, j);
    if (i == 1 && j == 2) return 3;
    if (i == 1 && j == 3) return 4;
    return 5;  // {2,3}
}

Multiplicity apply_vertex_perm(const Multiplicity& mu, const std::vector<int>& p) {
    Multiplicity out(6);
    for (int i = 1; i <= 3; ++i) out[i - 1] = mu[p[i - 1] - 1];
    out[3] = mu[pair_index(p[0], p[1])];
    out[4] = mu[pair_index(p[0], p[2])];
    out[5] = mu[pair_index(p[1], p[2])];
    return out;
}

// Rank-2 incidence of the deleted C3: three triple points over six lines.
const std::vector<std::vector<int>> kDTriples = {{0, 1, 3}, {0, 2, 4}, {1, 2, 5}};

bool lattice_isomorphic_to_d(const Arrangement& loc) {
    if (loc.size() != 6) return false;
    std::vector<std::vector<int>> triples, doubles;
    for (const Flat& f : rank2_flats(loc)) {
        if (f.closure.size() == 3) triples.push_back(f.closure);
        else if (f.closure.size() == 2) doubles.push_back(f.closure);
        else return false;
    }
    if (triples.size() != 3 || doubles.size() != 6) return false;
    std::vector<int> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (const auto& t : triples) {
            std::vector<int> img = {perm[t[0]], perm[t[1]], perm[t[2]]};
            std::sort(img.begin(), img.end());
            if (std::find(kDTriples.begin(), kDTriples.end(), img) == kDTriples.end()) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

struct RowMatch {
    int row;
    char pattern;
    SigmaShift sigma;
};

std::optional<RowMatch> match_row(const Multiplicity& m) {
    auto even = [&](int i) { return m[i] % 2 == 0; };
    auto odd = [&](int i) { return m[i] % 2 != 0; };
    SigmaShift parity_sigma = {0, 0, 0, m[3] % 2, m[4] % 2, m[5] % 2};
    if (even(0) && even(1) && odd(2) && odd(3) && odd(4)) return RowMatch{1, 'a', {0, 0, 0, 1, 1, 0}};
    if (even(0) && even(1) && odd(2) && odd(3) && even(4))
        return RowMatch{2, 'a', {0, 0, 0, 1, 0, 0}};
    if (even(0) && even(1) && even(2)) {
        if (m[3] >= 3) return RowMatch{3, 'c', parity_sigma};
        if (m[3] == 1 && m[4] >= 2 && m[5] >= 2) return RowMatch{4, 'b', parity_sigma};
        if (m[3] == 1 && m[4] == 1 && m[5] >= 2) return RowMatch{5, 'a', parity_sigma};
    }
    return std::nullopt;
}

// Generators and full hyperplane list of the localization pattern, as
// normals in the extended coordinates (x1, x2, x3, x4).
struct Pattern {
    std::vector<std::vector<Int>> generators;
    std::vector<std::vector<Int>> all;
};

Pattern pattern_flats(char which) {
    auto n = [](int a, int b, int c, int d) { return std::vector<Int>{a, b, c, d}; };
    switch (which) {
        case 'a':
            return {{n(0, 1, 0, 0), n(0, 0, 1, 0), n(1, 0, 0, -1)},
                    {n(0, 1, 0, 0), n(0, 0, 1, 0), n(1, 0, 0, -1), n(0, 1, 1, 0), n(1, 1, 0, -1),
                     n(1, 0, 1, -1)}};
        case 'b':
            return {{n(1, 0, 0, 0), n(0, 0, 1, 0), n(0, 1, 0, -1)},
                    {n(1, 0, 0, 0), n(0, 0, 1, 0), n(0, 1, 0, -1), n(1, 0, 1, 0), n(1, 1, 0, -1),
                     n(0, 1, 1, -1)}};
        default:
            return {{n(1, 0, 0, 0), n(0, 1, 0, 0), n(0, 0, 1, -1)},
                    {n(1, 0, 0, 0), n(0, 1, 0, 0), n(0, 0, 1, -1), n(1, 1, 0, 0), n(1, 0, 1, -1),
                     n(0, 1, 1, -1)}};
    }
}

const std::vector<std::vector<int>> kVertexPerms = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3},
                                                    {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};

}  // namespace

DNonFreeEvidence d_nonfree_evidence(const Multiplicity& mu) {
    if (mu.size() != 6) throw std::invalid_argument("d_nonfree_evidence: need 6 multiplicities");
    for (long m : mu)
        if (m < 1) throw std::invalid_argument("d_nonfree_evidence: mu must be >= 1");
    if (is_d_free_pattern(mu))
        throw std::invalid_argument("d_nonfree_evidence: mu matches the free pattern");

    Arrangement d = deleted_c3();
    DNonFreeEvidence ev;
    if (check_star(d, mu)) {
        // Extension of (D, mu) localizes to D at the center of x1, x2, x3;
        // D itself is not free, so neither is the extension.
        ev.kind = DNonFreeEvidence::StarHolds;
        ev.verified = simple_free_rank3(d).status == FreenessVerdict::NotFree;
        ev.detail = "parity condition holds; extension has a localization equal to D";
        return ev;
    }

    bool all_vertex_even = mu[0] % 2 == 0 && mu[1] % 2 == 0 && mu[2] % 2 == 0;
    if (all_vertex_even && mu[3] == 1 && mu[4] == 1 && mu[5] == 1) {
        // Exponents of a free (D, mu) would be (a,b,c) plus a partition of 3;
        // every candidate's GMP(2) misses LMP(2) when a, b, c are not equal.
        ev.kind = DNonFreeEvidence::MixedProduct;
        Int l = lmp2(d, mu);
        bool all_differ = true;
        for (int i = 0; i <= 3 && all_differ; ++i) {
            for (int j = 0; i + j <= 3 && all_differ; ++j) {
                int k = 3 - i - j;
                ExponentMultiset cand = {mu[0] + i, mu[1] + j, mu[2] + k};
                if (gmp(sorted_exponents(cand), 2) == l) all_differ = false;
            }
        }
        ev.verified = all_differ;
        ev.detail = "LMP(2) = " + l.get_str() + " differs from GMP(2) of every candidate";
        return ev;
    }

    for (const auto& p : kVertexPerms) {
        Multiplicity m = apply_vertex_perm(mu, p);
        auto row = match_row(m);
        if (!row) continue;

        ev.kind = DNonFreeEvidence::ExtensionWitness;
        ev.permutation = p;
        ev.sigma = row->sigma;
        ev.pattern = row->pattern;
        ev.table_row = row->row;
        ev.permuted_mu = m;

        Arrangement e = extend(d, m, row->sigma);
        bool ok = locally_free_along(e, 0).kind == LocalFreeness::Yes;

        Pattern pat = pattern_flats(row->pattern);
        std::vector<int> gens;
        for (const auto& normal : pat.generators) {
            int idx = e.index_of_normal(normal);
            if (idx < 0) ok = false;
            else gens.push_back(idx);
        }
        if (ok) {
            Flat x = flat_of(e, gens);
            std::vector<int> expect;
            for (const auto& normal : pat.all) {
                int idx = e.index_of_normal(normal);
                if (idx < 0) ok = false;
                else expect.push_back(idx);
            }
            std::sort(expect.begin(), expect.end());
            if (x.rank != 3 || x.closure != expect) ok = false;
            if (ok) {
                auto [loc, loc_mu] = localization(e, ones(e.size()), x);
                ok = lattice_isomorphic_to_d(loc) &&
                     simple_free_rank3(loc).status == FreenessVerdict::NotFree;
            }
        }
        ev.verified = ok;
        ev.detail = std::string("extension witness, table row ") + std::to_string(row->row) +
                    ", pattern (" + row->pattern + ")";
        return ev;
    }
    throw std::logic_error("d_nonfree_evidence: no case matched");
}

}  // namespace csa
