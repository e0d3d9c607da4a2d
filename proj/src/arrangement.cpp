#include "csa/arrangement.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace csa {

std::string Arrangement::label(int i) const {
    if (i < static_cast<int>(labels.size()) && !labels[i].empty()) return labels[i];
    return "H" + std::to_string(i);
}

int Arrangement::index_of(const std::string& lbl) const {
    for (int i = 0; i < size(); ++i)
        if (label(i) == lbl) return i;
    return -1;
}

int Arrangement::index_of_normal(const std::vector<Int>& normal) const {
    auto p = primitive_vector(normal);
    for (int i = 0; i < size(); ++i)
        if (hyperplanes[i].normal == p) return i;
    return -1;
}

IntMatrix Arrangement::normal_matrix() const {
    IntMatrix m(size(), dim);
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < dim; ++j) m.at(i, j) = hyperplanes[i].normal[j];
    return m;
}

std::string Arrangement::key() const {
    std::ostringstream os;
    os << dim;
    for (const auto& h : hyperplanes) {
        os << "|";
        for (const auto& x : h.normal) os << x.get_str() << ",";
    }
    return os.str();
}

long mult_sum(const Multiplicity& mu) { return std::accumulate(mu.begin(), mu.end(), 0L); }

Multiplicity ones(int n, long c) { return Multiplicity(static_cast<size_t>(n), c); }

Arrangement make_arrangement(int dim, const std::vector<std::vector<Int>>& normals,
                             const std::vector<std::string>& labels) {
    if (!labels.empty() && labels.size() != normals.size())
        throw std::invalid_argument("make_arrangement: label count mismatch");
    Arrangement a;
    a.dim = dim;
    std::set<std::vector<Int>> seen;
    std::set<std::string> seen_labels;
    for (size_t i = 0; i < normals.size(); ++i) {
        if (static_cast<int>(normals[i].size()) != dim)
            throw std::invalid_argument("make_arrangement: normal has wrong length");
        auto p = primitive_vector(normals[i]);
        if (is_zero_vector(p)) throw std::invalid_argument("make_arrangement: zero normal");
        if (!seen.insert(p).second)
            throw std::invalid_argument("make_arrangement: duplicate hyperplane");
        a.hyperplanes.push_back({std::move(p)});
        if (!labels.empty() && !labels[i].empty()) {
            if (!seen_labels.insert(labels[i]).second)
                throw std::invalid_argument("make_arrangement: duplicate label");
        }
    }
    a.labels = labels;
    return a;
}

int arrangement_rank(const Arrangement& a) { return rank(a.normal_matrix()); }

namespace {

// Closure of the span of `basis` (a canonical row space): all hyperplanes
// whose normal lies in the span.
std::vector<int> closure_of_span(const Arrangement& a, const IntMatrix& basis) {
    std::vector<int> cl;
    for (int i = 0; i < a.size(); ++i)
        if (in_row_space_rref(basis, a.hyperplanes[i].normal)) cl.push_back(i);
    return cl;
}

Flat make_flat(const Arrangement& a, const IntMatrix& basis) {
    Flat f;
    f.basis = basis;
    f.rank = basis.rows;
    f.closure = closure_of_span(a, basis);
    return f;
}

}  // namespace

Flat flat_of(const Arrangement& a, const std::vector<int>& generators) {
    std::vector<std::vector<Int>> rows;
    for (int g : generators) {
        if (g < 0 || g >= a.size()) throw std::invalid_argument("flat_of: bad hyperplane index");
        rows.push_back(a.hyperplanes[g].normal);
    }
    IntMatrix basis = canonical_row_space(IntMatrix::from_rows(rows));
    if (rows.empty()) basis = IntMatrix(0, a.dim);
    return make_flat(a, basis);
}

std::vector<std::vector<Flat>> full_lattice(const Arrangement& a) {
    const int r = arrangement_rank(a);
    std::vector<std::vector<Flat>> levels(r + 1);
    levels[0].push_back(make_flat(a, IntMatrix(0, a.dim)));
    // Rank 1: one flat per hyperplane (normals are distinct and primitive).
    for (int i = 0; i < a.size(); ++i) {
        Flat f;
        f.rank = 1;
        f.closure = {i};
        f.basis = canonical_row_space(IntMatrix::from_rows({a.hyperplanes[i].normal}));
        levels[1].push_back(f);
    }
    for (int k = 2; k <= r; ++k) {
        std::map<std::vector<int>, Flat> found;
        for (const Flat& x : levels[k - 1]) {
            for (int h = 0; h < a.size(); ++h) {
                if (std::binary_search(x.closure.begin(), x.closure.end(), h)) continue;
                std::vector<std::vector<Int>> rows;
                for (int i = 0; i < x.basis.rows; ++i) rows.push_back(x.basis.row(i));
                rows.push_back(a.hyperplanes[h].normal);
                IntMatrix basis = canonical_row_space(IntMatrix::from_rows(rows));
                if (basis.rows != k) continue;
                Flat f = make_flat(a, basis);
                found.emplace(f.closure, std::move(f));
            }
        }
        levels[k].reserve(found.size());
        for (auto& [cl, f] : found) levels[k].push_back(std::move(f));
    }
    return levels;
}

std::vector<Flat> flats_of_rank(const Arrangement& a, int k) {
    const int r = arrangement_rank(a);
    if (k < 0 || k > r) throw std::invalid_argument("flats_of_rank: rank out of range");
    if (k == 2) return rank2_flats(a);
    return full_lattice(a)[k];
}

std::vector<Flat> rank2_flats(const Arrangement& a) {
    std::map<std::vector<int>, Flat> found;
    for (int i = 0; i < a.size(); ++i) {
        for (int j = i + 1; j < a.size(); ++j) {
            IntMatrix basis = canonical_row_space(
                IntMatrix::from_rows({a.hyperplanes[i].normal, a.hyperplanes[j].normal}));
            Flat f = make_flat(a, basis);
            if (found.count(f.closure)) continue;
            found.emplace(f.closure, std::move(f));
        }
    }
    std::vector<Flat> out;
    out.reserve(found.size());
    for (auto& [cl, f] : found) out.push_back(std::move(f));
    return out;
}

std::vector<Flat> rank2_flats_through(const Arrangement& a, int h) {
    std::map<std::vector<int>, Flat> found;
    for (int j = 0; j < a.size(); ++j) {
        if (j == h) continue;
        IntMatrix basis = canonical_row_space(
            IntMatrix::from_rows({a.hyperplanes[h].normal, a.hyperplanes[j].normal}));
        Flat f = make_flat(a, basis);
        found.emplace(f.closure, std::move(f));
    }
    std::vector<Flat> out;
    out.reserve(found.size());
    for (auto& [cl, f] : found) out.push_back(std::move(f));
    return out;
}

std::pair<Arrangement, Multiplicity> localization(const Arrangement& a, const Multiplicity& mu,
                                                  const Flat& x) {
    // Reject stale flats: the closure must be exactly the hyperplanes of `a`
    // lying in the span of the flat's basis.
    if (closure_of_span(a, x.basis) != x.closure)
        throw std::invalid_argument("localization: stale flat");
    Arrangement loc;
    loc.dim = a.dim;
    Multiplicity m;
    for (int i : x.closure) {
        loc.hyperplanes.push_back(a.hyperplanes[i]);
        if (!a.labels.empty()) loc.labels.push_back(a.label(i));
        m.push_back(i < static_cast<int>(mu.size()) ? mu[i] : 1);
    }
    return {loc, m};
}

Restriction restriction_simple(const Arrangement& a, int h) {
    if (h < 0 || h >= a.size()) throw std::invalid_argument("restriction_simple: bad index");
    Restriction res;
    res.frame = kernel_basis(IntMatrix::from_rows({a.hyperplanes[h].normal}));
    res.source_flats = rank2_flats_through(a, h);
    res.arr.dim = a.dim - 1;
    for (const Flat& f : res.source_flats) {
        int other = -1;
        for (int i : f.closure) {
            if (i != h) {
                other = i;
                break;
            }
        }
        // Trace of H_other inside H: pair the form with the frame rows.
        std::vector<Int> v(res.frame.rows, 0);
        for (int r = 0; r < res.frame.rows; ++r) {
            Int s = 0;
            for (int c = 0; c < a.dim; ++c) s += a.hyperplanes[other].normal[c] * res.frame.at(r, c);
            v[r] = s;
        }
        res.arr.hyperplanes.push_back({primitive_vector(std::move(v))});
    }
    return res;
}

std::pair<Restriction, Multiplicity> ziegler_restriction(const Arrangement& a, int h) {
    Restriction res = restriction_simple(a, h);
    Multiplicity kappa;
    kappa.reserve(res.source_flats.size());
    for (const Flat& f : res.source_flats)
        kappa.push_back(static_cast<long>(f.closure.size()) - 1);
    return {std::move(res), std::move(kappa)};
}

bool is_generic(const Arrangement& a) {
    const int r = arrangement_rank(a);
    auto levels = full_lattice(a);
    for (int k = 1; k <= r - 1; ++k)
        for (const Flat& f : levels[k])
            if (static_cast<int>(f.closure.size()) != k) return false;
    return true;
}

Support support(const Arrangement& a, const Multiplicity& mu) {
    if (static_cast<int>(mu.size()) != a.size())
        throw std::invalid_argument("support: multiplicity length mismatch");
    Support s;
    s.arr.dim = a.dim;
    for (int i = 0; i < a.size(); ++i) {
        if (mu[i] < 0) throw std::invalid_argument("support: negative multiplicity");
        if (mu[i] == 0) continue;
        s.arr.hyperplanes.push_back(a.hyperplanes[i]);
        if (!a.labels.empty()) s.arr.labels.push_back(a.label(i));
        s.mu.push_back(mu[i]);
        s.index_map.push_back(i);
    }
    return s;
}

Arrangement essentialize(const Arrangement& a) {
    IntMatrix basis = canonical_row_space(a.normal_matrix());
    const int r = basis.rows;
    Arrangement e;
    e.dim = r;
    e.labels = a.labels;
    for (const auto& h : a.hyperplanes) {
        auto coords = coordinates_in_row_space(basis, h.normal);
        Int l = 1;
        for (const auto& q : coords) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        std::vector<Int> v(r);
        for (int j = 0; j < r; ++j) {
            Rat scaled = coords[j] * Rat(l);
            v[j] = scaled.get_num();
        }
        e.hyperplanes.push_back({primitive_vector(std::move(v))});
    }
    return e;
}

}  // namespace csa
