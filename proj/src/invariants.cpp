#include "csa/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace csa {

ExpPair flat_exponents(const Arrangement& a, const Multiplicity& mu, const Flat& x) {
    auto [loc, loc_mu] = localization(a, mu, x);
    return rank2_exponents(project_to_rank2(loc, loc_mu));
}

Int lmp2(const Arrangement& a, const Multiplicity& mu) {
    Support sup = support(a, mu);
    if (sup.arr.size() == 0) return 0;
    Int total = 0;
    for (const Flat& x : rank2_flats(sup.arr)) {
        ExpPair e = flat_exponents(sup.arr, sup.mu, x);
        total += Int(e.e1) * Int(e.e2);
    }
    return total;
}

Int gmp(const ExponentMultiset& exps, int k) {
    if (k < 0 || k > static_cast<int>(exps.size()))
        throw std::invalid_argument("gmp: k out of range");
    std::vector<Int> es(k + 1, 0);
    es[0] = 1;
    for (long v : exps)
        for (int j = k; j >= 1; --j) es[j] += es[j - 1] * Int(v);
    return es[k];
}

ExponentMultiset balanced_tuple(long total, int length, const ExponentMultiset& forced_prefix) {
    if (length < 1) throw std::invalid_argument("balanced_tuple: length must be >= 1");
    long prefix_sum = std::accumulate(forced_prefix.begin(), forced_prefix.end(), 0L);
    long rem = total - prefix_sum;
    int rest = length - static_cast<int>(forced_prefix.size());
    if (rem < 0 || rest < 0 || (rest == 0 && rem != 0))
        throw std::invalid_argument("balanced_tuple: forced prefix exceeds total");
    ExponentMultiset out = forced_prefix;
    if (rest > 0) {
        long q = rem / rest, r = rem % rest;
        for (int i = 0; i < rest - r; ++i) out.push_back(q);
        for (int i = 0; i < r; ++i) out.push_back(q + 1);
    }
    return out;
}

bool nonfree_by_mixed_products(const Arrangement& a, const Multiplicity& mu) {
    Support sup = support(a, mu);
    if (sup.arr.size() == 0) return false;
    bool simple = std::all_of(sup.mu.begin(), sup.mu.end(), [](long m) { return m == 1; });
    ExponentMultiset tuple = simple ? balanced_tuple(mult_sum(sup.mu), a.dim, {1})
                                    : balanced_tuple(mult_sum(sup.mu), a.dim);
    return gmp(tuple, 2) < lmp2(a, mu);
}

CharPoly char_poly(const Arrangement& a) {
    auto levels = full_lattice(a);
    // Moebius values by rank order; Y <= X in L(A) iff closure(Y) is
    // contained in closure(X).
    std::vector<std::pair<std::vector<int>, Int>> mob;  // (closure, mu(V, X))
    CharPoly chi;
    chi.coeffs.assign(a.dim + 1, 0);
    for (size_t k = 0; k < levels.size(); ++k) {
        for (const Flat& x : levels[k]) {
            Int m;
            if (k == 0) {
                m = 1;
            } else {
                m = 0;
                for (const auto& [cl, v] : mob) {
                    if (cl.size() >= x.closure.size()) continue;
                    if (std::includes(x.closure.begin(), x.closure.end(), cl.begin(), cl.end()))
                        m -= v;
                }
            }
            chi.coeffs[a.dim - x.rank] += m;
            mob.emplace_back(x.closure, std::move(m));
        }
    }
    return chi;
}

}  // namespace csa
