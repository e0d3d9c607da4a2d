#ifndef CSA_INVARIANTS_HPP
#define CSA_INVARIANTS_HPP

#include <vector>

#include "csa/arrangement.hpp"
#include "csa/rank2.hpp"

namespace csa {

/// Exponent multiset of a free multiarrangement, sorted ascending.
using ExponentMultiset = std::vector<long>;

/// Monic integer polynomial in t, coeffs[i] = coefficient of t^i.
struct CharPoly {
    std::vector<Int> coeffs;
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool operator==(const CharPoly&) const = default;
};

/// Second local mixed product: sum over rank-2 flats of the product of the
/// local exponents. Always defined (rank-2 multiarrangements are free).
Int lmp2(const Arrangement& a, const Multiplicity& mu);

/// k-th elementary symmetric function of the exponent multiset.
/// Throws when k is out of range.
Int gmp(const ExponentMultiset& exps, int k);

/// The unique most balanced non-decreasing tuple with the given sum and
/// length; `forced_prefix` pins leading entries (e.g. the forced exponent 1
/// of a simple arrangement). Throws when the prefix exceeds the total.
ExponentMultiset balanced_tuple(long total, int length, const ExponentMultiset& forced_prefix = {});

/// Sound non-freeness certificate: true iff the maximal possible GMP(2)
/// (over the most balanced candidate exponents) is smaller than LMP(2).
/// False means inconclusive.
bool nonfree_by_mixed_products(const Arrangement& a, const Multiplicity& mu);

/// Characteristic polynomial via the Moebius function of the intersection
/// lattice (Whitney sum over flats).
CharPoly char_poly(const Arrangement& a);

/// Exponents of a rank <= 2 localization of (a, mu) at the flat x.
ExpPair flat_exponents(const Arrangement& a, const Multiplicity& mu, const Flat& x);

}  // namespace csa

#endif
