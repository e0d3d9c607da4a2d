#ifndef CSA_RANK2_HPP
#define CSA_RANK2_HPP

#include <array>
#include <utility>
#include <vector>

#include "csa/arrangement.hpp"

namespace csa {

/// Exponent pair of a rank <= 2 multiarrangement, e1 <= e2.
struct ExpPair {
    long e1 = 0;
    long e2 = 0;
    bool operator==(const ExpPair&) const = default;
};

/// Multiarrangement of rank <= 2 expressed in a deterministic 2-dimensional
/// frame: pairwise non-proportional primitive forms with their (positive)
/// multiplicities. Zero-multiplicity hyperplanes are dropped on projection.
struct Rank2MultiArrangement {
    std::vector<std::array<Int, 2>> forms;
    Multiplicity mults;
};

/// Projects a multiarrangement whose support has rank <= 2 to two
/// coordinates (the canonical row-space frame of the support normals).
/// Throws when the support rank exceeds 2.
Rank2MultiArrangement project_to_rank2(const Arrangement& a, const Multiplicity& mu);

/// Closed-form exponents of three concurrent lines with multiplicities
/// k1, k2, k3 (any order; zeros allowed and degenerate to fewer lines).
ExpPair wakamiko_exponents(long k1, long k2, long k3);

/// Exponents of an arbitrary rank <= 2 multiarrangement. Dispatches to the
/// closed forms for at most three lines and to the derivation-module degree
/// search for four or more.
ExpPair rank2_exponents(const Rank2MultiArrangement& m);

/// Degree-ascending derivation search: finds the minimal degree e1 carrying
/// a nonzero derivation (p, q) with a_H p + b_H q divisible by
/// (a_H x + b_H y)^mu(H) for every form, sets e2 = |mu| - e1, and verifies a
/// degree-e2 partner that is independent in the Saito sense (2x2 polynomial
/// determinant equal to a nonzero constant times the defining polynomial).
ExpPair rank2_exponents_search(const Rank2MultiArrangement& m);

/// Euler multiplicity at a rank-2 flat x of `a` containing h0: the exponent
/// shared by (A_x, mu_x) and its deletion at h0.
/// Throws when x does not contain h0 or is not rank 2.
long euler_multiplicity(const Arrangement& a, const Multiplicity& mu, int h0, const Flat& x);

/// Shared-exponent extraction: full = shared + {b}, deleted = shared + {b-1}.
/// Throws when the pairs are inconsistent with a one-step deletion.
long shared_exponent(const ExpPair& full, const ExpPair& deleted);

}  // namespace csa

#endif
