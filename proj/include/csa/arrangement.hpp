#ifndef CSA_ARRANGEMENT_HPP
#define CSA_ARRANGEMENT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csa/exact.hpp"

namespace csa {

/// A hyperplane through the origin, stored as a primitive integer normal
/// (gcd of entries 1, first nonzero entry positive).
struct Hyperplane {
    std::vector<Int> normal;
    bool operator==(const Hyperplane&) const = default;
};

/// Central arrangement: ordered distinct hyperplanes in Q^dim with optional
/// unique labels.
struct Arrangement {
    int dim = 0;
    std::vector<Hyperplane> hyperplanes;
    std::vector<std::string> labels;  // empty, or one per hyperplane

    int size() const { return static_cast<int>(hyperplanes.size()); }
    std::string label(int i) const;
    /// Index of the hyperplane with the given label, or -1.
    int index_of(const std::string& label) const;
    /// Index of the hyperplane with the given (primitive) normal, or -1.
    int index_of_normal(const std::vector<Int>& normal) const;
    IntMatrix normal_matrix() const;
    /// Stable identity string (dim + normals), used as a memoization key.
    std::string key() const;
};

/// One non-negative multiplicity per hyperplane of the paired arrangement.
using Multiplicity = std::vector<long>;

long mult_sum(const Multiplicity& mu);
Multiplicity ones(int n, long c = 1);

/// Lattice element: the closed set of hyperplane indices containing the
/// subspace, its rank (= codimension), and a canonical basis of the span of
/// the closure normals.
struct Flat {
    std::vector<int> closure;  // sorted
    int rank = 0;
    IntMatrix basis;  // canonical_row_space of the closure normals

    bool operator==(const Flat& o) const { return closure == o.closure; }
};

/// Builds an arrangement from raw integer normals; normals are normalized to
/// primitive canonical form. Throws std::invalid_argument on zero vectors,
/// duplicates after normalization, or label collisions.
Arrangement make_arrangement(int dim, const std::vector<std::vector<Int>>& normals,
                             const std::vector<std::string>& labels = {});

int arrangement_rank(const Arrangement& a);

/// Flat whose closure is the set of hyperplanes containing the intersection
/// of the given ones.
Flat flat_of(const Arrangement& a, const std::vector<int>& generators);

/// All flats of the given rank, ordered lexicographically by closure.
/// Throws when k is outside [0, rank(a)].
std::vector<Flat> flats_of_rank(const Arrangement& a, int k);

/// Levels 0..rank(a) of the intersection lattice, each sorted by closure.
std::vector<std::vector<Flat>> full_lattice(const Arrangement& a);

/// Rank-2 flats only (pairwise intersections merged); cheaper than the full
/// lattice for large arrangements.
std::vector<Flat> rank2_flats(const Arrangement& a);

/// Rank-2 flats whose closure contains hyperplane h.
std::vector<Flat> rank2_flats_through(const Arrangement& a, int h);

/// Sub-multiarrangement on the closure of x (ambient dimension unchanged,
/// original order kept). Throws on a stale flat.
std::pair<Arrangement, Multiplicity> localization(const Arrangement& a, const Multiplicity& mu,
                                                  const Flat& x);

/// Restriction A^H in dimension dim-1, one hyperplane per rank-2 flat
/// through h. Coordinates come from the deterministic kernel basis of the
/// restricting normal. Also returns, per restricted hyperplane, the closure
/// of the corresponding rank-2 flat of `a`.
struct Restriction {
    Arrangement arr;
    std::vector<Flat> source_flats;  // rank-2 flats of `a` through h, aligned
    IntMatrix frame;                 // kernel basis of the restricting normal
};
Restriction restriction_simple(const Arrangement& a, int h);

/// Ziegler restriction: restriction_simple paired with kappa(X) = |A_X| - 1.
std::pair<Restriction, Multiplicity> ziegler_restriction(const Arrangement& a, int h);

/// True iff every flat of rank k (1 <= k <= rank-1) has closure of size k.
bool is_generic(const Arrangement& a);

/// Drops zero-multiplicity hyperplanes; returns the support multiarrangement
/// together with the original indices of the kept hyperplanes.
struct Support {
    Arrangement arr;
    Multiplicity mu;
    std::vector<int> index_map;  // support index -> original index
};
Support support(const Arrangement& a, const Multiplicity& mu);

/// Essentialization: rewrite the normals in a canonical basis of their span,
/// giving an arrangement of full rank in Q^rank.
Arrangement essentialize(const Arrangement& a);

}  // namespace csa

#endif
