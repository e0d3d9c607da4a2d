#ifndef CSA_EXTENSIONS_HPP
#define CSA_EXTENSIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "csa/arrangement.hpp"
#include "csa/freeness.hpp"

namespace csa {

/// Integer shift per hyperplane moving the extension window.
using SigmaShift = std::vector<long>;

/// True iff every rank-2 flat carries at most 3 hyperplanes.
bool is_locally_a2(const Arrangement& a);

/// Signs eps_H in {+1,-1} making every 3-element rank-2 localization satisfy
/// an additive relation among the signed forms; nullopt when no consistent
/// orientation exists. The all-ones orientation is preferred.
std::optional<std::vector<int>> positive_system(const Arrangement& a);

/// Parity condition over the 3-element rank-2 localizations of a positively
/// oriented system: whenever the sum form has odd multiplicity, one of its
/// two summands is odd too. Throws when no positive system exists.
bool check_star(const Arrangement& a, const Multiplicity& mu);

/// Extension in dimension dim+1: ker(x_{l+1}) together with
/// ker(alpha_H - k x_{l+1}) for the mu(H) integers k in the sigma-shifted
/// window. Always has 1 + |mu| hyperplanes.
Arrangement extend(const Arrangement& a, const Multiplicity& mu, const SigmaShift& sigma);

struct LocalFreeness {
    enum Kind { Yes, No, Unknown } kind = Unknown;
    std::optional<Flat> witness;  // a non-free localization when kind == No
};

/// Checks freeness of every localization at flats inside hyperplane h:
/// rank <= 2 automatically, rank 3 by the characteristic polynomial
/// criterion, rank >= 4 reported Unknown.
LocalFreeness locally_free_along(const Arrangement& a, int h);

/// Non-freeness evidence for a multiplicity >= 1 on the deleted C3
/// arrangement (forms x1, x2, x3, x1+x2, x1+x3, x2+x3) outside the free
/// pattern (2k,2k,2k,1,1,1). Throws when mu matches the free pattern.
struct DNonFreeEvidence {
    enum Kind { StarHolds, MixedProduct, ExtensionWitness } kind;
    std::string detail;
    // ExtensionWitness data:
    std::vector<int> permutation;  // applied coordinate relabeling (size 3)
    SigmaShift sigma;              // on the permuted multiplicity
    char pattern = 0;              // 'a', 'b' or 'c'
    int table_row = 0;             // 1..5
    Multiplicity permuted_mu;
    bool verified = false;  // extension locally free + flat isomorphic to D
};
DNonFreeEvidence d_nonfree_evidence(const Multiplicity& mu);

/// The deleted C3 arrangement x1 x2 x3 (x1+x2)(x1+x3)(x2+x3).
Arrangement deleted_c3();
/// The connected subgraph arrangement of the triangle, ordered
/// x1, x2, x3, x1+x2, x1+x3, x2+x3, x1+x2+x3.
Arrangement c3_arrangement();
/// True iff mu on deleted_c3() equals (2k,2k,2k,1,1,1) for some k >= 1.
bool is_d_free_pattern(const Multiplicity& mu);

}  // namespace csa

#endif
