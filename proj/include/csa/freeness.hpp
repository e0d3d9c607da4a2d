#ifndef CSA_FREENESS_HPP
#define CSA_FREENESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "csa/arrangement.hpp"
#include "csa/invariants.hpp"
#include "csa/poly.hpp"
#include "csa/rank2.hpp"

namespace csa {

struct FreenessVerdict {
    enum Status { Free, NotFree, Unknown } status = Unknown;
    ExponentMultiset exponents;  // present when Free
    std::string evidence;        // certificate | mixed-product | generic-localization |
                                 // rank3-criterion | saito-basis | supersolvable | rank2
    std::string detail;
};

/// Deletion and Euler restriction of (a, mu) at h0. The deletion keeps the
/// arrangement fixed and decrements mu(h0); the restriction is built on the
/// support and carries the Euler multiplicity.
struct Triple {
    Multiplicity deleted_mu;
    Arrangement restriction;               // ambient dim - 1
    Multiplicity euler;                    // aligned with restriction hyperplanes
    std::vector<std::vector<int>> flats;   // closures in original indices, aligned
};
Triple triple(const Arrangement& a, const Multiplicity& mu, int h0);

/// One chain step. "delete" decrements mu at the hyperplane (the step's own
/// multiarrangement is justified from the smaller one); "add" increments it
/// (the recursive rule: justified from the larger one). Restriction
/// exponents always belong to the larger side of the triple.
struct CertStep {
    std::string op;  // "delete" | "add"
    std::string hyperplane;
    Multiplicity mult_before;
    ExponentMultiset exponents;
    ExponentMultiset restriction_exponents;
};

struct Certificate {
    Arrangement arrangement;
    std::vector<CertStep> steps;
};

constexpr uint64_t kDefaultBudget = 20'000'000;

struct SearchResult {
    enum Kind { Free, NotInductivelyFree, Exhausted } kind = Exhausted;
    ExponentMultiset exponents;
    uint64_t states_visited = 0;
    std::optional<Certificate> certificate;
};

/// Memoized addition-deletion search for an inductive-freeness chain down to
/// the empty multiarrangement. Rank >= 3 restrictions are certified by
/// nested searches sharing the same budget.
SearchResult inductive_free_search(const Arrangement& a, const Multiplicity& mu,
                                   uint64_t budget = kDefaultBudget);

struct VerifyResult {
    bool valid = false;
    int failing_step = -1;
    std::string reason;
};

/// Recomputes every step of the chain: restriction exponents from scratch
/// (rank-2 directly, higher rank by recursive search) plus the
/// addition-deletion exponent bookkeeping between consecutive rows.
VerifyResult verify_certificate(const Certificate& cert, uint64_t budget = kDefaultBudget);

/// A derivation sum_j f_j D_j given by its coefficient polynomials.
using PolyDerivation = std::vector<Poly>;

/// Saito's criterion: all derivations lie in D(A, mu) and the coefficient
/// determinant is a nonzero constant times Q(A, mu). Throws on a wrong
/// number of derivations or non-homogeneous entries.
bool saito_verify(const Arrangement& a, const Multiplicity& mu,
                  const std::vector<PolyDerivation>& basis);

/// Defining polynomial Q(A, mu).
Poly defining_polynomial(const Arrangement& a, const Multiplicity& mu);

/// Data for the four B2 multiplicity families on x1, x2, x1+x2, 2x1+x2.
/// Cases 1-2 carry an explicit basis (stated in the transformed frame
/// x1, x2, x1+x2, x1-x2); cases 3-4 carry the deletion-chain data instead.
struct B2FamilyData {
    Multiplicity mu;  // on (x1, x2, x1+x2, 2x1+x2)
    ExpPair exponents;
    // cases 1-2:
    std::optional<Arrangement> basis_arrangement;  // (x1, x2, x1+x2, x1-x2)
    Multiplicity basis_mu;
    std::vector<PolyDerivation> basis;
    // cases 3-4: deletion of the second hyperplane justifies the exponents
    std::optional<Multiplicity> chain_mu;
    ExpPair chain_exponents;
    int chain_hyperplane = -1;  // index whose multiplicity was dropped to 0
};
B2FamilyData b2_family(int case_id, long k);

/// Supersolvable criterion: checks the filtration ranks, the modular
/// pairwise-intersection property, and the multiplicity inequalities; on
/// success certifies inductive freeness with exponents
/// (e1, e2, |mu_3|-|mu_2|, ..., |mu_r|-|mu_{r-1}|, 0, ...).
/// Throws std::invalid_argument on a malformed filtration.
FreenessVerdict supersolvable_verify(const Arrangement& a, const Multiplicity& mu,
                                     const std::vector<std::vector<int>>& filtration);

/// A flat of rank >= 3 whose localization is generic with more hyperplanes
/// than its rank: a certificate that no multiplicity >= 1 is free.
std::optional<Flat> totally_nonfree_witness(const Arrangement& a);

/// Rank-3 freeness of a simple arrangement: free iff the characteristic
/// polynomial factors as (t-1)(t-e1)(t-e2) with (e1,e2) the Ziegler
/// restriction exponents at an arbitrary hyperplane.
FreenessVerdict simple_free_rank3(const Arrangement& a);

/// Verdict pipeline: mixed products, generic witness, rank-3 criterion for
/// simple input, then the inductive search.
FreenessVerdict free_check(const Arrangement& a, const Multiplicity& mu,
                           uint64_t budget = kDefaultBudget);

ExponentMultiset sorted_exponents(ExponentMultiset e);

}  // namespace csa

#endif
