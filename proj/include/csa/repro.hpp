#ifndef CSA_REPRO_HPP
#define CSA_REPRO_HPP

#include <functional>
#include <string>
#include <vector>

#include "csa/arrangement.hpp"
#include "csa/freeness.hpp"
#include "csa/graphs.hpp"

namespace csa {

/// The 14-hyperplane arrangement of the four-cycle-with-chord graph in the
/// order used by its published multiplicity (vertex hyperplanes first, then
/// the mixed order ending at H_123).
Arrangement g1_arrangement_chain_order();
/// The K4 arrangement in the matching 15-hyperplane order (adds H_24 last).
Arrangement g2_arrangement_chain_order();
Multiplicity g1_mu1();
Multiplicity g2_mu2();

/// Chain certificates for the three published induction/recursion tables.
Certificate table2_certificate();  // inductive chain for (A_G1, mu1)
Certificate table3_certificate();  // inductive chain for (A_C3, 3*ones)
Certificate table4_certificate();  // recursive chain for (A_G2, mu2)

/// Generic-localization witness data: per catalog graph, the generating
/// hyperplanes of the flat, its rank, and the full localization.
struct GenericWitnessRow {
    int graph_index;
    std::vector<std::string> generators;
    int rank;
    std::vector<std::string> closure;
};
const std::vector<GenericWitnessRow>& generic_witness_table();

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = false;
    std::string expected;
    std::string actual;
    double ms = 0.0;
};

struct ReproOptions {
    int jobs = 0;  // 0 = hardware concurrency
    uint64_t budget = kDefaultBudget;
    std::string data_dir;  // location of the chain JSON files; "" = built-in
};

std::vector<std::string> repro_suites();
/// Runs one suite ("all" for every suite) and returns per-check results.
std::vector<CheckResult> run_repro_suite(const std::string& suite, const ReproOptions& opts);

/// Simple worker-pool map over [0, n); fn must be safe to run concurrently.
void parallel_for(int jobs, int n, const std::function<void(int)>& fn);

}  // namespace csa

#endif
