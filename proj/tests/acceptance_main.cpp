// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failing criteria. Heavy sweeps honor CSA_JOBS (default: all cores).

#include <atomic>
#include <random>
#include <set>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>
#include <vector>

#include "csa/extensions.hpp"
#include "csa/freeness.hpp"
#include "csa/graphs.hpp"
#include "csa/invariants.hpp"
#include "csa/io.hpp"
#include "csa/repro.hpp"

using namespace csa;

namespace {

int g_jobs = 0;
int g_failures = 0;

// Free verdicts produced during the run, re-checked by criterion 14.
struct FreeRecord {
    Arrangement arr;
    Multiplicity mu;
    ExponentMultiset exps;
};
std::vector<FreeRecord> g_free_verdicts;
std::mutex g_free_mutex;

void record_free(const Arrangement& a, const Multiplicity& mu, const ExponentMultiset& e) {
    std::lock_guard<std::mutex> lock(g_free_mutex);
    g_free_verdicts.push_back({a, mu, e});
}

std::string exps_str(const ExponentMultiset& e) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << ")";
    return os.str();
}

struct Criterion {
    std::ostringstream detail;
    bool ok = true;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << (detail.str().empty() ? "" : "; ") << what;
        }
    }
};

template <typename F>
void run_criterion(int number, const std::string& name, F&& body) {
    Criterion c;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.ok = false;
        c.detail << "exception: " << e.what();
    }
    double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (c.ok ? "[PASS] " : "[FAIL] ") << std::setw(2) << std::setfill('0') << number
              << std::setfill(' ') << " " << std::left << std::setw(46) << name << std::right
              << std::fixed << std::setprecision(1) << std::setw(8) << s << " s";
    if (!c.ok) std::cout << "  -- " << c.detail.str();
    std::cout << "\n" << std::flush;
    if (!c.ok) ++g_failures;
}

SearchResult search_and_record(const Arrangement& a, const Multiplicity& mu) {
    SearchResult res = inductive_free_search(a, mu);
    if (res.kind == SearchResult::Free) record_free(a, mu, res.exponents);
    return res;
}

void criterion_cardinalities(Criterion& c) {
    c.require(build_arrangement(catalog_graph(1)).size() == 14, "|A_G1| != 14");
    c.require(build_arrangement(catalog_graph(2)).size() == 15, "|A_G2| != 15");
    c.require(build_arrangement(cycle_graph(3)).size() == 7, "|A_C3| != 7");
    for (int n = 1; n <= 8; ++n)
        c.require(build_arrangement(path_graph(n)).size() == n * (n + 1) / 2,
                  "|A_P" + std::to_string(n) + "| wrong");
}

void criterion_mixed_products(Criterion& c) {
    Arrangement g1 = build_arrangement(catalog_graph(1));
    Arrangement g2 = build_arrangement(catalog_graph(2));
    c.require(lmp2(g1, ones(14)) == 70, "LMP2(A_G1) != 70");
    c.require(gmp({1, 4, 4, 5}, 2) == 69, "GMP2(1,4,4,5) != 69");
    c.require(lmp2(g2, ones(15)) == 80, "LMP2(A_G2) != 80");
    c.require(gmp({1, 4, 5, 5}, 2) == 79, "GMP2(1,4,5,5) != 79");
    auto c1 = lmp2_by_counting(catalog_graph(1), 1);
    auto c2 = lmp2_by_counting(catalog_graph(2), 1);
    c.require(c1.nu1 == 21 && c1.nu2 == 91, "nu counts of G1 wrong");
    c.require(c2.nu1 == 25 && c2.nu2 == 105, "nu counts of G2 wrong");
}

void criterion_counting_oracle(Criterion& c) {
    std::vector<Graph> graphs;
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : connected_graphs(n)) graphs.push_back(g);
    std::atomic<int> bad{0};
    parallel_for(g_jobs, static_cast<int>(graphs.size()), [&](int i) {
        Arrangement a = build_arrangement(graphs[i]);
        for (long cc : {1L, 2L, 3L}) {
            if (lmp2_by_counting(graphs[i], cc).lmp2 != lmp2(a, ones(a.size(), cc))) ++bad;
        }
    });
    c.require(bad == 0, std::to_string(bad.load()) + " graph/constant pairs disagree");
    c.detail << graphs.size() << " graphs x 3 constants";
    c.require(graphs.size() == 1 + 1 + 2 + 6 + 21 + 112, "graph census wrong");
}

void criterion_c3_constants(Criterion& c) {
    Arrangement c3 = c3_arrangement();
    auto r1 = search_and_record(c3, ones(7));
    c.require(r1.kind == SearchResult::Free && r1.exponents == ExponentMultiset{1, 3, 3},
              "c=1 not certified (1,3,3)");
    c.require(verify_certificate(*r1.certificate).valid, "c=1 certificate invalid");
    auto r3 = search_and_record(c3, ones(7, 3));
    c.require(r3.kind == SearchResult::Free && r3.exponents == ExponentMultiset{7, 7, 7},
              "c=3 not certified (7,7,7)");
    c.require(verify_certificate(*r3.certificate).valid, "c=3 certificate invalid");
    for (long cc : {2L, 4L, 5L, 6L})
        c.require(nonfree_by_mixed_products(c3, ones(7, cc)),
                  "c=" + std::to_string(cc) + " not certified non-free");
    c.require(lmp2(c3, ones(7, 2)) == 66, "LMP2 at c=2 != 66");
    c.require(gmp(balanced_tuple(14, 3), 2) == 65, "best GMP2 at c=2 != 65");
}

void criterion_c4_constant(Criterion& c) {
    Arrangement c4 = build_arrangement(cycle_graph(4));
    c.require(lmp2(c4, ones(13, 3)) == 576, "LMP2 != 576");
    c.require(gmp(balanced_tuple(39, 4), 2) == 570, "balanced GMP2 != 570");
    c.require(nonfree_by_mixed_products(c4, ones(13, 3)), "not certified non-free");
}

void criterion_appendix_tables(Criterion& c) {
    const std::string dir = CSA_DATA_DIR;
    const char* files[] = {"table2_g1_chain.json", "table3_c3_chain.json",
                           "table4_g2_chain.json"};
    std::vector<Certificate> certs;
    for (const char* f : files) {
        Certificate cert = read_certificate_file(dir + "/" + f);
        auto v = verify_certificate(cert);
        c.require(v.valid, std::string(f) + " invalid at step " +
                               std::to_string(v.failing_step) + " (" + v.reason + ")");
        certs.push_back(std::move(cert));
    }
    // single corrupted exponents are caught
    for (size_t t = 0; t < certs.size(); ++t) {
        Certificate bad = certs[t];
        size_t row = bad.steps.size() / 2;
        bad.steps[row].restriction_exponents.back() += 1;
        c.require(!verify_certificate(bad).valid,
                  std::string(files[t]) + ": corruption not detected");
    }
    Certificate bad3 = certs[1];
    bad3.steps[2].restriction_exponents = {6, 7};
    auto v3 = verify_certificate(bad3);
    c.require(!v3.valid && v3.failing_step == 2, "altered row not localized");
}

void criterion_g1_g2_multiplicities(Criterion& c) {
    auto res = search_and_record(g1_arrangement_chain_order(), g1_mu1());
    c.require(res.kind == SearchResult::Free && res.exponents == ExponentMultiset{4, 5, 5, 5},
              "(A_G1, mu1) not certified (4,5,5,5)");
    if (res.certificate)
        c.require(verify_certificate(*res.certificate).valid, "emitted chain fails verification");

    auto v4 = verify_certificate(table4_certificate());
    c.require(v4.valid, "recursive chain for (A_G2, mu2) invalid");
    Certificate t4 = table4_certificate();
    c.require(t4.steps[0].exponents == ExponentMultiset{5, 5, 5, 5}, "top exponents wrong");

    Arrangement g2 = g2_arrangement_chain_order();
    Multiplicity mu2 = g2_mu2();
    for (int h = 0; h < g2.size(); ++h)
        c.require(mult_sum(triple(g2, mu2, h).euler) == 14,
                  "additive obstruction |mu2*| != 14 at " + g2.label(h));
}

void criterion_table1(Criterion& c) {
    for (const auto& row : generic_witness_table()) {
        Arrangement a = build_arrangement(catalog_graph(row.graph_index));
        std::vector<int> gens;
        bool labels_ok = true;
        for (const auto& lbl : row.generators) {
            int idx = a.index_of(lbl);
            if (idx < 0) labels_ok = false;
            else gens.push_back(idx);
        }
        std::string tag = "G" + std::to_string(row.graph_index);
        c.require(labels_ok, tag + ": stated hyperplane missing");
        if (!labels_ok) continue;
        Flat x = flat_of(a, gens);
        c.require(x.rank == row.rank, tag + ": rank mismatch");
        std::set<std::string> got, want(row.closure.begin(), row.closure.end());
        for (int i : x.closure) got.insert(a.label(i));
        c.require(got == want, tag + ": localization mismatch");
        auto [loc, loc_mu] = localization(a, ones(a.size()), x);
        c.require(is_generic(loc), tag + ": localization not generic");
    }
}

void criterion_deleted_c3(Criterion& c) {
    Arrangement d = deleted_c3();
    for (long k : {1L, 2L, 3L}) {
        auto res = search_and_record(d, {2 * k, 2 * k, 2 * k, 1, 1, 1});
        ExponentMultiset want(3, 2 * k + 1);
        c.require(res.kind == SearchResult::Free && res.exponents == want,
                  "free pattern k=" + std::to_string(k) + " not certified");
    }
    std::atomic<int> bad{0}, evidence{0}, free_found{0};
    parallel_for(g_jobs, 729, [&](int idx) {
        Multiplicity mu(6);
        int v = idx;
        for (int i = 0; i < 6; ++i) {
            mu[i] = v % 3 + 1;
            v /= 3;
        }
        Arrangement dd = deleted_c3();
        auto res = inductive_free_search(dd, mu);
        if (is_d_free_pattern(mu)) {
            if (res.kind == SearchResult::Free) {
                record_free(dd, mu, res.exponents);
                ++free_found;
            } else
                ++bad;
            return;
        }
        if (res.kind == SearchResult::Free) {
            ++bad;  // a Free verdict outside the free pattern would be wrong
            return;
        }
        if (d_nonfree_evidence(mu).verified) ++evidence;
        else
            ++bad;
    });
    c.require(bad == 0, std::to_string(bad.load()) + " multiplicities misclassified");
    c.require(evidence == 728, "evidence count " + std::to_string(evidence.load()) + " != 728");
    c.require(free_found == 1, "free pattern count != 1");
}

void criterion_c3_special(Criterion& c) {
    Arrangement c3 = c3_arrangement();
    const std::vector<std::pair<long, long>> cases = {{1, 2}, {2, 4}, {3, 7}};
    for (auto [k, r] : cases) {
        auto res = search_and_record(c3, {k, k, k, r, 1, 1, k});
        ExponentMultiset want = sorted_exponents({r, 2 * k + 1, 2 * k + 1});
        c.require(res.kind == SearchResult::Free && res.exponents == want,
                  "(k,r)=(" + std::to_string(k) + "," + std::to_string(r) + ") not certified");
        // the deletion at H_23 is supersolvable with the published filtration
        Multiplicity del = {k, k, k, r, 1, 0, k};
        auto ss = supersolvable_verify(c3, del, {{0}, {0, 1, 3}, {0, 1, 2, 3, 4, 6}});
        ExponentMultiset want_del = sorted_exponents({r, 2 * k, 2 * k + 1});
        c.require(ss.status == FreenessVerdict::Free && ss.exponents == want_del,
                  "deletion not supersolvable-certified for k=" + std::to_string(k));
        if (ss.status == FreenessVerdict::Free) record_free(c3, del, ss.exponents);
    }
    Multiplicity special = {3, 3, 3, 1, 1, 1, 3};
    auto res = inductive_free_search(c3, special);
    c.require(res.kind == SearchResult::NotInductivelyFree,
              "(3,3,3,1,1,1,3) should exhaust the memo space without a certificate");
    // published value: restriction order 8 at every hyperplane; exact
    // values are 8 at the multiplicity-1 hyperplanes and 9 at the rest,
    // every one missing the order 10 that a free deletion would force.
    // The literal check is kept and fails honestly; see the README.
    std::string orders;
    bool all8 = true, none10 = true;
    for (int h = 0; h < c3.size(); ++h) {
        long total = mult_sum(triple(c3, special, h).euler);
        orders += std::to_string(total) + " ";
        if (total != 8) all8 = false;
        if (total == 10) none10 = false;
    }
    c.require(none10, "an order-10 restriction exists");
    c.require(all8, "stated |mu*|=8 everywhere; computed " + orders + "(documented defect)");
}

void criterion_rank3(Criterion& c) {
    auto v = simple_free_rank3(c3_arrangement());
    c.require(v.status == FreenessVerdict::Free && v.exponents == ExponentMultiset{1, 3, 3},
              "A_C3 not Free(1,3,3)");
    c.require(simple_free_rank3(deleted_c3()).status == FreenessVerdict::NotFree,
              "deleted C3 not NotFree");
    Arrangement c3 = c3_arrangement();
    auto [res, kappa] = ziegler_restriction(c3, c3.index_of("H_123"));
    ExpPair e = rank2_exponents(project_to_rank2(res.arr, kappa));
    c.require(e == ExpPair{3, 3}, "Ziegler restriction exponents != (3,3)");
}

void criterion_saito(Criterion& c) {
    Poly x1 = Poly::variable(2, 0), x2 = Poly::variable(2, 1);
    for (int cs : {1, 2}) {
        for (long k = 1; k <= 4; ++k) {
            B2FamilyData d = b2_family(cs, k);
            c.require(saito_verify(*d.basis_arrangement, d.basis_mu, d.basis),
                      "case " + std::to_string(cs) + " k=" + std::to_string(k) + " fails");
            std::vector<std::vector<Poly>> m(2, std::vector<Poly>(2, Poly(2)));
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) m[i][j] = d.basis[i][j];
            int e = static_cast<int>(cs == 1 ? 2 * k : 2 * k + 1);
            Poly want = (x1 - x2) * (x1 + x2) * x1.pow(e) * x2.pow(e);
            c.require(poly_determinant(m).is_constant_multiple_of(want),
                      "determinant mismatch at case " + std::to_string(cs) +
                          " k=" + std::to_string(k));
        }
    }
}

void criterion_classification(Criterion& c) {
    std::vector<Graph> graphs;
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : connected_graphs(n)) graphs.push_back(g);
    std::atomic<int> bad{0};
    std::atomic<int> nonfree_count{0};
    parallel_for(g_jobs, static_cast<int>(graphs.size()), [&](int i) {
        const Graph& g = graphs[i];
        MultiFreeness mf = classify_multi_freeness(g);
        if (mf == MultiFreeness::TotallyNonFree) {
            ++nonfree_count;
            if (!totally_nonfree_witness(build_arrangement(g))) ++bad;
        }
    });
    c.require(bad == 0, std::to_string(bad.load()) + " graphs lack a generic witness");
    c.require(nonfree_count == 16, "totally non-free count on <=5 vertices != 16");

    // the six survivors on 4 vertices
    std::set<std::string> tags;
    for (const Graph& g : connected_graphs(4)) {
        if (classify_multi_freeness(g) == MultiFreeness::SupportsFreeMultiplicity)
            tags.insert(recognize_family(g).str());
    }
    std::set<std::string> want = {"P_4", "C_4", "A_{3,2}", "Delta_{3,1}", "G_1", "G_2"};
    c.require(tags == want, "4-vertex survivors mismatch");
}

void criterion_property_suites(Criterion& c) {
    // rank-2 engine vs the closed form on all triples with entries <= 8
    Arrangement three =
        make_arrangement(2, {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(1), Int(1)}});
    std::atomic<int> bad{0};
    parallel_for(g_jobs, 9 * 9 * 9, [&](int idx) {
        long k1 = idx % 9, k2 = (idx / 9) % 9, k3 = idx / 81;
        if (k1 + k2 + k3 == 0) return;
        Rank2MultiArrangement m;
        const std::array<Int, 2> forms[3] = {{1, 0}, {0, 1}, {1, 1}};
        long mults[3] = {k1, k2, k3};
        for (int i = 0; i < 3; ++i) {
            if (mults[i] == 0) continue;
            m.forms.push_back(forms[i]);
            m.mults.push_back(mults[i]);
        }
        ExpPair got = m.forms.size() >= 2 ? rank2_exponents_search(m)
                                          : rank2_exponents(m);
        if (got != wakamiko_exponents(k1, k2, k3)) ++bad;
    });
    c.require(bad == 0, std::to_string(bad.load()) + " triples disagree with the closed form");

    // every Free verdict recorded during this run satisfies GMP(2) = LMP(2)
    size_t checked = 0;
    {
        std::lock_guard<std::mutex> lock(g_free_mutex);
        for (const auto& rec : g_free_verdicts) {
            if (gmp(rec.exps, 2) != lmp2(rec.arr, rec.mu)) {
                c.require(false, "free verdict violates the mixed product equality");
            }
            ++checked;
        }
    }
    c.require(checked >= 8, "too few free verdicts recorded");
    c.detail << checked << " free verdicts cross-checked";

    // extension count and Ziegler round trip
    Arrangement d = deleted_c3();
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> mdist(1, 4), sdist(-1, 2);
    for (int trial = 0; trial < 25; ++trial) {
        Multiplicity mu(6), sigma(6);
        for (int i = 0; i < 6; ++i) {
            mu[i] = mdist(rng);
            sigma[i] = sdist(rng);
        }
        Arrangement ext = extend(d, mu, sigma);
        c.require(ext.size() == 1 + mult_sum(mu), "extension count != 1 + |mu|");
        auto [res, kappa] = ziegler_restriction(ext, 0);
        std::multiset<long> kap(kappa.begin(), kappa.end());
        std::multiset<long> want(mu.begin(), mu.end());
        c.require(kap == want, "Ziegler restriction does not recover mu");
    }
}

}  // namespace

int main() {
    if (const char* env = std::getenv("CSA_JOBS")) g_jobs = std::atoi(env);

    run_criterion(1, "cardinalities", criterion_cardinalities);
    run_criterion(2, "mixed products", criterion_mixed_products);
    run_criterion(3, "counting vs lattice oracle (<=6 vertices)", criterion_counting_oracle);
    run_criterion(4, "constant multiplicities on C3", criterion_c3_constants);
    run_criterion(5, "C4 constant multiplicity 3", criterion_c4_constant);
    run_criterion(6, "appendix chain certificates", criterion_appendix_tables);
    run_criterion(7, "free multiplicities on G1 and G2", criterion_g1_g2_multiplicities);
    run_criterion(8, "generic localization table", criterion_table1);
    run_criterion(9, "deleted C3 classification", criterion_deleted_c3);
    run_criterion(10, "C3 special multiplicities", criterion_c3_special);
    run_criterion(11, "simple rank-3 criterion", criterion_rank3);
    run_criterion(12, "explicit derivation bases", criterion_saito);
    run_criterion(13, "classification sweep (<=5 vertices)", criterion_classification);
    run_criterion(14, "property suites", criterion_property_suites);

    if (g_failures)
        std::cout << g_failures << " criterion(s) failed (criterion 10 carries a documented "
                     "defect in the stated value; see README and the repro suite)\n";
    else
        std::cout << "all criteria passed\n";
    return g_failures;
}
