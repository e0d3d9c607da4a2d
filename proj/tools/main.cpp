#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "csa/extensions.hpp"
#include "csa/invariants.hpp"
#include "csa/io.hpp"
#include "csa/repro.hpp"

namespace {

using namespace csa;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;

struct GlobalOpts {
    int jobs = 0;
    uint64_t budget = kDefaultBudget;
    std::string format = "text";
    bool cross_verify = false;
};

std::string exps_str(const ExponentMultiset& e) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << ")";
    return os.str();
}

std::string status_str(FreenessVerdict::Status s) {
    switch (s) {
        case FreenessVerdict::Free: return "Free";
        case FreenessVerdict::NotFree: return "NotFree";
        default: return "Unknown";
    }
}

void print_verdict(const GlobalOpts& g, const FreenessVerdict& v) {
    if (g.format == "json") {
        json j;
        j["status"] = status_str(v.status);
        if (v.status == FreenessVerdict::Free) j["exponents"] = v.exponents;
        j["evidence"] = v.evidence;
        if (!v.detail.empty()) j["detail"] = v.detail;
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << status_str(v.status);
    if (v.status == FreenessVerdict::Free) std::cout << " " << exps_str(v.exponents);
    std::cout << " (" << v.evidence << ")";
    if (!v.detail.empty()) std::cout << " " << v.detail;
    std::cout << "\n";
}

Multiplicity load_mult(const std::string& path, const Arrangement& a) {
    if (path.empty()) return ones(a.size());
    return read_multiplicity_file(path, a.size());
}

int cmd_graph_build(const std::string& graph_path, const std::string& out_path) {
    Graph g = read_graph_file(graph_path);
    Arrangement a = build_arrangement(g);
    if (out_path.empty()) {
        write_arrangement(std::cout, a);
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        write_arrangement(out, a);
    }
    return kExitOk;
}

int cmd_graph_classify(const GlobalOpts& g, const std::string& graph_path) {
    Graph gr = read_graph_file(graph_path);
    if (!is_connected(gr)) {
        std::cerr << "error: graph is not connected\n";
        return kExitInputError;
    }
    FamilyTag tag = recognize_family(gr);
    bool simple_free = classify_simple_freeness(gr);
    MultiFreeness mf = classify_multi_freeness(gr);
    std::string multi = mf == MultiFreeness::SupportsFreeMultiplicity
                            ? "supports free multiplicity"
                            : "totally non-free";
    if (g.format == "json") {
        json j;
        j["family"] = tag.str();
        j["simple_free"] = simple_free;
        j["multi"] = multi;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << tag.str() << "; simple: " << (simple_free ? "free" : "not free")
                  << "; multi: " << multi << "\n";
    }
    if (g.cross_verify) {
        // Cross-check the theorem verdicts against the lattice-level evidence.
        Arrangement a = build_arrangement(gr);
        if (!simple_free) {
            bool mixed = nonfree_by_mixed_products(a, ones(a.size()));
            bool witness = totally_nonfree_witness(a).has_value();
            if (!mixed && !witness) {
                std::cerr << "cross-check failed: no non-freeness evidence found\n";
                return kExitVerificationFailure;
            }
            std::cout << "cross-check: non-freeness evidence = "
                      << (mixed ? "mixed-product" : "generic-localization") << "\n";
        } else if (arrangement_rank(a) == 3) {
            auto v = simple_free_rank3(a);
            if (v.status != FreenessVerdict::Free) {
                std::cerr << "cross-check failed: rank-3 criterion disagrees\n";
                return kExitVerificationFailure;
            }
            std::cout << "cross-check: rank-3 criterion confirms, exponents "
                      << exps_str(v.exponents) << "\n";
        }
        if (mf == MultiFreeness::TotallyNonFree) {
            auto w = totally_nonfree_witness(a);
            if (!w) {
                std::cerr << "cross-check failed: no generic localization witness\n";
                return kExitVerificationFailure;
            }
            std::cout << "cross-check: generic localization of rank " << w->rank << " on "
                      << w->closure.size() << " hyperplanes\n";
        }
    }
    return kExitOk;
}

int cmd_graph_constant(const GlobalOpts& g, long c, const std::string& graph_path) {
    Graph gr = read_graph_file(graph_path);
    bool free = classify_constant_multiplicity(gr, c);
    std::cout << (free ? "free" : "not free") << "\n";
    if (g.cross_verify) {
        Arrangement a = build_arrangement(gr);
        Multiplicity mu = ones(a.size(), c);
        if (!free) {
            if (!nonfree_by_mixed_products(a, mu) && !totally_nonfree_witness(a)) {
                std::cerr << "cross-check failed: no non-freeness evidence for c=" << c << "\n";
                return kExitVerificationFailure;
            }
        } else {
            auto res = inductive_free_search(a, mu, g.budget);
            if (res.kind != SearchResult::Free) {
                std::cerr << "cross-check failed: no inductive certificate found\n";
                return kExitVerificationFailure;
            }
            std::cout << "cross-check: inductive certificate, exponents "
                      << exps_str(res.exponents) << "\n";
        }
    }
    return kExitOk;
}

int cmd_graph_lmp2(const GlobalOpts& g, long c, const std::string& graph_path) {
    Graph gr = read_graph_file(graph_path);
    Lmp2Count count = lmp2_by_counting(gr, c);
    if (g.format == "json") {
        json j;
        j["nu1"] = count.nu1;
        j["nu2"] = count.nu2;
        j["nu3"] = count.nu3;
        j["lmp2"] = count.lmp2.get_str();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "nu1=" << count.nu1 << " nu2=" << count.nu2 << " nu3=" << count.nu3
                  << " lmp2=" << count.lmp2.get_str() << "\n";
    }
    if (g.cross_verify) {
        Arrangement a = build_arrangement(gr);
        Int lattice = lmp2(a, ones(a.size(), c));
        if (lattice != count.lmp2) {
            std::cerr << "cross-check failed: lattice LMP(2) = " << lattice.get_str() << "\n";
            return kExitVerificationFailure;
        }
        std::cout << "cross-check: lattice computation agrees\n";
    }
    return kExitOk;
}

int cmd_free_check(const GlobalOpts& g, const std::string& arr_path, const std::string& mult_path) {
    Arrangement a = read_arrangement_file(arr_path);
    Multiplicity mu = load_mult(mult_path, a);
    print_verdict(g, free_check(a, mu, g.budget));
    return kExitOk;
}

int cmd_free_search(const GlobalOpts& g, const std::string& arr_path, const std::string& mult_path,
                    const std::string& out_path) {
    Arrangement a = read_arrangement_file(arr_path);
    Multiplicity mu = load_mult(mult_path, a);
    SearchResult res = inductive_free_search(a, mu, g.budget);
    if (res.kind == SearchResult::Free) {
        std::cout << "Free " << exps_str(res.exponents) << " (" << res.states_visited
                  << " states)\n";
        if (!out_path.empty()) {
            std::ofstream out(out_path);
            if (!out) throw std::runtime_error("cannot write " + out_path);
            out << certificate_to_json(*res.certificate) << "\n";
            std::cout << "certificate written to " << out_path << "\n";
        }
        return kExitOk;
    }
    if (res.kind == SearchResult::NotInductivelyFree) {
        std::cout << "NotInductivelyFree (state space exhausted after " << res.states_visited
                  << " states)\n";
    } else {
        std::cout << "Unknown (budget exhausted after " << res.states_visited << " states)\n";
    }
    return kExitOk;
}

int cmd_free_verify(const GlobalOpts& g, const std::string& cert_path) {
    Certificate cert = read_certificate_file(cert_path);
    VerifyResult v = verify_certificate(cert, g.budget);
    if (v.valid) {
        std::cout << "valid (" << cert.steps.size() << " steps)\n";
        return kExitOk;
    }
    std::cout << "invalid at step " << v.failing_step << ": " << v.reason << "\n";
    return kExitVerificationFailure;
}

int cmd_free_saito(const std::string& arr_path, const std::string& mult_path,
                   const std::string& basis_path) {
    Arrangement a = read_arrangement_file(arr_path);
    Multiplicity mu = load_mult(mult_path, a);
    auto basis = read_basis_file(basis_path, a.dim);
    bool ok = saito_verify(a, mu, basis);
    std::cout << (ok ? "basis verified" : "not a basis") << "\n";
    return ok ? kExitOk : kExitVerificationFailure;
}

int cmd_free_supersolvable(const std::string& arr_path, const std::string& mult_path,
                           const std::string& filt_path) {
    Arrangement a = read_arrangement_file(arr_path);
    Multiplicity mu = load_mult(mult_path, a);
    auto filt = read_filtration_file(filt_path, a);
    auto v = supersolvable_verify(a, mu, filt);
    if (v.status == FreenessVerdict::Free) {
        std::cout << "Free " << exps_str(v.exponents) << " (supersolvable)\n";
        return kExitOk;
    }
    std::cout << "Unknown: " << v.detail << "\n";
    return kExitVerificationFailure;
}

int cmd_repro(const GlobalOpts& g, const std::string& suite, const std::string& data_dir) {
    ReproOptions opts;
    opts.jobs = g.jobs;
    opts.budget = g.budget;
    opts.data_dir = data_dir;
    auto results = run_repro_suite(suite, opts);
    int failures = 0;
    if (g.format == "json") {
        json arr = json::array();
        for (const auto& r : results) {
            json j;
            j["suite"] = r.suite;
            j["name"] = r.name;
            j["pass"] = r.pass;
            j["expected"] = r.expected;
            j["actual"] = r.actual;
            j["ms"] = r.ms;
            arr.push_back(j);
            if (!r.pass) ++failures;
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            if (!r.pass) ++failures;
            std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << std::left << std::setw(11) << r.suite
                      << " " << std::setw(42) << r.name << " " << std::right << std::fixed
                      << std::setprecision(0) << std::setw(7) << r.ms << " ms";
            if (!r.pass) std::cout << "  expected: " << r.expected << "  actual: " << r.actual;
            std::cout << "\n";
        }
        std::cout << results.size() - failures << "/" << results.size() << " checks passed\n";
    }
    return failures == 0 ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact freeness engine for connected subgraph multiarrangements"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--jobs", g.jobs, "worker threads for sweeps (0 = all cores)");
    app.add_option("--budget", g.budget, "search state budget");
    app.add_option("--format", g.format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--verify", g.cross_verify,
                 "cross-check theorem fast paths against lattice computation");

    // graph subcommands
    auto* graph = app.add_subcommand("graph", "connected subgraph arrangement operations");
    graph->require_subcommand(1);
    graph->fallthrough();
    std::string graph_path, out_path;
    auto* gbuild = graph->add_subcommand("build", "emit the arrangement file for A_G");
    gbuild->fallthrough();
    gbuild->add_option("graph", graph_path, "edge list or .g6 file")->required();
    gbuild->add_option("-o,--output", out_path, "output file (default stdout)");
    auto* gclassify = graph->add_subcommand("classify", "family and freeness classification");
    gclassify->fallthrough();
    gclassify->add_option("graph", graph_path)->required();
    long cval = 1;
    auto* gconst = graph->add_subcommand("constant", "constant multiplicity verdict");
    gconst->fallthrough();
    gconst->add_option("c", cval, "constant multiplicity")->required();
    gconst->add_option("graph", graph_path)->required();
    auto* glmp = graph->add_subcommand("lmp2-count", "combinatorial LMP(2) counts");
    glmp->fallthrough();
    glmp->add_option("c", cval, "constant multiplicity")->required();
    glmp->add_option("graph", graph_path)->required();

    // free subcommands
    auto* fr = app.add_subcommand("free", "freeness verdicts and certificates");
    fr->require_subcommand(1);
    fr->fallthrough();
    std::string arr_path, mult_path, cert_path, basis_path, filt_path, cert_out;
    auto* fcheck = fr->add_subcommand("check", "verdict pipeline");
    fcheck->fallthrough();
    fcheck->add_option("arrangement", arr_path)->required();
    fcheck->add_option("multiplicity", mult_path, "multiplicity file (default all ones)");
    auto* fsearch = fr->add_subcommand("search", "inductive freeness search");
    fsearch->fallthrough();
    fsearch->add_option("arrangement", arr_path)->required();
    fsearch->add_option("multiplicity", mult_path);
    fsearch->add_option("-o,--output", cert_out, "write certificate JSON here");
    auto* fverify = fr->add_subcommand("verify", "verify a certificate file");
    fverify->fallthrough();
    fverify->add_option("certificate", cert_path)->required();
    auto* fsaito = fr->add_subcommand("saito", "verify a derivation basis");
    fsaito->fallthrough();
    fsaito->add_option("arrangement", arr_path)->required();
    fsaito->add_option("multiplicity", mult_path)->required();
    fsaito->add_option("basis", basis_path)->required();
    auto* fss = fr->add_subcommand("supersolvable", "verify a supersolvable filtration");
    fss->fallthrough();
    fss->add_option("arrangement", arr_path)->required();
    fss->add_option("multiplicity", mult_path)->required();
    fss->add_option("filtration", filt_path)->required();

    // repro
    std::string suite = "all";
#ifdef CSA_DATA_DIR
    std::string data_dir = CSA_DATA_DIR;
#else
    std::string data_dir;
#endif
    auto* repro = app.add_subcommand("repro", "reproduction suite");
    repro->fallthrough();
    repro->add_option("suite", suite, "all|table1|tables234|mixed|constants|deletedC3|c3mult");
    repro->add_option("--data", data_dir, "directory with the chain JSON files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (gbuild->parsed()) return cmd_graph_build(graph_path, out_path);
        if (gclassify->parsed()) return cmd_graph_classify(g, graph_path);
        if (gconst->parsed()) return cmd_graph_constant(g, cval, graph_path);
        if (glmp->parsed()) return cmd_graph_lmp2(g, cval, graph_path);
        if (fcheck->parsed()) return cmd_free_check(g, arr_path, mult_path);
        if (fsearch->parsed()) return cmd_free_search(g, arr_path, mult_path, cert_out);
        if (fverify->parsed()) return cmd_free_verify(g, cert_path);
        if (fsaito->parsed()) return cmd_free_saito(arr_path, mult_path, basis_path);
        if (fss->parsed()) return cmd_free_supersolvable(arr_path, mult_path, filt_path);
        if (repro->parsed()) return cmd_repro(g, suite, data_dir);
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
