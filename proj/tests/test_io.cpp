#include <doctest.h>

#include <sstream>

#include "csa/extensions.hpp"
#include "csa/graphs.hpp"
#include "csa/io.hpp"
#include "csa/repro.hpp"

using namespace csa;

TEST_CASE("arrangement text round trip") {
    Arrangement a = c3_arrangement();
    std::ostringstream os;
    write_arrangement(os, a);
    std::istringstream is(os.str());
    Arrangement b = read_arrangement(is);
    CHECK(b.dim == a.dim);
    CHECK(b.size() == a.size());
    for (int i = 0; i < a.size(); ++i) {
        CHECK(b.hyperplanes[i] == a.hyperplanes[i]);
        CHECK(b.label(i) == a.label(i));
    }
}

TEST_CASE("arrangement parse errors") {
    std::istringstream bad1("dim 2\nH: 1 2 3\n");
    CHECK_THROWS(read_arrangement(bad1));
    std::istringstream bad2("2\n1 0\n");
    CHECK_THROWS(read_arrangement(bad2));
}

TEST_CASE("multiplicity files") {
    std::istringstream is("1 2  3\n4");
    CHECK(read_multiplicity(is, 4) == Multiplicity{1, 2, 3, 4});
    std::istringstream neg("1 -2");
    CHECK_THROWS(read_multiplicity(neg, 2));
    std::istringstream wrong("1 2");
    CHECK_THROWS(read_multiplicity(wrong, 3));
}

TEST_CASE("edge list") {
    std::istringstream is("4 3\n1 2\n2 3\n3 4\n");
    Graph g = read_edge_list(is);
    CHECK(g == path_graph(4));
    std::ostringstream os;
    write_edge_list(os, g);
    std::istringstream is2(os.str());
    CHECK(read_edge_list(is2) == g);
}

TEST_CASE("graph6") {
    // "Bw" is the complete graph on three vertices
    CHECK(graphs_isomorphic(read_graph6_line("Bw"), cycle_graph(3)));
    // 5-cycle: pair bits 101001 100100 encode to 'h', 'c'
    Graph g = read_graph6_line("Dhc");
    CHECK(g.n == 5);
    CHECK(graphs_isomorphic(g, cycle_graph(5)));
    CHECK(read_graph6_line(">>graph6<<Bw").n == 3);
    CHECK_THROWS(read_graph6_line(""));
}

TEST_CASE("certificate json round trip") {
    Certificate cert = table3_certificate();
    std::string json = certificate_to_json(cert);
    std::istringstream is(json);
    Certificate back = read_certificate(is);
    CHECK(back.arrangement.size() == cert.arrangement.size());
    REQUIRE(back.steps.size() == cert.steps.size());
    for (size_t i = 0; i < cert.steps.size(); ++i) {
        CHECK(back.steps[i].op == cert.steps[i].op);
        CHECK(back.steps[i].hyperplane == cert.steps[i].hyperplane);
        CHECK(back.steps[i].mult_before == cert.steps[i].mult_before);
        CHECK(back.steps[i].exponents == cert.steps[i].exponents);
        CHECK(back.steps[i].restriction_exponents == cert.steps[i].restriction_exponents);
    }
}

TEST_CASE("basis json") {
    std::string text = R"({
      "dim": 1,
      "derivations": [[[{"c": "1", "e": [3]}]]]
    })";
    std::istringstream is(text);
    auto basis = read_basis(is, 1);
    REQUIRE(basis.size() == 1);
    REQUIRE(basis[0].size() == 1);
    CHECK(basis[0][0].total_degree() == 3);
}

TEST_CASE("filtration files resolve labels and indices") {
    Arrangement a = c3_arrangement();
    std::istringstream os;
    // write via a temp path-free route: parse from a string through a file is
    // covered by the CLI; here we check label resolution directly
    std::vector<std::vector<int>> filt;
    {
        std::string text = "H_1\nH_1 H_2 H_12\nH_1 H_2 H_3 H_12 H_13 H_123\n";
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            std::istringstream ls(line);
            std::vector<int> level;
            std::string tok;
            while (ls >> tok) level.push_back(a.index_of(tok));
            filt.push_back(level);
        }
    }
    CHECK(filt.size() == 3);
    CHECK(filt[0] == std::vector<int>{0});
    CHECK(filt[2].size() == 6);
}

TEST_CASE("unlabeled arrangement lines") {
    std::istringstream is("dim 2\n1 0\nH_y: 0 1\n1 1\n");
    Arrangement a = read_arrangement(is);
    CHECK(a.size() == 3);
    CHECK(a.label(0) == "H0");
    CHECK(a.label(1) == "H_y");
}
