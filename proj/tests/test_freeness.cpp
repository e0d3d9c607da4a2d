#include <doctest.h>

#include <random>
#include <set>

#include "csa/extensions.hpp"
#include "csa/freeness.hpp"
#include "csa/graphs.hpp"
#include "csa/invariants.hpp"
#include "csa/repro.hpp"

using namespace csa;

TEST_CASE("triples") {
    Arrangement c3 = c3_arrangement();
    Triple t = triple(c3, ones(7, 3), c3.index_of("H_13"));
    CHECK(t.deleted_mu[c3.index_of("H_13")] == 2);
    CHECK(mult_sum(t.euler) == 14);
    ExpPair e = rank2_exponents(project_to_rank2(t.restriction, t.euler));
    CHECK(e == ExpPair{7, 7});

    // boolean pair: deleting one hyperplane leaves one restricted point
    Arrangement b = make_arrangement(2, {{Int(1), Int(0)}, {Int(0), Int(1)}});
    Triple tb = triple(b, {1, 1}, 0);
    CHECK(tb.deleted_mu == Multiplicity{0, 1});
    CHECK(tb.restriction.size() == 1);
    CHECK(tb.euler == Multiplicity{1});

    // deleted triangle with the doubled free pattern at k=1
    Arrangement d = deleted_c3();
    Triple td = triple(d, {2, 2, 2, 1, 1, 1}, d.index_of("H_23"));
    CHECK(td.restriction.size() == 4);
    std::multiset<long> ms(td.euler.begin(), td.euler.end());
    CHECK(ms == std::multiset<long>{1, 1, 2, 2});

    CHECK_THROWS_AS(triple(d, {0, 1, 1, 1, 1, 1}, 0), std::invalid_argument);
}

TEST_CASE("inductive search on the triangle") {
    Arrangement c3 = c3_arrangement();
    auto simple = inductive_free_search(c3, ones(7));
    REQUIRE(simple.kind == SearchResult::Free);
    CHECK(simple.exponents == ExponentMultiset{1, 3, 3});

    auto triple_mult = inductive_free_search(c3, ones(7, 3));
    REQUIRE(triple_mult.kind == SearchResult::Free);
    CHECK(triple_mult.exponents == ExponentMultiset{7, 7, 7});

    auto special = inductive_free_search(c3, {3, 3, 3, 1, 1, 1, 3});
    CHECK(special.kind == SearchResult::NotInductivelyFree);
}

TEST_CASE("search verdicts are stable under hyperplane reordering") {
    Arrangement c3 = c3_arrangement();
    std::vector<int> order = {6, 2, 4, 0, 5, 1, 3};
    Arrangement shuffled;
    shuffled.dim = 3;
    Multiplicity mu_orig = {1, 2, 3, 1, 1, 2, 1};
    Multiplicity mu_shuffled;
    for (int i : order) {
        shuffled.hyperplanes.push_back(c3.hyperplanes[i]);
        shuffled.labels.push_back(c3.label(i));
        mu_shuffled.push_back(mu_orig[i]);
    }
    auto r1 = inductive_free_search(c3, mu_orig);
    auto r2 = inductive_free_search(shuffled, mu_shuffled);
    CHECK(r1.kind == r2.kind);
    if (r1.kind == SearchResult::Free) CHECK(r1.exponents == r2.exponents);
}

TEST_CASE("emitted certificates verify") {
    Arrangement c3 = c3_arrangement();
    for (Multiplicity mu : {ones(7, 3), Multiplicity{2, 2, 2, 4, 1, 1, 2}}) {
        auto res = inductive_free_search(c3, mu);
        REQUIRE(res.kind == SearchResult::Free);
        REQUIRE(res.certificate.has_value());
        auto v = verify_certificate(*res.certificate);
        CHECK(v.valid);
        // every chain row satisfies the containment condition by construction
        for (const auto& step : res.certificate->steps)
            CHECK(step.exponents.size() == step.restriction_exponents.size() + 1);
    }
    Arrangement d = deleted_c3();
    auto res = inductive_free_search(d, {4, 4, 4, 1, 1, 1});
    REQUIRE(res.kind == SearchResult::Free);
    CHECK(res.exponents == ExponentMultiset{5, 5, 5});
    CHECK(verify_certificate(*res.certificate).valid);
}

TEST_CASE("corrupted certificates are rejected") {
    Certificate cert = table3_certificate();
    SUBCASE("altered restriction exponent") {
        cert.steps[2].restriction_exponents = {6, 7};
        auto v = verify_certificate(cert);
        CHECK_FALSE(v.valid);
        CHECK(v.failing_step == 2);
    }
    SUBCASE("altered exponent") {
        cert.steps[7].exponents = {4, 5, 6};
        CHECK_FALSE(verify_certificate(cert).valid);
    }
    SUBCASE("broken multiplicity chain") {
        cert.steps[5].mult_before[0] += 1;
        CHECK_FALSE(verify_certificate(cert).valid);
    }
    SUBCASE("unknown hyperplane") {
        cert.steps[0].hyperplane = "H_99";
        auto v = verify_certificate(cert);
        CHECK_FALSE(v.valid);
        CHECK(v.failing_step == 0);
    }
}

TEST_CASE("saito criterion") {
    // B2-type basis for x1^2 x2^2 (x1+x2)(x1-x2)
    B2FamilyData d = b2_family(1, 1);
    REQUIRE(d.basis_arrangement.has_value());
    CHECK(saito_verify(*d.basis_arrangement, d.basis_mu, d.basis));

    // Euler derivation alone in rank 1: Q = x^m
    Arrangement line = make_arrangement(1, {{Int(1)}});
    Poly x = Poly::variable(1, 0);
    CHECK(saito_verify(line, {3}, {{x.pow(3)}}));
    CHECK_FALSE(saito_verify(line, {4}, {{x.pow(3)}}));

    // same B2 basis against a wrong defining polynomial: degree mismatch
    Multiplicity wrong = d.basis_mu;
    wrong[2] += 1;
    CHECK_FALSE(saito_verify(*d.basis_arrangement, wrong, d.basis));

    // unimodular change of basis preserves the verdict
    B2FamilyData d2 = b2_family(1, 2);
    std::vector<PolyDerivation> basis2 = d2.basis;
    for (int j = 0; j < 2; ++j) basis2[0][j] = basis2[0][j] + basis2[1][j] * Rat(3);
    CHECK(saito_verify(*d2.basis_arrangement, d2.basis_mu, basis2));

    CHECK_THROWS_AS(saito_verify(line, {1}, {}), std::invalid_argument);
}

TEST_CASE("b2 lemma data") {
    CHECK(b2_family(1, 1).mu == Multiplicity{2, 1, 2, 1});
    CHECK(b2_family(1, 1).exponents == ExpPair{3, 3});
    CHECK(b2_family(2, 1).mu == Multiplicity{3, 1, 3, 1});
    CHECK(b2_family(2, 1).exponents == ExpPair{3, 5});
    CHECK(b2_family(3, 3).mu == Multiplicity{3, 1, 3, 2});
    CHECK(b2_family(3, 3).exponents == ExpPair{4, 5});
    CHECK(b2_family(4, 2).exponents == ExpPair{3, 4});
    CHECK_THROWS_AS(b2_family(5, 1), std::invalid_argument);
    CHECK_THROWS_AS(b2_family(3, 1), std::invalid_argument);
}

TEST_CASE("supersolvable criterion") {
    Arrangement c3 = c3_arrangement();
    // the deletion of the triangle arrangement at H_23, k=2, r=4
    Multiplicity mu = {2, 2, 2, 4, 1, 0, 2};
    std::vector<std::vector<int>> filt = {{0}, {0, 1, 3}, {0, 1, 2, 3, 4, 6}};
    auto v = supersolvable_verify(c3, mu, filt);
    REQUIRE(v.status == FreenessVerdict::Free);
    CHECK(v.exponents == ExponentMultiset{4, 4, 5});

    // boolean arrangement: any multiplicity, coordinate filtration
    Arrangement b = make_arrangement(
        3, {{Int(1), Int(0), Int(0)}, {Int(0), Int(1), Int(0)}, {Int(0), Int(0), Int(1)}});
    auto vb = supersolvable_verify(b, {5, 2, 7}, {{0}, {0, 1}, {0, 1, 2}});
    REQUIRE(vb.status == FreenessVerdict::Free);
    CHECK(vb.exponents == ExponentMultiset{2, 5, 7});

    // violated multiplicity inequality: mu(H_12) = 1 < mu(H_3) + mu(H_123) - 1
    Multiplicity bad = {3, 3, 3, 1, 1, 0, 3};
    auto vbad = supersolvable_verify(c3, bad, filt);
    CHECK(vbad.status == FreenessVerdict::Unknown);

    // malformed filtrations are input errors
    CHECK_THROWS_AS(supersolvable_verify(c3, mu, {{0}, {1, 3}, {0, 1, 2, 3, 4, 6}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(supersolvable_verify(c3, mu, {{0}, {0, 1, 3}}), std::invalid_argument);
}

TEST_CASE("totally non-free witnesses") {
    Arrangement g3 = build_arrangement(catalog_graph(3));
    auto w = totally_nonfree_witness(g3);
    REQUIRE(w.has_value());
    CHECK(w->rank == 3);
    CHECK(w->closure.size() == 4);
    std::set<std::string> labels;
    for (int i : w->closure) labels.insert(g3.label(i));
    CHECK(labels == std::set<std::string>{"H_1", "H_123", "H_145", "H_12345"});

    CHECK_FALSE(totally_nonfree_witness(build_arrangement(path_graph(4))).has_value());
}

TEST_CASE("rank-3 criterion") {
    auto v = simple_free_rank3(c3_arrangement());
    REQUIRE(v.status == FreenessVerdict::Free);
    CHECK(v.exponents == ExponentMultiset{1, 3, 3});

    CHECK(simple_free_rank3(deleted_c3()).status == FreenessVerdict::NotFree);

    Arrangement b = make_arrangement(
        3, {{Int(1), Int(0), Int(0)}, {Int(0), Int(1), Int(0)}, {Int(0), Int(0), Int(1)}});
    auto vb = simple_free_rank3(b);
    REQUIRE(vb.status == FreenessVerdict::Free);
    CHECK(vb.exponents == ExponentMultiset{1, 1, 1});

    CHECK_THROWS_AS(simple_free_rank3(b = make_arrangement(2, {{Int(1), Int(0)}})),
                    std::invalid_argument);
}

TEST_CASE("rank-3 criterion consistent with the inductive search") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> entry(-1, 2), count(4, 8);
    int tried = 0;
    while (tried < 25) {
        int n = count(rng);
        std::vector<std::vector<Int>> normals;
        std::set<std::vector<Int>> seen;
        while (static_cast<int>(normals.size()) < n) {
            std::vector<Int> v = {entry(rng), entry(rng), entry(rng)};
            v = primitive_vector(v);
            if (is_zero_vector(v) || !seen.insert(v).second) continue;
            normals.push_back(v);
        }
        Arrangement a = make_arrangement(3, normals);
        if (arrangement_rank(a) != 3) continue;
        ++tried;
        auto chi = simple_free_rank3(a);
        auto search = inductive_free_search(a, ones(n));
        if (search.kind == SearchResult::Free) {
            // inductively free implies free: the criterion must agree
            REQUIRE(chi.status == FreenessVerdict::Free);
            CHECK(chi.exponents == search.exponents);
        }
    }
}

TEST_CASE("free verdicts satisfy the mixed product equality") {
    Arrangement c3 = c3_arrangement();
    int checked = 0;
    for (Multiplicity mu : {ones(7), ones(7, 3), Multiplicity{2, 2, 2, 4, 1, 1, 2}}) {
        auto res = inductive_free_search(c3, mu);
        if (res.kind != SearchResult::Free) continue;
        CHECK(gmp(res.exponents, 2) == lmp2(c3, mu));
        ++checked;
    }
    CHECK(checked == 3);
}

TEST_CASE("free_check pipeline") {
    Arrangement g1 = build_arrangement(catalog_graph(1));
    auto v1 = free_check(g1, ones(g1.size()));
    CHECK(v1.status == FreenessVerdict::NotFree);
    CHECK(v1.evidence == "mixed-product");

    Arrangement g3 = build_arrangement(catalog_graph(3));
    auto v3 = free_check(g3, ones(g3.size(), 2));
    CHECK(v3.status == FreenessVerdict::NotFree);

    // the pipeline catches the simple deleted triangle at the mixed-product
    // stage, before the rank-3 criterion would
    auto vd = free_check(deleted_c3(), ones(6));
    CHECK(vd.status == FreenessVerdict::NotFree);
    CHECK(vd.evidence == "mixed-product");

    auto vc = free_check(c3_arrangement(), ones(7, 3));
    REQUIRE(vc.status == FreenessVerdict::Free);
    CHECK(vc.exponents == ExponentMultiset{7, 7, 7});

    Arrangement two = make_arrangement(2, {{Int(1), Int(0)}, {Int(0), Int(1)}});
    auto v2 = free_check(two, {3, 5});
    REQUIRE(v2.status == FreenessVerdict::Free);
    CHECK(v2.exponents == ExponentMultiset{3, 5});
}
