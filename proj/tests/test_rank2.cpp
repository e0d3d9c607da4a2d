#include <doctest.h>

#include <random>
#include <set>

#include "csa/extensions.hpp"
#include "csa/rank2.hpp"

using namespace csa;

namespace {

Rank2MultiArrangement lines(const std::vector<std::array<long, 2>>& forms,
                            const Multiplicity& mults) {
    Rank2MultiArrangement m;
    for (const auto& f : forms) m.forms.push_back({Int(f[0]), Int(f[1])});
    m.mults = mults;
    return m;
}

}  // namespace

TEST_CASE("project_to_rank2") {
    Arrangement a = make_arrangement(3, {{Int(1), Int(0), Int(0)}, {Int(0), Int(1), Int(0)}});
    auto p = project_to_rank2(a, {1, 1});
    REQUIRE(p.forms.size() == 2);
    CHECK(p.forms[0] == std::array<Int, 2>{1, 0});
    CHECK(p.forms[1] == std::array<Int, 2>{0, 1});

    Arrangement b = make_arrangement(
        3, {{Int(1), Int(0), Int(0)}, {Int(0), Int(1), Int(0)}, {Int(1), Int(1), Int(0)}});
    auto q = project_to_rank2(b, {1, 1, 1});
    REQUIRE(q.forms.size() == 3);
    CHECK(q.forms[2] == std::array<Int, 2>{1, 1});

    // localization of the triangle arrangement at H_1 and H_23: three forms,
    // one the sum of the other two
    Arrangement c3 = c3_arrangement();
    Flat x = flat_of(c3, {c3.index_of("H_1"), c3.index_of("H_23")});
    auto [loc, mu] = localization(c3, ones(7), x);
    auto r = project_to_rank2(loc, mu);
    REQUIRE(r.forms.size() == 3);
    bool sum_found = false;
    for (int i = 0; i < 3 && !sum_found; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        if (r.forms[i][0] == r.forms[j][0] + r.forms[k][0] &&
            r.forms[i][1] == r.forms[j][1] + r.forms[k][1])
            sum_found = true;
    }
    CHECK(sum_found);

    CHECK_THROWS_AS(project_to_rank2(c3_arrangement(), ones(7)), std::invalid_argument);
}

TEST_CASE("wakamiko closed form") {
    CHECK(wakamiko_exponents(2, 2, 1) == ExpPair{2, 3});
    CHECK(wakamiko_exponents(4, 4, 1) == ExpPair{4, 5});
    CHECK(wakamiko_exponents(6, 6, 1) == ExpPair{6, 7});
    CHECK(wakamiko_exponents(3, 3, 3) == ExpPair{4, 5});
    CHECK(wakamiko_exponents(1, 1, 1) == ExpPair{1, 2});
    CHECK(wakamiko_exponents(1, 1, 3) == ExpPair{2, 3});
    CHECK(wakamiko_exponents(0, 0, 0) == ExpPair{0, 0});
    CHECK(wakamiko_exponents(0, 2, 5) == ExpPair{2, 5});
}

TEST_CASE("rank2 exponent dispatch") {
    CHECK(rank2_exponents(lines({}, {})) == ExpPair{0, 0});
    CHECK(rank2_exponents(lines({{1, 0}}, {4})) == ExpPair{0, 4});
    CHECK(rank2_exponents(lines({{1, 0}, {0, 1}}, {2, 5})) == ExpPair{2, 5});
    CHECK(rank2_exponents(lines({{1, 0}, {0, 1}, {1, 1}}, {1, 1, 3})) == ExpPair{2, 3});
    CHECK(rank2_exponents(lines({{1, 0}, {0, 1}, {1, 1}}, {2, 2, 2})) == ExpPair{3, 3});
    // zero multiplicities are dropped before dispatch
    CHECK(rank2_exponents(lines({{1, 0}, {0, 1}, {1, 1}}, {0, 0, 3})) == ExpPair{0, 3});
}

TEST_CASE("derivation search agrees with the closed form on three lines") {
    for (long k1 = 0; k1 <= 5; ++k1)
        for (long k2 = k1; k2 <= 5; ++k2)
            for (long k3 = k2; k3 <= 5; ++k3) {
                if (k1 + k2 + k3 == 0) continue;
                auto m = lines({{1, 0}, {0, 1}, {1, 1}}, {k1, k2, k3});
                Rank2MultiArrangement s;
                for (size_t i = 0; i < 3; ++i) {
                    if (m.mults[i] == 0) continue;
                    s.forms.push_back(m.forms[i]);
                    s.mults.push_back(m.mults[i]);
                }
                if (s.forms.size() < 2) continue;
                CAPTURE(k1);
                CAPTURE(k2);
                CAPTURE(k3);
                CHECK(rank2_exponents_search(s) == wakamiko_exponents(k1, k2, k3));
            }
}

TEST_CASE("rank2 exponents sum to the multiplicity order") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> nforms(1, 5), m(1, 4);
    const std::vector<std::array<long, 2>> pool = {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 1}};
    for (int trial = 0; trial < 40; ++trial) {
        int n = nforms(rng);
        std::vector<std::array<long, 2>> fs(pool.begin(), pool.begin() + n);
        Multiplicity mu;
        for (int i = 0; i < n; ++i) mu.push_back(m(rng));
        ExpPair e = rank2_exponents(lines(fs, mu));
        CHECK(e.e1 + e.e2 == mult_sum(mu));
        CHECK(e.e1 <= e.e2);
    }
}

TEST_CASE("four concurrent lines need the general search") {
    // x^2k y^2k (x+y)(x-y): the basis construction behind the B2 family
    auto m = lines({{1, 0}, {0, 1}, {1, 1}, {1, -1}}, {2, 2, 1, 1});
    CHECK(rank2_exponents(m) == ExpPair{3, 3});
    auto m2 = lines({{1, 0}, {0, 1}, {1, 1}, {1, -1}}, {4, 4, 1, 1});
    CHECK(rank2_exponents(m2) == ExpPair{5, 5});
    auto m3 = lines({{1, 0}, {0, 1}, {1, 1}, {1, -1}}, {3, 3, 1, 1});
    CHECK(rank2_exponents(m3) == ExpPair{3, 5});
}

TEST_CASE("shared exponent extraction") {
    CHECK(shared_exponent({3, 4}, {3, 3}) == 3);
    CHECK(shared_exponent({2, 2}, {1, 2}) == 2);
    CHECK(shared_exponent({0, 5}, {0, 4}) == 0);
    CHECK(shared_exponent({1, 1}, {0, 1}) == 1);
    CHECK_THROWS(shared_exponent({2, 2}, {2, 3}));
}

TEST_CASE("euler multiplicity closed cases") {
    // (i) two hyperplanes: the other multiplicity
    Arrangement two = make_arrangement(2, {{Int(1), Int(0)}, {Int(0), Int(1)}});
    Flat x2 = flat_of(two, {0, 1});
    for (long m1 : {1, 2, 5}) CHECK(euler_multiplicity(two, {1, m1}, 0, x2) == m1);

    Arrangement three =
        make_arrangement(2, {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(1), Int(1)}});
    Flat x3 = flat_of(three, {0, 1});
    // (ii) |mu_X| <= 2k-1 with mu(h0) > 1: k - 1
    CHECK(euler_multiplicity(three, {2, 1, 1}, 0, x3) == 2);
    CHECK(euler_multiplicity(three, {2, 2, 1}, 0, x3) == 2);
    CHECK(euler_multiplicity(three, {3, 1, 1}, 0, x3) == 2);
    // (iii) mu == 2 everywhere: k
    CHECK(euler_multiplicity(three, {2, 2, 2}, 0, x3) == 3);

    // flat not containing h0 is rejected
    Arrangement c3 = c3_arrangement();
    Flat y = flat_of(c3, {c3.index_of("H_1"), c3.index_of("H_2")});
    CHECK_THROWS_AS(euler_multiplicity(c3, ones(7), c3.index_of("H_3"), y),
                    std::invalid_argument);
}

TEST_CASE("euler multiplicities of the deleted triangle restriction") {
    Arrangement d = deleted_c3();
    Multiplicity mu = {2, 2, 2, 1, 1, 1};
    int h = d.index_of("H_23");
    std::multiset<long> values;
    for (const Flat& f : rank2_flats_through(d, h))
        values.insert(euler_multiplicity(d, mu, h, f));
    CHECK(values == std::multiset<long>{1, 1, 2, 2});
}

TEST_CASE("euler multiplicity lies strictly between 0 and the local order") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> m(1, 4);
    Arrangement d = deleted_c3();
    for (int trial = 0; trial < 40; ++trial) {
        Multiplicity mu(6);
        for (auto& x : mu) x = m(rng);
        int h = static_cast<int>(trial % 6);
        for (const Flat& f : rank2_flats_through(d, h)) {
            long local = 0;
            for (int i : f.closure) local += mu[i];
            long e = euler_multiplicity(d, mu, h, f);
            CHECK(e > 0);
            CHECK(e < local);
        }
    }
}
