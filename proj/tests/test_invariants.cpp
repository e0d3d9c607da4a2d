#include <doctest.h>

#include "csa/extensions.hpp"
#include "csa/graphs.hpp"
#include "csa/invariants.hpp"

using namespace csa;

TEST_CASE("lmp2 lattice values") {
    Arrangement g1 = build_arrangement(catalog_graph(1));
    CHECK(lmp2(g1, ones(g1.size())) == 70);
    Arrangement g2 = build_arrangement(catalog_graph(2));
    CHECK(lmp2(g2, ones(g2.size())) == 80);
    // deleted triangle, simple: 3 triple points and 6 double points
    CHECK(lmp2(deleted_c3(), ones(6)) == 12);
    // reordering hyperplanes does not change the value
    Arrangement d = deleted_c3();
    std::swap(d.hyperplanes[0], d.hyperplanes[5]);
    std::swap(d.labels[0], d.labels[5]);
    CHECK(lmp2(d, ones(6)) == 12);
}

TEST_CASE("gmp") {
    CHECK(gmp({1, 4, 4, 5}, 2) == 69);
    CHECK(gmp({1, 4, 5, 5}, 2) == 79);
    CHECK(gmp({9, 10, 10, 10}, 2) == 570);
    CHECK(gmp({2, 3, 5}, 1) == 10);
    CHECK(gmp({2, 3, 5}, 3) == 30);
    CHECK(gmp({2, 3, 5}, 0) == 1);
    CHECK_THROWS_AS(gmp({1, 2}, 3), std::invalid_argument);
}

TEST_CASE("balanced tuples") {
    CHECK(balanced_tuple(16, 4) == ExponentMultiset{4, 4, 4, 4});
    CHECK(balanced_tuple(14, 4, {1}) == ExponentMultiset{1, 4, 4, 5});
    CHECK(balanced_tuple(5, 2) == ExponentMultiset{2, 3});
    CHECK_THROWS_AS(balanced_tuple(2, 2, {3}), std::invalid_argument);
}

TEST_CASE("balanced tuple maximizes gmp2") {
    // exhaustive: all non-decreasing tuples with the same sum and length
    for (long total = 1; total <= 20; total += 3) {
        for (int len = 2; len <= 5; ++len) {
            ExponentMultiset best = balanced_tuple(total, len);
            Int best_val = gmp(best, 2);
            std::vector<long> tuple(len, 0);
            std::function<void(int, long, long)> enumerate = [&](int pos, long left, long minv) {
                if (pos == len - 1) {
                    if (left < minv) return;
                    tuple[pos] = left;
                    CHECK(gmp(tuple, 2) <= best_val);
                    return;
                }
                for (long v = minv; v * (len - pos) <= left; ++v) {
                    tuple[pos] = v;
                    enumerate(pos + 1, left - v, v);
                }
            };
            enumerate(0, total, 0);
        }
    }
}

TEST_CASE("mixed product non-freeness certificates") {
    Arrangement g1 = build_arrangement(catalog_graph(1));
    CHECK(nonfree_by_mixed_products(g1, ones(g1.size())));
    Arrangement c3 = c3_arrangement();
    CHECK(nonfree_by_mixed_products(c3, ones(7, 2)));
    CHECK_FALSE(nonfree_by_mixed_products(c3, ones(7, 3)));
}

TEST_CASE("characteristic polynomials") {
    Arrangement b =
        make_arrangement(3, {{Int(1), Int(0), Int(0)}, {Int(0), Int(1), Int(0)},
                             {Int(0), Int(0), Int(1)}});
    // (t-1)^3 = t^3 - 3t^2 + 3t - 1
    CHECK(char_poly(b).coeffs == std::vector<Int>{-1, 3, -3, 1});

    // triangle arrangement: (t-1)(t-3)^2 = t^3 - 7t^2 + 15t - 9
    CHECK(char_poly(c3_arrangement()).coeffs == std::vector<Int>{-9, 15, -7, 1});

    Arrangement one = make_arrangement(1, {{Int(1)}});
    CHECK(char_poly(one).coeffs == std::vector<Int>{-1, 1});

    // chi(A, 1) = 0 for non-empty arrangements
    for (int idx : {1, 2, 3}) {
        CharPoly chi = char_poly(build_arrangement(catalog_graph(idx)));
        Int at1 = 0;
        for (const auto& c : chi.coeffs) at1 += c;
        CHECK(at1 == 0);
    }
}
