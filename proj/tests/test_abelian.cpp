#include <doctest.h>

#include <cmath>
#include <random>

#include "abelian.hpp"

using namespace pontra::abelian;

TEST_CASE("roots of unity multiply exactly") {
    RootOfUnity a(1, 4), b(1, 6);
    auto c = a.times(b);  // 1/4 + 1/6 = 5/12
    CHECK(c.reduced().num() == 5);
    CHECK(c.reduced().order() == 12);

    CHECK(a.times(a.inverse()) == RootOfUnity(0, 1));
    CHECK(a.pow(4) == RootOfUnity(0, 1));
    CHECK(a.pow(-1) == a.inverse());
    CHECK(RootOfUnity(2, 8).reduced() == RootOfUnity(1, 4));
    CHECK(RootOfUnity(1, 4).rescaled(8) == RootOfUnity(2, 8));
    CHECK_THROWS_AS(RootOfUnity(1, 4).rescaled(6), std::invalid_argument);
    CHECK_THROWS_AS(RootOfUnity(0, 0), std::invalid_argument);
}

TEST_CASE("root_to_complex lands on the unit circle") {
    for (i64 n : {1, 2, 3, 5, 8, 12})
        for (i64 k = 0; k < n; ++k) {
            auto z = root_to_complex(RootOfUnity(k, n));
            CHECK(std::abs(std::abs(z) - 1.0) < 1e-14);
            double ang = 2.0 * 3.14159265358979323846 * double(k) / double(n);
            CHECK(std::abs(z - std::complex<double>(std::cos(ang), std::sin(ang))) < 1e-12);
        }
}

TEST_CASE("group construction drops trivial factors and rejects bad ones") {
    FiniteAbelianGroup g({1, 4, 1, 6});
    CHECK(g.factors() == std::vector<i64>{4, 6});
    CHECK(g.order() == 24);
    CHECK(g.exponent() == 12);
    CHECK_THROWS_AS(FiniteAbelianGroup({0}), std::invalid_argument);
    CHECK_THROWS_AS(FiniteAbelianGroup({-2}), std::invalid_argument);

    FiniteAbelianGroup trivial;
    CHECK(trivial.order() == 1);
    CHECK(trivial.exponent() == 1);
    CHECK(trivial.zero().c.empty());
}

TEST_CASE("element arithmetic reduces into range") {
    FiniteAbelianGroup g({2, 5});
    auto a = g.element({3, -1});  // reduces to (1, 4)
    CHECK(a.c == std::vector<i64>{1, 4});
    CHECK(g.add(a, a).c == std::vector<i64>{0, 3});
    CHECK(g.neg(a).c == std::vector<i64>{1, 1});
    CHECK(g.sub(a, a) == g.zero());
    CHECK(g.scale(7, a).c == std::vector<i64>{1, 3});
    CHECK_THROWS_AS(g.element({0}), std::invalid_argument);
}

TEST_CASE("mixed-radix enumeration round trips, last factor fastest") {
    FiniteAbelianGroup g({2, 3});
    CHECK(g.element_at(0).c == std::vector<i64>{0, 0});
    CHECK(g.element_at(1).c == std::vector<i64>{0, 1});
    CHECK(g.element_at(3).c == std::vector<i64>{1, 0});
    for (i64 i = 0; i < g.order(); ++i) CHECK(g.index_of(g.element_at(i)) == i);

    FiniteAbelianGroup big({4, 3, 5});
    for (i64 i = 0; i < big.order(); ++i) CHECK(big.index_of(big.element_at(i)) == i);
}

TEST_CASE("pairing is an exact bilinear root of unity") {
    FiniteAbelianGroup g({2, 4});
    auto e10 = g.element({1, 0});
    auto e01 = g.element({0, 1});
    CHECK(pairing(g, e10, e10) == RootOfUnity(2, 4).reduced().rescaled(4));
    CHECK(pairing(g, e01, e01) == RootOfUnity(1, 4));
    CHECK(pairing(g, e10, e01) == RootOfUnity(0, 4));

    std::mt19937_64 rng(21);
    std::uniform_int_distribution<i64> d(0, 23);
    FiniteAbelianGroup h({2, 3, 4});
    for (int t = 0; t < 100; ++t) {
        auto a = h.element_at(d(rng));
        auto b = h.element_at(d(rng));
        auto chi = h.element_at(d(rng));
        CHECK(pairing(h, h.add(a, b), chi) == pairing(h, a, chi).times(pairing(h, b, chi)));
        CHECK(pairing(h, a, h.add(b, chi)) == pairing(h, a, b).times(pairing(h, a, chi)));
        CHECK(pairing(h, a, chi) == pairing(h, chi, a));  // symmetric in coordinates
    }
}

TEST_CASE("pairing_num matches the exact pairing over any ambient multiple") {
    FiniteAbelianGroup g({2, 6});
    for (i64 n : {6, 12, 24}) {
        for (i64 i = 0; i < g.order(); ++i)
            for (i64 j = 0; j < g.order(); ++j) {
                auto a = g.element_at(i);
                auto chi = g.element_at(j);
                i64 num = pairing_num(g, a, chi, n);
                CHECK(RootOfUnity(num, n) == pairing(g, a, chi).rescaled(n));
            }
    }
    CHECK_THROWS_AS(pairing_num(g, g.zero(), g.zero(), 4), std::invalid_argument);
}

TEST_CASE("character orthogonality") {
    FiniteAbelianGroup g({3, 4});
    for (i64 j = 0; j < g.order(); ++j) {
        auto chi = g.element_at(j);
        std::complex<double> sum{0.0, 0.0};
        for (i64 i = 0; i < g.order(); ++i)
            sum += root_to_complex(pairing(g, g.element_at(i), chi));
        if (j == 0)
            CHECK(std::abs(sum - std::complex<double>(double(g.order()), 0.0)) < 1e-9);
        else
            CHECK(std::abs(sum) < 1e-9);
    }
}

TEST_CASE("dual group carries the same factor list") {
    FiniteAbelianGroup g({2, 8, 3});
    CHECK(dual(g) == g);
}
