#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "snf.hpp"

using namespace pontra::snf;

namespace {

Mat random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, i64 lo, i64 hi) {
    std::uniform_int_distribution<i64> d(lo, hi);
    Mat m(rows, std::vector<i64>(cols));
    for (auto& r : m)
        for (auto& e : r) e = d(rng);
    return m;
}

std::vector<i64> mat_apply(const Mat& a, const std::vector<i64>& x) {
    std::vector<i64> b(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) b[i] += a[i][j] * x[j];
    return b;
}

}  // namespace

TEST_CASE("smith normal form of fixed matrices") {
    // diag(2, 3) has invariant factors 1, 6
    auto f = smith({{2, 0}, {0, 3}});
    CHECK(f.diag == std::vector<i64>{1, 6});

    // diag(4, 6): gcd 2, product 24
    f = smith({{4, 0}, {0, 6}});
    CHECK(f.diag == std::vector<i64>{2, 12});

    f = smith({{1, 0}, {0, 1}});
    CHECK(f.diag == std::vector<i64>{1, 1});

    f = smith({{0, 0}, {0, 0}});
    CHECK(f.diag.empty());
    CHECK(f.rank == 0);

    // a rank-1 matrix
    f = smith({{2, 4}, {3, 6}});
    CHECK(f.diag == std::vector<i64>{1});
}

TEST_CASE("smith transforms multiply back, divisibility holds") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        std::size_t r = 1 + t % 5, c = 1 + (t / 5) % 5;
        Mat a = random_matrix(rng, r, c, -9, 9);
        auto f = smith(a);  // verification of U*A*V == S is built in and throws
        for (int i = 0; i + 1 < f.rank; ++i) CHECK(f.diag[i + 1] % f.diag[i] == 0);
        for (i64 d : f.diag) CHECK(d > 0);
        // S is diagonal
        for (std::size_t i = 0; i < f.S.size(); ++i)
            for (std::size_t j = 0; j < f.S[i].size(); ++j)
                if (i != j) CHECK(f.S[i][j] == 0);
    }
}

TEST_CASE("smith of an empty-row matrix still carries the column count") {
    auto f = smith({}, 3);
    CHECK(f.rank == 0);
    CHECK(f.V.size() == 3);
}

TEST_CASE("solve_integer finds exact solutions and rejects impossible ones") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 100; ++t) {
        std::size_t r = 1 + t % 4, c = 1 + (t / 4) % 4;
        Mat a = random_matrix(rng, r, c, -6, 6);
        std::vector<i64> x(c);
        std::uniform_int_distribution<i64> d(-5, 5);
        for (auto& e : x) e = d(rng);
        auto sol = solve_integer(a, mat_apply(a, x));
        REQUIRE(sol.has_value());
        CHECK(mat_apply(a, *sol) == mat_apply(a, x));
    }
    CHECK_FALSE(solve_integer({{2}}, {1}).has_value());
    CHECK_FALSE(solve_integer({{2, 4}, {1, 2}}, {0, 1}).has_value());
}

TEST_CASE("solve_mod respects the modulus") {
    CHECK_FALSE(solve_mod({{2}}, {1}, 4).has_value());
    auto s = solve_mod({{2}}, {1}, 3);  // 2*2 = 4 = 1 mod 3
    REQUIRE(s.has_value());
    CHECK((*s)[0] == 2);

    std::mt19937_64 rng(13);
    for (int t = 0; t < 150; ++t) {
        i64 n = 2 + t % 7;
        std::size_t r = 1 + t % 4, c = 1 + (t / 4) % 4;
        Mat a = random_matrix(rng, r, c, -6, 6);
        std::vector<i64> x(c);
        std::uniform_int_distribution<i64> d(0, n - 1);
        for (auto& e : x) e = d(rng);
        std::vector<i64> b = mat_apply(a, x);
        for (auto& e : b) e = mod_pos(e, n);
        auto sol = solve_mod(a, b, n);
        REQUIRE(sol.has_value());
        std::vector<i64> b2 = mat_apply(a, *sol);
        for (std::size_t i = 0; i < b2.size(); ++i) CHECK(mod_pos(b2[i], n) == b[i]);
        for (i64 e : *sol) {
            CHECK(e >= 0);
            CHECK(e < n);
        }
    }
}

TEST_CASE("kernel_mod spans exactly the solution set") {
    // brute force over small sizes
    std::mt19937_64 rng(14);
    for (int t = 0; t < 60; ++t) {
        i64 n = 2 + t % 5;
        std::size_t r = 1 + t % 3, c = 1 + (t / 3) % 2;
        Mat a = random_matrix(rng, r, c, -4, 4);
        auto gens = kernel_mod(a, n);
        for (const auto& g : gens) {
            auto b = mat_apply(a, g);
            for (i64 e : b) CHECK(mod_pos(e, n) == 0);
        }
        // count the span by enumeration and compare with the brute-force kernel
        std::set<std::vector<i64>> span;
        std::vector<std::vector<i64>> frontier{std::vector<i64>(c, 0)};
        span.insert(frontier[0]);
        while (!frontier.empty()) {
            auto cur = frontier.back();
            frontier.pop_back();
            for (const auto& g : gens) {
                auto nx = cur;
                for (std::size_t j = 0; j < c; ++j) nx[j] = mod_pos(nx[j] + g[j], n);
                if (span.insert(nx).second) frontier.push_back(nx);
            }
        }
        std::size_t brute = 0;
        std::vector<i64> x(c, 0);
        while (true) {
            auto b = mat_apply(a, x);
            bool ok = true;
            for (i64 e : b) ok = ok && mod_pos(e, n) == 0;
            if (ok) {
                ++brute;
                CHECK(span.count(x) == 1);
            }
            std::size_t k = c;
            while (k-- > 0) {
                if (++x[k] < n) break;
                x[k] = 0;
                if (k == 0) goto done;
            }
        }
    done:
        CHECK(span.size() == brute);
    }
}

TEST_CASE("quotient_mod presents kernel mod image correctly") {
    std::mt19937_64 rng(15);
    for (int t = 0; t < 40; ++t) {
        i64 n = 2 + t % 5;
        std::size_t r = 1 + t % 3;
        std::size_t c = 1 + (t / 3) % 2;
        Mat a = random_matrix(rng, r, c, -4, 4);
        // B columns must satisfy A*B = 0 over Z; use multiples of n times
        // random vectors plus integer kernel columns when present
        Mat b(c, std::vector<i64>{});
        std::uniform_int_distribution<i64> d(-3, 3);
        for (std::size_t j = 0; j < 2; ++j) {
            std::vector<i64> col(c);
            for (auto& e : col) e = n * d(rng);
            for (std::size_t i = 0; i < c; ++i) b[i].push_back(col[i]);
        }
        auto q = quotient_mod(a, b, n);

        // brute-force the same quotient
        std::vector<std::vector<i64>> kernel;
        std::vector<i64> x(c, 0);
        while (true) {
            auto ax = mat_apply(a, x);
            bool ok = true;
            for (i64 e : ax) ok = ok && mod_pos(e, n) == 0;
            if (ok) kernel.push_back(x);
            std::size_t k = c;
            while (k-- > 0) {
                if (++x[k] < n) break;
                x[k] = 0;
                if (k == 0) goto enumerated;
            }
        }
    enumerated:
        // the image subgroup: span of B columns mod n
        std::set<std::vector<i64>> img;
        std::vector<std::vector<i64>> gens;
        for (std::size_t j = 0; j < b[0].size(); ++j) {
            std::vector<i64> col(c);
            for (std::size_t i = 0; i < c; ++i) col[i] = mod_pos(b[i][j], n);
            gens.push_back(col);
        }
        std::vector<std::vector<i64>> frontier{std::vector<i64>(c, 0)};
        img.insert(frontier[0]);
        while (!frontier.empty()) {
            auto cur = frontier.back();
            frontier.pop_back();
            for (const auto& g : gens) {
                auto nx = cur;
                for (std::size_t j = 0; j < c; ++j) nx[j] = mod_pos(nx[j] + g[j], n);
                if (img.insert(nx).second) frontier.push_back(nx);
            }
        }
        i64 expected_classes = static_cast<i64>(kernel.size() / img.size());
        i64 got = 1;
        for (i64 f : q.factors) got *= f;
        CHECK(got == expected_classes);

        // reduce is a homomorphism separating exactly the cosets
        std::map<std::vector<i64>, std::vector<i64>> seen;
        for (const auto& k : kernel) {
            auto coords = q.reduce(k);
            // same coset iff difference lies in img
            for (const auto& [k2, coords2] : seen) {
                std::vector<i64> diff(c);
                for (std::size_t i = 0; i < c; ++i) diff[i] = mod_pos(k[i] - k2[i], n);
                bool same_coset = img.count(diff) == 1;
                CHECK(same_coset == (coords == coords2));
            }
            if (seen.size() < 12) seen[k] = coords;
        }

        // representatives hit the advertised classes
        for (std::size_t i = 0; i < q.reps.size(); ++i) {
            auto coords = q.reduce(q.reps[i]);
            for (std::size_t j = 0; j < coords.size(); ++j)
                CHECK(coords[j] == (i == j ? 1 % q.factors[j] : 0));
        }
    }
}

TEST_CASE("mod_inverse and gcd helpers") {
    CHECK(gcd_i64(12, 18) == 6);
    CHECK(gcd_i64(0, 5) == 5);
    CHECK(mod_pos(-1, 7) == 6);
    for (i64 n : {2, 3, 5, 7, 9, 12})
        for (i64 a = 1; a < n; ++a)
            if (gcd_i64(a, n) == 1) CHECK(mod_pos(a * mod_inverse(a, n), n) == 1);
}

TEST_CASE("lattice_quotient presents finite quotients of full-rank lattices") {
    // Z^2 / <(2,0),(0,3)> = Z/2 + Z/3
    {
        Mat a = {{1, 0}, {0, 1}};
        Mat b = {{2, 0}, {0, 3}};
        auto q = lattice_quotient(a, b);
        i64 total = 1;
        for (i64 f : q.factors) total *= f;
        CHECK(total == 6);

        // reduce is a homomorphism separating cosets exactly
        std::map<std::vector<i64>, std::vector<i64>> coset_of;
        for (i64 x = 0; x < 2; ++x)
            for (i64 y = 0; y < 3; ++y) coset_of[{x, y}] = q.reduce({x, y});
        std::set<std::vector<i64>> distinct;
        for (auto& [k, v] : coset_of) distinct.insert(v);
        CHECK(distinct.size() == 6);
        CHECK(q.reduce({2, 3}) == q.reduce({0, 0}));
        CHECK(q.reduce({3, 4}) == q.reduce({1, 1}));
    }

    // diagonal sublattice of a scaled ambient lattice
    {
        Mat a = {{2, 0}, {0, 2}};
        Mat b = {{4, 2}, {0, 4}};
        auto q = lattice_quotient(a, b);
        i64 total = 1;
        for (i64 f : q.factors) total *= f;
        // index = det(b)/det(a) = 16/4
        CHECK(total == 4);
        CHECK(q.reduce({4, 0}) == std::vector<i64>(q.factors.size(), 0));
        CHECK(q.reduce({2, 4}) == std::vector<i64>(q.factors.size(), 0));
        // representatives map back to unit coordinates
        for (std::size_t i = 0; i < q.reps.size(); ++i) {
            auto coords = q.reduce(q.reps[i]);
            for (std::size_t j = 0; j < coords.size(); ++j)
                CHECK(coords[j] == (i == j ? 1 % q.factors[j] : 0));
        }
    }

    // equal lattices give the trivial quotient
    {
        Mat a = {{1, 2}, {3, 4}};
        auto q = lattice_quotient(a, a);
        CHECK(q.factors.empty());
        CHECK(q.reduce({1, 3}).empty());
    }

    // points outside the larger lattice are rejected
    {
        Mat a = {{2, 0}, {0, 1}};
        Mat b = {{4, 0}, {0, 2}};
        auto q = lattice_quotient(a, b);
        CHECK_THROWS_AS(q.reduce({1, 0}), std::invalid_argument);
        CHECK(q.reduce({2, 1}) != q.reduce({0, 0}));
        CHECK(q.reduce({2, 1}) == q.reduce({6, 3}));
    }

    // infinite quotient is rejected
    {
        Mat a = {{1, 0}, {0, 1}};
        Mat b = {{1}, {0}};
        CHECK_THROWS_AS(lattice_quotient(a, b), std::invalid_argument);
    }
}
