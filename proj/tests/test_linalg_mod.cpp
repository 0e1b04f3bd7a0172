#include <doctest.h>

#include <random>
#include <set>

#include "cyclopair/linalg_mod.hpp"

using namespace cyclopair;

namespace {

ModMatrix make(std::uint64_t mod, std::size_t rows, std::size_t cols,
               std::initializer_list<std::uint64_t> vals) {
    ModMatrix m(mod, rows, cols);
    std::size_t k = 0;
    for (std::uint64_t v : vals) m.entries[k++] = v % mod;
    return m;
}

// Exhaustive solution set, independent of the elimination code paths.
std::set<std::vector<std::uint64_t>> brute_solutions(const ModMatrix& m) {
    std::set<std::vector<std::uint64_t>> sols;
    std::vector<std::uint64_t> v(m.cols, 0);
    for (;;) {
        bool ok = true;
        for (std::uint64_t y : multiply(m, v))
            if (y != 0) { ok = false; break; }
        if (ok) sols.insert(v);
        std::size_t c = 0;
        while (c < m.cols && ++v[c] == m.modulus) v[c++] = 0;
        if (c == m.cols) break;
    }
    return sols;
}

// All combinations of the generators with coefficients in [0, modulus).
std::set<std::vector<std::uint64_t>> span_of(const KernelBasis& b, std::size_t cols) {
    std::set<std::vector<std::uint64_t>> out;
    std::vector<std::uint64_t> coef(b.vectors.size(), 0);
    for (;;) {
        std::vector<std::uint64_t> v(cols, 0);
        for (std::size_t g = 0; g < b.vectors.size(); ++g)
            for (std::size_t c = 0; c < cols; ++c)
                v[c] = add_mod(v[c], mul_mod(coef[g], b.vectors[g][c], b.modulus), b.modulus);
        out.insert(v);
        std::size_t g = 0;
        while (g < coef.size() && ++coef[g] == b.modulus) coef[g++] = 0;
        if (g == coef.size()) break;
        if (coef.empty()) break;
    }
    return out;
}

} // namespace

TEST_CASE("kernel_mod_p basics") {
    ModMatrix id = make(5, 2, 2, {1, 0, 0, 1});
    CHECK(kernel_mod_p(id).dimension() == 0);

    ModMatrix zero = make(5, 1, 3, {0, 0, 0});
    CHECK(kernel_mod_p(zero).dimension() == 3);

    // [[1,2],[2,4]] mod 5: rank 1, kernel spanned by (3,1)
    ModMatrix m = make(5, 2, 2, {1, 2, 2, 4});
    KernelBasis kb = kernel_mod_p(m);
    REQUIRE(kb.dimension() == 1);
    auto brute = brute_solutions(m);
    CHECK(brute.size() == 5);
    CHECK(brute.count(std::vector<std::uint64_t>{3, 1}) == 1);
    CHECK(span_of(kb, 2) == brute);
}

TEST_CASE("kernel_mod_p rejects composite modulus") {
    ModMatrix m = make(9, 1, 1, {3});
    CHECK_THROWS_AS(kernel_mod_p(m), ModulusNotPrime);
}

TEST_CASE("solution_module_mod_p2 basics") {
    ModMatrix id = make(9, 2, 2, {1, 0, 0, 1});
    CHECK(solution_module_mod_p2(id).order_exponent() == 0);

    ModMatrix m3 = make(9, 1, 1, {3});
    KernelBasis kb = solution_module_mod_p2(m3);
    CHECK(kb.order_exponent() == 1);
    REQUIRE(kb.dimension() == 1);
    CHECK(kb.vectors[0] == std::vector<std::uint64_t>{3});

    ModMatrix z = make(9, 1, 1, {0});
    CHECK(solution_module_mod_p2(z).order_exponent() == 2); // order 9

    ModMatrix m = make(25, 1, 1, {5});
    CHECK_THROWS_AS(kernel_mod_p(m), ModulusNotPrime);
    ModMatrix bad = make(15, 1, 1, {5});
    CHECK_THROWS_AS(solution_module_mod_p2(bad), ModulusNotSquareOfPrime);
}

TEST_CASE("random matrices: generators span the exact solution set") {
    std::mt19937_64 rng(20240817);
    int cases = 0;
    while (cases < 500) {
        std::uint64_t p = std::vector<std::uint64_t>{3, 5, 7, 11}[rng() % 4];
        bool squared = rng() % 2 == 0;
        std::uint64_t mod = squared ? p * p : p;
        // keep the exhaustive enumeration below ~20k vectors per case
        std::size_t cols_max = 1;
        while (cols_max < 6) {
            std::uint64_t vol = 1;
            bool fits = true;
            for (std::size_t c = 0; c <= cols_max; ++c) {
                vol *= mod;
                if (vol > 20000) { fits = false; break; }
            }
            if (!fits) break;
            ++cols_max;
        }
        std::size_t rows = 1 + rng() % 4;
        std::size_t cols = 1 + rng() % cols_max;
        ModMatrix m(mod, rows, cols);
        for (auto& e : m.entries) e = rng() % mod;

        KernelBasis kb = squared ? solution_module_mod_p2(m) : kernel_mod_p(m);
        for (const auto& v : kb.vectors)
            for (std::uint64_t y : multiply(m, v)) CHECK(y == 0);

        auto brute = brute_solutions(m);
        CHECK(span_of(kb, cols) == brute);
        if (squared) {
            std::uint64_t order = 1;
            for (int e : kb.annihilator_exponents)
                for (int k = 0; k < e; ++k) order *= p;
            CHECK(order == brute.size());
        } else {
            std::uint64_t order = 1;
            for (std::size_t d = 0; d < kb.dimension(); ++d) order *= p;
            CHECK(order == brute.size());
        }
        ++cases;
    }
}

TEST_CASE("mod p^2 generators reduce into the mod p kernel") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        std::uint64_t p = std::vector<std::uint64_t>{3, 5, 7}[rng() % 3];
        std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 3;
        ModMatrix m2(p * p, rows, cols);
        for (auto& e : m2.entries) e = rng() % (p * p);
        ModMatrix m1(p, rows, cols);
        for (std::size_t k = 0; k < m2.entries.size(); ++k) m1.entries[k] = m2.entries[k] % p;

        auto brute1 = brute_solutions(m1);
        for (const auto& g : solution_module_mod_p2(m2).vectors) {
            std::vector<std::uint64_t> red(cols);
            for (std::size_t c = 0; c < cols; ++c) red[c] = g[c] % p;
            CHECK(brute1.count(red) == 1);
        }
    }
}

TEST_CASE("determinism: identical inputs give identical bases") {
    std::mt19937_64 rng(99);
    ModMatrix m(7, 4, 5);
    for (auto& e : m.entries) e = rng() % 7;
    KernelBasis a = kernel_mod_p(m);
    KernelBasis b = kernel_mod_p(m);
    CHECK(a.vectors == b.vectors);
}
