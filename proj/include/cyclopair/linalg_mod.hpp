#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclopair/residue.hpp"

namespace cyclopair {

// Dense row-major matrix over Z/m, m = p or p^2.  Row tags record the
// provenance of each row (relation index a, skew pair) for diagnostics.
struct ModMatrix {
    std::uint64_t modulus = 1;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint64_t> entries; // rows * cols, row-major
    std::vector<std::string> row_tags;

    ModMatrix() = default;
    ModMatrix(std::uint64_t m, std::size_t r, std::size_t c)
        : modulus(m), rows(r), cols(c), entries(r * c, 0) {}

    std::uint64_t& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    std::uint64_t at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

// Kernel (mod p) or solution module (mod p^2).  In the mod-p case the
// vectors are a basis and annihilator_exponents is all 1s with order
// interpreted as p^dimension; in the mod-p^2 case each generator g has
// annihilator p^e, and the module order is p^(sum of exponents).
struct KernelBasis {
    std::uint64_t modulus = 1;
    std::vector<std::vector<std::uint64_t>> vectors;
    std::vector<int> annihilator_exponents;

    std::size_t dimension() const { return vectors.size(); }
    int order_exponent() const {
        int e = 0;
        for (int x : annihilator_exponents) e += x;
        return e;
    }
};

// Kernel basis over the field Z/p via deterministic reduced echelon form
// (first nonzero pivot, no row reordering beyond swaps, free columns ascending).
KernelBasis kernel_mod_p(const ModMatrix& m);

// Generators of {v : M v = 0 mod p^2} via diagonalization over the local
// ring Z/p^2: unit pivots first, then pivots divisible by p, with the
// accumulated column transform providing the generators.  Complete in the
// Howell sense: every solution is a Z/p^2-combination of the generators.
KernelBasis solution_module_mod_p2(const ModMatrix& m);

// M v mod modulus; used as the independent post-hoc check on solver output.
std::vector<std::uint64_t> multiply(const ModMatrix& m, const std::vector<std::uint64_t>& v);

} // namespace cyclopair
