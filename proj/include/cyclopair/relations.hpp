#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cyclopair/bernoulli.hpp"
#include "cyclopair/linalg_mod.hpp"

namespace cyclopair {

// Convention for the bases a, 2, a-1 in the mod-p^2 system: either their
// Teichmuller lifts (Galois-equivariant choice, the default) or the raw
// integers.
enum class LiftConvention { Teichmuller, Naive };

// The linear system whose kernel carries the candidate pairing values:
// columns indexed by odd i in [1, p-2] ascending, one row per even a in
// [4, p-1] (optionally odd a too), plus skew-symmetry rows.
struct RelationSystem {
    IrregularPair pair;
    int precision = 1;
    bool include_odd_a = false;
    ModMatrix matrix;
    std::vector<std::uint64_t> col_index; // odd i for each column
};

// Candidate pairing values x_i = e_{i,r}, mod p, defined projectively.
// When kernel_dimension != 1 the full basis is attached and entries hold
// the first basis vector as a representative.
struct PairingVector {
    IrregularPair pair;
    std::map<std::uint64_t, std::uint64_t> entries; // odd i -> value in [0, p)
    std::string normalization = "first_nonzero_one";
    std::size_t kernel_dimension = 0;
    std::vector<std::vector<std::uint64_t>> kernel_basis;
};

struct DegeneracyReport {
    std::uint64_t p = 0;
    std::uint64_t r = 0;
    bool two_power_is_one = false;  // 2^(p-r+1) = 1 mod p
    bool middle_exponent_dead = false; // p-r+i = 0 mod p-1 at i = (p+1)/2
    bool present = false;           // both hold: the sparse vector solves the system
};

struct ModuleOrder {
    std::uint64_t p = 0;
    int exponent = 0; // order is p^exponent
};

// Reduces x into the odd-index window [1, p-2] mod p-1.
std::uint64_t partner_index(std::uint64_t i, std::uint64_t r, std::uint64_t p);

// (1 + a^(p-i) - 2^(p-i)) (1 - 2^(p-r+i)) (1 - (a-1)^(p-r+i)), mod p at
// precision 1; at precision 2 the bases are lifted per the convention.
Residue relation_coefficient(const IrregularPair& pair, std::uint64_t a, std::uint64_t i,
                             int precision,
                             LiftConvention lift = LiftConvention::Teichmuller);

RelationSystem build_system(const IrregularPair& pair, int precision,
                            bool include_odd_a = false,
                            LiftConvention lift = LiftConvention::Teichmuller);

// Kernel of the precision-1 system, normalized so the smallest odd index
// with nonzero entry carries 1.  Throws TriviallyZero on a zero kernel.
PairingVector solve_pairing(const IrregularPair& pair, bool include_odd_a = false);

// Order of the mod-p^2 solution module; the expected bound is p^1.
ModuleOrder solve_pairing_mod_p2(const IrregularPair& pair,
                                 LiftConvention lift = LiftConvention::Teichmuller);

bool check_vanishing_at_p_minus_r(const PairingVector& v);

// Checks the two exponent identities that force the columns at i = 1 and
// i = (p+1)/2 to vanish when r = (p+3)/2, without building the matrix.
DegeneracyReport check_degenerate_candidate(std::uint64_t p, std::uint64_t r);

} // namespace cyclopair
