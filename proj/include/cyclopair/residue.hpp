#pragma once

#include <cstdint>

#include "cyclopair/errors.hpp"

namespace cyclopair {

// Scalar in Z/m where m is p or p^2 for an odd prime p.  Moduli stay
// below 2^64 for p < 10^5, so products fit in unsigned __int128.
struct Residue {
    std::uint64_t value = 0;
    std::uint64_t modulus = 1;

    friend bool operator==(const Residue&, const Residue&) = default;
};

bool is_prime(std::uint64_t n);

// Throws ModulusNotPrime for p = 2 or composite p.
void require_odd_prime(std::uint64_t p);

// Reduces x into [0, m), accepting negative inputs.
Residue residue(std::int64_t x, std::uint64_t m);

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Extended-gcd inverse; throws NotInvertible when gcd(a, m) > 1.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);

Residue operator+(Residue a, Residue b);
Residue operator-(Residue a, Residue b);
Residue operator*(Residue a, Residue b);
Residue operator-(Residue a);

Residue mod_pow(Residue base, std::uint64_t exponent);
Residue mod_inv(Residue a);

// The unique w mod p^2 with w^(p-1) = 1 and w = a mod p, computed as a^p mod p^2.
Residue teichmuller(std::uint64_t a, std::uint64_t p);

} // namespace cyclopair
