#include "cyclopair/residue.hpp"

#include <string>

namespace cyclopair {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    // Deterministic Miller-Rabin for 64-bit inputs.
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod(a % n, d, n);
        if (x <= 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

void require_odd_prime(std::uint64_t p) {
    if (p == 2 || !is_prime(p))
        throw ModulusNotPrime("modulus base must be an odd prime, got " + std::to_string(p));
}

Residue residue(std::int64_t x, std::uint64_t m) {
    std::int64_t v = x % static_cast<std::int64_t>(m);
    if (v < 0) v += static_cast<std::int64_t>(m);
    return Residue{static_cast<std::uint64_t>(v), m};
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    std::uint64_t s = a + b;
    if (s >= m || s < a) s -= m;
    return s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return a >= b ? a - b : a + m - b;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
    a %= m;
    std::int64_t r0 = static_cast<std::int64_t>(m), r1 = static_cast<std::int64_t>(a);
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1)
        throw NotInvertible("no inverse of " + std::to_string(a) +
                            " mod " + std::to_string(m));
    if (t0 < 0) t0 += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t0);
}

namespace {
void require_same_modulus(const Residue& a, const Residue& b) {
    if (a.modulus != b.modulus)
        throw std::invalid_argument("mixed moduli in residue arithmetic");
}
} // namespace

Residue operator+(Residue a, Residue b) {
    require_same_modulus(a, b);
    return Residue{add_mod(a.value, b.value, a.modulus), a.modulus};
}

Residue operator-(Residue a, Residue b) {
    require_same_modulus(a, b);
    return Residue{sub_mod(a.value, b.value, a.modulus), a.modulus};
}

Residue operator*(Residue a, Residue b) {
    require_same_modulus(a, b);
    return Residue{mul_mod(a.value, b.value, a.modulus), a.modulus};
}

Residue operator-(Residue a) {
    return Residue{a.value == 0 ? 0 : a.modulus - a.value, a.modulus};
}

Residue mod_pow(Residue base, std::uint64_t exponent) {
    return Residue{pow_mod(base.value, exponent, base.modulus), base.modulus};
}

Residue mod_inv(Residue a) {
    return Residue{inv_mod(a.value, a.modulus), a.modulus};
}

Residue teichmuller(std::uint64_t a, std::uint64_t p) {
    require_odd_prime(p);
    if (a % p == 0)
        throw NotInvertible("teichmuller lift of a multiple of p");
    std::uint64_t p2 = p * p;
    return Residue{pow_mod(a % p2, p, p2), p2};
}

} // namespace cyclopair
