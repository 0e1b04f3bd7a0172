#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cyclopair/residue.hpp"

namespace cyclopair {

inline constexpr unsigned kBernoulliBound = 2048;

struct IrregularPair {
    std::uint64_t p = 0;
    std::uint64_t r = 0;

    friend bool operator==(const IrregularPair&, const IrregularPair&) = default;
    friend auto operator<=>(const IrregularPair&, const IrregularPair&) = default;
};

// Constant and linear data of the characteristic power series attached to
// an irregular pair: f(0)/p and f'(0), both mod p.
struct IwasawaCoeffs {
    std::uint64_t p = 0;
    std::uint64_t r = 0;
    std::uint64_t f0_over_p = 0;
    std::uint64_t fprime0 = 0;
};

// Exact B_k via the defining recurrence sum_{j<=k} C(k+1,j) B_j = 0,
// memoized internally.  k even, k <= kBernoulliBound.
mpq_class bernoulli_exact(unsigned k);

// Whole even-index table B_0, B_2, ..., up through p-3, reduced mod p,
// by inverting the exponential generating series mod p.  Entry at index
// k/2 holds B_k mod p.  O(p^2) ring operations.
std::vector<std::uint64_t> bernoulli_mod_p_table(std::uint64_t p);

// B_k mod p^precision.  Precision 1 uses the series table (k <= p-3);
// precision 2 reduces the exact rational (k <= kBernoulliBound).
Residue bernoulli_mod(unsigned k, std::uint64_t p, int precision);

// Reduce an exact rational with p-free denominator mod p^precision.
Residue reduce_rational(const mpq_class& q, std::uint64_t p, int precision);

bool is_irregular(std::uint64_t p, std::uint64_t r);

// All even r in [2, p-3] with p | B_r, ascending.
std::vector<IrregularPair> irregular_pairs(std::uint64_t p);

// Line-delimited cache of Bernoulli residues, resumable across runs.
// First line is a format header; data lines hold {"p","prec","k","value"}.
// A record with k = 0 (B_0 = 1) marks a prime as fully scanned at that
// precision, so irregular indices are exactly the value-0 records.
class BernoulliCache {
public:
    BernoulliCache() = default;
    explicit BernoulliCache(std::string path);

    // Loads existing records; throws CacheCorrupt on malformed content.
    void load();

    bool has_scan(std::uint64_t p, int prec) const;
    std::vector<std::uint64_t> irregular_indices(std::uint64_t p, int prec) const;

    // Appends the completed scan for one prime (write-through).
    void record_scan(std::uint64_t p, int prec, const std::vector<std::uint64_t>& irregular_r);

    const std::string& path() const { return path_; }
    bool enabled() const { return !path_.empty(); }

private:
    std::string path_;
    // (p, prec) -> sorted irregular indices; presence means scan complete.
    std::map<std::pair<std::uint64_t, int>, std::vector<std::uint64_t>> scans_;
    std::map<std::pair<std::uint64_t, int>, std::vector<std::uint64_t>> partial_;
};

// irregular_pairs for every odd prime p < limit, cache-aware and
// parallel across primes (single writer).
std::map<std::uint64_t, std::vector<std::uint64_t>>
scan_irregular(std::uint64_t limit, BernoulliCache* cache = nullptr, unsigned threads = 1);

// f(0)/p = (((r-2)/r) B_r - B_{r+p-1}) / p and f'(0) via
// p f'(0) = B_r/r - B_{r+p-1}/(r-1), both computed exactly mod p^2 and
// divided by p after checking divisibility.
IwasawaCoeffs iwasawa_coeffs(const IrregularPair& pair);

} // namespace cyclopair
