#include "cyclopair/relations.hpp"

#include "cyclopair/errors.hpp"

namespace cyclopair {

std::uint64_t partner_index(std::uint64_t i, std::uint64_t r, std::uint64_t p) {
    // r - i mod p-1, reduced into [1, p-2]; parity is preserved since p-1 is even.
    std::uint64_t m = p - 1;
    std::uint64_t j = (r + m - (i % m)) % m;
    return j == 0 ? m : j; // j = 0 cannot occur for odd i, even r
}

Residue relation_coefficient(const IrregularPair& pair, std::uint64_t a, std::uint64_t i,
                             int precision, LiftConvention lift) {
    const std::uint64_t p = pair.p, r = pair.r;
    if (a < 3 || a > p - 1)
        throw std::invalid_argument("relation index a out of range");
    if (i % 2 != 1 || i > p - 2)
        throw std::invalid_argument("column index i must be odd in [1, p-2]");
    const std::uint64_t e1 = p - i;     // exponent on a and 2 in the first factor
    const std::uint64_t e2 = p + i - r; // exponent p - r + i

    std::uint64_t m, ba, b2, bam1;
    if (precision == 1) {
        m = p;
        ba = a % p;
        b2 = 2;
        bam1 = (a - 1) % p;
    } else {
        m = p * p;
        if (lift == LiftConvention::Teichmuller) {
            ba = teichmuller(a, p).value;
            b2 = teichmuller(2, p).value;
            bam1 = teichmuller(a - 1, p).value;
        } else {
            ba = a % m;
            b2 = 2;
            bam1 = (a - 1) % m;
        }
    }
    std::uint64_t f1 = add_mod(sub_mod(1, pow_mod(b2, e1, m), m), pow_mod(ba, e1, m), m);
    std::uint64_t f2 = sub_mod(1, pow_mod(b2, e2, m), m);
    std::uint64_t f3 = sub_mod(1, pow_mod(bam1, e2, m), m);
    return Residue{mul_mod(mul_mod(f1, f2, m), f3, m), m};
}

RelationSystem build_system(const IrregularPair& pair, int precision, bool include_odd_a,
                            LiftConvention lift) {
    const std::uint64_t p = pair.p, r = pair.r;
    if (!is_irregular(p, r))
        throw NotIrregular("(" + std::to_string(p) + ", " + std::to_string(r) +
                           ") is not an irregular pair");

    RelationSystem sys;
    sys.pair = pair;
    sys.precision = precision;
    sys.include_odd_a = include_odd_a;
    for (std::uint64_t i = 1; i <= p - 2; i += 2) sys.col_index.push_back(i);
    const std::size_t cols = sys.col_index.size(); // (p-1)/2

    std::vector<std::uint64_t> a_values;
    for (std::uint64_t a = 4; a <= p - 1; a += 2) a_values.push_back(a);
    if (include_odd_a)
        for (std::uint64_t a = 3; a <= p - 2; a += 2) a_values.push_back(a);

    std::vector<std::pair<std::uint64_t, std::uint64_t>> skew; // {i, partner}, i <= partner
    for (std::uint64_t i = 1; i <= p - 2; i += 2) {
        std::uint64_t j = partner_index(i, r, p);
        if (j >= i) skew.emplace_back(i, j);
    }

    const std::uint64_t m = precision == 1 ? p : p * p;
    sys.matrix = ModMatrix(m, a_values.size() + skew.size(), cols);
    auto col_of = [](std::uint64_t i) { return static_cast<std::size_t>((i - 1) / 2); };

    std::size_t row = 0;
    for (std::uint64_t a : a_values) {
        for (std::size_t c = 0; c < cols; ++c)
            sys.matrix.at(row, c) =
                relation_coefficient(pair, a, sys.col_index[c], precision, lift).value;
        sys.matrix.row_tags.push_back("a=" + std::to_string(a));
        ++row;
    }
    for (const auto& [i, j] : skew) {
        if (i == j) {
            sys.matrix.at(row, col_of(i)) = 2 % m;
            sys.matrix.row_tags.push_back("self{" + std::to_string(i) + "}");
        } else {
            sys.matrix.at(row, col_of(i)) = 1;
            sys.matrix.at(row, col_of(j)) = 1;
            sys.matrix.row_tags.push_back("skew{" + std::to_string(i) + "," +
                                          std::to_string(j) + "}");
        }
        ++row;
    }
    return sys;
}

PairingVector solve_pairing(const IrregularPair& pair, bool include_odd_a) {
    RelationSystem sys = build_system(pair, 1, include_odd_a);
    KernelBasis kb = kernel_mod_p(sys.matrix);
    if (kb.dimension() == 0)
        throw TriviallyZero("relation system for (" + std::to_string(pair.p) + ", " +
                            std::to_string(pair.r) +
                            ") has zero kernel; contradicts expected nontrivial pairing");

    PairingVector v;
    v.pair = pair;
    v.kernel_dimension = kb.dimension();
    v.kernel_basis = kb.vectors;

    const std::uint64_t p = pair.p;
    std::vector<std::uint64_t> rep = kb.vectors.front();
    std::size_t lead = rep.size();
    for (std::size_t c = 0; c < rep.size(); ++c)
        if (rep[c] != 0) { lead = c; break; }
    if (lead < rep.size()) {
        std::uint64_t s = inv_mod(rep[lead], p);
        for (auto& x : rep) x = mul_mod(x, s, p);
    }
    for (std::size_t c = 0; c < rep.size(); ++c)
        v.entries[sys.col_index[c]] = rep[c];
    return v;
}

ModuleOrder solve_pairing_mod_p2(const IrregularPair& pair, LiftConvention lift) {
    if (pair.p > 3000)
        throw BoundExceeded("mod-p^2 solve capped at p <= 3000, got " +
                            std::to_string(pair.p));
    RelationSystem sys = build_system(pair, 2, false, lift);
    KernelBasis kb = solution_module_mod_p2(sys.matrix);
    return ModuleOrder{pair.p, kb.order_exponent()};
}

bool check_vanishing_at_p_minus_r(const PairingVector& v) {
    std::uint64_t idx = v.pair.p - v.pair.r; // odd and within [3, p-2] since r <= p-3
    auto it = v.entries.find(idx);
    return it != v.entries.end() && it->second == 0;
}

DegeneracyReport check_degenerate_candidate(std::uint64_t p, std::uint64_t r) {
    require_odd_prime(p);
    if (r % 2 != 0 || r != (p + 3) / 2 || (p + 3) % 2 != 0)
        throw std::invalid_argument("degeneracy check requires even r = (p+3)/2");
    DegeneracyReport rep;
    rep.p = p;
    rep.r = r;
    // p - r + 1 = (p-1)/2, so the middle factor of every column-1 coefficient
    // is 1 - 2^((p-1)/2).
    rep.two_power_is_one = pow_mod(2, p - r + 1, p) == 1;
    // At i = (p+1)/2 the exponent p - r + i equals p - 1, killing both
    // Fermat factors of the coefficient.
    rep.middle_exponent_dead = (p - r + (p + 1) / 2) % (p - 1) == 0;
    rep.present = rep.two_power_is_one && rep.middle_exponent_dead;
    return rep;
}

} // namespace cyclopair
