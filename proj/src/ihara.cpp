#include "cyclopair/ihara.hpp"

#include "cyclopair/errors.hpp"

namespace cyclopair {

LambdaTable LambdaTable::known() {
    return LambdaTable{{{3, 1}, {5, 2}, {7, 16}, {9, 144}}};
}

DerivationRelation ihara_weight12() {
    return DerivationRelation{691, 12, 691, {{3, 9, 2}, {5, 7, -27}}};
}

GaloisCoeffs derivation_to_galois(const DerivationRelation& rel, const LambdaTable& lambda) {
    require_odd_prime(rel.p);
    const std::uint64_t p = rel.p;
    GaloisCoeffs out;
    for (const auto& [i, j, c] : rel.terms) {
        auto li = lambda.values.find(i);
        auto lj = lambda.values.find(j);
        if (li == lambda.values.end() || lj == lambda.values.end())
            throw MissingLambda("no lambda value for weight " +
                                std::to_string(li == lambda.values.end() ? i : j));
        std::uint64_t factor = 1;
        for (std::uint64_t k = 2; k < i; ++k) factor = mul_mod(factor, k % p, p);
        for (std::uint64_t k = 2; k < j; ++k) factor = mul_mod(factor, k % p, p);
        factor = mul_mod(factor, li->second % p, p);
        factor = mul_mod(factor, lj->second % p, p);
        std::uint64_t cr = residue(c, p).value;
        out[{i, j}] = mul_mod(cr, factor, p);
    }
    return out;
}

Residue commutator_ratio(const GaloisCoeffs& coeffs, std::uint64_t p) {
    if (coeffs.size() != 2 || !coeffs.count({3, 9}) || !coeffs.count({5, 7}))
        throw WrongShape("expected exactly the coefficients (3,9) and (5,7)");
    std::uint64_t c39 = coeffs.at({3, 9}), c57 = coeffs.at({5, 7});
    if (c39 == 0 || c57 == 0)
        throw ZeroCoefficient("commutator ratio needs both coefficients nonzero");
    // c39 [s3,s9] + c57 [s5,s7] = 0  =>  [s3,s9] = (-c57/c39) [s5,s7]
    std::uint64_t rho = mul_mod(sub_mod(0, c57, p), inv_mod(c39, p), p);
    return Residue{rho, p};
}

bool cross_check_pairing(const PairingVector& v, const GaloisCoeffs& coeffs) {
    if (v.pair.p != 691 || v.pair.r != 12)
        throw PairMismatch("cross-check is defined for the pair (691, 12)");
    const std::uint64_t p = v.pair.p;
    std::uint64_t lhs = mul_mod(v.entries.at(3), coeffs.at({5, 7}), p);
    std::uint64_t rhs = mul_mod(v.entries.at(5), coeffs.at({3, 9}), p);
    return lhs == rhs;
}

nlohmann::json ihara_check_report(const PairingVector& v, const GaloisCoeffs& coeffs,
                                  std::uint64_t p) {
    return nlohmann::json{
        {"p", p},
        {"r", 12},
        {"galois_coeffs",
         {{"3,9", coeffs.at({3, 9})}, {"5,7", coeffs.at({5, 7})}}},
        {"ratio", commutator_ratio(coeffs, p).value},
        {"pairing_consistent", cross_check_pairing(v, coeffs)}};
}

} // namespace cyclopair
