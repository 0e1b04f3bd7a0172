#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <json.hpp>

#include "cyclopair/relations.hpp"

namespace cyclopair {

// A relation in the stable derivation algebra: head * delta = sum c [D_i, D_j],
// with i + j = m and i < j odd.
struct DerivationRelation {
    std::uint64_t p = 0;
    std::uint64_t m = 0;
    std::int64_t head = 0;
    std::vector<std::tuple<std::uint64_t, std::uint64_t, std::int64_t>> terms;
};

// lambda_m(D_m) for the odd weights where the value is known: {3:1, 5:2, 7:16, 9:144}.
struct LambdaTable {
    std::map<std::uint64_t, std::uint64_t> values;
    static LambdaTable known();
};

// Ihara's weight-12 relation at p = 691: 691 delta = 2[D_3,D_9] - 27[D_5,D_7].
DerivationRelation ihara_weight12();

using GaloisCoeffs = std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t>;

// [D_i, D_j] -> (i-1)! lambda_i (j-1)! lambda_j [sigma_i, sigma_j]; the two
// sign factors cancel.  Output is projective including the global sign.
GaloisCoeffs derivation_to_galois(const DerivationRelation& rel, const LambdaTable& lambda);

// For coefficients on exactly {(3,9), (5,7)}: the scalar rho with
// [sigma_3, sigma_9] = rho [sigma_5, sigma_7], i.e. -c_{5,7} / c_{3,9}.
Residue commutator_ratio(const GaloisCoeffs& coeffs, std::uint64_t p);

// Projective agreement of the solved (691,12) pairing with the derivation
// coefficients on the weight-12 slice: e_3 c_{5,7} = e_5 c_{3,9} mod 691.
// The index-1 entry relabels to weight p and is excluded by design.
bool cross_check_pairing(const PairingVector& v, const GaloisCoeffs& coeffs);

nlohmann::json ihara_check_report(const PairingVector& v, const GaloisCoeffs& coeffs,
                                  std::uint64_t p);

} // namespace cyclopair
