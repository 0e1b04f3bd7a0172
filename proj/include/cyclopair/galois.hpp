#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cyclopair/relations.hpp"

namespace cyclopair {

struct CommutatorTerm {
    std::uint64_t i = 0; // generator indices after the 1 <-> p relabeling, i < j
    std::uint64_t j = 0;
    std::uint64_t coeff = 0; // mod p
};

// The degree-2 graded relation A p x_r + B [gamma, x_r] + sum e [x_i, x_j] = 0,
// stored projectively (all coefficients share one undetermined unit scalar).
struct GaloisRelation {
    IrregularPair pair;
    std::uint64_t a_x = 0;     // f(0)/p + f'(0) mod p
    std::uint64_t a_gamma = 0; // -f'(0) mod p
    std::vector<CommutatorTerm> commutator_terms;
    // Pairs of even irregular indices summing to r: their pairing values
    // need global units outside this computation and stay unresolved.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> even_even_slots;
};

struct FoxTerm {
    std::int64_t coeff = 0;                 // centered representative
    std::optional<std::uint64_t> t_index;   // T_k factor, absent for the head term
    std::uint64_t dx_index = 0;
    bool head = false;                      // head coefficient is mod p^2
};

enum class GreenbergVerdict { CriterionHolds, ConditionallyHolds, CriterionFails };

GaloisRelation galois_relation(const IrregularPair& pair, const PairingVector& v,
                               const IwasawaCoeffs& coeffs);

// Deterministic rendering with residues centered in (-p/2, p/2].
std::string render_relation(const GaloisRelation& rel);

// Constant-coefficient image of the relation under the Fox-derivative map:
// each commutator term (i, j, e) contributes -e T_j dx_i and e T_i dx_j,
// and a nonzero head contributes a_x * p dx_r mod p^2.
std::vector<FoxTerm> fox_image(const GaloisRelation& rel);

// Holds only when a nonzero odd-odd coefficient exists AND nontriviality of
// the actual cup product is attested; the linear system alone cannot attest.
GreenbergVerdict greenberg_criterion(const GaloisRelation& rel, bool nontriviality_attested);

const char* to_string(GreenbergVerdict v);

nlohmann::json relation_report(const GaloisRelation& rel, GreenbergVerdict verdict);

} // namespace cyclopair
