#include "cyclopair/galois.hpp"

#include <algorithm>

#include "cyclopair/errors.hpp"

namespace cyclopair {

namespace {

std::int64_t centered(std::uint64_t v, std::uint64_t m) {
    // representative in (-m/2, m/2]
    return v > m / 2 ? static_cast<std::int64_t>(v) - static_cast<std::int64_t>(m)
                     : static_cast<std::int64_t>(v);
}

} // namespace

GaloisRelation galois_relation(const IrregularPair& pair, const PairingVector& v,
                               const IwasawaCoeffs& coeffs) {
    if (v.pair != pair || coeffs.p != pair.p || coeffs.r != pair.r)
        throw PairMismatch("pairing vector or Iwasawa coefficients belong to another pair");
    const std::uint64_t p = pair.p, r = pair.r;

    GaloisRelation rel;
    rel.pair = pair;
    rel.a_x = add_mod(coeffs.f0_over_p, coeffs.fprime0, p);
    rel.a_gamma = sub_mod(0, coeffs.fprime0, p);

    // Generator indices run over 2 <= m <= p, with the index-1 unit
    // relabeled as m = p.  The coefficient of [x_i, x_j] (i < j after
    // relabeling) is the pairing value at the smaller index.
    auto relabel = [p](std::uint64_t i) { return i == 1 ? p : i; };
    for (std::uint64_t i = 1; i <= p - 2; i += 2) {
        std::uint64_t j = partner_index(i, r, p);
        if (j <= i) continue; // self-paired or already emitted
        std::uint64_t a = relabel(i), b = relabel(j);
        std::uint64_t lead = std::min(a, b); // index whose entry is the coefficient
        std::uint64_t orig = lead == p ? 1 : lead;
        rel.commutator_terms.push_back(
            {std::min(a, b), std::max(a, b), v.entries.at(orig)});
    }
    std::sort(rel.commutator_terms.begin(), rel.commutator_terms.end(),
              [](const CommutatorTerm& x, const CommutatorTerm& y) { return x.i < y.i; });

    // Even-even slots need the global units b_m; values stay unresolved.
    std::vector<std::uint64_t> even_irregular;
    for (const auto& ip : irregular_pairs(p)) even_irregular.push_back(ip.r);
    for (std::size_t s = 0; s < even_irregular.size(); ++s)
        for (std::size_t t = s + 1; t < even_irregular.size(); ++t)
            if ((even_irregular[s] + even_irregular[t]) % (p - 1) == r % (p - 1))
                rel.even_even_slots.emplace_back(even_irregular[s], even_irregular[t]);
    return rel;
}

std::string render_relation(const GaloisRelation& rel) {
    const std::uint64_t p = rel.pair.p, r = rel.pair.r;
    struct Term { std::int64_t c; std::string body; };
    std::vector<Term> terms;
    if (rel.a_x != 0)
        terms.push_back({centered(rel.a_x, p), " p x_" + std::to_string(r)});
    if (rel.a_gamma != 0)
        terms.push_back({centered(rel.a_gamma, p), "[γ,x_" + std::to_string(r) + "]"});
    for (const auto& t : rel.commutator_terms) {
        if (t.coeff == 0) continue;
        terms.push_back({centered(t.coeff, p),
                         "[x_" + std::to_string(t.i) + ",x_" + std::to_string(t.j) + "]"});
    }
    std::string out;
    if (terms.empty()) {
        out = "0 = 0";
    } else {
        for (std::size_t k = 0; k < terms.size(); ++k) {
            std::int64_t c = terms[k].c;
            if (k == 0)
                out += (c < 0 ? "-" : "") + std::to_string(c < 0 ? -c : c);
            else
                out += (c < 0 ? " - " : " + ") + std::to_string(c < 0 ? -c : c);
            out += terms[k].body;
        }
        out += " = 0";
    }
    out += "\n# coefficients determined only up to one global unit scalar";
    return out;
}

std::vector<FoxTerm> fox_image(const GaloisRelation& rel) {
    const std::uint64_t p = rel.pair.p;
    std::vector<FoxTerm> out;
    for (const auto& t : rel.commutator_terms) {
        if (t.coeff == 0) continue;
        out.push_back({centered(sub_mod(0, t.coeff, p), p), t.j, t.i, false});
        out.push_back({centered(t.coeff, p), t.i, t.j, false});
    }
    if (rel.a_x != 0) {
        std::uint64_t p2 = p * p;
        out.push_back({centered(mul_mod(rel.a_x, p, p2), p2), std::nullopt, rel.pair.r, true});
    }
    return out;
}

GreenbergVerdict greenberg_criterion(const GaloisRelation& rel, bool nontriviality_attested) {
    bool odd_odd_nonzero = false;
    for (const auto& t : rel.commutator_terms)
        if (t.i % 2 == 1 && t.j % 2 == 1 && t.coeff != 0) { odd_odd_nonzero = true; break; }
    if (!odd_odd_nonzero) return GreenbergVerdict::CriterionFails;
    return nontriviality_attested ? GreenbergVerdict::CriterionHolds
                                  : GreenbergVerdict::ConditionallyHolds;
}

const char* to_string(GreenbergVerdict v) {
    switch (v) {
        case GreenbergVerdict::CriterionHolds: return "holds";
        case GreenbergVerdict::ConditionallyHolds: return "conditional";
        case GreenbergVerdict::CriterionFails: return "fails";
    }
    return "?";
}

nlohmann::json relation_report(const GaloisRelation& rel, GreenbergVerdict verdict) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : rel.commutator_terms)
        terms.push_back({t.i, t.j, t.coeff});
    return nlohmann::json{{"p", rel.pair.p},
                          {"r", rel.pair.r},
                          {"a_x", rel.a_x},
                          {"a_gamma", rel.a_gamma},
                          {"terms", terms},
                          {"scalar_class", "projective"},
                          {"greenberg", to_string(verdict)}};
}

} // namespace cyclopair
