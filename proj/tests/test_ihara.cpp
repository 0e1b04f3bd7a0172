#include <doctest.h>

#include <gmpxx.h>

#include "cyclopair/ihara.hpp"

using namespace cyclopair;

TEST_CASE("derivation relation maps to the (190, 174) class") {
    GaloisCoeffs c = derivation_to_galois(ihara_weight12(), LambdaTable::known());
    REQUIRE(c.size() == 2);

    SUBCASE("big-integer oracle, no intermediate reduction") {
        mpz_class c39 = 2 * mpz_class(2) * 1 * mpz_class(40320) * 144; // 2 * 2! * l3 * 8! * l9
        mpz_class c57 = -27 * mpz_class(24) * 2 * mpz_class(720) * 16; // -27 * 4! * l5 * 6! * l7
        mpz_class m = 691;
        mpz_class r39 = c39 % m; if (r39 < 0) r39 += m;
        mpz_class r57 = c57 % m; if (r57 < 0) r57 += m;
        CHECK(c.at({3, 9}) == r39.get_ui());
        CHECK(c.at({5, 7}) == r57.get_ui());
    }

    SUBCASE("projectively equal to (190, 174)") {
        std::uint64_t s = mul_mod(190, inv_mod(c.at({3, 9}), 691), 691);
        CHECK(mul_mod(c.at({3, 9}), s, 691) == 190);
        CHECK(mul_mod(c.at({5, 7}), s, 691) == 174);
    }
}

TEST_CASE("single term and empty input") {
    DerivationRelation rel{691, 12, 0, {{3, 9, 1}}};
    GaloisCoeffs c = derivation_to_galois(rel, LambdaTable::known());
    mpz_class expect = mpz_class(2) * 40320 * 144;
    CHECK(c.at({3, 9}) == mpz_class(expect % 691).get_ui());

    DerivationRelation empty{691, 12, 0, {}};
    CHECK(derivation_to_galois(empty, LambdaTable::known()).empty());

    DerivationRelation bad{691, 22, 0, {{11, 11, 1}}};
    CHECK_THROWS_AS(derivation_to_galois(bad, LambdaTable::known()), MissingLambda);
}

TEST_CASE("commutator ratio is 50") {
    GaloisCoeffs c{{{3, 9}, 190}, {{5, 7}, 174}};
    CHECK(commutator_ratio(c, 691).value == 50);

    GaloisCoeffs scaled{{{3, 9}, 380}, {{5, 7}, 348}};
    CHECK(commutator_ratio(scaled, 691).value == 50);

    GaloisCoeffs zero{{{3, 9}, 1}, {{5, 7}, 0}};
    CHECK_THROWS_AS(commutator_ratio(zero, 691), ZeroCoefficient);

    GaloisCoeffs shape{{{3, 9}, 1}};
    CHECK_THROWS_AS(commutator_ratio(shape, 691), WrongShape);

    // the computed coefficients give the same ratio as the paper's class
    GaloisCoeffs computed = derivation_to_galois(ihara_weight12(), LambdaTable::known());
    CHECK(commutator_ratio(computed, 691).value == 50);
}

TEST_CASE("cross-check against the solved (691, 12) pairing") {
    PairingVector v = solve_pairing({691, 12});
    REQUIRE(v.kernel_dimension == 1);
    GaloisCoeffs c = derivation_to_galois(ihara_weight12(), LambdaTable::known());
    CHECK(cross_check_pairing(v, c));

    SUBCASE("perturbed entry breaks the single linear condition") {
        PairingVector w = v;
        w.entries[3] = add_mod(w.entries[3], 1, 691);
        CHECK(!cross_check_pairing(w, c));
    }
    SUBCASE("scaling the coefficients changes nothing") {
        GaloisCoeffs s;
        for (const auto& [k, val] : c) s[k] = mul_mod(val, 5, 691);
        CHECK(cross_check_pairing(v, s));
    }
    SUBCASE("report schema") {
        nlohmann::json j = ihara_check_report(v, c, 691);
        CHECK(j["p"] == 691);
        CHECK(j["ratio"] == 50);
        CHECK(j["pairing_consistent"] == true);
    }
    SUBCASE("wrong pair rejected") {
        PairingVector other = solve_pairing({37, 32});
        CHECK_THROWS_AS(cross_check_pairing(other, c), PairMismatch);
    }
}
