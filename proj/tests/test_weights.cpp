#include "doctest.h"

#include "quatring/errors.hpp"
#include "quatring/weights.hpp"

using namespace quatring;

namespace {

std::uint16_t codeOf(const FiniteRing& ring, const char* text) {
    const QuatRing* quat = ring.quaternion();
    REQUIRE(quat != nullptr);
    return static_cast<std::uint16_t>(quat->codeOf(quatFromText(*quat, text)));
}

}  // namespace

TEST_CASE("character formula on Z4") {
    auto z4 = FiniteRing::tabulate(GaloisRing(2, 2, 1));
    const WeightFunction w = weightsByCharacter(*z4, Rat(1));
    CHECK(w.table[0] == Rat(0));
    CHECK(w.table[1] == Rat(1));
    CHECK(w.table[2] == Rat(2));
    CHECK(w.table[3] == Rat(1));
    CHECK(isHomogeneous(*z4, w));
}

TEST_CASE("character formula on H(F3) splits by units and zero divisors") {
    auto ring = FiniteRing::tabulate(QuatRing::hamilton(GaloisRing(3, 1, 1)));
    const WeightFunction w = weightsByCharacter(*ring, Rat(1));
    CHECK(w.table[0] == Rat(0));
    const std::uint16_t unit = codeOf(*ring, "1");
    const std::uint16_t zd = codeOf(*ring, "1+i+j");
    REQUIRE(ring->isUnit(unit));
    REQUIRE_FALSE(ring->isUnit(zd));
    CHECK(w.table[unit] == Rat(15, 16));
    CHECK(w.table[zd] == Rat(9, 8));
    for (std::uint32_t x = 1; x < ring->size(); ++x)
        CHECK(w.table[x] == (ring->isUnit(static_cast<std::uint16_t>(x)) ? Rat(15, 16)
                                                                         : Rat(9, 8)));
    CHECK(isHomogeneous(*ring, w));
}

TEST_CASE("mobius formula matches the character formula") {
    for (auto ring : {FiniteRing::tabulate(GaloisRing(2, 2, 1)),
                      FiniteRing::tabulate(GaloisRing(3, 2, 1)),
                      FiniteRing::tabulate(QuatRing::hamilton(GaloisRing(3, 1, 1))),
                      FiniteRing::tabulate(QuatRing::hamilton(GaloisRing(2, 1, 1)))}) {
        const Rat gamma = ring->defaultGamma();
        CHECK(weightsByMobius(*ring, gamma) == weightsByCharacter(*ring, gamma));
    }
}

TEST_CASE("normalized weight on H(F2)") {
    auto ring = FiniteRing::tabulate(QuatRing::hamilton(GaloisRing(2, 1, 1)));
    const std::uint16_t special = codeOf(*ring, "1+i+j+k");
    for (const WeightFunction& w : {weightsByCharacter(*ring, Rat(1)),
                                    weightsByMobius(*ring, Rat(1)),
                                    weightsClosedForm(*ring, Rat(1)),
                                    weightsUniqueMinimal(*ring, Rat(1))}) {
        CHECK(w.table[0] == Rat(0));
        CHECK(w.table[special] == Rat(2));
        for (std::uint32_t x = 1; x < ring->size(); ++x)
            if (x != special) CHECK(w.table[x] == Rat(1));
    }
}

TEST_CASE("unique-minimal-ideal formula reproduces the chain-ring weights") {
    // A field: all nonzero weights are 1 once gamma = (q-1)/q.
    auto f3 = FiniteRing::tabulate(GaloisRing(3, 1, 1));
    const WeightFunction wField = weightsUniqueMinimal(*f3, Rat(2, 3));
    CHECK(wField.table[0] == Rat(0));
    CHECK(wField.table[1] == Rat(1));
    CHECK(wField.table[2] == Rat(1));

    // Z8 at its natural gamma = 2: weight 4 on {4}, else 2.
    auto z8 = FiniteRing::tabulate(GaloisRing(2, 3, 1));
    const WeightFunction wz8 = weightsUniqueMinimal(*z8, Rat(2));
    CHECK(wz8.table[0] == Rat(0));
    CHECK(wz8.table[4] == Rat(4));
    for (std::uint16_t x : {1, 2, 3, 5, 6, 7}) CHECK(wz8.table[x] == Rat(2));

    // No unique minimal ideal over H(F3).
    auto h3 = FiniteRing::tabulate(QuatRing::hamilton(GaloisRing(3, 1, 1)));
    CHECK_THROWS_AS(weightsUniqueMinimal(*h3, Rat(1)), NoUniqueMinimalIdealError);
}

TEST_CASE("three routes agree on a sample of rings") {
    // The full ten-ring agreement matrix runs in the acceptance suite.
    for (auto ring : {FiniteRing::tabulate(GaloisRing(2, 2, 2)),
                      FiniteRing::tabulate(GaloisRing(3, 2, 1)),
                      FiniteRing::tabulate(QuatRing::hamilton(GaloisRing(2, 2, 1)))}) {
        const Rat gamma = ring->defaultGamma();
        const WeightFunction byChar = weightsByCharacter(*ring, gamma);
        CHECK(byChar == weightsByMobius(*ring, gamma));
        CHECK(byChar == weightsClosedForm(*ring, gamma));
        CHECK(isHomogeneous(*ring, byChar));
    }
}

TEST_CASE("gamma scaling is linear") {
    auto z4 = FiniteRing::tabulate(GaloisRing(2, 2, 1));
    const WeightFunction unit = weightsByCharacter(*z4, Rat(1));
    const WeightFunction scaled = weightsByCharacter(*z4, Rat(3, 7));
    for (std::uint32_t x = 0; x < z4->size(); ++x)
        CHECK(scaled.table[x] == unit.table[x] * Rat(3, 7));
    CHECK(isHomogeneous(*z4, scaled));
}

TEST_CASE("homogeneity checker rejects broken tables") {
    auto z4 = FiniteRing::tabulate(GaloisRing(2, 2, 1));
    WeightFunction w = weightsByCharacter(*z4, Rat(1));
    // Break constancy on the unit class: 1 and 3 generate the same ideal.
    WeightFunction broken = w;
    broken.table[1] = Rat(7);
    CHECK_FALSE(isHomogeneous(*z4, broken));
    // Break the ideal average.
    broken = w;
    broken.table[2] = Rat(3);
    CHECK_FALSE(isHomogeneous(*z4, broken));
    // Break w(0) = 0.
    broken = w;
    broken.table[0] = Rat(1);
    CHECK_FALSE(isHomogeneous(*z4, broken));
}
