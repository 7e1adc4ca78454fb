#pragma once

#include <cstdint>
#include <vector>

#include "quatring/finite_ring.hpp"
#include "quatring/ideals.hpp"
#include "quatring/rational.hpp"

namespace quatring {

// Weight table of a finite ring, indexed by element code, together with the
// average value over nonzero principal left ideals. All entries exact.
struct WeightFunction {
    Rat gamma;
    std::vector<Rat> table;

    friend bool operator==(const WeightFunction&, const WeightFunction&) = default;
};

// w(x) = gamma * (1 - (1/|U|) * sum_{u in U} chi(x u)) over the unit group U.
// The character sum is accumulated as a phase histogram and reduced to a
// complex value only at the end; the imaginary part must vanish (tolerance
// 1e-9) and the real part must round to an integer, otherwise
// NonVanishingImaginaryPart is thrown.
WeightFunction weightsByCharacter(const FiniteRing& ring, const Rat& gamma);

// w(x) = gamma * (1 - mu(0, Rx) / |U x|) over the left-ideal poset.
WeightFunction weightsByMobius(const FiniteRing& ring, const Rat& gamma);

// Per-ring closed form scaled to the requested gamma:
//  - Galois rings: the chain-ring formula (values gamma and
//    gamma * p^{m(r-1)} / ((p^m-1) p^{m(r-2)}) split by (p^{r-1})).
//  - Quaternions over F_q, q odd: gamma * q^2/(q^2-1) on zero divisors and
//    gamma * (1 - 1/((q-1)(q^2-1))) on units.
//  - Quaternions over GR(2^r, m) with a = b = -1: the unique-minimal-ideal
//    formula with the ideal built from its closed-form generator.
// UnsupportedRing for anything else.
WeightFunction weightsClosedForm(const FiniteRing& ring, const Rat& gamma);

// The unique-minimal-ideal formula: gamma * |I|/(|I|-1) on I \ {0}, gamma
// elsewhere, with I found from the ideal poset. NoUniqueMinimalIdeal when
// the minimal ideal is not unique.
WeightFunction weightsUniqueMinimal(const FiniteRing& ring, const Rat& gamma);

// Literal check of the two homogeneity conditions: constancy on classes
// with equal principal left ideals, and average over every nonzero
// principal left ideal equal to gamma. Exhaustive and exact.
bool isHomogeneous(const FiniteRing& ring, const WeightFunction& weights);

}  // namespace quatring
