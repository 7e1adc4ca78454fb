#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "quatring/finite_ring.hpp"

namespace quatring {

enum class Side { Left, Right };

// The principal ideal generated by x on the given side, as a sorted set of
// element codes: {r x} for Left, {x r} for Right.
std::vector<std::uint16_t> principalIdeal(const FiniteRing& ring,
                                          std::uint16_t generator, Side side);

// All distinct principal one-sided ideals of the ring, ordered by
// containment. Ideals are deduplicated as element sets and listed in a
// canonical order (by size, then lexicographically by sorted element list);
// the recorded generator of each ideal is the smallest element generating
// that exact set. The zero ideal and the full ring are always present.
struct IdealPoset {
    Side side = Side::Left;
    std::vector<std::vector<std::uint16_t>> ideals;
    std::vector<std::uint16_t> generators;  // one per ideal
    std::vector<std::uint32_t> idealOf;     // element code -> ideal index
    std::size_t zeroIndex = 0;
    std::size_t fullIndex = 0;

    bool leq(std::size_t sub, std::size_t super) const {
        return leq_[sub * ideals.size() + super];
    }
    // Minimal/maximal among the nonzero proper ideals.
    bool isMinimal(std::size_t i) const;
    bool isMaximal(std::size_t i) const;

    std::vector<std::uint8_t> leq_;  // containment matrix, row = sub
};

IdealPoset idealPoset(const FiniteRing& ring, Side side);

// Mobius function of the containment poset: mu[sub][super], zero whenever
// sub is not contained in super, mu(I, I) = 1, and interval sums vanish.
struct MobiusTable {
    std::vector<std::vector<std::int64_t>> mu;

    std::int64_t at(std::size_t sub, std::size_t super) const { return mu[sub][super]; }
};

MobiusTable mobiusTable(const IdealPoset& poset);

// The unique minimal nonzero one-sided ideal when it exists (generator and
// element set); nullopt when there are two or more minimal ideals.
std::optional<std::pair<std::uint16_t, std::vector<std::uint16_t>>>
uniqueMinimalIdeal(const FiniteRing& ring, Side side);

// Sum (additive span) of all minimal ideals on the given side.
std::vector<std::uint16_t> socle(const FiniteRing& ring, Side side);

// True iff the kernel of the generating character contains no nonzero left
// ideal and no nonzero right ideal: for every nonzero x some s has
// chi(s x) != 1 and some t has chi(x t) != 1.
bool isFrobeniusByCharacter(const FiniteRing& ring);

// Closed-form generator of the minimal ideal of H(R), R = GR(2^r, m),
// a = b = -1:
//   r = 1:        1 + i + j + k
//   r > 1, m = 1: 2^{r-1} (1 + i + j + k)
//   r > 1, m > 1: 2^{r-1} (1 + w + ... + w^{m-1}) (1 + i + j + k)
// UnsupportedRing for odd characteristic or other (a, b).
Quat minimalIdealCandidate(const QuatRing& ring);

// Verification report for the candidate generator, usable for rings far too
// large to build the full ideal poset. The ideal I = Hx is materialized,
// checked to be two-sided and minimal, and containment I <= Hy and I <= yH
// is checked for a deterministic sample of nonzero y (always including the
// near-ideal elements c + z with c in I and z supported on one coordinate).
// With exhaustive = true every nonzero y is checked instead.
struct CandidateCheck {
    Quat generator;
    std::uint64_t idealSize = 0;
    bool twoSided = false;
    bool minimal = false;
    std::uint64_t checkedElements = 0;
    bool containedInAllChecked = false;
    bool exhaustive = false;

    bool verified() const { return twoSided && minimal && containedInAllChecked; }
};

CandidateCheck verifyMinimalIdealCandidate(const QuatRing& ring,
                                           std::uint64_t samples = 1000,
                                           bool exhaustive = false,
                                           std::uint64_t seed = 0x51c0ffee);

}  // namespace quatring
