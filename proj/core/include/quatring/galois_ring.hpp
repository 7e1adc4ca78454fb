#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quatring/rational.hpp"

namespace quatring {

// Element of GR(p^r, m): the coefficient vector (b_0, ..., b_{m-1}) with
// respect to the power basis {1, w, ..., w^{m-1}}, every entry reduced
// mod p^r. The representation is unique, so equality is vector equality.
struct GrElement {
    std::vector<std::uint32_t> coeffs;

    friend auto operator<=>(const GrElement&, const GrElement&) = default;
};

// Value of an additive character, kept exact: the complex number is
// exp(2*pi*i * phase / modulus) but only the phase is ever stored.
// Phases add mod the modulus; the value is 1 exactly when phase == 0.
struct CharacterValue {
    std::uint32_t phase = 0;
    std::uint32_t modulus = 1;

    bool isOne() const { return phase == 0; }

    friend bool operator==(const CharacterValue&, const CharacterValue&) = default;
};

// The Galois ring GR(p^r, m) = Z_{p^r}[x] / (h(x)) where h is monic of
// degree m and irreducible mod p. Immutable after construction; all
// element operations are value-in, value-out and safe to call concurrently.
//
// Elements are enumerable and carry a canonical index: the lexicographic
// rank of the coefficient vector (b_0 major). Index 0 is always the zero
// element.
class GaloisRing {
public:
    // Construct with the default modulus polynomial: the lexicographically
    // smallest monic degree-m polynomial with coefficients in {0..p-1}
    // irreducible mod p. Deterministic, so outputs are reproducible.
    GaloisRing(std::uint32_t p, std::uint32_t r, std::uint32_t m);

    // Construct with an explicit modulus h (low degree first, length m+1,
    // leading coefficient 1, entries in [0, p^r)).
    GaloisRing(std::uint32_t p, std::uint32_t r, std::uint32_t m,
               std::vector<std::uint32_t> h);

    std::uint32_t p() const { return p_; }
    std::uint32_t r() const { return r_; }
    std::uint32_t m() const { return m_; }
    std::uint64_t characteristic() const { return characteristic_; }  // p^r
    std::uint64_t cardinality() const { return cardinality_; }        // p^(r m)
    const std::vector<std::uint32_t>& modulus() const { return h_; }

    // Structural identity: same (p, r, m, h).
    bool sameRing(const GaloisRing& other) const;

    GrElement zero() const;
    GrElement one() const;
    GrElement omega() const;  // the class of x; for m = 1 the root of h
    GrElement fromInt(std::int64_t n) const;

    // True iff the vector is a valid element of this ring (length m,
    // entries < p^r).
    bool contains(const GrElement& x) const;

    GrElement add(const GrElement& a, const GrElement& b) const;
    GrElement sub(const GrElement& a, const GrElement& b) const;
    GrElement neg(const GrElement& a) const;
    // Polynomial product reduced mod h(x) and mod p^r.
    GrElement mul(const GrElement& a, const GrElement& b) const;

    // Unit test: a unit iff the vector is nonzero mod p (i.e. not in the
    // maximal ideal (p)).
    bool isUnit(const GrElement& x) const;

    // Exhaustive inverse search; nullopt for non-units. Intended for
    // verification at desk scale, not for inner loops.
    std::optional<GrElement> inverse(const GrElement& x) const;

    // Generating character: phase = b_{m-1}, modulus = p^r.
    CharacterValue character(const GrElement& x) const;

    // Homogeneous weight of the chain ring with its natural average value:
    //   0                      at 0,
    //   p^{m(r-1)}             on (p^{r-1}) \ {0},
    //   (p^m - 1) p^{m(r-2)}   elsewhere.
    Rat homWeight(const GrElement& x) const;

    // Natural average value (p^m - 1) p^{m(r-2)}; rational when r = 1.
    Rat gammaDefault() const;

    // x in (p^{r-1}), i.e. every coefficient divisible by p^{r-1}.
    bool inMinimalIdeal(const GrElement& x) const;

    // Canonical enumeration. elementAt(indexOf(x)) == x for all x.
    std::uint64_t indexOf(const GrElement& x) const;
    GrElement elementAt(std::uint64_t index) const;
    std::vector<GrElement> elements() const;  // TooLarge above 2^20

    static bool isPrime(std::uint64_t n);
    static std::vector<std::uint32_t> defaultModulus(std::uint32_t p,
                                                     std::uint32_t r,
                                                     std::uint32_t m);

private:
    void init();

    std::uint32_t p_ = 0, r_ = 0, m_ = 0;
    std::uint64_t characteristic_ = 0, cardinality_ = 0;
    std::uint64_t pPowRm1_ = 0;  // p^(r-1)
    std::vector<std::uint32_t> h_;
    // Representations of w^m .. w^(2m-2) in the power basis, used to fold
    // the high half of a product back into degree < m.
    std::vector<std::vector<std::uint32_t>> highPowers_;
};

// Element text grammar: "[b0,b1,...,b_{m-1}]"; for m = 1 a bare integer is
// also accepted on input and is the canonical output form.
std::string grToText(const GaloisRing& ring, const GrElement& x);
GrElement grFromText(const GaloisRing& ring, std::string_view text);

}  // namespace quatring
