#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quatring/galois_ring.hpp"

namespace quatring {

// Quaternion x_0 + x_1 i + x_2 j + x_3 k with coordinates in the base ring.
struct Quat {
    std::array<GrElement, 4> c;

    friend auto operator<=>(const Quat&, const Quat&) = default;
};

struct RingCounts {
    std::uint64_t units = 0;
    std::uint64_t zeroDivisors = 0;
    std::uint64_t idempotents = 0;
};

// The quaternion ring H_{a,b}(R) over a Galois ring R, where a and b are
// units of R and i^2 = a, j^2 = b, ij = -ji = k. The remaining basis
// products are forced by associativity and hard-coded:
//   k^2 = -ab,  ik = aj,  ki = -aj,  jk = -bi,  kj = bi.
//
// Besides value arithmetic on Quat, the ring provides arithmetic on packed
// element codes (the lexicographic rank of the coordinate tuple), backed by
// operation tables of the base ring. Immutable after construction.
class QuatRing {
public:
    QuatRing(GaloisRing base, GrElement a, GrElement b);

    // H(R): a = b = -1.
    static QuatRing hamilton(GaloisRing base);

    const GaloisRing& base() const { return base_; }
    const GrElement& a() const { return a_; }
    const GrElement& b() const { return b_; }
    std::uint64_t cardinality() const { return cardinality_; }  // |R|^4

    bool sameRing(const QuatRing& other) const;

    Quat zero() const;
    Quat one() const;
    Quat unitI() const;
    Quat unitJ() const;
    Quat unitK() const;
    Quat scalar(const GrElement& s) const;
    bool contains(const Quat& x) const;

    Quat add(const Quat& x, const Quat& y) const;
    Quat sub(const Quat& x, const Quat& y) const;
    Quat neg(const Quat& x) const;
    Quat mul(const Quat& x, const Quat& y) const;
    Quat conj(const Quat& x) const;

    // Reduced norm N(x) = x * conj(x) = x0^2 - a x1^2 - b x2^2 + ab x3^2;
    // a central element of the base ring.
    GrElement norm(const Quat& x) const;

    // Unit iff N(x) is a unit of the base ring (the base is commutative
    // local); cross-checked against brute force in the test suite.
    bool isUnit(const Quat& x) const;

    // Exhaustive two-sided inverse search; verification use only.
    std::optional<Quat> inverse(const Quat& x) const;

    // chi*(x) = chi(x_0); a generating character of the quaternion ring.
    CharacterValue character(const Quat& x) const;

    // Canonical enumeration by lexicographic coordinate rank.
    std::uint64_t indexOf(const Quat& x) const;
    Quat elementAt(std::uint64_t index) const;

    // Packed-code arithmetic. Codes are indexOf values; available whenever
    // the base ring has at most 4096 elements.
    std::uint32_t codeOf(const Quat& x) const;
    Quat fromCode(std::uint32_t code) const;
    std::uint32_t addCodes(std::uint32_t x, std::uint32_t y) const;
    std::uint32_t mulCodes(std::uint32_t x, std::uint32_t y) const;
    std::uint32_t negCode(std::uint32_t x) const;
    std::uint32_t baseSize() const { return baseSize_; }
    std::uint16_t normCode(std::uint32_t x) const;  // base-ring code
    bool isUnitCode(std::uint32_t x) const;
    std::uint32_t charPhaseCode(std::uint32_t x) const;
    void coords(std::uint32_t code, std::uint16_t out[4]) const;
    std::uint32_t pack(const std::uint16_t in[4]) const;

    // Exhaustive classification: units, one-sided zero divisors (nonzero x
    // with xy = 0 or yx = 0 for some nonzero y), idempotents (0 and 1
    // included). TooLarge above 2^20 elements.
    RingCounts classify() const;

private:
    GaloisRing base_;
    GrElement a_, b_;
    std::uint64_t cardinality_ = 0;
    std::uint32_t baseSize_ = 0;

    // Base-ring operation tables indexed by base codes.
    std::vector<std::uint16_t> bAdd_, bMul_, bNeg_;
    std::vector<std::uint32_t> bChar_;
    std::vector<std::uint8_t> bUnit_;
    std::uint16_t ca_ = 0, cb_ = 0, cab_ = 0;

    std::uint16_t bmul(std::uint16_t x, std::uint16_t y) const { return bMul_[x * baseSize_ + y]; }
    std::uint16_t badd(std::uint16_t x, std::uint16_t y) const { return bAdd_[x * baseSize_ + y]; }
    std::uint16_t bsub(std::uint16_t x, std::uint16_t y) const { return badd(x, bNeg_[y]); }
};

// Element text: canonical "(c0,c1,c2,c3)" with the base-ring element grammar
// per coordinate; for m = 1 the form "x0+x1i+x2j+x3k" (any subset of terms,
// coefficients reduced mod p^r) is also accepted.
std::string quatToText(const QuatRing& ring, const Quat& x);
Quat quatFromText(const QuatRing& ring, std::string_view text);

}  // namespace quatring
