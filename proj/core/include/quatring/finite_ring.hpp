#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "quatring/galois_ring.hpp"
#include "quatring/quaternion.hpp"

namespace quatring {

// Fully tabulated view of a finite ring with a generating character:
// either a Galois ring or a quaternion ring over one. Elements are the
// canonical codes 0 .. size()-1 (code 0 is the zero element).
//
// Everything is materialized once at construction (operation tables, unit
// list, element labels), after which all queries are O(1) lookups and the
// object is safe to share across threads.
class FiniteRing {
public:
    static constexpr std::uint32_t kMaxSize = 4096;

    static std::shared_ptr<const FiniteRing> tabulate(const GaloisRing& ring);
    static std::shared_ptr<const FiniteRing> tabulate(const QuatRing& ring);

    std::uint32_t size() const { return size_; }
    std::uint32_t characteristic() const { return characteristic_; }
    std::uint16_t one() const { return one_; }

    std::uint16_t add(std::uint16_t x, std::uint16_t y) const { return add_[x * size_ + y]; }
    std::uint16_t mul(std::uint16_t x, std::uint16_t y) const { return mul_[x * size_ + y]; }
    std::uint16_t neg(std::uint16_t x) const { return neg_[x]; }
    std::uint16_t sub(std::uint16_t x, std::uint16_t y) const { return add(x, neg(y)); }

    // Phase of the generating character at x, mod characteristic().
    std::uint32_t charPhase(std::uint16_t x) const { return chi_[x]; }

    bool isUnit(std::uint16_t x) const { return unit_[x] != 0; }
    const std::vector<std::uint16_t>& units() const { return units_; }

    const std::string& label(std::uint16_t x) const { return labels_[x]; }

    // Provenance. quaternion() is null for plain Galois rings; galois()
    // is the ring itself or the base ring of the quaternions.
    const QuatRing* quaternion() const { return quat_.get(); }
    const GaloisRing& galois() const { return *galois_; }
    bool isQuaternion() const { return quat_ != nullptr; }

    // Natural average value for weight tables: Galois rings use their
    // chain-ring value, quaternion rings are normalized to 1.
    Rat defaultGamma() const;

    const std::vector<std::uint16_t>& mulTable() const { return mul_; }
    const std::vector<std::uint16_t>& addTable() const { return add_; }

private:
    FiniteRing() = default;
    void buildDerived();

    std::uint32_t size_ = 0;
    std::uint32_t characteristic_ = 0;
    std::uint16_t one_ = 0;
    std::vector<std::uint16_t> add_, mul_, neg_;
    std::vector<std::uint32_t> chi_;
    std::vector<std::uint8_t> unit_;
    std::vector<std::uint16_t> units_;
    std::vector<std::string> labels_;
    std::shared_ptr<const GaloisRing> galois_;
    std::shared_ptr<const QuatRing> quat_;
};

}  // namespace quatring
