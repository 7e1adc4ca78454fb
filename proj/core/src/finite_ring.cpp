#include "quatring/finite_ring.hpp"

#include "quatring/errors.hpp"

namespace quatring {

std::shared_ptr<const FiniteRing> FiniteRing::tabulate(const GaloisRing& ring) {
    if (ring.cardinality() > kMaxSize)
        throw TooLargeError("ring too large to tabulate");
    auto out = std::shared_ptr<FiniteRing>(new FiniteRing());
    out->galois_ = std::make_shared<const GaloisRing>(ring);
    const auto n = static_cast<std::uint32_t>(ring.cardinality());
    out->size_ = n;
    out->characteristic_ = static_cast<std::uint32_t>(ring.characteristic());
    out->one_ = static_cast<std::uint16_t>(ring.indexOf(ring.one()));
    out->add_.resize(static_cast<std::size_t>(n) * n);
    out->mul_.resize(static_cast<std::size_t>(n) * n);
    out->neg_.resize(n);
    out->chi_.resize(n);
    out->labels_.resize(n);
    std::vector<GrElement> elems = ring.elements();
    for (std::uint32_t x = 0; x < n; ++x) {
        out->neg_[x] = static_cast<std::uint16_t>(ring.indexOf(ring.neg(elems[x])));
        out->chi_[x] = ring.character(elems[x]).phase;
        out->labels_[x] = grToText(ring, elems[x]);
        for (std::uint32_t y = 0; y < n; ++y) {
            out->add_[x * n + y] = static_cast<std::uint16_t>(ring.indexOf(ring.add(elems[x], elems[y])));
            out->mul_[x * n + y] = static_cast<std::uint16_t>(ring.indexOf(ring.mul(elems[x], elems[y])));
        }
    }
    out->buildDerived();
    return out;
}

std::shared_ptr<const FiniteRing> FiniteRing::tabulate(const QuatRing& ring) {
    if (ring.cardinality() > kMaxSize)
        throw TooLargeError("ring too large to tabulate");
    auto out = std::shared_ptr<FiniteRing>(new FiniteRing());
    out->quat_ = std::make_shared<const QuatRing>(ring);
    out->galois_ = std::make_shared<const GaloisRing>(ring.base());
    const auto n = static_cast<std::uint32_t>(ring.cardinality());
    out->size_ = n;
    out->characteristic_ = static_cast<std::uint32_t>(ring.base().characteristic());
    out->one_ = static_cast<std::uint16_t>(ring.indexOf(ring.one()));
    out->add_.resize(static_cast<std::size_t>(n) * n);
    out->mul_.resize(static_cast<std::size_t>(n) * n);
    out->neg_.resize(n);
    out->chi_.resize(n);
    out->labels_.resize(n);
    for (std::uint32_t x = 0; x < n; ++x) {
        out->neg_[x] = static_cast<std::uint16_t>(ring.negCode(x));
        out->chi_[x] = ring.charPhaseCode(x);
        out->labels_[x] = quatToText(ring, ring.fromCode(x));
        for (std::uint32_t y = 0; y < n; ++y) {
            out->add_[x * n + y] = static_cast<std::uint16_t>(ring.addCodes(x, y));
            out->mul_[x * n + y] = static_cast<std::uint16_t>(ring.mulCodes(x, y));
        }
    }
    out->buildDerived();
    return out;
}

void FiniteRing::buildDerived() {
    // Units by brute force: x is a unit iff some y has xy = yx = 1.
    unit_.assign(size_, 0);
    for (std::uint32_t x = 0; x < size_; ++x) {
        for (std::uint32_t y = 0; y < size_; ++y) {
            if (mul(static_cast<std::uint16_t>(x), static_cast<std::uint16_t>(y)) == one_ &&
                mul(static_cast<std::uint16_t>(y), static_cast<std::uint16_t>(x)) == one_) {
                unit_[x] = 1;
                break;
            }
        }
        if (unit_[x]) units_.push_back(static_cast<std::uint16_t>(x));
    }
}

Rat FiniteRing::defaultGamma() const {
    return isQuaternion() ? Rat(1) : galois_->gammaDefault();
}

}  // namespace quatring
