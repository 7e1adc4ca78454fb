#include "quatring/weights.hpp"

#include <cmath>
#include <numbers>

#include "quatring/errors.hpp"

namespace quatring {

WeightFunction weightsByCharacter(const FiniteRing& ring, const Rat& gamma) {
    const auto& units = ring.units();
    const auto unitCount = static_cast<std::int64_t>(units.size());
    WeightFunction out;
    out.gamma = gamma;
    out.table.resize(ring.size());
    std::vector<std::uint32_t> histogram(ring.characteristic());
    for (std::uint32_t x = 0; x < ring.size(); ++x) {
        std::fill(histogram.begin(), histogram.end(), 0);
        for (std::uint16_t u : units)
            ++histogram[ring.charPhase(ring.mul(static_cast<std::uint16_t>(x), u))];
        double re = 0.0, im = 0.0;
        for (std::uint32_t phase = 0; phase < histogram.size(); ++phase) {
            if (histogram[phase] == 0) continue;
            const double angle =
                2.0 * std::numbers::pi * phase / static_cast<double>(ring.characteristic());
            re += histogram[phase] * std::cos(angle);
            im += histogram[phase] * std::sin(angle);
        }
        if (std::abs(im) > 1e-9)
            throw NonVanishingImaginaryPartError("character sum has nonzero imaginary part");
        const double rounded = std::nearbyint(re);
        if (std::abs(re - rounded) > 1e-9)
            throw NonVanishingImaginaryPartError("character sum is not an integer");
        const auto sum = static_cast<std::int64_t>(rounded);
        out.table[x] = gamma * (Rat(1) - Rat(sum, unitCount));
    }
    return out;
}

WeightFunction weightsByMobius(const FiniteRing& ring, const Rat& gamma) {
    const IdealPoset poset = idealPoset(ring, Side::Left);
    const MobiusTable mob = mobiusTable(poset);
    WeightFunction out;
    out.gamma = gamma;
    out.table.resize(ring.size());
    std::vector<std::uint8_t> inOrbit(ring.size());
    for (std::uint32_t x = 0; x < ring.size(); ++x) {
        // |U x|: size of the left unit orbit of x.
        std::fill(inOrbit.begin(), inOrbit.end(), 0);
        std::int64_t orbit = 0;
        for (std::uint16_t u : ring.units()) {
            const std::uint16_t y = ring.mul(u, static_cast<std::uint16_t>(x));
            if (!inOrbit[y]) {
                inOrbit[y] = 1;
                ++orbit;
            }
        }
        const std::int64_t mu = mob.at(poset.zeroIndex, poset.idealOf[x]);
        out.table[x] = gamma * (Rat(1) - Rat(mu, orbit));
    }
    return out;
}

namespace {

WeightFunction galoisClosedForm(const FiniteRing& ring, const Rat& gamma) {
    const GaloisRing& gr = ring.galois();
    const Rat natural = gr.gammaDefault();
    const Rat scale = gamma / natural;
    WeightFunction out;
    out.gamma = gamma;
    out.table.resize(ring.size());
    for (std::uint32_t x = 0; x < ring.size(); ++x)
        out.table[x] = gr.homWeight(gr.elementAt(x)) * scale;
    return out;
}

WeightFunction quatOddClosedForm(const FiniteRing& ring, const Rat& gamma) {
    const QuatRing& hq = *ring.quaternion();
    if (hq.base().r() != 1)
        throw UnsupportedRingError("odd closed form requires a field base");
    const auto q = static_cast<std::int64_t>(hq.base().cardinality());
    const Rat zdWeight = gamma * Rat(q * q, q * q - 1);
    const Rat unitWeight = gamma * (Rat(1) - Rat(1, (q - 1) * (q * q - 1)));
    WeightFunction out;
    out.gamma = gamma;
    out.table.resize(ring.size());
    for (std::uint32_t x = 1; x < ring.size(); ++x)
        out.table[x] = ring.isUnit(static_cast<std::uint16_t>(x)) ? unitWeight : zdWeight;
    out.table[0] = Rat(0);
    return out;
}

WeightFunction quatEvenClosedForm(const FiniteRing& ring, const Rat& gamma) {
    const QuatRing& hq = *ring.quaternion();
    const Quat generator = minimalIdealCandidate(hq);
    const auto gen = static_cast<std::uint16_t>(hq.codeOf(generator));
    const std::vector<std::uint16_t> ideal = principalIdeal(ring, gen, Side::Left);
    const auto size = static_cast<std::int64_t>(ideal.size());
    WeightFunction out;
    out.gamma = gamma;
    out.table.assign(ring.size(), gamma);
    out.table[0] = Rat(0);
    for (std::uint16_t x : ideal)
        if (x != 0) out.table[x] = gamma * Rat(size, size - 1);
    return out;
}

}  // namespace

WeightFunction weightsClosedForm(const FiniteRing& ring, const Rat& gamma) {
    if (!ring.isQuaternion()) return galoisClosedForm(ring, gamma);
    if (ring.galois().p() != 2) return quatOddClosedForm(ring, gamma);
    return quatEvenClosedForm(ring, gamma);
}

WeightFunction weightsUniqueMinimal(const FiniteRing& ring, const Rat& gamma) {
    auto minimal = uniqueMinimalIdeal(ring, Side::Left);
    if (!minimal)
        throw NoUniqueMinimalIdealError("ring has more than one minimal left ideal");
    const auto size = static_cast<std::int64_t>(minimal->second.size());
    WeightFunction out;
    out.gamma = gamma;
    out.table.assign(ring.size(), gamma);
    out.table[0] = Rat(0);
    for (std::uint16_t x : minimal->second)
        if (x != 0) out.table[x] = gamma * Rat(size, size - 1);
    return out;
}

bool isHomogeneous(const FiniteRing& ring, const WeightFunction& weights) {
    if (weights.table.size() != ring.size()) return false;
    if (weights.table[0] != Rat(0)) return false;
    const IdealPoset poset = idealPoset(ring, Side::Left);
    // Condition 1: Rx = Ry implies w(x) = w(y). Here "class" means equal
    // principal ideal as a set, which is exactly poset.idealOf.
    std::vector<std::uint32_t> representative(poset.ideals.size(),
                                              std::uint32_t(ring.size()));
    for (std::uint32_t x = 0; x < ring.size(); ++x) {
        const std::uint32_t cls = poset.idealOf[x];
        if (representative[cls] == ring.size()) {
            representative[cls] = x;
        } else if (weights.table[x] != weights.table[representative[cls]]) {
            return false;
        }
    }
    // Condition 2: the average over every nonzero principal left ideal is
    // gamma.
    for (std::size_t i = 0; i < poset.ideals.size(); ++i) {
        if (i == poset.zeroIndex) continue;
        Rat sum(0);
        for (std::uint16_t x : poset.ideals[i]) sum += weights.table[x];
        if (sum != weights.gamma * Rat(static_cast<std::int64_t>(poset.ideals[i].size())))
            return false;
    }
    return true;
}

}  // namespace quatring
