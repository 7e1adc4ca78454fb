#include "quatring/ideals.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "quatring/errors.hpp"

namespace quatring {

std::vector<std::uint16_t> principalIdeal(const FiniteRing& ring,
                                          std::uint16_t generator, Side side) {
    std::vector<std::uint8_t> seen(ring.size(), 0);
    for (std::uint32_t r = 0; r < ring.size(); ++r) {
        const auto rc = static_cast<std::uint16_t>(r);
        const std::uint16_t prod =
            side == Side::Left ? ring.mul(rc, generator) : ring.mul(generator, rc);
        seen[prod] = 1;
    }
    std::vector<std::uint16_t> out;
    for (std::uint32_t x = 0; x < ring.size(); ++x)
        if (seen[x]) out.push_back(static_cast<std::uint16_t>(x));
    return out;
}

bool IdealPoset::isMinimal(std::size_t i) const {
    if (i == zeroIndex || ideals[i].size() == ideals[fullIndex].size()) return false;
    for (std::size_t j = 0; j < ideals.size(); ++j)
        if (j != i && j != zeroIndex && leq(j, i)) return false;
    return true;
}

bool IdealPoset::isMaximal(std::size_t i) const {
    if (i == zeroIndex || i == fullIndex) return false;
    for (std::size_t j = 0; j < ideals.size(); ++j)
        if (j != i && j != fullIndex && leq(i, j)) return false;
    return true;
}

IdealPoset idealPoset(const FiniteRing& ring, Side side) {
    IdealPoset poset;
    poset.side = side;

    // Dedup the principal ideals as sorted element sets; remember the
    // smallest generator of each.
    std::map<std::vector<std::uint16_t>, std::uint16_t> byElements;
    std::vector<std::vector<std::uint16_t>> idealForGenerator(ring.size());
    for (std::uint32_t x = 0; x < ring.size(); ++x) {
        auto set = principalIdeal(ring, static_cast<std::uint16_t>(x), side);
        auto [it, inserted] = byElements.emplace(std::move(set), static_cast<std::uint16_t>(x));
        idealForGenerator[x] = it->first;
    }

    // Canonical order: by size, then by element list.
    std::vector<std::pair<std::vector<std::uint16_t>, std::uint16_t>> sorted(
        byElements.begin(), byElements.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });

    std::map<std::vector<std::uint16_t>, std::size_t> indexOf;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        poset.ideals.push_back(sorted[i].first);
        poset.generators.push_back(sorted[i].second);
        indexOf[sorted[i].first] = i;
        if (sorted[i].first.size() == 1) poset.zeroIndex = i;
        if (sorted[i].first.size() == ring.size()) poset.fullIndex = i;
    }
    poset.idealOf.resize(ring.size());
    for (std::uint32_t x = 0; x < ring.size(); ++x)
        poset.idealOf[x] = static_cast<std::uint32_t>(indexOf[idealForGenerator[x]]);

    const std::size_t n = poset.ideals.size();
    poset.leq_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            poset.leq_[a * n + b] = std::includes(
                poset.ideals[b].begin(), poset.ideals[b].end(),
                poset.ideals[a].begin(), poset.ideals[a].end());
    return poset;
}

MobiusTable mobiusTable(const IdealPoset& poset) {
    const std::size_t n = poset.ideals.size();
    MobiusTable table;
    table.mu.assign(n, std::vector<std::int64_t>(n, 0));
    // mu(sub, super) = -sum_{sub < z <= super} mu(z, super); recurse by
    // interval, memoized by the dense table.
    for (std::size_t super = 0; super < n; ++super) {
        table.mu[super][super] = 1;
        // Process sub-ideals in decreasing size so every z strictly between
        // sub and super is already done.
        std::vector<std::size_t> subs;
        for (std::size_t sub = 0; sub < n; ++sub)
            if (sub != super && poset.leq(sub, super)) subs.push_back(sub);
        std::sort(subs.begin(), subs.end(), [&](std::size_t a, std::size_t b) {
            return poset.ideals[a].size() > poset.ideals[b].size();
        });
        for (std::size_t sub : subs) {
            std::int64_t sum = 0;
            for (std::size_t z = 0; z < n; ++z)
                if (z != sub && poset.leq(sub, z) && poset.leq(z, super))
                    sum += table.mu[z][super];
            table.mu[sub][super] = -sum;
        }
    }
    return table;
}

std::optional<std::pair<std::uint16_t, std::vector<std::uint16_t>>>
uniqueMinimalIdeal(const FiniteRing& ring, Side side) {
    const IdealPoset poset = idealPoset(ring, side);
    std::optional<std::size_t> found;
    for (std::size_t i = 0; i < poset.ideals.size(); ++i) {
        // Minimal nonzero ideal: only the zero ideal strictly below. The
        // full ring counts when it is the only nonzero ideal (fields).
        if (i == poset.zeroIndex) continue;
        bool minimal = true;
        for (std::size_t j = 0; j < poset.ideals.size(); ++j)
            if (j != i && j != poset.zeroIndex && poset.leq(j, i)) minimal = false;
        if (!minimal) continue;
        if (found) return std::nullopt;
        found = i;
    }
    if (!found) return std::nullopt;
    return std::make_pair(poset.generators[*found], poset.ideals[*found]);
}

std::vector<std::uint16_t> socle(const FiniteRing& ring, Side side) {
    const IdealPoset poset = idealPoset(ring, side);
    std::set<std::uint16_t> span = {0};
    for (std::size_t i = 0; i < poset.ideals.size(); ++i) {
        if (i == poset.zeroIndex) continue;
        bool minimal = true;
        for (std::size_t j = 0; j < poset.ideals.size(); ++j)
            if (j != i && j != poset.zeroIndex && poset.leq(j, i)) minimal = false;
        if (!minimal) continue;
        for (std::uint16_t x : poset.ideals[i]) span.insert(x);
    }
    // Close under addition.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::uint16_t> cur(span.begin(), span.end());
        for (std::uint16_t x : cur)
            for (std::uint16_t y : cur)
                if (span.insert(ring.add(x, y)).second) grew = true;
    }
    return {span.begin(), span.end()};
}

bool isFrobeniusByCharacter(const FiniteRing& ring) {
    for (std::uint32_t x = 1; x < ring.size(); ++x) {
        bool leftWitness = false, rightWitness = false;
        for (std::uint32_t s = 0; s < ring.size() && !(leftWitness && rightWitness); ++s) {
            const auto sc = static_cast<std::uint16_t>(s);
            const auto xc = static_cast<std::uint16_t>(x);
            if (!leftWitness && ring.charPhase(ring.mul(sc, xc)) != 0) leftWitness = true;
            if (!rightWitness && ring.charPhase(ring.mul(xc, sc)) != 0) rightWitness = true;
        }
        if (!leftWitness || !rightWitness) return false;
    }
    return true;
}

Quat minimalIdealCandidate(const QuatRing& ring) {
    const GaloisRing& base = ring.base();
    if (base.p() != 2)
        throw UnsupportedRingError("closed-form minimal ideal requires characteristic 2^r");
    const GrElement minusOne = base.neg(base.one());
    if (ring.a() != minusOne || ring.b() != minusOne)
        throw UnsupportedRingError("closed-form minimal ideal requires a = b = -1");

    // 1 + i + j + k, scaled by 2^{r-1} (1 + w + ... + w^{m-1}) when r > 1.
    GrElement s = base.one();
    if (base.r() > 1) {
        GrElement sumOmega = base.zero();
        GrElement pw = base.one();
        for (std::uint32_t t = 0; t < base.m(); ++t) {
            sumOmega = base.add(sumOmega, pw);
            pw = base.mul(pw, base.omega());
        }
        GrElement twoPow = base.one();
        for (std::uint32_t t = 0; t + 1 < base.r(); ++t)
            twoPow = base.add(twoPow, twoPow);
        s = base.mul(twoPow, sumOmega);
    }
    return Quat{{s, s, s, s}};
}

CandidateCheck verifyMinimalIdealCandidate(const QuatRing& ring,
                                           std::uint64_t samples,
                                           bool exhaustive,
                                           std::uint64_t seed) {
    CandidateCheck check;
    check.generator = minimalIdealCandidate(ring);
    check.exhaustive = exhaustive;
    const std::uint64_t n = ring.cardinality();
    const std::uint32_t xc = ring.codeOf(check.generator);

    // Materialize I = Hx.
    std::set<std::uint32_t> ideal;
    for (std::uint64_t r = 0; r < n; ++r)
        ideal.insert(ring.mulCodes(static_cast<std::uint32_t>(r), xc));
    check.idealSize = ideal.size();

    // Two-sided: xH inside I as well (Hx is a left ideal by construction).
    check.twoSided = true;
    for (std::uint64_t r = 0; r < n && check.twoSided; ++r)
        if (!ideal.count(ring.mulCodes(xc, static_cast<std::uint32_t>(r))))
            check.twoSided = false;

    // Minimal: every nonzero y in I regenerates I.
    check.minimal = true;
    for (std::uint32_t y : ideal) {
        if (y == 0) continue;
        std::set<std::uint32_t> sub;
        for (std::uint64_t r = 0; r < n; ++r)
            sub.insert(ring.mulCodes(static_cast<std::uint32_t>(r), y));
        if (sub != ideal) {
            check.minimal = false;
            break;
        }
    }

    // Containment in H y and y H reduces to x in H y (resp. x in y H),
    // since I is generated by x on either side.
    auto contained = [&](std::uint32_t y) {
        bool left = false, right = false;
        for (std::uint64_t r = 0; r < n && !(left && right); ++r) {
            const auto rc = static_cast<std::uint32_t>(r);
            if (!left && ring.mulCodes(rc, y) == xc) left = true;
            if (!right && ring.mulCodes(y, rc) == xc) right = true;
        }
        return left && right;
    };

    check.containedInAllChecked = true;
    if (exhaustive) {
        for (std::uint64_t y = 1; y < n; ++y) {
            ++check.checkedElements;
            if (!contained(static_cast<std::uint32_t>(y))) {
                check.containedInAllChecked = false;
                break;
            }
        }
        return check;
    }

    std::set<std::uint32_t> targets;
    // Near-ideal elements: c + z with c in I and z supported on a single
    // coordinate (these are the adversarial shapes for containment).
    const std::uint32_t baseSize = ring.baseSize();
    for (std::uint32_t c : ideal) {
        for (int t = 0; t < 4; ++t) {
            for (std::uint32_t v = 1; v < baseSize; ++v) {
                std::uint16_t zc[4] = {0, 0, 0, 0};
                zc[t] = static_cast<std::uint16_t>(v);
                const std::uint32_t y = ring.addCodes(c, ring.pack(zc));
                if (y != 0) targets.insert(y);
            }
        }
    }
    const std::uint64_t seeded = targets.size();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> dist(1, n - 1);
    while (targets.size() < seeded + samples && targets.size() < n - 1)
        targets.insert(static_cast<std::uint32_t>(dist(rng)));
    for (std::uint32_t y : targets) {
        ++check.checkedElements;
        if (!contained(y)) {
            check.containedInAllChecked = false;
            break;
        }
    }
    return check;
}

}  // namespace quatring
