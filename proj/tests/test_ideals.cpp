#include "doctest.h"

#include <algorithm>

#include "quatring/errors.hpp"
#include "quatring/ideals.hpp"

using namespace quatring;

namespace {

std::shared_ptr<const FiniteRing> h2() {
    return FiniteRing::tabulate(QuatRing::hamilton(GaloisRing(2, 1, 1)));
}
std::shared_ptr<const FiniteRing> h3() {
    return FiniteRing::tabulate(QuatRing::hamilton(GaloisRing(3, 1, 1)));
}
std::shared_ptr<const FiniteRing> h4() {
    return FiniteRing::tabulate(QuatRing::hamilton(GaloisRing(2, 1, 2)));
}
std::shared_ptr<const FiniteRing> hz4() {
    return FiniteRing::tabulate(QuatRing::hamilton(GaloisRing(2, 2, 1)));
}

std::uint16_t codeOf(const FiniteRing& ring, const char* text) {
    const QuatRing* quat = ring.quaternion();
    REQUIRE(quat != nullptr);
    return static_cast<std::uint16_t>(quat->codeOf(quatFromText(*quat, text)));
}

}  // namespace

TEST_CASE("principal ideals") {
    auto ring = h2();
    CHECK(principalIdeal(*ring, 0, Side::Left) == std::vector<std::uint16_t>{0});

    const std::uint16_t x = codeOf(*ring, "1+i+j+k");
    const auto ideal = principalIdeal(*ring, x, Side::Left);
    CHECK(ideal == std::vector<std::uint16_t>{0, x});

    auto ring3 = h3();
    const std::uint16_t zd = codeOf(*ring3, "1+i+j");  // norm 0, a nonunit
    REQUIRE_FALSE(ring3->isUnit(zd));
    CHECK(principalIdeal(*ring3, zd, Side::Left).size() == 9);
    CHECK(principalIdeal(*ring3, zd, Side::Right).size() == 9);
}

TEST_CASE("ideal poset shapes") {
    // A field is a two-element chain.
    auto f3 = FiniteRing::tabulate(GaloisRing(3, 1, 1));
    const IdealPoset chain = idealPoset(*f3, Side::Left);
    CHECK(chain.ideals.size() == 2);
    CHECK(chain.zeroIndex != chain.fullIndex);

    // Z4 is the chain 0 < (2) < Z4.
    auto z4 = FiniteRing::tabulate(GaloisRing(2, 2, 1));
    const IdealPoset z4chain = idealPoset(*z4, Side::Left);
    REQUIRE(z4chain.ideals.size() == 3);
    CHECK(z4chain.ideals[1] == std::vector<std::uint16_t>{0, 2});

    // H(F3) has q + 1 = 4 proper ideals, each of size q^2 = 9, each both
    // minimal and maximal.
    const IdealPoset poset = idealPoset(*h3(), Side::Left);
    REQUIRE(poset.ideals.size() == 6);
    std::size_t proper = 0;
    for (std::size_t i = 0; i < poset.ideals.size(); ++i) {
        if (i == poset.zeroIndex || i == poset.fullIndex) continue;
        ++proper;
        CHECK(poset.ideals[i].size() == 9);
        CHECK(poset.isMinimal(i));
        CHECK(poset.isMaximal(i));
    }
    CHECK(proper == 4);
    // Same shape on the right.
    const IdealPoset right = idealPoset(*h3(), Side::Right);
    CHECK(right.ideals.size() == 6);

    // And q + 1 = 6 proper ideals of size 25 over H(F5).
    auto h5 = FiniteRing::tabulate(QuatRing::hamilton(GaloisRing(5, 1, 1)));
    const IdealPoset poset5 = idealPoset(*h5, Side::Left);
    std::size_t proper5 = 0;
    for (std::size_t i = 0; i < poset5.ideals.size(); ++i) {
        if (i == poset5.zeroIndex || i == poset5.fullIndex) continue;
        ++proper5;
        CHECK(poset5.ideals[i].size() == 25);
        CHECK(poset5.isMinimal(i));
        CHECK(poset5.isMaximal(i));
    }
    CHECK(proper5 == 6);
}

TEST_CASE("mobius values") {
    auto f3 = FiniteRing::tabulate(GaloisRing(3, 1, 1));
    const IdealPoset chain = idealPoset(*f3, Side::Left);
    const MobiusTable mu2 = mobiusTable(chain);
    CHECK(mu2.at(chain.fullIndex, chain.fullIndex) == 1);
    CHECK(mu2.at(chain.zeroIndex, chain.fullIndex) == -1);

    auto z4 = FiniteRing::tabulate(GaloisRing(2, 2, 1));
    const IdealPoset z4chain = idealPoset(*z4, Side::Left);
    const MobiusTable mu3 = mobiusTable(z4chain);
    CHECK(mu3.at(z4chain.zeroIndex, 1) == -1);
    CHECK(mu3.at(z4chain.zeroIndex, z4chain.fullIndex) == 0);

    const IdealPoset poset = idealPoset(*h3(), Side::Left);
    const MobiusTable mu = mobiusTable(poset);
    for (std::size_t i = 0; i < poset.ideals.size(); ++i) {
        if (i == poset.zeroIndex || i == poset.fullIndex) continue;
        CHECK(mu.at(poset.zeroIndex, i) == -1);
    }
    CHECK(mu.at(poset.zeroIndex, poset.fullIndex) == 3);
}

TEST_CASE("mobius properties on several rings") {
    for (auto ring : {h2(), h3(), hz4(), FiniteRing::tabulate(GaloisRing(2, 3, 1))}) {
        const IdealPoset poset = idealPoset(*ring, Side::Left);
        const MobiusTable mu = mobiusTable(poset);
        const std::size_t n = poset.ideals.size();
        for (std::size_t sub = 0; sub < n; ++sub) {
            CHECK(mu.at(sub, sub) == 1);
            for (std::size_t super = 0; super < n; ++super) {
                if (!poset.leq(sub, super)) {
                    CHECK(mu.at(sub, super) == 0);
                } else if (sub != super) {
                    std::int64_t sum = 0;
                    for (std::size_t z = 0; z < n; ++z)
                        if (poset.leq(sub, z) && poset.leq(z, super)) sum += mu.at(z, super);
                    CHECK(sum == 0);
                }
            }
        }
    }
}

TEST_CASE("unique minimal ideals") {
    auto ring2 = h2();
    auto minimal2 = uniqueMinimalIdeal(*ring2, Side::Left);
    REQUIRE(minimal2.has_value());
    CHECK(minimal2->second ==
          std::vector<std::uint16_t>{0, codeOf(*ring2, "1+i+j+k")});

    auto ringZ4 = hz4();
    auto minimalZ4 = uniqueMinimalIdeal(*ringZ4, Side::Left);
    REQUIRE(minimalZ4.has_value());
    CHECK(minimalZ4->second ==
          std::vector<std::uint16_t>{0, codeOf(*ringZ4, "2+2i+2j+2k")});

    // |(x)| = 2^m for H(F_{2^m}).
    auto ring4 = h4();
    auto minimal4 = uniqueMinimalIdeal(*ring4, Side::Left);
    REQUIRE(minimal4.has_value());
    CHECK(minimal4->second.size() == 4);

    CHECK_FALSE(uniqueMinimalIdeal(*h3(), Side::Left).has_value());
    CHECK_FALSE(uniqueMinimalIdeal(*h3(), Side::Right).has_value());

    // Chain rings: Z4 has (2); a field has the whole ring.
    auto z4 = FiniteRing::tabulate(GaloisRing(2, 2, 1));
    auto minimalChain = uniqueMinimalIdeal(*z4, Side::Left);
    REQUIRE(minimalChain.has_value());
    CHECK(minimalChain->second == std::vector<std::uint16_t>{0, 2});
    auto f3 = FiniteRing::tabulate(GaloisRing(3, 1, 1));
    auto minimalField = uniqueMinimalIdeal(*f3, Side::Left);
    REQUIRE(minimalField.has_value());
    CHECK(minimalField->second.size() == 3);
}

TEST_CASE("socle") {
    auto ring2 = h2();
    CHECK(socle(*ring2, Side::Left) ==
          std::vector<std::uint16_t>{0, codeOf(*ring2, "1+i+j+k")});
    CHECK(socle(*h3(), Side::Left).size() == 81);  // semisimple: the whole ring
    auto z4 = FiniteRing::tabulate(GaloisRing(2, 2, 1));
    CHECK(socle(*z4, Side::Left) == std::vector<std::uint16_t>{0, 2});
}

TEST_CASE("Frobenius via the character kernel") {
    CHECK(isFrobeniusByCharacter(*h2()));
    CHECK(isFrobeniusByCharacter(*h3()));
    CHECK(isFrobeniusByCharacter(*hz4()));
    CHECK(isFrobeniusByCharacter(*FiniteRing::tabulate(GaloisRing(2, 2, 2))));
}

TEST_CASE("closed-form minimal ideal generator") {
    QuatRing ring2 = QuatRing::hamilton(GaloisRing(2, 1, 1));
    CHECK(minimalIdealCandidate(ring2) == quatFromText(ring2, "1+i+j+k"));

    QuatRing ringZ4 = QuatRing::hamilton(GaloisRing(2, 2, 1));
    CHECK(minimalIdealCandidate(ringZ4) == quatFromText(ringZ4, "2+2i+2j+2k"));

    QuatRing big = QuatRing::hamilton(GaloisRing(2, 2, 2));
    // 2 (1 + w) (1 + i + j + k): every coordinate is 2 + 2w.
    CHECK(minimalIdealCandidate(big) == quatFromText(big, "([2,2],[2,2],[2,2],[2,2])"));

    QuatRing odd = QuatRing::hamilton(GaloisRing(3, 1, 1));
    CHECK_THROWS_AS(minimalIdealCandidate(odd), UnsupportedRingError);
}

TEST_CASE("candidate verification, exhaustive at desk scale") {
    for (QuatRing ring : {QuatRing::hamilton(GaloisRing(2, 1, 1)),
                          QuatRing::hamilton(GaloisRing(2, 1, 2)),
                          QuatRing::hamilton(GaloisRing(2, 2, 1))}) {
        CAPTURE(ring.base().r());
        CAPTURE(ring.base().m());
        const CandidateCheck check = verifyMinimalIdealCandidate(ring, 0, true);
        CHECK(check.twoSided);
        CHECK(check.minimal);
        CHECK(check.containedInAllChecked);
        CHECK(check.checkedElements == ring.cardinality() - 1);
        CHECK(check.verified());
        // The candidate ideal and the poset's unique minimal ideal agree.
        auto table = FiniteRing::tabulate(ring);
        auto minimal = uniqueMinimalIdeal(*table, Side::Left);
        REQUIRE(minimal.has_value());
        CHECK(minimal->second.size() == check.idealSize);
    }
}

TEST_CASE("candidate verification, sampled for H(GR(4,2))") {
    QuatRing big = QuatRing::hamilton(GaloisRing(2, 2, 2));
    const CandidateCheck check = verifyMinimalIdealCandidate(big, 25, false);
    // 2(1+w)(1+i+j+k) generates {0, x, 2(1+i+j+k), 2w(1+i+j+k)}: four
    // elements (2^m, like the field case), every nonzero one regenerating
    // the whole ideal.
    CHECK(check.idealSize == 4);
    CHECK(check.twoSided);
    CHECK(check.minimal);
    CHECK(check.containedInAllChecked);
    CHECK_FALSE(check.exhaustive);
    CHECK(check.checkedElements >= 25);
    CHECK(check.verified());
}
