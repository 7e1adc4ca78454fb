#include "doctest.h"

#include "quatring/errors.hpp"
#include "quatring/io.hpp"
#include "quatring/search.hpp"

using namespace quatring;

namespace {

std::shared_ptr<const FiniteRing> h2() {
    return FiniteRing::tabulate(QuatRing::hamilton(GaloisRing(2, 1, 1)));
}

std::uint16_t codeOf(const FiniteRing& ring, const char* text) {
    return static_cast<std::uint16_t>(
        ring.quaternion()->codeOf(quatFromText(*ring.quaternion(), text)));
}

SearchTemplate singleSlot() {
    SearchTemplate t;
    t.k = 1;
    t.n = 1;
    t.variableCount = 1;
    t.variableNames = {"x"};
    t.slots = {{true, 0}};
    return t;
}

bool sameOutcome(const SearchOutcome& a, const SearchOutcome& b) {
    if (a.bestDistance != b.bestDistance || a.best.size() != b.best.size()) return false;
    for (std::size_t i = 0; i < a.best.size(); ++i) {
        if (a.best[i].index != b.best[i].index) return false;
        if (a.best[i].values != b.best[i].values) return false;
        if (a.best[i].dHamming != b.best[i].dHamming) return false;
        if (a.best[i].dHom != b.best[i].dHom) return false;
    }
    return a.scanned == b.scanned && a.complete == b.complete;
}

bool hasAssignment(const SearchOutcome& outcome, const std::vector<std::uint16_t>& values) {
    for (const auto& result : outcome.best)
        if (result.values == values) return true;
    return false;
}

}  // namespace

TEST_CASE("template validation") {
    SearchTemplate t = SearchTemplate::builtin2x6();
    t.validate();
    CHECK(t.variableCount == 3);

    SearchTemplate bad = t;
    bad.slots[0].value = 7;
    CHECK_THROWS_AS(bad.validate(), ParseError);

    SearchTemplate unused = t;
    for (auto& slot : unused.slots)
        if (slot.isVariable && slot.value == 2) slot.value = 0;
    CHECK_THROWS_AS(unused.validate(), ParseError);
}

TEST_CASE("single-slot template: best distance is 1, every unit wins") {
    SearchRequest request;
    request.ring = h2();
    request.tmpl = singleSlot();
    const SearchOutcome outcome = search(request);
    CHECK(outcome.complete);
    CHECK(outcome.totalAssignments == 16);
    CHECK(outcome.bestDistance == Rat(1));
    // Non-units span non-free codes and are skipped, so the winners are
    // exactly the units.
    REQUIRE(outcome.best.size() == request.ring->units().size());
    for (const auto& result : outcome.best) {
        CHECK(request.ring->isUnit(result.values[0]));
        CHECK(result.codeSize == 16);
        CHECK(result.freeCode);
    }
}

TEST_CASE("full scan over H(F2) finds distance 4 with the published assignment") {
    SearchRequest request;
    request.ring = h2();
    request.tmpl = SearchTemplate::builtin2x6();
    const SearchOutcome outcome = search(request);
    CHECK(outcome.complete);
    CHECK(outcome.totalAssignments == 4096);
    CHECK(outcome.bestDistance == Rat(4));
    const std::vector<std::uint16_t> published = {
        codeOf(*request.ring, "1"), codeOf(*request.ring, "i"), codeOf(*request.ring, "1+j")};
    CHECK(hasAssignment(outcome, published));
    for (const auto& result : outcome.best) {
        CHECK(result.dHamming == 4);
        CHECK(result.codeSize == 256);
    }
}

TEST_CASE("deterministic across worker counts") {
    SearchRequest request;
    request.ring = h2();
    request.tmpl = SearchTemplate::builtin2x6();
    request.jobs = 1;
    const SearchOutcome one = search(request);
    request.jobs = 2;
    const SearchOutcome two = search(request);
    request.jobs = 8;
    const SearchOutcome eight = search(request);
    CHECK(sameOutcome(one, two));
    CHECK(sameOutcome(one, eight));
}

TEST_CASE("homogeneous objective") {
    SearchRequest request;
    request.ring = h2();
    request.tmpl = SearchTemplate::builtin2x6();
    request.objective = Objective::Homogeneous;
    const SearchOutcome outcome = search(request);
    CHECK(outcome.complete);
    // The Hamming-best code over H(F2) has normalized distance 4; nothing
    // can beat it by more than the single heavy symbol.
    CHECK(outcome.bestDistance >= Rat(4));
    for (const auto& result : outcome.best) CHECK(result.dHom == outcome.bestDistance);
}

TEST_CASE("budget splits and resume merge to the full result") {
    SearchRequest request;
    request.ring = h2();
    request.tmpl = SearchTemplate::builtin2x6();
    const SearchOutcome full = search(request);

    SearchRequest limited = request;
    limited.budgetPairs = 1500ull * 256;  // 1500 of 4096 assignments
    const SearchOutcome first = search(limited);
    CHECK_FALSE(first.complete);
    CHECK(first.scanned == 1500);
    REQUIRE(first.resume.has_value());
    CHECK(first.resume->nextIndex == 1500);

    const SearchOutcome rest = resumeSearch(request, *first.resume);
    CHECK(rest.complete);
    CHECK(rest.scanned == 4096 - 1500);

    const SearchOutcome merged = mergeOutcomes(first, rest);
    CHECK(sameOutcome(merged, full));
}

TEST_CASE("resume rejects a token for a different request") {
    SearchRequest request;
    request.ring = h2();
    request.tmpl = SearchTemplate::builtin2x6();
    request.budgetPairs = 100ull * 256;
    const SearchOutcome partial = search(request);
    REQUIRE(partial.resume.has_value());

    SearchRequest other = request;
    other.ring = FiniteRing::tabulate(QuatRing::hamilton(GaloisRing(3, 1, 1)));
    CHECK_THROWS_AS(resumeSearch(other, *partial.resume), StaleTokenError);

    SearchRequest otherSide = request;
    otherSide.side = Side::Right;
    CHECK_THROWS_AS(resumeSearch(otherSide, *partial.resume), StaleTokenError);
}

TEST_CASE("resume after exhaustion returns an empty completed remainder") {
    SearchRequest request;
    request.ring = h2();
    request.tmpl = singleSlot();
    const SearchOutcome full = search(request);
    CHECK(full.complete);
    ResumeToken done{searchFingerprint(request), full.totalAssignments};
    const SearchOutcome nothing = resumeSearch(request, done);
    CHECK(nothing.complete);
    CHECK(nothing.scanned == 0);
    CHECK(sameOutcome(mergeOutcomes(full, nothing), full));
}

TEST_CASE("units-only restriction never beats the full scan") {
    SearchRequest request;
    request.ring = h2();
    request.tmpl = SearchTemplate::builtin2x6();
    const SearchOutcome full = search(request);
    request.unitsOnly = true;
    const SearchOutcome units = search(request);
    CHECK(units.complete);
    CHECK(units.totalAssignments < full.totalAssignments);
    CHECK(units.bestDistance <= full.bestDistance);
}

TEST_CASE("explicit domain restriction") {
    SearchRequest request;
    request.ring = h2();
    request.tmpl = singleSlot();
    request.domain = std::vector<std::uint16_t>{0, codeOf(*request.ring, "1")};
    const SearchOutcome outcome = search(request);
    CHECK(outcome.totalAssignments == 2);
    CHECK(outcome.bestDistance == Rat(1));
    REQUIRE(outcome.best.size() == 1);
}
