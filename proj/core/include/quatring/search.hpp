#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "quatring/codes.hpp"

namespace quatring {

enum class Objective { Hamming, Homogeneous };

// Symbolic k x n generator matrix: each slot is a variable (by index) or a
// constant element code. Every variable must appear in at least one slot.
struct SearchTemplate {
    struct Slot {
        bool isVariable = false;
        std::uint16_t value = 0;  // variable index or constant element code
    };

    std::uint32_t k = 0, n = 0;
    std::uint32_t variableCount = 0;
    std::vector<Slot> slots;  // row-major
    std::vector<std::string> variableNames;

    // The built-in "paper-2x6" template: rows (x,x,y,y,z,z) and
    // (y,z,z,x,x,y).
    static SearchTemplate builtin2x6();

    void validate() const;
    const Slot& at(std::uint32_t row, std::uint32_t col) const;
};

struct AssignmentResult {
    std::uint64_t index = 0;            // rank in assignment enumeration
    std::vector<std::uint16_t> values;  // one element code per variable
    std::uint64_t codeSize = 0;
    bool freeCode = false;
    std::uint32_t dHamming = 0;
    Rat dHom;  // normalized weight, gamma = 1
};

// Opaque continuation for budget-limited scans; stale if the request
// changes in any way that affects enumeration.
struct ResumeToken {
    std::string fingerprint;
    std::uint64_t nextIndex = 0;
};

struct SearchRequest {
    std::shared_ptr<const FiniteRing> ring;
    SearchTemplate tmpl;
    Side side = Side::Left;
    Objective objective = Objective::Hamming;
    bool unitsOnly = false;  // restrict the variable domain to units
    std::optional<std::vector<std::uint16_t>> domain;  // explicit override
    std::uint64_t budgetPairs = std::uint64_t(1) << 32;  // (assignment, message) pairs
    std::uint32_t jobs = 1;
};

struct SearchOutcome {
    Rat bestDistance;                   // of the objective; 0 when nothing scanned
    std::vector<AssignmentResult> best; // all maximizers, ascending index
    std::uint64_t scanned = 0;
    std::uint64_t totalAssignments = 0;
    bool complete = false;
    std::optional<ResumeToken> resume;  // engaged iff the budget cut the scan
};

// Exhaustive scan of all assignments of ring elements to the template's
// variables (in deterministic lexicographic order, first variable most
// significant), spanning the code of each assignment and maximizing the
// minimum distance of the chosen objective. Assignments whose span is not
// free are skipped: a collapsed span means dependent rows, which do not
// constitute a rate-k/n generator matrix. Every fully scanned code is
// checked against the homogeneous distance bounds of its image; the
// returned maximizers are re-verified by a fresh span. Deterministic for
// any worker count.
SearchOutcome search(const SearchRequest& request);

// Continue a budget-limited scan. The outcome covers only the remaining
// range; combine with the earlier partial result via mergeOutcomes.
// StaleToken if the token does not match the request.
SearchOutcome resumeSearch(const SearchRequest& request, const ResumeToken& token);

SearchOutcome mergeOutcomes(const SearchOutcome& a, const SearchOutcome& b);

std::string searchFingerprint(const SearchRequest& request);

}  // namespace quatring
