#include "quatring/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <sstream>
#include <thread>

#include "quatring/errors.hpp"

namespace quatring {

SearchTemplate SearchTemplate::builtin2x6() {
    SearchTemplate t;
    t.k = 2;
    t.n = 6;
    t.variableCount = 3;
    t.variableNames = {"x", "y", "z"};
    auto var = [](std::uint16_t idx) { return Slot{true, idx}; };
    t.slots = {var(0), var(0), var(1), var(1), var(2), var(2),
               var(1), var(2), var(2), var(0), var(0), var(1)};
    return t;
}

void SearchTemplate::validate() const {
    if (k == 0 || n == 0) throw ParseError("template needs k >= 1 and n >= 1");
    if (slots.size() != static_cast<std::size_t>(k) * n)
        throw ParseError("template slot count mismatch");
    if (variableCount == 0) throw ParseError("template needs at least one variable");
    if (variableNames.size() != variableCount)
        throw ParseError("template variable name count mismatch");
    std::vector<std::uint8_t> used(variableCount, 0);
    for (const Slot& s : slots) {
        if (!s.isVariable) continue;
        if (s.value >= variableCount) throw ParseError("variable index out of range");
        used[s.value] = 1;
    }
    for (auto u : used)
        if (!u) throw ParseError("every template variable must appear at least once");
}

const SearchTemplate::Slot& SearchTemplate::at(std::uint32_t row, std::uint32_t col) const {
    return slots[row * n + col];
}

namespace {

constexpr std::uint64_t kAssignmentCap = std::uint64_t(1) << 62;

std::uint64_t saturatingPow(std::uint64_t base, std::uint32_t exp) {
    unsigned __int128 out = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        out *= base;
        if (out > kAssignmentCap) return kAssignmentCap;
    }
    return static_cast<std::uint64_t>(out);
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

// Per-symbol weights scaled to a common integer denominator.
struct ScaledWeights {
    std::vector<std::int64_t> value;
    std::int64_t denominator = 1;
};

ScaledWeights scale(const std::vector<Rat>& table) {
    ScaledWeights out;
    for (const Rat& w : table) out.denominator = std::lcm(out.denominator, w.denominator());
    out.value.resize(table.size());
    for (std::size_t i = 0; i < table.size(); ++i)
        out.value[i] = table[i].numerator() * (out.denominator / table[i].denominator());
    return out;
}

struct ScanContext {
    const FiniteRing* ring = nullptr;
    const SearchTemplate* tmpl = nullptr;
    Side side = Side::Left;
    Objective objective = Objective::Hamming;
    std::vector<std::uint16_t> domain;
    ScaledWeights tau;      // per quaternion symbol: natural weight of its image
    ScaledWeights hom;      // per symbol: normalized homogeneous weight
    Rat gammaNatural;       // base ring's natural average value
    Rat maxWeightFactor;    // p^{m(r-1)}
    Rat normUpperFactor;    // p^m / (p^m - 1)
    std::uint64_t messagesPerAssignment = 0;
    std::uint64_t totalAssignments = 0;
};

// Fully-scanned assignment; abandoned ones never produce a record.
struct AssignRecord {
    std::uint64_t index = 0;
    std::int64_t objective = 0;
    std::uint32_t dHamming = 0;
};

ScanContext makeContext(const SearchRequest& request) {
    request.tmpl.validate();
    if (request.tmpl.variableCount > 16)
        throw TooLargeError("more than 16 template variables");
    if (request.tmpl.k * request.tmpl.n > 512)
        throw TooLargeError("template exceeds 512 slots");
    const FiniteRing& ring = *request.ring;
    const QuatRing* quat = ring.quaternion();
    if (quat == nullptr)
        throw UnsupportedRingError("search runs over quaternion rings");

    ScanContext ctx;
    ctx.ring = &ring;
    ctx.tmpl = &request.tmpl;
    ctx.side = request.side;
    ctx.objective = request.objective;

    if (request.domain) {
        ctx.domain = *request.domain;
        for (auto c : ctx.domain)
            if (c >= ring.size()) throw RingMismatchError("domain element out of range");
        if (ctx.domain.empty()) throw ParseError("empty search domain");
    } else if (request.unitsOnly) {
        ctx.domain = ring.units();
    } else {
        ctx.domain.resize(ring.size());
        std::iota(ctx.domain.begin(), ctx.domain.end(), 0);
    }
    for (const auto& slot : request.tmpl.slots)
        if (!slot.isVariable && slot.value >= ring.size())
            throw RingMismatchError("template constant out of range");

    const GaloisRing& base = ring.galois();
    ctx.gammaNatural = base.gammaDefault();
    ctx.maxWeightFactor = ratPow(Rat(base.p()), static_cast<int>(base.m() * (base.r() - 1)));
    const Rat q = ratPow(Rat(base.p()), static_cast<int>(base.m()));
    ctx.normUpperFactor = q / (q - 1);

    // tau weight of a symbol: the natural base weight summed over its four
    // coordinates.
    std::vector<Rat> tauTable(ring.size());
    std::uint16_t coords[4];
    for (std::uint32_t c = 0; c < ring.size(); ++c) {
        quat->coords(c, coords);
        Rat sum(0);
        for (int t = 0; t < 4; ++t) sum += base.homWeight(base.elementAt(coords[t]));
        tauTable[c] = sum;
    }
    ctx.tau = scale(tauTable);
    ctx.hom = scale(weightsByCharacter(ring, Rat(1)).table);

    ctx.messagesPerAssignment = saturatingPow(ring.size(), request.tmpl.k);
    if (ctx.messagesPerAssignment > (std::uint64_t(1) << 24))
        throw TooLargeError("message space exceeds 2^24 per assignment");
    ctx.totalAssignments = saturatingPow(ctx.domain.size(), request.tmpl.variableCount);
    return ctx;
}

void assignmentValues(const ScanContext& ctx, std::uint64_t index,
                      std::uint16_t* values) {
    const std::uint64_t d = ctx.domain.size();
    for (std::uint32_t t = ctx.tmpl->variableCount; t-- > 0;) {
        values[t] = ctx.domain[index % d];
        index /= d;
    }
}

// Scans one assignment; returns false when abandoned early because the
// running minimum fell strictly below bestSeen (the assignment cannot be a
// maximizer then). A record is produced only for complete scans of codes
// with at least one nonzero word.
bool scanAssignment(const ScanContext& ctx, std::uint64_t index,
                    std::int64_t bestSeen, std::optional<AssignRecord>& record) {
    const FiniteRing& ring = *ctx.ring;
    const std::uint32_t S = ring.size();
    const std::uint32_t k = ctx.tmpl->k, n = ctx.tmpl->n;
    const std::uint16_t* mulT = ring.mulTable().data();
    const std::uint16_t* addT = ring.addTable().data();

    std::uint16_t values[64];
    assignmentValues(ctx, index, values);
    std::uint16_t g[512];
    for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
            const auto& slot = ctx.tmpl->at(i, j);
            g[i * n + j] = slot.isVariable ? values[slot.value] : slot.value;
        }

    std::vector<std::uint16_t> partial((k + 1) * n, 0);
    std::vector<std::uint32_t> digits(k, 0);
    const bool left = ctx.side == Side::Left;
    const bool wantHom = ctx.objective == Objective::Homogeneous;

    auto rebuildFrom = [&](std::uint32_t level) {
        for (std::uint32_t l = level; l < k; ++l) {
            const std::uint32_t u = digits[l];
            const std::uint16_t* row = &g[l * n];
            const std::uint16_t* src = &partial[l * n];
            std::uint16_t* dst = &partial[(l + 1) * n];
            for (std::uint32_t j = 0; j < n; ++j) {
                const std::uint16_t prod =
                    left ? mulT[u * S + row[j]] : mulT[row[j] * S + u];
                dst[j] = addT[src[j] * S + prod];
            }
        }
    };

    std::uint32_t hamMin = std::numeric_limits<std::uint32_t>::max();
    std::int64_t tauMin = std::numeric_limits<std::int64_t>::max();
    std::int64_t homMin = std::numeric_limits<std::int64_t>::max();
    std::uint64_t zeroWords = 0;
    const std::uint16_t* word = &partial[k * n];

    rebuildFrom(0);
    while (true) {
        std::uint32_t ham = 0;
        std::int64_t tau = 0, hom = 0;
        for (std::uint32_t j = 0; j < n; ++j) {
            const std::uint16_t c = word[j];
            if (c == 0) continue;
            ++ham;
            tau += ctx.tau.value[c];
            if (wantHom) hom += ctx.hom.value[c];
        }
        if (ham != 0) {
            hamMin = std::min(hamMin, ham);
            tauMin = std::min(tauMin, tau);
            if (wantHom) homMin = std::min(homMin, hom);
            const std::int64_t obj = wantHom ? homMin : hamMin;
            if (obj < bestSeen) return false;  // cannot be a maximizer
        } else {
            // Some message collapsed to the zero word. Only the zero
            // message may do that: otherwise the span is not free, the
            // rows are dependent and the matrix does not generate a
            // rate-k/n code.
            if (++zeroWords > 1) return true;
        }
        std::uint32_t pos = k;
        while (pos > 0 && ++digits[pos - 1] == S) {
            digits[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) break;
        rebuildFrom(pos - 1);
    }

    if (hamMin == std::numeric_limits<std::uint32_t>::max()) return true;  // zero code

    // Image distance bounds hold for every fully scanned code; a violation
    // is an implementation bug and aborts the search.
    const Rat d(hamMin);
    const Rat delta(tauMin, ctx.tau.denominator);
    const Rat deltaNorm = delta / ctx.gammaNatural;
    if (!(ctx.gammaNatural * d <= delta && delta <= ctx.maxWeightFactor * 4 * d &&
          d <= deltaNorm && deltaNorm <= ctx.normUpperFactor * 4 * d)) {
        std::ostringstream os;
        os << "distance bound violated at assignment " << index;
        throw BoundViolatedError(os.str());
    }

    record = AssignRecord{index, wantHom ? homMin : std::int64_t(hamMin), hamMin};
    return true;
}

struct WorkerState {
    std::int64_t best = -1;
    std::vector<AssignRecord> records;
};

SearchOutcome scanRange(const SearchRequest& request, std::uint64_t start) {
    const ScanContext ctx = makeContext(request);
    SearchOutcome outcome;
    outcome.totalAssignments = ctx.totalAssignments;

    const std::uint64_t allowed = request.budgetPairs / ctx.messagesPerAssignment;
    std::uint64_t end = ctx.totalAssignments;
    if (start < ctx.totalAssignments)
        end = start + std::min(allowed, ctx.totalAssignments - start);
    outcome.scanned = end > start ? end - start : 0;
    outcome.complete = end == ctx.totalAssignments;
    if (!outcome.complete)
        outcome.resume = ResumeToken{searchFingerprint(request), end};

    if (outcome.scanned == 0) {
        outcome.bestDistance = Rat(0);
        return outcome;
    }

    // Tasks follow the first variable: each task is one block of
    // assignments sharing the first variable's value.
    const std::uint64_t blockSize =
        saturatingPow(ctx.domain.size(),
                      ctx.tmpl->variableCount > 0 ? ctx.tmpl->variableCount - 1 : 0);
    const std::uint64_t firstBlock = start / blockSize;
    const std::uint64_t lastBlock = (end - 1) / blockSize;
    std::atomic<std::uint64_t> nextBlock{firstBlock};
    std::atomic<std::int64_t> bestSeen{-1};

    const std::uint32_t jobs =
        std::max<std::uint32_t>(1, std::min<std::uint32_t>(request.jobs, 256));
    std::vector<WorkerState> states(jobs);
    std::vector<std::exception_ptr> failures(jobs);

    auto work = [&](std::uint32_t worker) {
        try {
            WorkerState& state = states[worker];
            while (true) {
                const std::uint64_t block = nextBlock.fetch_add(1);
                if (block > lastBlock) break;
                const std::uint64_t lo = std::max(start, block * blockSize);
                const std::uint64_t hi = std::min(end, (block + 1) * blockSize);
                for (std::uint64_t index = lo; index < hi; ++index) {
                    const std::int64_t seen = bestSeen.load(std::memory_order_relaxed);
                    std::optional<AssignRecord> record;
                    if (!scanAssignment(ctx, index, seen, record)) continue;
                    if (!record) continue;
                    if (record->objective > state.best) {
                        state.best = record->objective;
                        state.records.clear();
                        state.records.push_back(*record);
                        std::int64_t cur = bestSeen.load(std::memory_order_relaxed);
                        while (cur < record->objective &&
                               !bestSeen.compare_exchange_weak(cur, record->objective)) {
                        }
                    } else if (record->objective == state.best) {
                        state.records.push_back(*record);
                    }
                }
            }
        } catch (...) {
            failures[worker] = std::current_exception();
        }
    };

    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(jobs);
        for (std::uint32_t w = 0; w < jobs; ++w) threads.emplace_back(work, w);
        for (auto& t : threads) t.join();
    }
    for (auto& failure : failures)
        if (failure) std::rethrow_exception(failure);

    std::int64_t best = -1;
    for (const auto& state : states) best = std::max(best, state.best);
    if (best < 0) {
        outcome.bestDistance = Rat(0);
        return outcome;
    }

    std::vector<AssignRecord> winners;
    for (const auto& state : states)
        for (const auto& record : state.records)
            if (record.objective == best) winners.push_back(record);
    std::sort(winners.begin(), winners.end(),
              [](const AssignRecord& a, const AssignRecord& b) { return a.index < b.index; });

    outcome.bestDistance = ctx.objective == Objective::Homogeneous
                               ? Rat(best, ctx.hom.denominator)
                               : Rat(best);

    // Re-verify every winner with a fresh span through the codes module.
    const WeightFunction normWeights = weightsByCharacter(*ctx.ring, Rat(1));
    std::uint64_t full = 1;
    for (std::uint32_t i = 0; i < ctx.tmpl->k; ++i) full *= ctx.ring->size();
    for (const auto& record : winners) {
        AssignmentResult result;
        result.index = record.index;
        result.values.resize(ctx.tmpl->variableCount);
        assignmentValues(ctx, record.index, result.values.data());

        GeneratorMatrix matrix;
        matrix.ring = request.ring;
        matrix.k = ctx.tmpl->k;
        matrix.n = ctx.tmpl->n;
        matrix.entries.resize(matrix.k * matrix.n);
        for (std::uint32_t i = 0; i < matrix.k; ++i)
            for (std::uint32_t j = 0; j < matrix.n; ++j) {
                const auto& slot = ctx.tmpl->at(i, j);
                matrix.entries[i * matrix.n + j] =
                    slot.isVariable ? result.values[slot.value] : slot.value;
            }
        const Code code = span(matrix, ctx.side);
        result.codeSize = code.words.size();
        result.freeCode = result.codeSize == full;
        result.dHamming = minHamming(code);
        result.dHom = minHomDistance(code, normWeights);
        const Rat recheck = ctx.objective == Objective::Homogeneous
                                ? result.dHom
                                : Rat(result.dHamming);
        if (recheck != outcome.bestDistance || !result.freeCode)
            throw BoundViolatedError("winner re-verification mismatch");
        outcome.best.push_back(std::move(result));
    }
    return outcome;
}

}  // namespace

std::string searchFingerprint(const SearchRequest& request) {
    const FiniteRing& ring = *request.ring;
    std::ostringstream os;
    const GaloisRing& base = ring.galois();
    os << base.p() << ':' << base.r() << ':' << base.m() << ":h";
    for (auto c : base.modulus()) os << ',' << c;
    if (const QuatRing* quat = ring.quaternion())
        os << ":a" << quat->base().indexOf(quat->a())
           << ":b" << quat->base().indexOf(quat->b());
    os << ":t" << request.tmpl.k << 'x' << request.tmpl.n << 'v'
       << request.tmpl.variableCount;
    for (const auto& slot : request.tmpl.slots)
        os << (slot.isVariable ? ",v" : ",c") << slot.value;
    os << ':' << (request.side == Side::Left ? 'L' : 'R');
    os << (request.objective == Objective::Hamming ? 'H' : 'W');
    os << ":d";
    if (request.domain)
        for (auto c : *request.domain) os << ',' << c;
    else
        os << (request.unitsOnly ? "units" : "all");
    std::ostringstream hex;
    hex << std::hex << fnv1a(os.str());
    return hex.str();
}

SearchOutcome search(const SearchRequest& request) { return scanRange(request, 0); }

SearchOutcome resumeSearch(const SearchRequest& request, const ResumeToken& token) {
    if (token.fingerprint != searchFingerprint(request))
        throw StaleTokenError("resume token does not match this search request");
    return scanRange(request, token.nextIndex);
}

SearchOutcome mergeOutcomes(const SearchOutcome& a, const SearchOutcome& b) {
    SearchOutcome out;
    out.totalAssignments = std::max(a.totalAssignments, b.totalAssignments);
    out.scanned = a.scanned + b.scanned;
    out.complete = out.scanned >= out.totalAssignments;
    if (!out.complete) {
        if (b.resume) out.resume = b.resume;
        else out.resume = a.resume;
    }
    const bool aEmpty = a.best.empty(), bEmpty = b.best.empty();
    if (aEmpty && bEmpty) {
        out.bestDistance = Rat(0);
        return out;
    }
    if (bEmpty || (!aEmpty && a.bestDistance > b.bestDistance)) {
        out.bestDistance = a.bestDistance;
        out.best = a.best;
    } else if (aEmpty || b.bestDistance > a.bestDistance) {
        out.bestDistance = b.bestDistance;
        out.best = b.best;
    } else {
        out.bestDistance = a.bestDistance;
        out.best = a.best;
        out.best.insert(out.best.end(), b.best.begin(), b.best.end());
        std::sort(out.best.begin(), out.best.end(),
                  [](const AssignmentResult& x, const AssignmentResult& y) {
                      return x.index < y.index;
                  });
        out.best.erase(std::unique(out.best.begin(), out.best.end(),
                                   [](const AssignmentResult& x, const AssignmentResult& y) {
                                       return x.index == y.index;
                                   }),
                       out.best.end());
    }
    return out;
}

}  // namespace quatring
