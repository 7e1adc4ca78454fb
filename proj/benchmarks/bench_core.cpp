#include <benchmark/benchmark.h>

#include "quatring/codes.hpp"
#include "quatring/search.hpp"
#include "quatring/weights.hpp"

using namespace quatring;

namespace {

const QuatRing& hz4() {
    static QuatRing ring = QuatRing::hamilton(GaloisRing(2, 2, 1));
    return ring;
}

std::shared_ptr<const FiniteRing> h3Table() {
    static std::shared_ptr<const FiniteRing> table =
        FiniteRing::tabulate(QuatRing::hamilton(GaloisRing(3, 1, 1)));
    return table;
}

GeneratorMatrix f3Matrix() {
    const QuatRing& ring = *h3Table()->quaternion();
    const char* entries[12] = {"1", "1",   "i",   "i", "1+i", "1+i",
                               "i", "1+i", "1+i", "1", "1",   "i"};
    GeneratorMatrix matrix;
    matrix.ring = h3Table();
    matrix.k = 2;
    matrix.n = 6;
    for (const char* e : entries)
        matrix.entries.push_back(static_cast<std::uint16_t>(ring.codeOf(quatFromText(ring, e))));
    return matrix;
}

void BM_QuatMulCodes(benchmark::State& state) {
    const QuatRing& ring = hz4();
    std::uint32_t x = 37, y = 201;
    for (auto _ : state) {
        x = ring.mulCodes(x, y);
        y = (y + 13) & 255;
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_QuatMulCodes);

void BM_TabulateHZ4(benchmark::State& state) {
    for (auto _ : state) {
        auto table = FiniteRing::tabulate(hz4());
        benchmark::DoNotOptimize(table);
    }
}
BENCHMARK(BM_TabulateHZ4);

void BM_SpanRate26(benchmark::State& state) {
    const GeneratorMatrix matrix = f3Matrix();
    for (auto _ : state) {
        Code code = span(matrix, Side::Left);
        benchmark::DoNotOptimize(code.words.size());
    }
}
BENCHMARK(BM_SpanRate26);

void BM_AnalyzeRate26(benchmark::State& state) {
    const GeneratorMatrix matrix = f3Matrix();
    for (auto _ : state) {
        CodeReport report = analyzeCode(matrix, Side::Left, Rat(1));
        benchmark::DoNotOptimize(report.dHamming);
    }
}
BENCHMARK(BM_AnalyzeRate26);

void BM_WeightTableCharacter(benchmark::State& state) {
    auto table = h3Table();
    for (auto _ : state) {
        WeightFunction weights = weightsByCharacter(*table, Rat(1));
        benchmark::DoNotOptimize(weights.table.size());
    }
}
BENCHMARK(BM_WeightTableCharacter);

void BM_SearchSlice(benchmark::State& state) {
    SearchRequest request;
    request.ring = h3Table();
    request.tmpl = SearchTemplate::builtin2x6();
    request.jobs = static_cast<std::uint32_t>(state.range(0));
    request.budgetPairs = 20000ull * 6561;  // first 20000 assignments
    for (auto _ : state) {
        SearchOutcome outcome = search(request);
        benchmark::DoNotOptimize(outcome.scanned);
    }
    state.SetItemsProcessed(state.iterations() * 20000);
}
BENCHMARK(BM_SearchSlice)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
