#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"

#include "quatring/errors.hpp"
#include "quatring/io.hpp"

using namespace quatring;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;

std::uint32_t defaultJobs() {
    if (const char* env = std::getenv("QUATRING_JOBS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<std::uint32_t>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

void emit(const std::string& content, const std::string& outPath) {
    if (outPath.empty())
        std::cout << content;
    else
        writeFile(outPath, content);
}

QuatRing buildQuatRing(const std::string& ringJson, const std::string& aText,
                       const std::string& bText) {
    QuatRing ring = quatRingFromJson(ringJson);
    if (aText.empty() && bText.empty()) return ring;
    GaloisRing base = ring.base();
    GrElement a = aText.empty() ? ring.a() : grFromText(base, aText);
    GrElement b = bText.empty() ? ring.b() : grFromText(base, bText);
    return QuatRing(std::move(base), std::move(a), std::move(b));
}

struct CommonRingOptions {
    std::string ringJson;
    bool quat = false;
    std::string aText, bText;
};

void addRingOptions(CLI::App* cmd, CommonRingOptions& opts) {
    cmd->add_option("--ring", opts.ringJson, "ring descriptor JSON")->required();
    cmd->add_flag("--quat", opts.quat, "work in the quaternion ring over the base");
    cmd->add_option("--a", opts.aText, "quaternion parameter a (element text)");
    cmd->add_option("--b", opts.bText, "quaternion parameter b (element text)");
}

std::shared_ptr<const FiniteRing> tabulateFor(const CommonRingOptions& opts) {
    if (opts.quat) return FiniteRing::tabulate(buildQuatRing(opts.ringJson, opts.aText, opts.bText));
    return FiniteRing::tabulate(galoisRingFromJson(opts.ringJson));
}

WeightFunction weightsByMethod(const FiniteRing& ring, const std::string& method,
                               const Rat& gamma) {
    if (method == "character") return weightsByCharacter(ring, gamma);
    if (method == "mobius") return weightsByMobius(ring, gamma);
    if (method == "closed") return weightsClosedForm(ring, gamma);
    if (method == "minimal") return weightsUniqueMinimal(ring, gamma);
    throw ParseError("unknown method '" + method + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quaternion rings over Galois rings: structure, weights, codes, search"};
    app.require_subcommand(1);

    // ring-info
    CommonRingOptions infoRing;
    bool infoClassify = false;
    std::string infoOut;
    CLI::App* cmdInfo = app.add_subcommand("ring-info", "cardinality, characteristic, units");
    addRingOptions(cmdInfo, infoRing);
    cmdInfo->add_flag("--classify", infoClassify,
                      "count units, zero divisors and idempotents (quaternion rings)");
    cmdInfo->add_option("--out", infoOut, "write the report to a file");

    // weights
    CommonRingOptions weightsRing;
    std::string weightsGamma, weightsMethod = "character", weightsOut;
    CLI::App* cmdWeights = app.add_subcommand("weights", "homogeneous weight table");
    addRingOptions(cmdWeights, weightsRing);
    cmdWeights->add_option("--gamma", weightsGamma, "average value as num/den");
    cmdWeights->add_option("--method", weightsMethod,
                           "character | mobius | closed | minimal");
    cmdWeights->add_option("--out", weightsOut, "write the report to a file");

    // structure
    CommonRingOptions structRing;
    std::string structSide = "left", structGamma, structOut;
    bool structCandidate = false, structExhaustive = false;
    std::uint64_t structSamples = 1000;
    CLI::App* cmdStruct = app.add_subcommand(
        "structure", "principal ideal poset, Mobius table, weights, socle");
    addRingOptions(cmdStruct, structRing);
    cmdStruct->add_option("--side", structSide, "left | right");
    cmdStruct->add_option("--gamma", structGamma, "average value as num/den");
    cmdStruct->add_flag("--minimal-candidate", structCandidate,
                        "verify the closed-form minimal ideal generator instead "
                        "of building the poset (for large quaternion rings)");
    cmdStruct->add_option("--samples", structSamples, "containment sample count");
    cmdStruct->add_flag("--long-running", structExhaustive,
                        "check containment against every nonzero element");
    cmdStruct->add_option("--out", structOut, "write the report to a file");

    // code-analyze
    std::string analyzePath, analyzeGamma, analyzeOut;
    CLI::App* cmdAnalyze =
        app.add_subcommand("code-analyze", "span a generator matrix and report distances");
    cmdAnalyze->add_option("file", analyzePath, "generator matrix JSON file")->required();
    cmdAnalyze->add_option("--gamma", analyzeGamma, "average value as num/den");
    cmdAnalyze->add_option("--out", analyzeOut, "write the report to a file");

    // image
    std::string imagePath, imageOut;
    CLI::App* cmdImage =
        app.add_subcommand("image", "analyze the coordinate image over the base ring");
    cmdImage->add_option("file", imagePath, "generator matrix JSON file")->required();
    cmdImage->add_option("--out", imageOut, "write the report to a file");

    // search
    std::string searchRingJson, searchTemplate = "paper-2x6", searchSide = "left";
    std::string searchObjective = "hamming", searchOut, searchResume;
    bool searchUnitsOnly = false;
    std::uint64_t searchBudget = std::uint64_t(1) << 32;
    std::uint32_t searchJobs = defaultJobs();
    CLI::App* cmdSearch =
        app.add_subcommand("search", "exhaustive template scan for best minimum distance");
    cmdSearch->add_option("--ring", searchRingJson, "quaternion ring descriptor JSON")
        ->required();
    cmdSearch->add_option("--template", searchTemplate,
                          "built-in template name or template JSON file");
    cmdSearch->add_option("--side", searchSide, "left | right");
    cmdSearch->add_option("--objective", searchObjective, "hamming | hom");
    cmdSearch->add_option("--jobs", searchJobs, "worker threads");
    cmdSearch->add_option("--budget", searchBudget, "(assignment, message) pair budget");
    cmdSearch->add_flag("--units-only", searchUnitsOnly, "restrict variables to units");
    cmdSearch->add_option("--resume", searchResume, "resume token JSON file");
    cmdSearch->add_option("--out", searchOut, "write results to a file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmdInfo->parsed()) {
            if (infoRing.quat) {
                const QuatRing ring =
                    buildQuatRing(infoRing.ringJson, infoRing.aText, infoRing.bText);
                std::optional<RingCounts> counts;
                if (infoClassify) counts = ring.classify();
                emit(quatInfoToJson(ring, counts ? &*counts : nullptr), infoOut);
            } else {
                emit(ringInfoToJson(galoisRingFromJson(infoRing.ringJson)), infoOut);
            }
            return 0;
        }

        if (cmdWeights->parsed()) {
            auto ring = tabulateFor(weightsRing);
            const Rat gamma =
                weightsGamma.empty() ? ring->defaultGamma() : ratFromString(weightsGamma);
            const WeightFunction weights = weightsByMethod(*ring, weightsMethod, gamma);
            emit(weightReportToJson(*ring, weights, weightsMethod,
                                    isHomogeneous(*ring, weights)),
                 weightsOut);
            return 0;
        }

        if (cmdStruct->parsed()) {
            if (structCandidate) {
                const QuatRing ring =
                    buildQuatRing(structRing.ringJson, structRing.aText, structRing.bText);
                const CandidateCheck check = verifyMinimalIdealCandidate(
                    ring, structSamples, structExhaustive);
                emit(candidateCheckToJson(ring, check), structOut);
                return check.verified() ? 0 : kExitValidation;
            }
            auto ring = tabulateFor(structRing);
            const Side side = sideFromName(structSide);
            const Rat gamma =
                structGamma.empty() ? ring->defaultGamma() : ratFromString(structGamma);
            const IdealPoset poset = idealPoset(*ring, side);
            const MobiusTable mobius = mobiusTable(poset);
            const WeightFunction weights = weightsByCharacter(*ring, gamma);
            const bool frobenius = isFrobeniusByCharacter(*ring);
            const auto socleElems = socle(*ring, side);
            emit(structureReportToJson(*ring, poset, mobius, weights, frobenius,
                                       socleElems.size()),
                 structOut);
            return 0;
        }

        if (cmdAnalyze->parsed()) {
            const MatrixFile file = generatorMatrixFromJson(readFile(analyzePath));
            const Rat gamma = analyzeGamma.empty() ? Rat(1) : ratFromString(analyzeGamma);
            emit(codeReportToJson(analyzeCode(file.matrix, file.side, gamma)), analyzeOut);
            return 0;
        }

        if (cmdImage->parsed()) {
            const MatrixFile file = generatorMatrixFromJson(readFile(imagePath));
            const CodeReport report = analyzeCode(file.matrix, file.side, Rat(1));
            emit(imageReportToJson(report, file.ring->galois()), imageOut);
            return 0;
        }

        if (cmdSearch->parsed()) {
            SearchRequest request;
            request.ring = FiniteRing::tabulate(quatRingFromJson(searchRingJson));
            if (searchTemplate == "paper-2x6")
                request.tmpl = SearchTemplate::builtin2x6();
            else
                request.tmpl = templateFromJson(*request.ring, readFile(searchTemplate));
            request.side = sideFromName(searchSide);
            request.objective = objectiveFromName(searchObjective);
            request.unitsOnly = searchUnitsOnly;
            request.budgetPairs = searchBudget;
            request.jobs = searchJobs;
            SearchOutcome outcome;
            if (!searchResume.empty())
                outcome = resumeSearch(request, resumeTokenFromJson(readFile(searchResume)));
            else
                outcome = search(request);
            emit(searchOutcomeToJson(request, outcome), searchOut);
            return outcome.complete ? 0 : kExitBudget;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return 0;
}
