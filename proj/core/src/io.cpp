#include "quatring/io.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>

#include <nlohmann/json.hpp>

#include "quatring/errors.hpp"

namespace quatring {

using nlohmann::json;

namespace {

json parseJson(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return j;
}

GaloisRing galoisRingFromValue(const json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("r") || !j.contains("m"))
        throw ParseError("ring descriptor needs p, r, m");
    const auto p = j.at("p").get<std::uint32_t>();
    const auto r = j.at("r").get<std::uint32_t>();
    const auto m = j.at("m").get<std::uint32_t>();
    if (j.contains("h")) {
        auto h = j.at("h").get<std::vector<std::uint32_t>>();
        return GaloisRing(p, r, m, std::move(h));
    }
    return GaloisRing(p, r, m);
}

json galoisRingToValue(const GaloisRing& ring) {
    json j;
    j["p"] = ring.p();
    j["r"] = ring.r();
    j["m"] = ring.m();
    j["h"] = ring.modulus();
    return j;
}

QuatRing quatRingFromValue(const json& j) {
    if (j.contains("base")) {
        GaloisRing base = galoisRingFromValue(j.at("base"));
        GrElement a = base.neg(base.one());
        GrElement b = a;
        if (j.contains("a")) a = grFromText(base, j.at("a").get<std::string>());
        if (j.contains("b")) b = grFromText(base, j.at("b").get<std::string>());
        return QuatRing(std::move(base), std::move(a), std::move(b));
    }
    return QuatRing::hamilton(galoisRingFromValue(j));
}

json quatRingToValue(const QuatRing& ring) {
    json j;
    j["base"] = galoisRingToValue(ring.base());
    j["a"] = grToText(ring.base(), ring.a());
    j["b"] = grToText(ring.base(), ring.b());
    return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

GaloisRing galoisRingFromJson(const std::string& text) {
    return galoisRingFromValue(parseJson(text));
}

std::string galoisRingToJson(const GaloisRing& ring) { return dump(galoisRingToValue(ring)); }

QuatRing quatRingFromJson(const std::string& text) {
    return quatRingFromValue(parseJson(text));
}

std::string quatRingToJson(const QuatRing& ring) { return dump(quatRingToValue(ring)); }

Side sideFromName(const std::string& name) {
    if (name == "left") return Side::Left;
    if (name == "right") return Side::Right;
    throw ParseError("side must be 'left' or 'right'");
}

std::string sideName(Side side) { return side == Side::Left ? "left" : "right"; }

Objective objectiveFromName(const std::string& name) {
    if (name == "hamming") return Objective::Hamming;
    if (name == "hom" || name == "homogeneous") return Objective::Homogeneous;
    throw ParseError("objective must be 'hamming' or 'hom'");
}

std::string objectiveName(Objective objective) {
    return objective == Objective::Hamming ? "hamming" : "hom";
}

MatrixFile generatorMatrixFromJson(const std::string& text) {
    const json j = parseJson(text);
    if (!j.contains("ring") || !j.contains("rows"))
        throw ParseError("generator matrix file needs 'ring' and 'rows'");
    MatrixFile out;
    const QuatRing quat = quatRingFromValue(j.at("ring"));
    out.ring = FiniteRing::tabulate(quat);
    out.side = j.contains("side") ? sideFromName(j.at("side").get<std::string>())
                                  : Side::Left;
    const auto& rows = j.at("rows");
    if (!rows.is_array() || rows.empty()) throw ParseError("'rows' must be a nonempty array");
    out.matrix.ring = out.ring;
    out.matrix.k = j.contains("k") ? j.at("k").get<std::uint32_t>()
                                   : static_cast<std::uint32_t>(rows.size());
    out.matrix.n = j.contains("n") ? j.at("n").get<std::uint32_t>()
                                   : static_cast<std::uint32_t>(rows.front().size());
    if (out.matrix.k != rows.size()) throw ParseError("row count does not match k");
    for (const auto& row : rows) {
        if (row.size() != out.matrix.n) throw ParseError("row length does not match n");
        for (const auto& entry : row) {
            const Quat value = quatFromText(quat, entry.get<std::string>());
            out.matrix.entries.push_back(static_cast<std::uint16_t>(quat.codeOf(value)));
        }
    }
    return out;
}

SearchTemplate templateFromJson(const FiniteRing& ring, const std::string& text) {
    const json j = parseJson(text);
    if (!j.contains("rows")) throw ParseError("template file needs 'rows'");
    const QuatRing* quat = ring.quaternion();
    if (quat == nullptr) throw UnsupportedRingError("templates require a quaternion ring");
    SearchTemplate tmpl;
    const auto& rows = j.at("rows");
    if (!rows.is_array() || rows.empty()) throw ParseError("'rows' must be a nonempty array");
    tmpl.k = static_cast<std::uint32_t>(rows.size());
    tmpl.n = static_cast<std::uint32_t>(rows.front().size());
    for (const auto& row : rows) {
        if (row.size() != tmpl.n) throw ParseError("ragged template rows");
        for (const auto& entry : row) {
            const auto token = entry.get<std::string>();
            SearchTemplate::Slot slot;
            try {
                const Quat value = quatFromText(*quat, token);
                slot.isVariable = false;
                slot.value = static_cast<std::uint16_t>(quat->codeOf(value));
            } catch (const ParseError&) {
                // Not an element: a variable name.
                auto found = std::find(tmpl.variableNames.begin(), tmpl.variableNames.end(), token);
                if (found == tmpl.variableNames.end()) {
                    tmpl.variableNames.push_back(token);
                    found = std::prev(tmpl.variableNames.end());
                }
                slot.isVariable = true;
                slot.value = static_cast<std::uint16_t>(found - tmpl.variableNames.begin());
            }
            tmpl.slots.push_back(slot);
        }
    }
    tmpl.variableCount = static_cast<std::uint32_t>(tmpl.variableNames.size());
    tmpl.validate();
    return tmpl;
}

namespace {

json enumeratorToValue(const std::map<std::uint32_t, std::uint64_t>& enumerator) {
    json out = json::array();
    for (const auto& [weight, count] : enumerator)
        out.push_back(json::array({weight, count}));
    return out;
}

json boundsToValue(const BoundsCheck& bounds) {
    json out;
    out["eq12"] = bounds.lowerHom && bounds.upperHom;
    out["eq13"] = bounds.lowerNorm && bounds.upperNorm;
    return out;
}

}  // namespace

std::string codeReportToJson(const CodeReport& report) {
    json j;
    j["k"] = report.k;
    j["n"] = report.n;
    j["side"] = sideName(report.side);
    j["size"] = report.size;
    j["free"] = report.freeCode;
    j["d_hamming"] = report.dHamming;
    j["d_hom"] = ratToString(report.dHom);
    j["gamma"] = ratToString(report.gamma);
    j["enumerator"] = enumeratorToValue(report.enumerator);
    j["singleton"] = {{"bound", ratToString(report.singletonBound)}, {"mds", report.mds}};
    j["quasi_cyclic"] = report.quasiCyclic;
    j["image"] = {{"length", report.imageLength},
                  {"d_hamming", report.imageDHamming},
                  {"d_hom", ratToString(report.imageDelta)},
                  {"d_hom_normalized", ratToString(report.imageDeltaNormalized)}};
    j["type_alpha"] = report.isTypeAlpha;
    j["bounds"] = boundsToValue(report.bounds);
    return dump(j);
}

std::string imageReportToJson(const CodeReport& report, const GaloisRing& base) {
    json j;
    j["ring"] = galoisRingToValue(base);
    j["length"] = report.imageLength;
    j["size"] = report.size;
    j["d_hamming"] = report.imageDHamming;
    j["d_hom"] = ratToString(report.imageDelta);
    j["d_hom_normalized"] = ratToString(report.imageDeltaNormalized);
    j["type_alpha"] = report.isTypeAlpha;
    j["bounds"] = boundsToValue(report.bounds);
    return dump(j);
}

std::string weightReportToJson(const FiniteRing& ring, const WeightFunction& weights,
                               const std::string& method, bool homogeneous) {
    json j;
    if (const QuatRing* quat = ring.quaternion())
        j["ring"] = quatRingToValue(*quat);
    else
        j["ring"] = galoisRingToValue(ring.galois());
    j["quaternion"] = ring.isQuaternion();
    j["method"] = method;
    j["average_value"] = ratToString(weights.gamma);
    j["homogeneous"] = homogeneous;
    json table;
    for (std::uint32_t x = 0; x < ring.size(); ++x)
        table[ring.label(static_cast<std::uint16_t>(x))] = ratToString(weights.table[x]);
    j["weights"] = table;
    return dump(j);
}

std::string structureReportToJson(const FiniteRing& ring, const IdealPoset& poset,
                                  const MobiusTable& mobius,
                                  const WeightFunction& weights, bool frobenius,
                                  std::uint64_t socleSize) {
    json j;
    if (const QuatRing* quat = ring.quaternion())
        j["ring"] = quatRingToValue(*quat);
    else
        j["ring"] = galoisRingToValue(ring.galois());
    j["side"] = sideName(poset.side);
    j["frobenius"] = frobenius;
    j["socle_size"] = socleSize;
    j["gamma"] = ratToString(weights.gamma);
    json ideals = json::array();
    for (std::size_t i = 0; i < poset.ideals.size(); ++i) {
        json ideal;
        ideal["index"] = i;
        ideal["generator"] = ring.label(poset.generators[i]);
        ideal["size"] = poset.ideals[i].size();
        ideal["zero"] = i == poset.zeroIndex;
        ideal["full"] = i == poset.fullIndex;
        ideal["minimal"] = poset.isMinimal(i);
        ideal["maximal"] = poset.isMaximal(i);
        ideals.push_back(ideal);
    }
    j["ideals"] = ideals;
    json mu = json::array();
    for (std::size_t sub = 0; sub < poset.ideals.size(); ++sub)
        for (std::size_t super = 0; super < poset.ideals.size(); ++super)
            if (poset.leq(sub, super))
                mu.push_back(json::array({sub, super, mobius.at(sub, super)}));
    j["mobius"] = mu;
    json table;
    for (std::uint32_t x = 0; x < ring.size(); ++x)
        table[ring.label(static_cast<std::uint16_t>(x))] = ratToString(weights.table[x]);
    j["weights"] = table;
    return dump(j);
}

std::string ringInfoToJson(const GaloisRing& ring) {
    json j = galoisRingToValue(ring);
    j["cardinality"] = ring.cardinality();
    j["characteristic"] = ring.characteristic();
    // |R*| = p^{rm} - p^{(r-1)m} for Galois rings.
    std::uint64_t nonUnits = 1;
    for (std::uint32_t i = 0; i < (ring.r() - 1) * ring.m(); ++i) nonUnits *= ring.p();
    j["units"] = ring.cardinality() - nonUnits;
    return dump(j);
}

std::string quatInfoToJson(const QuatRing& ring, const RingCounts* counts) {
    json j = quatRingToValue(ring);
    j["cardinality"] = ring.cardinality();
    j["characteristic"] = ring.base().characteristic();
    if (counts != nullptr) {
        j["units"] = counts->units;
        j["zero_divisors"] = counts->zeroDivisors;
        j["idempotents"] = counts->idempotents;
    }
    return dump(j);
}

std::string searchOutcomeToJson(const SearchRequest& request, const SearchOutcome& outcome) {
    json j;
    const QuatRing* quat = request.ring->quaternion();
    j["ring"] = quat ? quatRingToValue(*quat) : galoisRingToValue(request.ring->galois());
    j["side"] = sideName(request.side);
    j["objective"] = objectiveName(request.objective);
    j["best_distance"] = ratToString(outcome.bestDistance);
    j["scanned"] = outcome.scanned;
    j["total"] = outcome.totalAssignments;
    j["complete"] = outcome.complete;
    if (outcome.resume)
        j["resume"] = {{"fingerprint", outcome.resume->fingerprint},
                       {"next_index", outcome.resume->nextIndex}};
    else
        j["resume"] = nullptr;
    json assignments = json::array();
    for (const auto& result : outcome.best) {
        json a;
        a["index"] = result.index;
        json values;
        for (std::uint32_t v = 0; v < result.values.size(); ++v)
            values[request.tmpl.variableNames[v]] =
                request.ring->label(result.values[v]);
        a["values"] = values;
        a["size"] = result.codeSize;
        a["free"] = result.freeCode;
        a["d_hamming"] = result.dHamming;
        a["d_hom"] = ratToString(result.dHom);
        assignments.push_back(a);
    }
    j["assignments"] = assignments;
    return dump(j);
}

std::string candidateCheckToJson(const QuatRing& ring, const CandidateCheck& check) {
    json j;
    j["ring"] = quatRingToValue(ring);
    j["generator"] = quatToText(ring, check.generator);
    j["ideal_size"] = check.idealSize;
    j["two_sided"] = check.twoSided;
    j["minimal"] = check.minimal;
    j["checked"] = check.checkedElements;
    j["contained_in_all_checked"] = check.containedInAllChecked;
    j["exhaustive"] = check.exhaustive;
    j["verified"] = check.verified();
    return dump(j);
}

ResumeToken resumeTokenFromJson(const std::string& text) {
    const json j = parseJson(text);
    if (!j.contains("fingerprint") || !j.contains("next_index"))
        throw ParseError("resume token needs 'fingerprint' and 'next_index'");
    return ResumeToken{j.at("fingerprint").get<std::string>(),
                       j.at("next_index").get<std::uint64_t>()};
}

std::string resumeTokenToJson(const ResumeToken& token) {
    json j;
    j["fingerprint"] = token.fingerprint;
    j["next_index"] = token.nextIndex;
    return dump(j);
}

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void writeFile(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path);
    out << content;
}

}  // namespace quatring
