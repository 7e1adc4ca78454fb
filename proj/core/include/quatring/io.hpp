#pragma once

#include <memory>
#include <string>

#include "quatring/codes.hpp"
#include "quatring/ideals.hpp"
#include "quatring/search.hpp"
#include "quatring/weights.hpp"

namespace quatring {

// JSON descriptor {"p":2,"r":2,"m":2,"h":[1,1,1]}; h (low degree first,
// length m+1) is optional and defaults to the canonical modulus.
GaloisRing galoisRingFromJson(const std::string& text);
std::string galoisRingToJson(const GaloisRing& ring);

// Quaternion descriptor {"base":{...},"a":"<element>","b":"<element>"}.
// A bare Galois descriptor is accepted and promoted with a = b = -1.
QuatRing quatRingFromJson(const std::string& text);
std::string quatRingToJson(const QuatRing& ring);

Side sideFromName(const std::string& name);        // "left" | "right"
std::string sideName(Side side);
Objective objectiveFromName(const std::string& name);  // "hamming" | "hom"
std::string objectiveName(Objective objective);

// Generator matrix file: {"ring":{...},"k":2,"n":6,
// "rows":[["(1,0,0,0)",...],...],"side":"left"}. Entries use the element
// grammar (tuple or, for m = 1, sum-of-terms). The right span convention is
// v_j = sum_i G[i][j] u_i (coefficients on the right).
struct MatrixFile {
    std::shared_ptr<const FiniteRing> ring;
    GeneratorMatrix matrix;
    Side side = Side::Left;
};
MatrixFile generatorMatrixFromJson(const std::string& text);

// Template file: the generator-matrix layout with variable identifiers as
// entries. An entry that parses as an element is a constant; any other
// identifier names a variable (so variable names must avoid the element
// grammar; x, y, z are safe).
SearchTemplate templateFromJson(const FiniteRing& ring, const std::string& text);

std::string codeReportToJson(const CodeReport& report);
std::string imageReportToJson(const CodeReport& report, const GaloisRing& base);
std::string weightReportToJson(const FiniteRing& ring, const WeightFunction& weights,
                               const std::string& method, bool homogeneous);
std::string structureReportToJson(const FiniteRing& ring, const IdealPoset& poset,
                                  const MobiusTable& mobius,
                                  const WeightFunction& weights, bool frobenius,
                                  std::uint64_t socleSize);
std::string ringInfoToJson(const GaloisRing& ring);
std::string quatInfoToJson(const QuatRing& ring, const RingCounts* counts);
std::string searchOutcomeToJson(const SearchRequest& request, const SearchOutcome& outcome);
std::string candidateCheckToJson(const QuatRing& ring, const CandidateCheck& check);

ResumeToken resumeTokenFromJson(const std::string& text);
std::string resumeTokenToJson(const ResumeToken& token);

std::string readFile(const std::string& path);
void writeFile(const std::string& path, const std::string& content);

}  // namespace quatring
