#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "quatring/finite_ring.hpp"
#include "quatring/ideals.hpp"
#include "quatring/weights.hpp"

namespace quatring {

// Sorted, deduplicated set of fixed-length words over element codes.
// Each word is bit-packed big-endian (coordinate 0 in the top bits) into a
// 128-bit integer, so packed comparison order is lexicographic word order
// and membership is a binary search.
class WordSet {
public:
    using Packed = unsigned __int128;

    WordSet(std::uint32_t length, std::uint32_t alphabetSize);

    std::uint32_t length() const { return length_; }
    std::uint32_t alphabetSize() const { return alphabet_; }
    std::uint32_t bitsPerCoord() const { return bits_; }

    Packed pack(std::span<const std::uint16_t> word) const;
    void unpack(Packed packed, std::uint16_t* out) const;
    std::uint16_t coordOf(Packed packed, std::uint32_t pos) const;
    // Cyclic right shift by offset positions.
    Packed shifted(Packed packed, std::uint32_t offset) const;

    void insert(std::span<const std::uint16_t> word);
    void insertPacked(Packed packed);
    void finalize();  // sort + dedup; required before queries

    std::size_t size() const { return data_.size(); }
    Packed packedAt(std::size_t i) const { return data_[i]; }
    std::vector<std::uint16_t> wordAt(std::size_t i) const;
    bool contains(Packed packed) const;
    bool contains(std::span<const std::uint16_t> word) const;

    friend bool operator==(const WordSet& a, const WordSet& b) {
        return a.length_ == b.length_ && a.alphabet_ == b.alphabet_ && a.data_ == b.data_;
    }

private:
    std::uint32_t length_ = 0, alphabet_ = 0, bits_ = 0;
    Packed mask_ = 0;
    bool finalized_ = false;
    std::vector<Packed> data_;
};

// k x n generator matrix over a tabulated quaternion ring; entries are
// element codes, row-major.
struct GeneratorMatrix {
    std::shared_ptr<const FiniteRing> ring;
    std::uint32_t k = 0, n = 0;
    std::vector<std::uint16_t> entries;

    std::uint16_t at(std::uint32_t row, std::uint32_t col) const {
        return entries[row * n + col];
    }
};

// A one-sided linear block code: the span of a generator matrix.
struct Code {
    std::shared_ptr<const FiniteRing> ring;
    Side side = Side::Left;
    std::uint32_t n = 0;
    WordSet words;
};

// Span of the rows: left side v_j = sum_i u_i G[i][j], right side
// v_j = sum_i G[i][j] u_i, over all messages u. TooLarge above 2^24
// messages.
Code span(const GeneratorMatrix& matrix, Side side);

bool codeEqual(const Code& a, const Code& b);
bool codeContains(const Code& code, std::span<const std::uint16_t> word);

// Coordinate read-off per symbol: each quaternion becomes its four base
// coordinates, so the image has length 4n over the base Galois ring.
Code tauImage(const Code& code);

// Hamming weight distribution: weight -> count, summing to |C|.
std::map<std::uint32_t, std::uint64_t> hammingEnumerator(const Code& code);

// Minimum Hamming weight over the nonzero words. EmptyCode when the code
// has fewer than two words.
std::uint32_t minHamming(const Code& code);

// Minimum coordinate-wise weight sum over the nonzero words, exact.
// AlphabetMismatch when the table does not cover the alphabet.
Rat minHomDistance(const Code& code, const WeightFunction& weights);

struct SingletonCheck {
    Rat bound;   // n - log_m |C| + 1 with m the alphabet size
    bool meets;  // d_H equals the bound (MDS)
};
SingletonCheck singletonCheck(const Code& code);

// All shift offsets in [1, n] under which the code is invariant.
std::vector<std::uint32_t> quasiCyclicOrders(const Code& code);

// delta == p^{m(r-1)} * dTau where delta is the image's minimum homogeneous
// distance in the natural normalization of the base ring.
bool typeAlpha(const Rat& delta, std::uint32_t dTauHamming, const GaloisRing& base);

struct BoundsCheck {
    bool lowerHom = false, upperHom = false;        // gamma d <= delta <= p^{m(r-1)} 4d
    bool lowerNorm = false, upperNorm = false;      // d <= deltaNorm <= p^m/(p^m-1) 4d
    bool holds() const { return lowerHom && upperHom && lowerNorm && upperNorm; }
};

// Evaluates both distance bounds exactly; all four inequalities are
// theorems, so a failure means a bug somewhere upstream.
BoundsCheck boundsCheck(std::uint32_t dHamming, const Rat& delta,
                        const Rat& deltaNorm, const GaloisRing& base);

struct CodeReport {
    std::uint32_t k = 0, n = 0;
    Side side = Side::Left;
    std::uint64_t size = 0;
    bool freeCode = false;
    std::uint32_t dHamming = 0;
    Rat dHom;        // quaternion code, weight table at the given gamma
    Rat gamma;
    Rat singletonBound;
    bool mds = false;
    std::vector<std::uint32_t> quasiCyclic;
    std::map<std::uint32_t, std::uint64_t> enumerator;
    std::uint32_t imageLength = 0;
    std::uint32_t imageDHamming = 0;
    Rat imageDelta;           // natural base-ring weight
    Rat imageDeltaNormalized; // imageDelta / natural gamma
    bool isTypeAlpha = false;
    BoundsCheck bounds;
};

// Full analysis of the span of a generator matrix, including the image
// code. The gamma applies to the quaternion code's weight table (the image
// always uses the base ring's natural weight). Throws BoundViolated if the
// distance bounds fail.
CodeReport analyzeCode(const GeneratorMatrix& matrix, Side side, const Rat& gamma = Rat(1));

}  // namespace quatring
