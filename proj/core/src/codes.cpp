#include "quatring/codes.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "quatring/errors.hpp"

namespace quatring {

WordSet::WordSet(std::uint32_t length, std::uint32_t alphabetSize)
    : length_(length), alphabet_(alphabetSize) {
    if (length == 0) throw EmptyCodeError("word length must be positive");
    bits_ = std::max(1u, static_cast<unsigned>(std::bit_width(alphabet_ - 1)));
    if (static_cast<std::uint64_t>(bits_) * length_ > 128)
        throw TooLargeError("words do not fit the 128-bit packing");
    mask_ = (Packed(1) << bits_) - 1;
}

WordSet::Packed WordSet::pack(std::span<const std::uint16_t> word) const {
    Packed out = 0;
    for (std::uint32_t t = 0; t < length_; ++t) out = (out << bits_) | word[t];
    return out;
}

void WordSet::unpack(Packed packed, std::uint16_t* out) const {
    for (std::uint32_t t = length_; t-- > 0;) {
        out[t] = static_cast<std::uint16_t>(packed & mask_);
        packed >>= bits_;
    }
}

std::uint16_t WordSet::coordOf(Packed packed, std::uint32_t pos) const {
    return static_cast<std::uint16_t>((packed >> (bits_ * (length_ - 1 - pos))) & mask_);
}

WordSet::Packed WordSet::shifted(Packed packed, std::uint32_t offset) const {
    offset %= length_;
    if (offset == 0) return packed;
    const std::uint32_t low = bits_ * offset;
    const std::uint32_t high = bits_ * (length_ - offset);
    const Packed lowMask = (Packed(1) << low) - 1;
    return ((packed & lowMask) << high) | (packed >> low);
}

void WordSet::insert(std::span<const std::uint16_t> word) { insertPacked(pack(word)); }

void WordSet::insertPacked(Packed packed) {
    finalized_ = false;
    data_.push_back(packed);
}

void WordSet::finalize() {
    std::sort(data_.begin(), data_.end());
    data_.erase(std::unique(data_.begin(), data_.end()), data_.end());
    finalized_ = true;
}

std::vector<std::uint16_t> WordSet::wordAt(std::size_t i) const {
    std::vector<std::uint16_t> out(length_);
    unpack(data_[i], out.data());
    return out;
}

bool WordSet::contains(Packed packed) const {
    return std::binary_search(data_.begin(), data_.end(), packed);
}

bool WordSet::contains(std::span<const std::uint16_t> word) const {
    return contains(pack(word));
}

Code span(const GeneratorMatrix& matrix, Side side) {
    const FiniteRing& ring = *matrix.ring;
    const std::uint32_t k = matrix.k, n = matrix.n;
    double messagesEstimate = 1;
    for (std::uint32_t i = 0; i < k; ++i) messagesEstimate *= ring.size();
    if (messagesEstimate > double(1 << 24))
        throw TooLargeError("message space exceeds 2^24");

    Code code{matrix.ring, side, n, WordSet(n, ring.size())};
    std::vector<std::uint16_t> digits(k, 0);
    std::vector<std::uint16_t> word(n);
    while (true) {
        for (std::uint32_t j = 0; j < n; ++j) {
            std::uint16_t acc = 0;
            for (std::uint32_t i = 0; i < k; ++i) {
                const std::uint16_t prod = side == Side::Left
                                               ? ring.mul(digits[i], matrix.at(i, j))
                                               : ring.mul(matrix.at(i, j), digits[i]);
                acc = ring.add(acc, prod);
            }
            word[j] = acc;
        }
        code.words.insert(word);
        std::uint32_t pos = k;
        while (pos > 0 && ++digits[pos - 1] == ring.size()) {
            digits[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) break;
    }
    code.words.finalize();
    return code;
}

bool codeEqual(const Code& a, const Code& b) { return a.words == b.words; }

bool codeContains(const Code& code, std::span<const std::uint16_t> word) {
    return code.words.contains(word);
}

Code tauImage(const Code& code) {
    const QuatRing* quat = code.ring->quaternion();
    if (quat == nullptr)
        throw UnsupportedRingError("tau image requires a quaternion alphabet");
    auto baseRing = FiniteRing::tabulate(quat->base());
    Code image{baseRing, code.side, 4 * code.n, WordSet(4 * code.n, baseRing->size())};
    std::vector<std::uint16_t> word(code.n);
    std::vector<std::uint16_t> imageWord(4 * code.n);
    std::uint16_t coords[4];
    for (std::size_t w = 0; w < code.words.size(); ++w) {
        const auto packed = code.words.packedAt(w);
        code.words.unpack(packed, word.data());
        for (std::uint32_t j = 0; j < code.n; ++j) {
            quat->coords(word[j], coords);
            for (int t = 0; t < 4; ++t) imageWord[4 * j + t] = coords[t];
        }
        image.words.insert(imageWord);
    }
    image.words.finalize();
    return image;
}

std::map<std::uint32_t, std::uint64_t> hammingEnumerator(const Code& code) {
    std::map<std::uint32_t, std::uint64_t> counts;
    for (std::size_t w = 0; w < code.words.size(); ++w) {
        const auto packed = code.words.packedAt(w);
        std::uint32_t weight = 0;
        for (std::uint32_t pos = 0; pos < code.words.length(); ++pos)
            if (code.words.coordOf(packed, pos) != 0) ++weight;
        ++counts[weight];
    }
    return counts;
}

std::uint32_t minHamming(const Code& code) {
    if (code.words.size() < 2)
        throw EmptyCodeError("minimum distance needs at least two codewords");
    std::uint32_t best = code.words.length() + 1;
    for (std::size_t w = 0; w < code.words.size(); ++w) {
        const auto packed = code.words.packedAt(w);
        if (packed == 0) continue;
        std::uint32_t weight = 0;
        for (std::uint32_t pos = 0; pos < code.words.length(); ++pos)
            if (code.words.coordOf(packed, pos) != 0) ++weight;
        best = std::min(best, weight);
    }
    return best;
}

Rat minHomDistance(const Code& code, const WeightFunction& weights) {
    if (weights.table.size() != code.ring->size())
        throw AlphabetMismatchError("weight table does not match the code alphabet");
    if (code.words.size() < 2)
        throw EmptyCodeError("minimum distance needs at least two codewords");
    // Scale to a common denominator so the scan is integer arithmetic.
    std::int64_t den = 1;
    for (const Rat& w : weights.table) den = std::lcm(den, w.denominator());
    std::vector<std::int64_t> scaled(weights.table.size());
    for (std::size_t x = 0; x < weights.table.size(); ++x)
        scaled[x] = weights.table[x].numerator() * (den / weights.table[x].denominator());
    std::int64_t best = -1;
    for (std::size_t w = 0; w < code.words.size(); ++w) {
        const auto packed = code.words.packedAt(w);
        if (packed == 0) continue;
        std::int64_t sum = 0;
        for (std::uint32_t pos = 0; pos < code.words.length(); ++pos)
            sum += scaled[code.words.coordOf(packed, pos)];
        if (best < 0 || sum < best) best = sum;
    }
    return Rat(best, den);
}

SingletonCheck singletonCheck(const Code& code) {
    const std::uint32_t p = code.ring->galois().p();
    // Alphabet and code sizes are both powers of p, so log_m |C| is exact.
    auto logP = [p](std::uint64_t v) {
        std::int64_t e = 0;
        while (v > 1) {
            v /= p;
            ++e;
        }
        return e;
    };
    const std::int64_t alphabetExp = logP(code.ring->size());
    const std::int64_t codeExp = logP(code.words.size());
    SingletonCheck out;
    out.bound = Rat(code.words.length()) - Rat(codeExp, alphabetExp) + Rat(1);
    out.meets = code.words.size() >= 2 && Rat(minHamming(code)) == out.bound;
    return out;
}

std::vector<std::uint32_t> quasiCyclicOrders(const Code& code) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t offset = 1; offset <= code.words.length(); ++offset) {
        bool closed = true;
        for (std::size_t w = 0; w < code.words.size() && closed; ++w)
            if (!code.words.contains(code.words.shifted(code.words.packedAt(w), offset)))
                closed = false;
        if (closed) out.push_back(offset);
    }
    return out;
}

bool typeAlpha(const Rat& delta, std::uint32_t dTauHamming, const GaloisRing& base) {
    const Rat factor = ratPow(Rat(base.p()), static_cast<int>(base.m() * (base.r() - 1)));
    return delta == factor * Rat(dTauHamming);
}

BoundsCheck boundsCheck(std::uint32_t dHamming, const Rat& delta,
                        const Rat& deltaNorm, const GaloisRing& base) {
    const Rat gamma = base.gammaDefault();
    const Rat d(dHamming);
    const Rat maxWeight = ratPow(Rat(base.p()), static_cast<int>(base.m() * (base.r() - 1)));
    const Rat q = ratPow(Rat(base.p()), static_cast<int>(base.m()));
    BoundsCheck out;
    out.lowerHom = gamma * d <= delta;
    out.upperHom = delta <= maxWeight * 4 * d;
    out.lowerNorm = d <= deltaNorm;
    out.upperNorm = deltaNorm <= q / (q - 1) * 4 * d;
    return out;
}

CodeReport analyzeCode(const GeneratorMatrix& matrix, Side side, const Rat& gamma) {
    const Code code = span(matrix, side);
    const FiniteRing& ring = *matrix.ring;

    CodeReport report;
    report.k = matrix.k;
    report.n = matrix.n;
    report.side = side;
    report.size = code.words.size();
    std::uint64_t full = 1;
    for (std::uint32_t i = 0; i < matrix.k; ++i) full *= ring.size();
    report.freeCode = report.size == full;
    report.gamma = gamma;

    report.dHamming = minHamming(code);
    report.enumerator = hammingEnumerator(code);
    report.dHom = minHomDistance(code, weightsByCharacter(ring, gamma));
    const SingletonCheck singleton = singletonCheck(code);
    report.singletonBound = singleton.bound;
    report.mds = singleton.meets;
    report.quasiCyclic = quasiCyclicOrders(code);

    const Code image = tauImage(code);
    const GaloisRing& base = ring.galois();
    report.imageLength = image.words.length();
    report.imageDHamming = minHamming(image);
    report.imageDelta =
        minHomDistance(image, weightsClosedForm(*image.ring, base.gammaDefault()));
    report.imageDeltaNormalized = report.imageDelta / base.gammaDefault();
    report.isTypeAlpha = typeAlpha(report.imageDelta, report.imageDHamming, base);
    report.bounds = boundsCheck(report.dHamming, report.imageDelta,
                                report.imageDeltaNormalized, base);
    if (!report.bounds.holds())
        throw BoundViolatedError("distance bounds failed on computed data");
    return report;
}

}  // namespace quatring
