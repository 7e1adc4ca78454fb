#include "quatring/quaternion.hpp"

#include <charconv>
#include <sstream>

#include "quatring/errors.hpp"

namespace quatring {

namespace {
constexpr std::uint32_t kMaxBaseTable = 4096;
constexpr std::uint64_t kMaxClassify = 1u << 20;
}  // namespace

QuatRing::QuatRing(GaloisRing base, GrElement a, GrElement b)
    : base_(std::move(base)), a_(std::move(a)), b_(std::move(b)) {
    if (!base_.contains(a_) || !base_.contains(b_))
        throw RingMismatchError("a and b must be elements of the base ring");
    if (!base_.isUnit(a_) || !base_.isUnit(b_))
        throw UnsupportedRingError("a and b must be units of the base ring");
    const std::uint64_t s = base_.cardinality();
    if (s > kMaxBaseTable)
        throw TooLargeError("base ring too large to tabulate");
    baseSize_ = static_cast<std::uint32_t>(s);
    cardinality_ = s * s * s * s;

    bAdd_.resize(s * s);
    bMul_.resize(s * s);
    bNeg_.resize(s);
    bChar_.resize(s);
    bUnit_.resize(s);
    std::vector<GrElement> elems = base_.elements();
    for (std::uint32_t x = 0; x < s; ++x) {
        bNeg_[x] = static_cast<std::uint16_t>(base_.indexOf(base_.neg(elems[x])));
        bChar_[x] = base_.character(elems[x]).phase;
        bUnit_[x] = base_.isUnit(elems[x]) ? 1 : 0;
        for (std::uint32_t y = 0; y < s; ++y) {
            bAdd_[x * s + y] = static_cast<std::uint16_t>(base_.indexOf(base_.add(elems[x], elems[y])));
            bMul_[x * s + y] = static_cast<std::uint16_t>(base_.indexOf(base_.mul(elems[x], elems[y])));
        }
    }
    ca_ = static_cast<std::uint16_t>(base_.indexOf(a_));
    cb_ = static_cast<std::uint16_t>(base_.indexOf(b_));
    cab_ = bmul(ca_, cb_);
}

QuatRing QuatRing::hamilton(GaloisRing base) {
    GrElement minusOne = base.neg(base.one());
    return QuatRing(std::move(base), minusOne, minusOne);
}

bool QuatRing::sameRing(const QuatRing& other) const {
    return base_.sameRing(other.base_) && a_ == other.a_ && b_ == other.b_;
}

Quat QuatRing::zero() const {
    return Quat{{base_.zero(), base_.zero(), base_.zero(), base_.zero()}};
}

Quat QuatRing::one() const { return scalar(base_.one()); }

Quat QuatRing::unitI() const {
    return Quat{{base_.zero(), base_.one(), base_.zero(), base_.zero()}};
}

Quat QuatRing::unitJ() const {
    return Quat{{base_.zero(), base_.zero(), base_.one(), base_.zero()}};
}

Quat QuatRing::unitK() const {
    return Quat{{base_.zero(), base_.zero(), base_.zero(), base_.one()}};
}

Quat QuatRing::scalar(const GrElement& s) const {
    return Quat{{s, base_.zero(), base_.zero(), base_.zero()}};
}

bool QuatRing::contains(const Quat& x) const {
    for (const auto& c : x.c)
        if (!base_.contains(c)) return false;
    return true;
}

namespace {
void requireMember(const QuatRing& ring, const Quat& x, const char* what) {
    if (!ring.contains(x))
        throw RingMismatchError(std::string(what) + ": element does not belong to this ring");
}
}  // namespace

Quat QuatRing::add(const Quat& x, const Quat& y) const {
    requireMember(*this, x, "add");
    requireMember(*this, y, "add");
    Quat out;
    for (int t = 0; t < 4; ++t) out.c[t] = base_.add(x.c[t], y.c[t]);
    return out;
}

Quat QuatRing::neg(const Quat& x) const {
    requireMember(*this, x, "neg");
    Quat out;
    for (int t = 0; t < 4; ++t) out.c[t] = base_.neg(x.c[t]);
    return out;
}

Quat QuatRing::sub(const Quat& x, const Quat& y) const { return add(x, neg(y)); }

Quat QuatRing::mul(const Quat& x, const Quat& y) const {
    requireMember(*this, x, "mul");
    requireMember(*this, y, "mul");
    return fromCode(mulCodes(codeOf(x), codeOf(y)));
}

Quat QuatRing::conj(const Quat& x) const {
    requireMember(*this, x, "conj");
    return Quat{{x.c[0], base_.neg(x.c[1]), base_.neg(x.c[2]), base_.neg(x.c[3])}};
}

GrElement QuatRing::norm(const Quat& x) const {
    requireMember(*this, x, "norm");
    return base_.elementAt(normCode(codeOf(x)));
}

bool QuatRing::isUnit(const Quat& x) const {
    requireMember(*this, x, "isUnit");
    return isUnitCode(codeOf(x));
}

std::optional<Quat> QuatRing::inverse(const Quat& x) const {
    requireMember(*this, x, "inverse");
    if (cardinality_ > kMaxClassify) throw TooLargeError("ring too large for inverse scan");
    const std::uint32_t xc = codeOf(x);
    const std::uint32_t oneC = codeOf(one());
    for (std::uint64_t y = 0; y < cardinality_; ++y) {
        const auto yc = static_cast<std::uint32_t>(y);
        if (mulCodes(xc, yc) == oneC && mulCodes(yc, xc) == oneC)
            return fromCode(yc);
    }
    return std::nullopt;
}

CharacterValue QuatRing::character(const Quat& x) const {
    requireMember(*this, x, "character");
    return base_.character(x.c[0]);
}

std::uint64_t QuatRing::indexOf(const Quat& x) const {
    requireMember(*this, x, "indexOf");
    std::uint64_t idx = 0;
    for (int t = 0; t < 4; ++t) idx = idx * baseSize_ + base_.indexOf(x.c[t]);
    return idx;
}

Quat QuatRing::elementAt(std::uint64_t index) const {
    if (index >= cardinality_) throw RingMismatchError("element index out of range");
    return fromCode(static_cast<std::uint32_t>(index));
}

std::uint32_t QuatRing::codeOf(const Quat& x) const {
    return static_cast<std::uint32_t>(indexOf(x));
}

Quat QuatRing::fromCode(std::uint32_t code) const {
    std::uint16_t cs[4];
    coords(code, cs);
    Quat out;
    for (int t = 0; t < 4; ++t) out.c[t] = base_.elementAt(cs[t]);
    return out;
}

void QuatRing::coords(std::uint32_t code, std::uint16_t out[4]) const {
    out[3] = static_cast<std::uint16_t>(code % baseSize_);
    code /= baseSize_;
    out[2] = static_cast<std::uint16_t>(code % baseSize_);
    code /= baseSize_;
    out[1] = static_cast<std::uint16_t>(code % baseSize_);
    out[0] = static_cast<std::uint16_t>(code / baseSize_);
}

std::uint32_t QuatRing::pack(const std::uint16_t in[4]) const {
    return ((in[0] * baseSize_ + in[1]) * baseSize_ + in[2]) * baseSize_ + in[3];
}

std::uint32_t QuatRing::addCodes(std::uint32_t x, std::uint32_t y) const {
    std::uint16_t xs[4], ys[4], zs[4];
    coords(x, xs);
    coords(y, ys);
    for (int t = 0; t < 4; ++t) zs[t] = badd(xs[t], ys[t]);
    return pack(zs);
}

std::uint32_t QuatRing::negCode(std::uint32_t x) const {
    std::uint16_t xs[4];
    coords(x, xs);
    for (int t = 0; t < 4; ++t) xs[t] = bNeg_[xs[t]];
    return pack(xs);
}

std::uint32_t QuatRing::mulCodes(std::uint32_t x, std::uint32_t y) const {
    std::uint16_t xs[4], ys[4], zs[4];
    coords(x, xs);
    coords(y, ys);
    // z0 = x0 y0 + a x1 y1 + b x2 y2 - ab x3 y3
    zs[0] = badd(badd(bmul(xs[0], ys[0]), bmul(ca_, bmul(xs[1], ys[1]))),
                 bsub(bmul(cb_, bmul(xs[2], ys[2])), bmul(cab_, bmul(xs[3], ys[3]))));
    // z1 = x0 y1 + x1 y0 - b x2 y3 + b x3 y2
    zs[1] = badd(badd(bmul(xs[0], ys[1]), bmul(xs[1], ys[0])),
                 bsub(bmul(cb_, bmul(xs[3], ys[2])), bmul(cb_, bmul(xs[2], ys[3]))));
    // z2 = x0 y2 + x2 y0 + a x1 y3 - a x3 y1
    zs[2] = badd(badd(bmul(xs[0], ys[2]), bmul(xs[2], ys[0])),
                 bsub(bmul(ca_, bmul(xs[1], ys[3])), bmul(ca_, bmul(xs[3], ys[1]))));
    // z3 = x0 y3 + x3 y0 + x1 y2 - x2 y1
    zs[3] = badd(badd(bmul(xs[0], ys[3]), bmul(xs[3], ys[0])),
                 bsub(bmul(xs[1], ys[2]), bmul(xs[2], ys[1])));
    return pack(zs);
}

std::uint16_t QuatRing::normCode(std::uint32_t x) const {
    std::uint16_t xs[4];
    coords(x, xs);
    // x0^2 - a x1^2 - b x2^2 + ab x3^2
    const std::uint16_t t0 = bmul(xs[0], xs[0]);
    const std::uint16_t t1 = bmul(ca_, bmul(xs[1], xs[1]));
    const std::uint16_t t2 = bmul(cb_, bmul(xs[2], xs[2]));
    const std::uint16_t t3 = bmul(cab_, bmul(xs[3], xs[3]));
    return badd(bsub(bsub(t0, t1), t2), t3);
}

bool QuatRing::isUnitCode(std::uint32_t x) const { return bUnit_[normCode(x)] != 0; }

std::uint32_t QuatRing::charPhaseCode(std::uint32_t x) const {
    std::uint16_t xs[4];
    coords(x, xs);
    return bChar_[xs[0]];
}

RingCounts QuatRing::classify() const {
    if (cardinality_ > kMaxClassify) throw TooLargeError("ring too large to classify");
    RingCounts counts;
    const auto n = static_cast<std::uint32_t>(cardinality_);
    for (std::uint32_t x = 0; x < n; ++x) {
        if (mulCodes(x, x) == x) ++counts.idempotents;
        if (isUnitCode(x)) {
            ++counts.units;
            continue;
        }
        if (x == 0) continue;
        // One-sided-or zero divisor: scan for a nonzero annihilator.
        for (std::uint32_t y = 1; y < n; ++y) {
            if (mulCodes(x, y) == 0 || mulCodes(y, x) == 0) {
                ++counts.zeroDivisors;
                break;
            }
        }
    }
    return counts;
}

std::string quatToText(const QuatRing& ring, const Quat& x) {
    if (!ring.contains(x)) throw RingMismatchError("quatToText: not an element");
    std::ostringstream os;
    os << '(';
    for (int t = 0; t < 4; ++t) {
        if (t) os << ',';
        os << grToText(ring.base(), x.c[t]);
    }
    os << ')';
    return os.str();
}

namespace {

std::string_view stripSpace(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

// Split a tuple body at top-level commas (brackets may nest for m > 1).
std::vector<std::string_view> splitTopLevel(std::string_view body) {
    std::vector<std::string_view> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= body.size(); ++i) {
        if (i == body.size() || (body[i] == ',' && depth == 0)) {
            parts.push_back(body.substr(start, i - start));
            start = i + 1;
        } else if (body[i] == '[') {
            ++depth;
        } else if (body[i] == ']') {
            --depth;
        }
    }
    return parts;
}

}  // namespace

Quat quatFromText(const QuatRing& ring, std::string_view text) {
    text = stripSpace(text);
    if (text.empty()) throw ParseError("empty quaternion text");
    if (text.front() == '(') {
        if (text.back() != ')') throw ParseError("unterminated '(' in quaternion text");
        auto parts = splitTopLevel(text.substr(1, text.size() - 2));
        if (parts.size() != 4) throw ParseError("quaternion tuple needs four coordinates");
        Quat out;
        for (int t = 0; t < 4; ++t) out.c[t] = grFromText(ring.base(), parts[t]);
        return out;
    }
    // Human form (m = 1 only): sum of terms "c", "ci", "cj", "ck" with
    // optional coefficients and +/- signs.
    if (ring.base().m() != 1)
        throw ParseError("sum-of-terms quaternion text requires m = 1");
    std::int64_t coeff[4] = {0, 0, 0, 0};
    std::size_t pos = 0;
    bool any = false;
    while (pos < text.size()) {
        std::int64_t sign = 1;
        while (pos < text.size() && (text[pos] == '+' || text[pos] == '-' || text[pos] == ' ')) {
            if (text[pos] == '-') sign = -sign;
            ++pos;
        }
        if (pos >= text.size()) break;
        std::int64_t value = 1;
        bool sawDigits = false;
        if (text[pos] >= '0' && text[pos] <= '9') {
            std::size_t end = pos;
            while (end < text.size() && text[end] >= '0' && text[end] <= '9') ++end;
            auto sub = text.substr(pos, end - pos);
            std::from_chars(sub.data(), sub.data() + sub.size(), value);
            pos = end;
            sawDigits = true;
        }
        int slot = 0;
        if (pos < text.size() &&
            (text[pos] == 'i' || text[pos] == 'j' || text[pos] == 'k')) {
            slot = text[pos] == 'i' ? 1 : text[pos] == 'j' ? 2 : 3;
            ++pos;
        } else if (!sawDigits) {
            throw ParseError("bad quaternion term in '" + std::string(text) + "'");
        }
        coeff[slot] += sign * value;
        any = true;
    }
    if (!any) throw ParseError("empty quaternion text");
    Quat out;
    const auto c = static_cast<std::int64_t>(ring.base().characteristic());
    for (int t = 0; t < 4; ++t) {
        std::int64_t v = coeff[t] % c;
        if (v < 0) v += c;
        out.c[t] = GrElement{{static_cast<std::uint32_t>(v)}};
    }
    return out;
}

}  // namespace quatring
