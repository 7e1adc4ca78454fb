#include "quatring/galois_ring.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "quatring/errors.hpp"

namespace quatring {

namespace {

std::uint64_t powU64(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t out = 1;
    for (std::uint32_t i = 0; i < exp; ++i) out *= base;
    return out;
}

// Arithmetic on dense F_p polynomials (low degree first, no trailing zeros).
using Poly = std::vector<std::uint32_t>;

Poly trimmed(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

// Remainder of a by monic divisor d over F_p.
Poly polyRemModP(Poly a, const Poly& d, std::uint32_t p) {
    a = trimmed(std::move(a));
    const std::size_t dd = d.size() - 1;
    while (a.size() > dd) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - 1 - dd;
        if (lead != 0) {
            for (std::size_t i = 0; i <= dd; ++i) {
                std::uint64_t t = a[shift + i] + static_cast<std::uint64_t>(p) * p;
                t -= static_cast<std::uint64_t>(lead) * d[i] % p;
                a[shift + i] = static_cast<std::uint32_t>(t % p);
            }
        }
        a.pop_back();
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (a.size() <= dd) break;
    }
    return a;
}

bool isIrreducibleModP(const Poly& h, std::uint32_t p) {
    const std::size_t m = h.size() - 1;
    if (m == 0) return false;
    if (m == 1) return true;
    // Trial division by every monic polynomial of degree 1..m/2 over F_p.
    for (std::size_t deg = 1; deg * 2 <= m; ++deg) {
        Poly div(deg + 1, 0);
        div[deg] = 1;
        // Odometer over the deg free coefficients.
        while (true) {
            if (polyRemModP(h, div, p).empty()) return false;
            std::size_t pos = 0;
            while (pos < deg && ++div[pos] == p) {
                div[pos] = 0;
                ++pos;
            }
            if (pos == deg) break;
        }
    }
    return true;
}

}  // namespace

bool GaloisRing::isPrime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint32_t> GaloisRing::defaultModulus(std::uint32_t p,
                                                      std::uint32_t r,
                                                      std::uint32_t m) {
    (void)r;
    // Lexicographically smallest (c_0, ..., c_{m-1}) with entries < p whose
    // monic polynomial is irreducible mod p.
    Poly h(m + 1, 0);
    h[m] = 1;
    while (true) {
        if (isIrreducibleModP(h, p)) return h;
        std::size_t pos = m;
        while (pos > 0 && h[pos - 1] == p - 1) {
            h[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) break;
        ++h[pos - 1];
    }
    throw NotBasicIrreducibleError("no irreducible polynomial found (broken p?)");
}

GaloisRing::GaloisRing(std::uint32_t p, std::uint32_t r, std::uint32_t m)
    : p_(p), r_(r), m_(m) {
    if (!isPrime(p)) throw NotPrimeError("p = " + std::to_string(p) + " is not prime");
    if (r < 1 || m < 1) throw BadDegreeError("need r >= 1 and m >= 1");
    h_ = defaultModulus(p, r, m);
    init();
}

GaloisRing::GaloisRing(std::uint32_t p, std::uint32_t r, std::uint32_t m,
                       std::vector<std::uint32_t> h)
    : p_(p), r_(r), m_(m), h_(std::move(h)) {
    if (!isPrime(p)) throw NotPrimeError("p = " + std::to_string(p) + " is not prime");
    if (r < 1 || m < 1) throw BadDegreeError("need r >= 1 and m >= 1");
    if (h_.size() != static_cast<std::size_t>(m) + 1)
        throw BadDegreeError("modulus must have length m+1");
    if (h_[m] != 1) throw BadDegreeError("modulus must be monic");
    init();
}

void GaloisRing::init() {
    characteristic_ = powU64(p_, r_);
    if (characteristic_ > (1u << 20))
        throw TooLargeError("characteristic exceeds 2^20");
    cardinality_ = powU64(characteristic_, m_);
    pPowRm1_ = powU64(p_, r_ - 1);

    for (auto c : h_)
        if (c >= characteristic_)
            throw BadDegreeError("modulus coefficient out of range [0, p^r)");

    Poly hModP(h_.begin(), h_.end());
    for (auto& c : hModP) c %= p_;
    if (!isIrreducibleModP(hModP, p_))
        throw NotBasicIrreducibleError("modulus is reducible mod p");

    // w^m = -(h_0 + h_1 w + ... + h_{m-1} w^{m-1}); higher powers follow by
    // repeated multiplication by w.
    std::vector<std::uint32_t> cur(m_);
    for (std::uint32_t i = 0; i < m_; ++i)
        cur[i] = static_cast<std::uint32_t>((characteristic_ - h_[i]) % characteristic_);
    highPowers_.push_back(cur);
    for (std::uint32_t t = 1; t + 1 < m_; ++t) {
        std::vector<std::uint32_t> next(m_, 0);
        // next = cur * w, folding the overflow of degree m via highPowers_[0].
        const std::uint32_t top = cur[m_ - 1];
        for (std::uint32_t i = m_ - 1; i > 0; --i) next[i] = cur[i - 1];
        next[0] = 0;
        for (std::uint32_t i = 0; i < m_; ++i) {
            std::uint64_t t2 = next[i] +
                static_cast<std::uint64_t>(top) * highPowers_[0][i] % characteristic_;
            next[i] = static_cast<std::uint32_t>(t2 % characteristic_);
        }
        highPowers_.push_back(next);
        cur = std::move(next);
    }
}

bool GaloisRing::sameRing(const GaloisRing& other) const {
    return p_ == other.p_ && r_ == other.r_ && m_ == other.m_ && h_ == other.h_;
}

GrElement GaloisRing::zero() const { return GrElement{std::vector<std::uint32_t>(m_, 0)}; }

GrElement GaloisRing::one() const { return fromInt(1); }

GrElement GaloisRing::omega() const {
    if (m_ == 1) {
        // Linear modulus: w = -h_0.
        return GrElement{{static_cast<std::uint32_t>(
            (characteristic_ - h_[0] % characteristic_) % characteristic_)}};
    }
    GrElement x = zero();
    x.coeffs[1] = 1;
    return x;
}

GrElement GaloisRing::fromInt(std::int64_t n) const {
    const auto c = static_cast<std::int64_t>(characteristic_);
    std::int64_t v = n % c;
    if (v < 0) v += c;
    GrElement x = zero();
    x.coeffs[0] = static_cast<std::uint32_t>(v);
    return x;
}

bool GaloisRing::contains(const GrElement& x) const {
    if (x.coeffs.size() != m_) return false;
    for (auto c : x.coeffs)
        if (c >= characteristic_) return false;
    return true;
}

namespace {
void requireMember(const GaloisRing& ring, const GrElement& x, const char* what) {
    if (!ring.contains(x))
        throw RingMismatchError(std::string(what) + ": element does not belong to this ring");
}
}  // namespace

GrElement GaloisRing::add(const GrElement& a, const GrElement& b) const {
    requireMember(*this, a, "add");
    requireMember(*this, b, "add");
    GrElement out = a;
    for (std::uint32_t i = 0; i < m_; ++i)
        out.coeffs[i] = static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(a.coeffs[i]) + b.coeffs[i]) % characteristic_);
    return out;
}

GrElement GaloisRing::neg(const GrElement& a) const {
    requireMember(*this, a, "neg");
    GrElement out = a;
    for (std::uint32_t i = 0; i < m_; ++i)
        out.coeffs[i] = static_cast<std::uint32_t>(
            (characteristic_ - a.coeffs[i]) % characteristic_);
    return out;
}

GrElement GaloisRing::sub(const GrElement& a, const GrElement& b) const {
    return add(a, neg(b));
}

GrElement GaloisRing::mul(const GrElement& a, const GrElement& b) const {
    requireMember(*this, a, "mul");
    requireMember(*this, b, "mul");
    // Convolution up to degree 2m-2, then fold the high half.
    std::vector<std::uint64_t> conv(2 * m_ - 1, 0);
    for (std::uint32_t i = 0; i < m_; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::uint32_t j = 0; j < m_; ++j)
            conv[i + j] += static_cast<std::uint64_t>(a.coeffs[i]) * b.coeffs[j] % characteristic_;
    }
    GrElement out = zero();
    for (std::uint32_t i = 0; i < m_; ++i)
        out.coeffs[i] = static_cast<std::uint32_t>(conv[i] % characteristic_);
    for (std::uint32_t t = m_; t < 2 * m_ - 1; ++t) {
        const std::uint64_t c = conv[t] % characteristic_;
        if (c == 0) continue;
        const auto& rep = highPowers_[t - m_];
        for (std::uint32_t i = 0; i < m_; ++i)
            out.coeffs[i] = static_cast<std::uint32_t>(
                (out.coeffs[i] + c * rep[i]) % characteristic_);
    }
    return out;
}

bool GaloisRing::isUnit(const GrElement& x) const {
    requireMember(*this, x, "isUnit");
    for (auto c : x.coeffs)
        if (c % p_ != 0) return true;
    return false;
}

std::optional<GrElement> GaloisRing::inverse(const GrElement& x) const {
    requireMember(*this, x, "inverse");
    const GrElement id = one();
    for (std::uint64_t i = 0; i < cardinality_; ++i) {
        GrElement y = elementAt(i);
        if (mul(x, y) == id) return y;
    }
    return std::nullopt;
}

CharacterValue GaloisRing::character(const GrElement& x) const {
    requireMember(*this, x, "character");
    return CharacterValue{x.coeffs[m_ - 1], static_cast<std::uint32_t>(characteristic_)};
}

bool GaloisRing::inMinimalIdeal(const GrElement& x) const {
    requireMember(*this, x, "inMinimalIdeal");
    for (auto c : x.coeffs)
        if (c % pPowRm1_ != 0) return false;
    return true;
}

Rat GaloisRing::homWeight(const GrElement& x) const {
    requireMember(*this, x, "homWeight");
    bool isZero = true;
    for (auto c : x.coeffs)
        if (c != 0) isZero = false;
    if (isZero) return Rat(0);
    if (inMinimalIdeal(x))
        return ratPow(Rat(p_), static_cast<int>(m_ * (r_ - 1)));
    return gammaDefault();
}

Rat GaloisRing::gammaDefault() const {
    const Rat q = ratPow(Rat(p_), static_cast<int>(m_));
    return (q - 1) * ratPow(Rat(p_), static_cast<int>(m_) * (static_cast<int>(r_) - 2));
}

std::uint64_t GaloisRing::indexOf(const GrElement& x) const {
    requireMember(*this, x, "indexOf");
    std::uint64_t idx = 0;
    for (std::uint32_t i = 0; i < m_; ++i) idx = idx * characteristic_ + x.coeffs[i];
    return idx;
}

GrElement GaloisRing::elementAt(std::uint64_t index) const {
    if (index >= cardinality_) throw RingMismatchError("element index out of range");
    GrElement x = zero();
    for (std::uint32_t i = m_; i-- > 0;) {
        x.coeffs[i] = static_cast<std::uint32_t>(index % characteristic_);
        index /= characteristic_;
    }
    return x;
}

std::vector<GrElement> GaloisRing::elements() const {
    if (cardinality_ > (1u << 20)) throw TooLargeError("ring too large to enumerate");
    std::vector<GrElement> out;
    out.reserve(cardinality_);
    for (std::uint64_t i = 0; i < cardinality_; ++i) out.push_back(elementAt(i));
    return out;
}

std::string grToText(const GaloisRing& ring, const GrElement& x) {
    if (!ring.contains(x)) throw RingMismatchError("grToText: not an element");
    if (ring.m() == 1) return std::to_string(x.coeffs[0]);
    std::ostringstream os;
    os << '[';
    for (std::uint32_t i = 0; i < ring.m(); ++i) {
        if (i) os << ',';
        os << x.coeffs[i];
    }
    os << ']';
    return os.str();
}

namespace {

std::string_view stripSpace(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::int64_t parseInt(std::string_view s) {
    s = stripSpace(s);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError("bad integer: '" + std::string(s) + "'");
    return v;
}

}  // namespace

GrElement grFromText(const GaloisRing& ring, std::string_view text) {
    text = stripSpace(text);
    if (text.empty()) throw ParseError("empty element text");
    std::vector<std::int64_t> vals;
    if (text.front() == '[') {
        if (text.back() != ']') throw ParseError("unterminated '[' in element text");
        text.remove_prefix(1);
        text.remove_suffix(1);
        std::size_t start = 0;
        for (std::size_t i = 0; i <= text.size(); ++i) {
            if (i == text.size() || text[i] == ',') {
                vals.push_back(parseInt(text.substr(start, i - start)));
                start = i + 1;
            }
        }
    } else {
        if (ring.m() != 1)
            throw ParseError("bare integer element only allowed when m = 1");
        vals.push_back(parseInt(text));
    }
    if (vals.size() != ring.m())
        throw ParseError("element has wrong number of coefficients");
    GrElement x = ring.zero();
    const auto c = static_cast<std::int64_t>(ring.characteristic());
    for (std::size_t i = 0; i < vals.size(); ++i) {
        std::int64_t v = vals[i] % c;
        if (v < 0) v += c;
        x.coeffs[i] = static_cast<std::uint32_t>(v);
    }
    return x;
}

}  // namespace quatring
