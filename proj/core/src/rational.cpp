#include "quatring/rational.hpp"

#include <charconv>

#include "quatring/errors.hpp"

namespace quatring {

Rat ratPow(const Rat& base, int exp) {
    if (exp < 0) return Rat(1) / ratPow(base, -exp);
    Rat out(1);
    Rat b = base;
    while (exp > 0) {
        if (exp & 1) out *= b;
        b *= b;
        exp >>= 1;
    }
    return out;
}

std::string ratToString(const Rat& value) {
    return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

Rat ratFromString(std::string_view text) {
    auto parsePart = [](std::string_view s) {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size())
            throw ParseError("bad rational: '" + std::string(s) + "'");
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parsePart(text));
    const std::int64_t num = parsePart(text.substr(0, slash));
    const std::int64_t den = parsePart(text.substr(slash + 1));
    if (den == 0) throw ParseError("rational with zero denominator");
    return Rat(num, den);
}

}  // namespace quatring
