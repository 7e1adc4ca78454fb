#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace quatring {

// Exact rational arithmetic; all weights and distances in this library are
// rationals, never floats.
using Rat = boost::rational<std::int64_t>;

// base^exp with integer exp (negative allowed, base nonzero then).
Rat ratPow(const Rat& base, int exp);

// Canonical "num/den" form, e.g. "75/16", "4/1", "-1/2".
std::string ratToString(const Rat& value);

// Accepts "n" or "n/d" with optional leading minus.
Rat ratFromString(std::string_view text);

}  // namespace quatring
