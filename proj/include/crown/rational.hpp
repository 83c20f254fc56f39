#ifndef CROWN_RATIONAL_HPP
#define CROWN_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace crown {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::rational<BigInt>;

inline Rat ratFromInt(long long v) { return Rat(BigInt(v)); }

/// Parses "p/q", "p", or a plain decimal like "1.25" into an exact rational.
Rat parseRat(const std::string& text);

/// Canonical "p/q" form ("p" alone when q == 1).
std::string formatRat(const Rat& r);

/// Decimal rendering for display contexts (SVG); exact when the
/// denominator divides a power of ten, otherwise throws.
std::string formatRatDecimal(const Rat& r);

inline long long toLongLong(const BigInt& v) {
    return static_cast<long long>(v);
}

}  // namespace crown

#endif
