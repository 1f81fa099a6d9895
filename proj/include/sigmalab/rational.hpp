#ifndef SIGMALAB_RATIONAL_HPP
#define SIGMALAB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <string_view>

namespace sigmalab {

using Int = boost::multiprecision::cpp_int;

// All measures, function values and distances in the library are exact
// rationals. cpp_rational keeps gcd(|p|,q)=1 and q>=1 on every operation.
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// Canonical form "p/q", q always present: "0/1", "1/2", "-3/4".
std::string rat_to_string(const Rat& r);

// Accepts "p/q" or a bare integer "p". Throws ValidationError otherwise.
Rat parse_rat(std::string_view text);

// Decimal rendering for CSV output, rounded to `sig_digits` significant
// digits (round half away from zero). Lossy by design; JSON keeps the exact
// strings.
std::string rat_to_decimal(const Rat& r, std::size_t sig_digits = 15);

} // namespace sigmalab

#endif
