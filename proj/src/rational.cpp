#include "sigmalab/rational.hpp"

#include "sigmalab/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace sigmalab {

std::string rat_to_string(const Rat& r) {
  std::ostringstream out;
  out << num(r) << '/' << den(r);
  return out.str();
}

namespace {

Int parse_int(std::string_view text) {
  if (text.empty()) throw ValidationError("empty integer literal");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) throw ValidationError("sign without digits");
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ValidationError("bad integer literal: " + std::string(text));
    }
  }
  return Int(std::string(text));
}

} // namespace

Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  const Int p = parse_int(text.substr(0, slash));
  const Int q = parse_int(text.substr(slash + 1));
  if (q <= 0) throw ValidationError("rational denominator must be positive: " + std::string(text));
  return Rat(p, q);
}

std::string rat_to_decimal(const Rat& r, std::size_t sig_digits) {
  if (sig_digits == 0) sig_digits = 1;
  if (r == 0) return "0";

  Int p = num(r);
  const Int q = den(r);
  const bool negative = p < 0;
  if (negative) p = -p;

  // Find exp10 = floor(log10(p/q)) by integer comparison, then compute
  // round(p/q * 10^(sig-1-exp10)) to get exactly `sig` digits.
  int exp10 = 0;
  Int lo = p, hi = q; // value = lo/hi scaled by 10^exp10
  while (lo < hi) {
    lo *= 10;
    --exp10;
  }
  while (lo >= hi * 10) {
    hi *= 10;
    ++exp10;
  }

  const int shift = static_cast<int>(sig_digits) - 1 - exp10;
  Int scaled_p = p, scaled_q = q;
  if (shift >= 0) {
    scaled_p *= boost::multiprecision::pow(Int(10), static_cast<unsigned>(shift));
  } else {
    scaled_q *= boost::multiprecision::pow(Int(10), static_cast<unsigned>(-shift));
  }
  Int digits = (2 * scaled_p + scaled_q) / (2 * scaled_q); // round half away from zero
  std::string ds = digits.str();
  if (ds.size() > sig_digits) { // rounding overflowed to the next power of ten
    ++exp10;
    ds.pop_back();
  }

  // Strip trailing zeros but keep at least one digit.
  while (ds.size() > 1 && ds.back() == '0') ds.pop_back();

  std::string out;
  if (exp10 >= 0 && exp10 <= 14) {
    if (static_cast<std::size_t>(exp10) + 1 >= ds.size()) {
      out = ds + std::string(exp10 + 1 - ds.size(), '0');
    } else {
      out = ds.substr(0, exp10 + 1) + "." + ds.substr(exp10 + 1);
    }
  } else if (exp10 < 0 && exp10 >= -4) {
    out = "0." + std::string(-exp10 - 1, '0') + ds;
  } else {
    out = ds.substr(0, 1);
    if (ds.size() > 1) out += "." + ds.substr(1);
    out += "e" + std::to_string(exp10);
  }
  return negative ? "-" + out : out;
}

} // namespace sigmalab
