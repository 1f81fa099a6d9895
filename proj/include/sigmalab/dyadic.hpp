#ifndef SIGMALAB_DYADIC_HPP
#define SIGMALAB_DYADIC_HPP

#include "sigmalab/rational.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace sigmalab {

// A dyadic rational num/2^level in [0,1]. Normalized so that either level==0
// or num is odd; this makes representation (and therefore every set built
// from dyadic endpoints) unique.
class Dyadic {
public:
  Dyadic() = default; // zero
  Dyadic(Int numerator, std::uint32_t level);

  static Dyadic zero() { return Dyadic(); }
  static Dyadic one() { return Dyadic(1, 0); }

  const Int& numerator() const { return num_; }
  std::uint32_t level() const { return level_; }

  Rat to_rat() const;

  bool operator==(const Dyadic& other) const = default;
  std::strong_ordering operator<=>(const Dyadic& other) const;

  // "k/2^j" in plain decimal: "0/1", "1/1", "1/2", "7/8".
  std::string to_string() const;
  // Accepts "k/q" with q a power of two, or a bare "0"/"1".
  static Dyadic parse(std::string_view text);

private:
  Int num_ = 0;
  std::uint32_t level_ = 0;
};

// Exact difference b - a as a rational (used for interval lengths).
Rat dyadic_diff(const Dyadic& b, const Dyadic& a);

} // namespace sigmalab

#endif
