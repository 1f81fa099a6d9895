#include "sigmalab/dyadic.hpp"

#include "sigmalab/errors.hpp"

#include <sstream>

namespace sigmalab {

Dyadic::Dyadic(Int numerator, std::uint32_t level) : num_(std::move(numerator)), level_(level) {
  if (num_ < 0) throw ValidationError("dyadic numerator must be non-negative");
  while (level_ > 0 && (num_ & 1) == 0) {
    num_ >>= 1;
    --level_;
  }
  if (num_ > (Int(1) << level_)) {
    throw ValidationError("dyadic value exceeds 1: " + to_string());
  }
}

Rat Dyadic::to_rat() const { return Rat(num_, Int(1) << level_); }

std::strong_ordering Dyadic::operator<=>(const Dyadic& other) const {
  const std::uint32_t common = std::max(level_, other.level_);
  const Int lhs = num_ << (common - level_);
  const Int rhs = other.num_ << (common - other.level_);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Dyadic::to_string() const {
  std::ostringstream out;
  out << num_ << '/' << (Int(1) << level_);
  return out.str();
}

Dyadic Dyadic::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (text == "0") return Dyadic();
    if (text == "1") return Dyadic(1, 0);
    throw ValidationError("bad dyadic literal: " + std::string(text));
  }
  const Rat r = parse_rat(text);
  if (r < 0 || r > 1) throw ValidationError("dyadic endpoint outside [0,1]: " + std::string(text));
  const Int q = den(r);
  std::uint32_t level = 0;
  Int probe = q;
  while ((probe & 1) == 0) {
    probe >>= 1;
    ++level;
  }
  if (probe != 1) {
    throw ValidationError("denominator is not a power of two: " + std::string(text));
  }
  return Dyadic(num(r), level);
}

Rat dyadic_diff(const Dyadic& b, const Dyadic& a) { return b.to_rat() - a.to_rat(); }

} // namespace sigmalab
