#ifndef SIGMALAB_PIECEWISE_HPP
#define SIGMALAB_PIECEWISE_HPP

#include "sigmalab/dyadic.hpp"
#include "sigmalab/step.hpp"

#include <functional>
#include <vector>

namespace sigmalab {

// Run-length view of a step function: cuts 0 = c_0 < c_1 < ... < c_m = 1 and
// one value per run, adjacent runs always holding distinct values. This is
// the compact form used by the pointwise sweeps in the sequence lab, where a
// running max over thousands of indices stays at a handful of runs as long
// as the sequence has structure (the per-atom Step form would not).
class Piecewise {
public:
  Piecewise(); // constant zero

  static Piecewise from_step(const Step& f);

  const std::vector<Dyadic>& cuts() const { return cuts_; }
  const std::vector<Rat>& values() const { return values_; }
  std::size_t runs() const { return values_.size(); }

  // Merged-boundary pointwise combination.
  static Piecewise zip(const Piecewise& f, const Piecewise& g,
                       const std::function<Rat(const Rat&, const Rat&)>& op);

  static Piecewise pointwise_max(const Piecewise& f, const Piecewise& g);
  static Piecewise pointwise_min(const Piecewise& f, const Piecewise& g);

  Piecewise map(const std::function<Rat(const Rat&)>& op) const;

  // μ{ x : value(x) >= threshold }.
  Rat measure_at_least(const Rat& threshold) const;

  Rat max_value() const;
  Rat integral() const;

  // Materializes a Step on the runs (each run one atom).
  Step to_step() const;

  bool operator==(const Piecewise&) const = default;

private:
  std::vector<Dyadic> cuts_;
  std::vector<Rat> values_;
  void normalize();
};

} // namespace sigmalab

#endif
