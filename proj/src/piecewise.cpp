#include "sigmalab/piecewise.hpp"

#include "sigmalab/errors.hpp"

#include <algorithm>

namespace sigmalab {

Piecewise::Piecewise() : cuts_{Dyadic::zero(), Dyadic::one()}, values_{Rat(0)} {}

void Piecewise::normalize() {
  std::vector<Dyadic> cuts{cuts_.front()};
  std::vector<Rat> values;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!values.empty() && values.back() == values_[i]) {
      cuts.back() = cuts_[i + 1];
    } else {
      values.push_back(values_[i]);
      cuts.push_back(cuts_[i + 1]);
    }
  }
  cuts_ = std::move(cuts);
  values_ = std::move(values);
}

Piecewise Piecewise::from_step(const Step& f) {
  struct Run {
    Dyadic lo, hi;
    Rat value;
  };
  std::vector<Run> runs;
  for (std::size_t i = 0; i < f.carrier.size(); ++i) {
    for (const auto& iv : f.carrier.atoms()[i].intervals()) {
      runs.push_back({iv.lo, iv.hi, f.values[i]});
    }
  }
  std::sort(runs.begin(), runs.end(), [](const Run& a, const Run& b) { return a.lo < b.lo; });
  Piecewise out;
  out.cuts_.clear();
  out.values_.clear();
  out.cuts_.push_back(Dyadic::zero());
  for (const auto& r : runs) {
    out.cuts_.push_back(r.hi);
    out.values_.push_back(r.value);
  }
  out.normalize();
  return out;
}

Piecewise Piecewise::zip(const Piecewise& f, const Piecewise& g,
                         const std::function<Rat(const Rat&, const Rat&)>& op) {
  Piecewise out;
  out.cuts_.clear();
  out.values_.clear();
  out.cuts_.push_back(Dyadic::zero());
  std::size_t i = 0, j = 0;
  while (i < f.values_.size() && j < g.values_.size()) {
    const Dyadic& f_end = f.cuts_[i + 1];
    const Dyadic& g_end = g.cuts_[j + 1];
    const Dyadic end = std::min(f_end, g_end);
    out.values_.push_back(op(f.values_[i], g.values_[j]));
    out.cuts_.push_back(end);
    if (f_end == end) ++i;
    if (g_end == end) ++j;
  }
  out.normalize();
  return out;
}

Piecewise Piecewise::pointwise_max(const Piecewise& f, const Piecewise& g) {
  return zip(f, g, [](const Rat& a, const Rat& b) { return a > b ? a : b; });
}

Piecewise Piecewise::pointwise_min(const Piecewise& f, const Piecewise& g) {
  return zip(f, g, [](const Rat& a, const Rat& b) { return a < b ? a : b; });
}

Piecewise Piecewise::map(const std::function<Rat(const Rat&)>& op) const {
  Piecewise out = *this;
  for (auto& v : out.values_) v = op(v);
  out.normalize();
  return out;
}

Rat Piecewise::measure_at_least(const Rat& threshold) const {
  Rat total = 0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] >= threshold) total += dyadic_diff(cuts_[i + 1], cuts_[i]);
  }
  return total;
}

Rat Piecewise::max_value() const {
  Rat best = values_.front();
  for (const auto& v : values_) {
    if (v > best) best = v;
  }
  return best;
}

Rat Piecewise::integral() const {
  Rat total = 0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    total += values_[i] * dyadic_diff(cuts_[i + 1], cuts_[i]);
  }
  return total;
}

Step Piecewise::to_step() const {
  std::vector<DSet> atoms;
  atoms.reserve(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    atoms.push_back(DSet::from_intervals({{cuts_[i], cuts_[i + 1]}}));
  }
  return Step(Partition(std::move(atoms)), values_);
}

} // namespace sigmalab
