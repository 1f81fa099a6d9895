#include "sigmalab/step.hpp"

#include "sigmalab/errors.hpp"

#include <utility>

namespace sigmalab {

Step::Step(Partition c, std::vector<Rat> v) : carrier(std::move(c)), values(std::move(v)) {
  if (carrier.size() != values.size()) {
    throw ValidationError("step needs one value per carrier atom: " +
                          std::to_string(carrier.size()) + " atoms, " +
                          std::to_string(values.size()) + " values");
  }
}

Step Step::constant(const Rat& value) { return Step(Partition(), {value}); }

Step indicator(const DSet& a) {
  if (a.empty()) return Step::constant(0);
  if (a == DSet::full()) return Step::constant(1);
  const Partition carrier = generate({a});
  std::vector<Rat> values;
  values.reserve(carrier.size());
  for (const auto& atom : carrier.atoms()) {
    values.push_back(subset_of(atom, a) ? Rat(1) : Rat(0));
  }
  return Step(carrier, std::move(values));
}

Rat integrate(const Step& f) {
  Rat total = 0;
  for (std::size_t i = 0; i < f.carrier.size(); ++i) {
    total += f.values[i] * f.carrier.atoms()[i].measure();
  }
  return total;
}

Rat inner(const Step& f, const Step& g) {
  const JoinWithMaps jm = join_with_maps(f.carrier, g.carrier);
  Rat total = 0;
  for (std::size_t i = 0; i < jm.joined.size(); ++i) {
    total += f.values[jm.left_index[i]] * g.values[jm.right_index[i]] *
             jm.joined.atoms()[i].measure();
  }
  return total;
}

Step cond_exp(const Step& f, const Partition& b) {
  const JoinWithMaps jm = join_with_maps(f.carrier, b);
  std::vector<Rat> sums(b.size(), Rat(0));
  for (std::size_t i = 0; i < jm.joined.size(); ++i) {
    sums[jm.right_index[i]] += f.values[jm.left_index[i]] * jm.joined.atoms()[i].measure();
  }
  std::vector<Rat> values(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) {
    values[j] = sums[j] / b.atoms()[j].measure();
  }
  return Step(b, std::move(values));
}

namespace {

template <typename Op>
Step zip(const Step& f, const Step& g, Op op) {
  const JoinWithMaps jm = join_with_maps(f.carrier, g.carrier);
  std::vector<Rat> values;
  values.reserve(jm.joined.size());
  for (std::size_t i = 0; i < jm.joined.size(); ++i) {
    values.push_back(op(f.values[jm.left_index[i]], g.values[jm.right_index[i]]));
  }
  return Step(jm.joined, std::move(values));
}

} // namespace

Step cond_exp_perp(const Step& f, const Partition& b) { return step_sub(f, cond_exp(f, b)); }

Rat seminorm(const Step& f, const Partition& b) {
  const Step e = cond_exp(f, b);
  Rat best = 0;
  for (const auto& v : e.values) {
    const Rat a = rat_abs(v);
    if (a > best) best = a;
  }
  return best;
}

Rat indicator_seminorm_ratio(const DSet& a, const Partition& b) {
  Rat best = 0;
  for (const auto& atom : b.atoms()) {
    const Rat ratio = set_intersect(a, atom).measure() / atom.measure();
    if (ratio > best) best = ratio;
  }
  return best;
}

Rat lp_dist(const Step& f, const Step& g, Norm which) {
  const JoinWithMaps jm = join_with_maps(f.carrier, g.carrier);
  Rat total = 0;
  for (std::size_t i = 0; i < jm.joined.size(); ++i) {
    const Rat d = rat_abs(f.values[jm.left_index[i]] - g.values[jm.right_index[i]]);
    switch (which) {
      case Norm::l1: total += d * jm.joined.atoms()[i].measure(); break;
      case Norm::l2_squared: total += d * d * jm.joined.atoms()[i].measure(); break;
      case Norm::sup:
        if (d > total) total = d;
        break;
    }
  }
  return total;
}

DSet best_approx(const DSet& a, const Partition& p) {
  DSet out;
  for (const auto& atom : p.atoms()) {
    if (2 * set_intersect(a, atom).measure() > atom.measure()) {
      out = set_union(out, atom);
    }
  }
  return out;
}

Step step_add(const Step& f, const Step& g) {
  return zip(f, g, [](const Rat& x, const Rat& y) { return x + y; });
}

Step step_sub(const Step& f, const Step& g) {
  return zip(f, g, [](const Rat& x, const Rat& y) { return x - y; });
}

Step step_scale(const Rat& c, const Step& f) {
  std::vector<Rat> values;
  values.reserve(f.values.size());
  for (const auto& v : f.values) values.push_back(c * v);
  return Step(f.carrier, std::move(values));
}

Step step_abs(const Step& f) {
  std::vector<Rat> values;
  values.reserve(f.values.size());
  for (const auto& v : f.values) values.push_back(rat_abs(v));
  return Step(f.carrier, std::move(values));
}

bool same_function(const Step& f, const Step& g) {
  return lp_dist(f, g, Norm::sup) == 0;
}

} // namespace sigmalab
