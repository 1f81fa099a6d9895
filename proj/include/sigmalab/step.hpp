#ifndef SIGMALAB_STEP_HPP
#define SIGMALAB_STEP_HPP

#include "sigmalab/partition.hpp"
#include "sigmalab/rational.hpp"

#include <vector>

namespace sigmalab {

// A step function: one exact rational value per atom of its carrier.
// Adjacent atoms with equal values are merged only when rendering; the
// carrier is kept as constructed so operations stay aligned with it.
struct Step {
  Partition carrier;
  std::vector<Rat> values;

  Step() : carrier(), values{Rat(0)} {}
  Step(Partition c, std::vector<Rat> v);

  static Step constant(const Rat& value);
};

Step indicator(const DSet& a);

Rat integrate(const Step& f);

// ⟨f,g⟩ = ∫ f·g dμ, evaluated on the join of the carriers.
Rat inner(const Step& f, const Step& g);

// Conditional expectation onto the algebra generated by b: on every atom the
// average ⟨f, χ_atom⟩ / μ(atom). Exact; the carrier of the result is b.
Step cond_exp(const Step& f, const Partition& b);

// f minus its conditional expectation, on the join of the carriers.
Step cond_exp_perp(const Step& f, const Partition& b);

// ‖f‖_B = ‖E(f|B)‖_∞ (max over atoms of |conditional-expectation value|).
Rat seminorm(const Step& f, const Partition& b);

// For indicators the seminorm has a direct form: max over atoms b of
// μ(A∩b)/μ(b). Kept as an independent computation route from seminorm().
Rat indicator_seminorm_ratio(const DSet& a, const Partition& b);

enum class Norm { l1, l2_squared, sup };

// Exact ‖f-g‖_1, ‖f-g‖_2^2 (squared so the result stays rational), or the
// essential sup (max over join atoms, exact since atoms have positive
// measure).
Rat lp_dist(const Step& f, const Step& g, Norm which);

// The member of σ(p) minimizing μ(A △ ·): the union of atoms covered more
// than half by A. An exact tie μ(p∩A) = μ(p)/2 excludes the atom (both
// choices minimize; exclusion is the canonical smaller witness).
DSet best_approx(const DSet& a, const Partition& p);

// Pointwise arithmetic (results live on the join of the carriers).
Step step_add(const Step& f, const Step& g);
Step step_sub(const Step& f, const Step& g);
Step step_scale(const Rat& c, const Step& f);
Step step_abs(const Step& f);

// Pointwise equality as functions (carriers may differ).
bool same_function(const Step& f, const Step& g);

} // namespace sigmalab

#endif
