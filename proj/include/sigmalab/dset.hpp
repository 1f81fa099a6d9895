#ifndef SIGMALAB_DSET_HPP
#define SIGMALAB_DSET_HPP

#include "sigmalab/dyadic.hpp"
#include "sigmalab/rational.hpp"

#include <initializer_list>
#include <utility>
#include <vector>

namespace sigmalab {

// Half-open interval [lo, hi) with dyadic endpoints.
struct Interval {
  Dyadic lo;
  Dyadic hi;
  bool operator==(const Interval&) const = default;
};

// A measurable subset of [0,1): a finite union of half-open dyadic intervals
// kept in canonical form — sorted, pairwise disjoint, adjacent intervals
// merged. Canonical form is unique, so structural equality coincides with
// almost-everywhere equality (dyadic sets have no nonempty null sets).
class DSet {
public:
  DSet() = default; // the empty set

  static DSet full() { return DSet::from_intervals({{Dyadic::zero(), Dyadic::one()}}); }

  // Normalizes arbitrary (possibly overlapping) input intervals into
  // canonical form. A pair with lo == hi is the empty interval and is
  // dropped; lo > hi is rejected.
  static DSet from_intervals(const std::vector<Interval>& raw);
  static DSet from_intervals(std::initializer_list<Interval> raw);

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }

  Rat measure() const;

  bool operator==(const DSet&) const = default;

  // Total order used for canonical sorting of partition atoms: by leftmost
  // endpoint, then rightmost, then interval list.
  bool before(const DSet& other) const;

  friend DSet set_union(const DSet& a, const DSet& b);
  friend DSet set_intersect(const DSet& a, const DSet& b);
  friend DSet set_diff(const DSet& a, const DSet& b);
  friend DSet set_symdiff(const DSet& a, const DSet& b);
  friend DSet set_complement(const DSet& a);

  // True iff a is a subset of b.
  friend bool subset_of(const DSet& a, const DSet& b);

private:
  std::vector<Interval> intervals_;
};

enum class BoolOp { union_, intersect, complement, sym_diff };

// Single-entry dispatcher; complement takes one operand (b must be null).
DSet boolean_combine(BoolOp op, const DSet& a, const DSet* b);

} // namespace sigmalab

#endif
