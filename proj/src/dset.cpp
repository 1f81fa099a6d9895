#include "sigmalab/dset.hpp"

#include "sigmalab/errors.hpp"

#include <algorithm>

namespace sigmalab {

namespace {

// Boundary sweep over the union of both interval lists. Both inputs are
// canonical, so membership flips are single events and a two-flag walk over
// the merged endpoint sequence is enough for every Boolean combination.
template <typename Keep>
std::vector<Interval> sweep(const std::vector<Interval>& a, const std::vector<Interval>& b,
                            Keep keep) {
  struct Event {
    Dyadic at;
    int side; // 0 = a, 1 = b
    bool open;
  };
  std::vector<Event> events;
  events.reserve(2 * (a.size() + b.size()));
  for (const auto& iv : a) {
    events.push_back({iv.lo, 0, true});
    events.push_back({iv.hi, 0, false});
  }
  for (const auto& iv : b) {
    events.push_back({iv.lo, 1, true});
    events.push_back({iv.hi, 1, false});
  }
  std::sort(events.begin(), events.end(),
            [](const Event& x, const Event& y) { return x.at < y.at; });

  std::vector<Interval> out;
  bool in_a = false, in_b = false;
  bool in_result = false;
  Dyadic run_start;
  std::size_t i = 0;
  while (i < events.size()) {
    const Dyadic here = events[i].at;
    while (i < events.size() && events[i].at == here) {
      (events[i].side == 0 ? in_a : in_b) = events[i].open;
      ++i;
    }
    const bool now = keep(in_a, in_b);
    if (now && !in_result) {
      run_start = here;
      in_result = true;
    } else if (!now && in_result) {
      if (!out.empty() && out.back().hi == run_start) {
        out.back().hi = here; // merge adjacency
      } else {
        out.push_back({run_start, here});
      }
      in_result = false;
    }
  }
  // Canonical inputs end every run with a closing event, so the sweep always
  // terminates outside the result set.
  return out;
}

} // namespace

DSet DSet::from_intervals(const std::vector<Interval>& raw) {
  std::vector<Interval> kept;
  kept.reserve(raw.size());
  for (const auto& iv : raw) {
    if (iv.lo > iv.hi) {
      throw ValidationError("reversed interval endpoints: [" + iv.lo.to_string() + ", " +
                            iv.hi.to_string() + ")");
    }
    if (iv.lo == iv.hi) continue; // empty
    kept.push_back(iv);
  }
  std::sort(kept.begin(), kept.end(), [](const Interval& x, const Interval& y) {
    return x.lo < y.lo || (x.lo == y.lo && x.hi < y.hi);
  });
  DSet result;
  for (const auto& iv : kept) {
    if (!result.intervals_.empty() && iv.lo <= result.intervals_.back().hi) {
      if (iv.hi > result.intervals_.back().hi) result.intervals_.back().hi = iv.hi;
    } else {
      result.intervals_.push_back(iv);
    }
  }
  return result;
}

DSet DSet::from_intervals(std::initializer_list<Interval> raw) {
  return from_intervals(std::vector<Interval>(raw));
}

Rat DSet::measure() const {
  Rat total = 0;
  for (const auto& iv : intervals_) total += dyadic_diff(iv.hi, iv.lo);
  return total;
}

bool DSet::before(const DSet& other) const {
  if (intervals_.empty() || other.intervals_.empty()) {
    return !intervals_.empty() ? false : !other.intervals_.empty();
  }
  for (std::size_t i = 0; i < std::min(intervals_.size(), other.intervals_.size()); ++i) {
    if (intervals_[i].lo != other.intervals_[i].lo) {
      return intervals_[i].lo < other.intervals_[i].lo;
    }
    if (intervals_[i].hi != other.intervals_[i].hi) {
      return intervals_[i].hi < other.intervals_[i].hi;
    }
  }
  return intervals_.size() < other.intervals_.size();
}

DSet set_union(const DSet& a, const DSet& b) {
  DSet r;
  r.intervals_ = sweep(a.intervals_, b.intervals_, [](bool x, bool y) { return x || y; });
  return r;
}

DSet set_intersect(const DSet& a, const DSet& b) {
  DSet r;
  r.intervals_ = sweep(a.intervals_, b.intervals_, [](bool x, bool y) { return x && y; });
  return r;
}

DSet set_diff(const DSet& a, const DSet& b) {
  DSet r;
  r.intervals_ = sweep(a.intervals_, b.intervals_, [](bool x, bool y) { return x && !y; });
  return r;
}

DSet set_symdiff(const DSet& a, const DSet& b) {
  DSet r;
  r.intervals_ = sweep(a.intervals_, b.intervals_, [](bool x, bool y) { return x != y; });
  return r;
}

DSet set_complement(const DSet& a) { return set_diff(DSet::full(), a); }

bool subset_of(const DSet& a, const DSet& b) { return set_diff(a, b).empty(); }

DSet boolean_combine(BoolOp op, const DSet& a, const DSet* b) {
  switch (op) {
    case BoolOp::complement:
      if (b != nullptr) throw ValidationError("complement takes one operand");
      return set_complement(a);
    case BoolOp::union_:
    case BoolOp::intersect:
    case BoolOp::sym_diff:
      if (b == nullptr) throw ValidationError("binary set operation needs two operands");
      break;
  }
  switch (op) {
    case BoolOp::union_: return set_union(a, *b);
    case BoolOp::intersect: return set_intersect(a, *b);
    case BoolOp::sym_diff: return set_symdiff(a, *b);
    default: return set_complement(a);
  }
}

} // namespace sigmalab
