#include "sigmalab/partition.hpp"

#include "sigmalab/errors.hpp"

#include <algorithm>
#include <numeric>

namespace sigmalab {

namespace {

void validate_cover(const std::vector<DSet>& atoms) {
  // Disjointness + exact cover of [0,1) in one pass: the concatenated
  // interval lists must tile [0,1) with no gaps or overlaps.
  std::vector<Interval> all;
  for (const auto& atom : atoms) {
    if (atom.empty()) throw ValidationError("partition atom with measure zero");
    all.insert(all.end(), atom.intervals().begin(), atom.intervals().end());
  }
  std::sort(all.begin(), all.end(),
            [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  Dyadic cursor = Dyadic::zero();
  for (const auto& iv : all) {
    if (iv.lo != cursor) {
      throw ValidationError("atoms do not tile [0,1): gap or overlap at " + iv.lo.to_string());
    }
    cursor = iv.hi;
  }
  if (cursor != Dyadic::one()) {
    throw ValidationError("atoms do not cover [0,1): stop at " + cursor.to_string());
  }
}

} // namespace

Partition::Partition() : atoms_{DSet::full()} {}

Partition::Partition(std::vector<DSet> atoms) : atoms_(std::move(atoms)) {
  validate_cover(atoms_);
  std::sort(atoms_.begin(), atoms_.end(),
            [](const DSet& x, const DSet& y) { return x.before(y); });
}

Partition generate(const std::vector<DSet>& sets, std::size_t max_generators) {
  if (sets.size() > max_generators) {
    throw CapError("generate: " + std::to_string(sets.size()) + " generators exceed cap " +
                   std::to_string(max_generators));
  }
  std::vector<DSet> cells{DSet::full()};
  for (const auto& s : sets) {
    std::vector<DSet> next;
    next.reserve(2 * cells.size());
    for (const auto& cell : cells) {
      DSet inside = set_intersect(cell, s);
      DSet outside = set_diff(cell, s);
      if (!inside.empty()) next.push_back(std::move(inside));
      if (!outside.empty()) next.push_back(std::move(outside));
    }
    cells = std::move(next);
  }
  return Partition(std::move(cells));
}

JoinWithMaps join_with_maps(const Partition& p, const Partition& q) {
  struct Cell {
    DSet set;
    std::size_t pi, qi;
  };
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      DSet x = set_intersect(p.atoms()[i], q.atoms()[j]);
      if (!x.empty()) cells.push_back({std::move(x), i, j});
    }
  }
  std::sort(cells.begin(), cells.end(),
            [](const Cell& a, const Cell& b) { return a.set.before(b.set); });
  JoinWithMaps out;
  std::vector<DSet> atoms;
  atoms.reserve(cells.size());
  out.left_index.reserve(cells.size());
  out.right_index.reserve(cells.size());
  for (auto& c : cells) {
    atoms.push_back(std::move(c.set));
    out.left_index.push_back(c.pi);
    out.right_index.push_back(c.qi);
  }
  out.joined = Partition(std::move(atoms));
  return out;
}

Partition join(const Partition& p, const Partition& q) { return join_with_maps(p, q).joined; }

Partition meet(const Partition& p, const Partition& q) {
  // Union-find over the atoms of p and q; nodes are linked when the atoms
  // overlap. Each connected component's union is one atom of the meet.
  const std::size_t n = p.size() + q.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };

  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (!set_intersect(p.atoms()[i], q.atoms()[j]).empty()) {
        unite(i, p.size() + j);
      }
    }
  }

  std::vector<DSet> component(n); // indexed by root; p-atoms suffice to build the union
  for (std::size_t i = 0; i < p.size(); ++i) {
    const std::size_t root = find(i);
    component[root] = set_union(component[root], p.atoms()[i]);
  }
  std::vector<DSet> atoms;
  for (std::size_t r = 0; r < n; ++r) {
    if (find(r) == r && !component[r].empty()) atoms.push_back(component[r]);
  }
  return Partition(std::move(atoms));
}

bool contains(const Partition& p, const DSet& a) {
  for (const auto& atom : p.atoms()) {
    const DSet x = set_intersect(atom, a);
    if (!x.empty() && x != atom) return false;
  }
  return true;
}

} // namespace sigmalab
