#ifndef SIGMALAB_PARTITION_HPP
#define SIGMALAB_PARTITION_HPP

#include "sigmalab/dset.hpp"

#include <cstddef>
#include <vector>

namespace sigmalab {

// A finite sigma-subalgebra of [0,1), represented by its atoms: pairwise
// disjoint positive-measure DSets whose union is exactly [0,1), sorted by
// leftmost endpoint. Canonical form makes structural equality coincide with
// equality of the generated sigma-algebras.
class Partition {
public:
  // The trivial algebra {∅, [0,1)}.
  Partition();

  // Validates and canonically sorts the atoms.
  explicit Partition(std::vector<DSet> atoms);

  const std::vector<DSet>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }

  bool operator==(const Partition&) const = default;

private:
  std::vector<DSet> atoms_;
};

// Minimal sigma-algebra containing all input sets: atoms are the nonempty
// cells of the common refinement by each set and its complement. Caps the
// generator count (default 20) because the cell count is worst-case 2^k.
Partition generate(const std::vector<DSet>& sets, std::size_t max_generators = 20);

// Common refinement: atoms are all nonempty p ∩ q. The coarsest partition
// refining both (join in the sigma-algebra lattice).
Partition join(const Partition& p, const Partition& q);

// Finest partition coarsening both (the intersection sigma-algebra): atoms
// are the connected components of the overlap graph between the two atom
// sets, each component contributing the union of its members.
Partition meet(const Partition& p, const Partition& q);

// True iff a is exactly a union of atoms of p.
bool contains(const Partition& p, const DSet& a);

// Join refined with provenance so that step-function operations can look up
// which atom of each operand a refined cell came from.
struct JoinWithMaps {
  Partition joined;
  std::vector<std::size_t> left_index;  // per joined atom: index into p
  std::vector<std::size_t> right_index; // per joined atom: index into q
};
JoinWithMaps join_with_maps(const Partition& p, const Partition& q);

} // namespace sigmalab

#endif
