#ifndef SIGMALAB_GALLERY_HPP
#define SIGMALAB_GALLERY_HPP

#include "sigmalab/algebra_seq.hpp"
#include "sigmalab/step.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sigmalab {

// The typewriter construction: three-atom algebras indexed by (n, k) whose
// conditional expectations of χ_[1/2,1) converge in every L^p but at no
// point of [0,1/2). Atom values are (1, 2/3, 2/(1+2^{n+1})) exactly.
//
// Per index: a core interval [1/2, 1-2^-n) climbing to [1/2,1); a small
// block made of one sweep cell of width 2^-(n+2) marching across [0,1/2)
// (all k per n, left to right) plus a fixed right-edge sliver of width
// 2^-(n+1); and the remainder. Blocks are enumerated n-major, k-minor, so
// every full block of indices performs one complete sweep of [0,1/2).
namespace typewriter {

inline constexpr std::size_t max_n = 14;

DSet core(std::size_t n);                  // [1/2, 1 - 2^-n); empty at n = 1
DSet sliver(std::size_t n);                // [1 - 2^-(n+1), 1)
DSet cell(std::size_t n, std::size_t k);   // [k 2^-(n+2), (k+1) 2^-(n+2)), k < 2^(n+1)
DSet block(std::size_t n, std::size_t k);  // cell ∪ sliver, measure 3·2^-(n+2)
DSet rest(std::size_t n, std::size_t k);   // complement of core ∪ block, measure 1/2 + 2^-(n+2)

// {core, block, rest}. Starts at n = 2: at n = 1 the core is empty and the
// three-atom structure collapses (the skipped first index is intentional).
Partition partition(std::size_t n, std::size_t k);

// n-major, k-minor flattening: flat_index(n, k) = sum_{m=2}^{n-1} 2^(m+1) + k.
std::size_t flat_index(std::size_t n, std::size_t k);
std::pair<std::size_t, std::size_t> from_flat(std::size_t flat);

// Number of flat indices through block n_max (inclusive): 2^(n_max+2) - 8.
std::size_t horizon_through(std::size_t n_max);

// 1-based block boundaries within the flattened sequence.
std::size_t block_first_position(std::size_t n); // 2^(n+1) - 7
std::size_t block_of_position(std::size_t pos);

AlgebraSeq sequence();

} // namespace typewriter

// Level-n dyadic partition: 2^n atoms of width 2^-n. Capped at level 20.
Partition dyadic_partition(std::size_t level);

enum class MartingaleDirection { increasing, decreasing };

// increasing: level n. decreasing: level max(top_level - n, 0).
Partition dyadic_martingale(std::size_t n, MartingaleDirection direction,
                            std::size_t top_level = 0);

// Exactness caps, overridable per scenario.
struct Caps {
  std::size_t generate_generators = 20;
  std::size_t boylan_atoms = 20;
  std::size_t sweep_pieces = std::size_t{1} << 20;
};

// A step function given either as an indicator or explicitly.
struct FunctionSpec {
  std::optional<DSet> indicator_set;
  std::optional<Step> explicit_step;
  Step build() const;
};

struct SequenceSpec {
  // Builtin path: one of builtin_names(), with integer params.
  std::string builtin;
  std::map<std::string, Rat> params;
  // Explicit path: per-index generator lists, fed through generate().
  std::vector<std::vector<DSet>> generator_lists;
  bool cycle = false;

  bool is_builtin() const { return !builtin.empty(); }
};

struct ScenarioSpec {
  SequenceSpec sequence;
  std::size_t horizon = 1;
  FunctionSpec function;
  std::vector<Rat> epsilons;
  std::vector<std::string> analyses;
  Caps caps;
  Rat cover_r = Rat(1, 2);   // threshold for the "cover" analysis
  Rat wperp_eps = Rat(1, 2); // level-set threshold for the "wperp" analysis
  std::optional<FunctionSpec> target; // defaults to the function itself
};

const std::vector<std::string>& builtin_names();

// Deterministic: structurally equal specs yield structurally equal
// partitions at every index.
AlgebraSeq from_spec(const ScenarioSpec& spec);

} // namespace sigmalab

#endif
