#ifndef SIGMALAB_ALGEBRA_SEQ_HPP
#define SIGMALAB_ALGEBRA_SEQ_HPP

#include "sigmalab/partition.hpp"
#include "sigmalab/rational.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace sigmalab {

// A deterministic sequence of finite sigma-subalgebras. The generator is a
// pure function of the 0-based flattened index; it must be total for every
// index below max_horizon and safe to call concurrently at distinct indices.
class AlgebraSeq {
public:
  AlgebraSeq(std::string name, std::map<std::string, Rat> params,
             std::function<Partition(std::size_t)> generator, std::size_t max_horizon);

  const std::string& name() const { return name_; }
  const std::map<std::string, Rat>& params() const { return params_; }
  std::size_t max_horizon() const { return max_horizon_; }

  // 1-based position n in 1..max_horizon (the convention used by every
  // sequence diagnostic); maps to generator(n-1).
  Partition at(std::size_t n) const;

  // Throws CapError when h exceeds max_horizon.
  void require_horizon(std::size_t h) const;

private:
  std::string name_;
  std::map<std::string, Rat> params_;
  std::function<Partition(std::size_t)> generator_;
  std::size_t max_horizon_;
};

// Horizon-truncated limit algebras. These are approximants computed from
// finitely many terms, not the true limits:
//   liminf_H = join over m of (meet of terms m..H)
//   limsup_H = meet over m of (join of terms m..H)
// where m runs over window starts leaving at least two indices (a singleton
// window's meet and join are the term itself and would collapse both
// aggregates to the final algebra). Monotone sequences that have stabilized
// by the horizon get liminf == limsup; strictly growing chains are one index
// apart. The per-m tail tables (all m, including the singleton) are reported
// alongside so callers can inspect how the approximants move.
struct LimitAlgebraReport {
  Partition liminf;
  Partition limsup;
  std::vector<Partition> tail_meets; // entry m-1: meet of terms m..H
  std::vector<Partition> tail_joins; // entry m-1: join of terms m..H
};

LimitAlgebraReport limit_algebras(const AlgebraSeq& seq, std::size_t horizon);

Partition liminf_algebra(const AlgebraSeq& seq, std::size_t horizon);
Partition limsup_algebra(const AlgebraSeq& seq, std::size_t horizon);

} // namespace sigmalab

#endif
