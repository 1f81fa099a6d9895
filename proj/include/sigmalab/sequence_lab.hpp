#ifndef SIGMALAB_SEQUENCE_LAB_HPP
#define SIGMALAB_SEQUENCE_LAB_HPP

#include "sigmalab/algebra_seq.hpp"
#include "sigmalab/dset.hpp"
#include "sigmalab/step.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace sigmalab {

// Every "→ 0" statement about a sequence is reported here as an exact
// finite-window statistic plus a verdict against an explicit tolerance.
// Nothing in this module claims a true limit.

// 1-based start of the last quartile of indices 1..h (the window the
// horizon verdicts are evaluated on).
std::size_t quartile_start(std::size_t h);

// Closed-form infimum of μ(A △ B) over members B of σ(Q):
// Σ over atoms q of min(μ(q∩A), μ(q∖A)).
Rat boylan_inf(const DSet& a, const Partition& q);

// Hausdorff-style distance between sigma-algebras:
//   sup_{A∈σ(P)} inf_{B∈σ(Q)} μ(A△B) + sup_{B∈σ(Q)} inf_{A∈σ(P)} μ(A△B).
// The suprema enumerate all 2^|atoms| members (Gray-code incremental), so
// both partitions are capped at max_atoms.
Rat boylan_distance(const Partition& p, const Partition& q, std::size_t max_atoms = 20);

// Entry N (0-based, N < H): exact μ( ⋃_{N < n <= H} (A_n △ A) ), where sets
// holds A_1..A_H. Non-increasing in N.
std::vector<Rat> tail_symdiff_profile(const std::vector<DSet>& sets, const DSet& a);

// Horizon diagnostics for the equivalence between pointwise convergence of
// indicators, the tail-set identities, and tail-symmetric-difference decay.
// inner/outer use windows of at least two indices (a single-index tail
// intersection is the set itself and says nothing).
struct TailSetReport {
  DSet inner;               // ⋃_N ⋂_{N<n<=H} A_n over N = 0..H-2
  DSet outer;               // ⋂_N ⋃_{N<n<=H} A_n over N = 0..H-2
  std::vector<Rat> profile; // tail_symdiff_profile(sets, a)
  Rat d_inner;              // μ(A △ inner), always <= profile[0]
  Rat d_outer;              // μ(A △ outer), always <= profile[0]
  bool profile_decayed;     // profile at the last quartile <= profile[0]/2 (or all zero)
  bool sets_agree;          // μ(inner △ outer) <= profile at the last quartile
  bool consistent_at_horizon; // profile_decayed && sets_agree
};
TailSetReport tail_set_crosscheck(const std::vector<DSet>& sets, const DSet& a);

// Entry n-1: μ(A △ best_approx(A, seq[n])) for n = 1..H. Zero tail means A
// looks μ-approachable at this horizon.
std::vector<Rat> mu_approach_profile(const AlgebraSeq& seq, const DSet& a, std::size_t horizon);

// Witness for "A is uniformly covered": per index the super-level selection
// A_n = { E(χ_A | 𝔄_n) >= r } (threshold coincidences included), the
// seminorms ‖χ_{A∖A_n}‖_{𝔄_n} (each strictly below r by construction), and
// the tail symmetric-difference profile of the selection against A.
struct CoverWitness {
  Rat r;
  std::vector<DSet> sets;        // entry n-1: A_n, a union of atoms of seq[n]
  std::vector<Rat> tail_symdiff; // tail_symdiff_profile(sets, A)
  std::vector<Rat> seminorms;    // entry n-1
};
CoverWitness uniform_cover_witness(const AlgebraSeq& seq, const DSet& a, const Rat& r,
                                   std::size_t horizon);

struct CoverVerdict {
  std::size_t quartile_start; // 1-based
  Rat max_tail_symdiff;       // over last-quartile window starts
  Rat max_seminorm;           // over last-quartile indices
  bool cond_i_pass;           // max_tail_symdiff <= eps
  bool cond_ii_pass;          // max_seminorm <= eps
  bool pass;
};
// Recomputes the tail profile from w.sets and a (cross-checking the stored
// one) and evaluates both covering conditions at tolerance eps.
CoverVerdict check_uniform_cover(const CoverWitness& w, const DSet& a, const Rat& eps);

enum class CombineMode { intersect, union_ };

// Per-index Boolean combination of two witnesses for the same sequence and
// horizon; diagnostics are recomputed against a ∘ b and the subadditivity
// bound seminorm(combined) <= seminorm(w1) + seminorm(w2) is recorded.
struct CombineResult {
  CoverWitness combined;
  std::vector<Rat> bound_slack; // entry n-1: (sem1 + sem2) - sem_combined, >= 0 when bound holds
  bool subadditive_ok;
};
CombineResult combine_witnesses(const AlgebraSeq& seq, const CoverWitness& w1, const DSet& a,
                                const CoverWitness& w2, const DSet& b, CombineMode mode);

// Full almost-everywhere diagnostic for g_n = E(f | 𝔄_n) against a target:
// per-index distances, exact pointwise tail suprema sup_{N<=n<=H} |g_n - f|
// for every window start N, their exceedance measures on an epsilon grid,
// and the pointwise extremes of g_n over the last-quartile window.
struct ConvergenceReport {
  std::size_t horizon = 0;
  std::vector<Rat> eps_grid;
  std::vector<Rat> l1;   // entry n-1: ‖g_n - target‖_1
  std::vector<Rat> l2sq; // entry n-1: ‖g_n - target‖_2^2
  std::vector<Rat> sup;  // entry n-1: ‖g_n - target‖_∞
  // Snapshots of the tail-sup function, keyed by 1-based window start N.
  // All window starts when H <= 64, otherwise 64 evenly spaced ones; the
  // exceedance table below always covers every N.
  std::map<std::size_t, Step> tail_sup;
  // exceedance[N-1][e] = μ{ tail_sup_N >= eps_grid[e] }; non-increasing in
  // both N and the epsilon.
  std::vector<std::vector<Rat>> exceedance;
  std::size_t tail_window_start = 0; // 1-based quartile start N*
  Step tail_limsup; // pointwise max of g_n over n in [N*, H]
  Step tail_liminf; // pointwise min of g_n over n in [N*, H]
  bool l1_trend_pass = false;  // last-quartile max below first-quartile max (or zero)
  std::vector<bool> ae_pass;   // per eps: exceedance(N*, eps) <= eps
};
ConvergenceReport ae_report(const AlgebraSeq& seq, const Step& f, const Step& target,
                            std::size_t horizon, std::vector<Rat> eps_grid,
                            std::size_t piece_cap = std::size_t{1} << 20);

// Horizon consistency of the covering characterization: a.e.-style verdict
// for χ_A on one side, covering witnesses for A and its complement at level
// r on the other. consistent means the two sides agree at this horizon.
struct CoveringCrosscheck {
  ConvergenceReport ae;
  CoverWitness witness_set;
  CoverWitness witness_complement;
  CoverVerdict verdict_set;
  CoverVerdict verdict_complement;
  bool ae_pass = false;
  bool witnesses_pass = false;
  bool consistent = false;
};
CoveringCrosscheck covering_crosscheck(const AlgebraSeq& seq, const DSet& a, const Rat& r,
                                       std::size_t horizon, const Rat& eps);

// h = Σ_k E(χ_{B_k} | 𝔄_k) over finitely many pairwise disjoint B_k with
// window_start <= k < window_end. ‖h‖_1 equals μ(⋃ B_k) exactly (checked on
// construction).
struct CNElement {
  std::size_t window_start = 0; // 1-based N
  std::size_t window_end = 0;   // M, parts live in [N, M)
  std::vector<std::pair<std::size_t, DSet>> parts;
  Step h;
  Rat l1;
  Rat l2sq;
};
CNElement cn_element(const AlgebraSeq& seq, std::size_t window_start, std::size_t window_end,
                     std::vector<std::pair<std::size_t, DSet>> parts);

// The constructive pairing witness: A_n = { |E(f|𝔄_n)| > eps } (strict),
// disjointified left to right into B_k, h = Σ E(χ_{B_k}|𝔄_k). Returns the
// element and the exact pairing ⟨h, f⟩, verifying the adjointness identity
// ⟨h,f⟩ = Σ_k ⟨χ_{B_k}, E(f|𝔄_k)⟩ internally.
std::pair<CNElement, Rat> wperp_witness(const AlgebraSeq& seq, const Step& f, const Rat& eps,
                                        std::size_t window_start, std::size_t window_end);

// wperp_witness pairing for every window [N, H), N = 1..H-1.
std::vector<Rat> pairing_profile(const AlgebraSeq& seq, const Step& f, const Rat& eps,
                                 std::size_t horizon);

} // namespace sigmalab

#endif
