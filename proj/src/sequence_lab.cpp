#include "sigmalab/sequence_lab.hpp"

#include "sigmalab/errors.hpp"
#include "sigmalab/piecewise.hpp"

#include <bit>
#include <algorithm>
#include <set>

namespace sigmalab {

std::size_t quartile_start(std::size_t h) {
  const std::size_t count = (h + 3) / 4;
  return h - count + 1;
}

Rat boylan_inf(const DSet& a, const Partition& q) {
  Rat total = 0;
  for (const auto& atom : q.atoms()) {
    const Rat in = set_intersect(a, atom).measure();
    const Rat out = atom.measure() - in;
    total += in < out ? in : out;
  }
  return total;
}

namespace {

// sup over all members U of sigma(P) of Sum_q min(mu(q∩U), mu(q\U)),
// walking subsets in Gray-code order so each step touches only the atoms of
// Q overlapping the flipped atom of P.
Rat one_sided_sup(const Partition& p, const Partition& q) {
  const std::size_t np = p.size(), nq = q.size();
  std::vector<Rat> q_measure(nq);
  for (std::size_t j = 0; j < nq; ++j) q_measure[j] = q.atoms()[j].measure();

  std::vector<std::vector<std::pair<std::size_t, Rat>>> overlaps(np);
  for (std::size_t i = 0; i < np; ++i) {
    for (std::size_t j = 0; j < nq; ++j) {
      const DSet x = set_intersect(p.atoms()[i], q.atoms()[j]);
      if (!x.empty()) overlaps[i].emplace_back(j, x.measure());
    }
  }

  std::vector<Rat> y(nq, Rat(0));       // mu(q ∩ U)
  std::vector<Rat> contrib(nq, Rat(0)); // min(y, mu(q) - y)
  std::vector<bool> in_u(np, false);
  Rat total = 0, best = 0;

  const std::uint64_t count = std::uint64_t{1} << np;
  for (std::uint64_t c = 1; c < count; ++c) {
    const std::size_t flip = static_cast<std::size_t>(std::countr_zero(c));
    in_u[flip] = !in_u[flip];
    const bool added = in_u[flip];
    for (const auto& [j, m] : overlaps[flip]) {
      total -= contrib[j];
      if (added) {
        y[j] += m;
      } else {
        y[j] -= m;
      }
      const Rat out = q_measure[j] - y[j];
      contrib[j] = y[j] < out ? y[j] : out;
      total += contrib[j];
    }
    if (total > best) best = total;
  }
  return best;
}

} // namespace

Rat boylan_distance(const Partition& p, const Partition& q, std::size_t max_atoms) {
  if (p.size() > max_atoms || q.size() > max_atoms) {
    throw CapError("boylan_distance: atom count " +
                   std::to_string(std::max(p.size(), q.size())) + " exceeds cap " +
                   std::to_string(max_atoms));
  }
  return one_sided_sup(p, q) + one_sided_sup(q, p);
}

std::vector<Rat> tail_symdiff_profile(const std::vector<DSet>& sets, const DSet& a) {
  const std::size_t h = sets.size();
  if (h == 0) throw ValidationError("tail_symdiff_profile needs at least one set");
  std::vector<Rat> profile(h);
  DSet tail; // union of A_n △ A over the suffix
  for (std::size_t n = h; n != 0; --n) {
    tail = set_union(tail, set_symdiff(sets[n - 1], a));
    profile[n - 1] = tail.measure();
  }
  return profile;
}

TailSetReport tail_set_crosscheck(const std::vector<DSet>& sets, const DSet& a) {
  const std::size_t h = sets.size();
  if (h < 2) throw ValidationError("tail_set_crosscheck needs at least two sets");

  TailSetReport report;
  report.profile = tail_symdiff_profile(sets, a);

  // Suffix windows of at least two indices. The suffix intersections grow
  // and the suffix unions shrink as the window shortens, so the aggregates
  // reduce to the shortest admissible window.
  report.inner = set_intersect(sets[h - 2], sets[h - 1]);
  report.outer = set_union(sets[h - 2], sets[h - 1]);
  report.d_inner = set_symdiff(a, report.inner).measure();
  report.d_outer = set_symdiff(a, report.outer).measure();

  // Provable at every horizon: both aggregates differ from A within the
  // union of tail symmetric differences over the same window.
  if (report.d_inner > report.profile[h - 2] || report.d_outer > report.profile[h - 2]) {
    throw InvariantError("tail_set_crosscheck: tail-set distance exceeds its profile bound");
  }

  const std::size_t probe = quartile_start(h) - 1; // 0-based window start
  report.profile_decayed =
      report.profile[0] == 0 || 2 * report.profile[probe] <= report.profile[0];
  report.sets_agree =
      set_symdiff(report.inner, report.outer).measure() <= report.profile[probe];
  report.consistent_at_horizon = report.profile_decayed && report.sets_agree;
  return report;
}

std::vector<Rat> mu_approach_profile(const AlgebraSeq& seq, const DSet& a, std::size_t horizon) {
  if (horizon == 0) throw ValidationError("horizon must be at least 1");
  seq.require_horizon(horizon);
  std::vector<Rat> profile;
  profile.reserve(horizon);
  for (std::size_t n = 1; n <= horizon; ++n) {
    profile.push_back(set_symdiff(a, best_approx(a, seq.at(n))).measure());
  }
  return profile;
}

namespace {

// Union of the atoms whose conditional-expectation value clears the
// threshold (>= when strict is false, > when true).
DSet level_selection(const Step& e, const Rat& threshold, bool strict, bool absolute) {
  DSet out;
  for (std::size_t i = 0; i < e.carrier.size(); ++i) {
    const Rat v = absolute ? rat_abs(e.values[i]) : e.values[i];
    if (strict ? v > threshold : v >= threshold) {
      out = set_union(out, e.carrier.atoms()[i]);
    }
  }
  return out;
}

} // namespace

CoverWitness uniform_cover_witness(const AlgebraSeq& seq, const DSet& a, const Rat& r,
                                   std::size_t horizon) {
  if (!(r > 0 && r < 1)) throw ValidationError("covering threshold must satisfy 0 < r < 1");
  if (horizon == 0) throw ValidationError("horizon must be at least 1");
  seq.require_horizon(horizon);

  CoverWitness w;
  w.r = r;
  const Step chi = indicator(a);
  w.sets.reserve(horizon);
  w.seminorms.reserve(horizon);
  for (std::size_t n = 1; n <= horizon; ++n) {
    const Partition algebra = seq.at(n);
    const Step e = cond_exp(chi, algebra);
    const DSet selected = level_selection(e, r, /*strict=*/false, /*absolute=*/false);
    w.sets.push_back(selected);
    const Rat sem = seminorm(indicator(set_diff(a, selected)), algebra);
    // The super-level cut makes this strict: every atom outside the
    // selection has conditional-expectation value below r.
    if (!(sem < r)) {
      throw InvariantError("uniform_cover_witness: seminorm bound violated at index " +
                           std::to_string(n));
    }
    w.seminorms.push_back(sem);
  }
  w.tail_symdiff = tail_symdiff_profile(w.sets, a);
  return w;
}

CoverVerdict check_uniform_cover(const CoverWitness& w, const DSet& a, const Rat& eps) {
  const std::size_t h = w.sets.size();
  if (h == 0) throw ValidationError("empty witness");
  const std::vector<Rat> profile = tail_symdiff_profile(w.sets, a);
  if (profile != w.tail_symdiff) {
    throw ValidationError("check_uniform_cover: witness does not match the given target set");
  }

  CoverVerdict verdict;
  verdict.quartile_start = quartile_start(h);
  verdict.max_tail_symdiff = 0;
  verdict.max_seminorm = 0;
  for (std::size_t n = verdict.quartile_start; n <= h; ++n) {
    verdict.max_tail_symdiff = std::max(verdict.max_tail_symdiff, profile[n - 1]);
    verdict.max_seminorm = std::max(verdict.max_seminorm, w.seminorms[n - 1]);
  }
  verdict.cond_i_pass = verdict.max_tail_symdiff <= eps;
  verdict.cond_ii_pass = verdict.max_seminorm <= eps;
  verdict.pass = verdict.cond_i_pass && verdict.cond_ii_pass;
  return verdict;
}

CombineResult combine_witnesses(const AlgebraSeq& seq, const CoverWitness& w1, const DSet& a,
                                const CoverWitness& w2, const DSet& b, CombineMode mode) {
  const std::size_t h = w1.sets.size();
  if (h != w2.sets.size()) {
    throw ValidationError("combine_witnesses: mismatched horizons " + std::to_string(h) +
                          " vs " + std::to_string(w2.sets.size()));
  }
  seq.require_horizon(h);

  const DSet target = mode == CombineMode::intersect ? set_intersect(a, b) : set_union(a, b);

  CombineResult result;
  // The threshold does not transfer through Boolean combination; the smaller
  // one is carried as information only.
  result.combined.r = std::min(w1.r, w2.r);
  result.combined.sets.reserve(h);
  result.combined.seminorms.reserve(h);
  result.bound_slack.reserve(h);
  result.subadditive_ok = true;
  for (std::size_t n = 1; n <= h; ++n) {
    const DSet& s1 = w1.sets[n - 1];
    const DSet& s2 = w2.sets[n - 1];
    const DSet combined_set =
        mode == CombineMode::intersect ? set_intersect(s1, s2) : set_union(s1, s2);
    result.combined.sets.push_back(combined_set);
    const Rat sem =
        seminorm(indicator(set_diff(target, combined_set)), seq.at(n));
    result.combined.seminorms.push_back(sem);
    const Rat slack = w1.seminorms[n - 1] + w2.seminorms[n - 1] - sem;
    if (slack < 0) result.subadditive_ok = false;
    result.bound_slack.push_back(slack);
  }
  result.combined.tail_symdiff = tail_symdiff_profile(result.combined.sets, target);
  return result;
}

ConvergenceReport ae_report(const AlgebraSeq& seq, const Step& f, const Step& target,
                            std::size_t horizon, std::vector<Rat> eps_grid,
                            std::size_t piece_cap) {
  if (horizon == 0) throw ValidationError("horizon must be at least 1");
  seq.require_horizon(horizon);

  ConvergenceReport report;
  report.horizon = horizon;
  report.eps_grid = std::move(eps_grid);
  report.l1.resize(horizon);
  report.l2sq.resize(horizon);
  report.sup.resize(horizon);
  report.exceedance.assign(horizon, {});
  report.tail_window_start = quartile_start(horizon);

  // Deterministic choice of window starts whose tail-sup Step is kept.
  std::set<std::size_t> snapshots;
  if (horizon <= 64) {
    for (std::size_t n = 1; n <= horizon; ++n) snapshots.insert(n);
  } else {
    for (std::size_t t = 0; t < 64; ++t) snapshots.insert(1 + ((horizon - 1) * t) / 63);
    snapshots.insert(report.tail_window_start);
  }

  // One backward pass: the tail sup over [N, H] is the running pointwise max
  // of the per-index differences while N walks down. Memory stays bounded by
  // the run count, never by the horizon.
  const Piecewise pw_target = Piecewise::from_step(target);
  Piecewise acc;
  Piecewise g_max, g_min;
  for (std::size_t n = horizon; n != 0; --n) {
    const Piecewise g_n = Piecewise::from_step(cond_exp(f, seq.at(n)));
    const Piecewise diff = Piecewise::zip(
        g_n, pw_target, [](const Rat& x, const Rat& y) { return rat_abs(x - y); });
    report.l1[n - 1] = diff.integral();
    report.l2sq[n - 1] = diff.map([](const Rat& v) { return v * v; }).integral();
    report.sup[n - 1] = diff.max_value();

    acc = (n == horizon) ? diff : Piecewise::pointwise_max(acc, diff);
    if (acc.runs() > piece_cap) {
      throw CapError("ae_report: tail-sup piece count " + std::to_string(acc.runs()) +
                     " exceeds cap " + std::to_string(piece_cap));
    }
    std::vector<Rat> row;
    row.reserve(report.eps_grid.size());
    for (const auto& eps : report.eps_grid) row.push_back(acc.measure_at_least(eps));
    report.exceedance[n - 1] = std::move(row);
    if (snapshots.count(n) != 0) report.tail_sup.emplace(n, acc.to_step());
    if (n == horizon) {
      g_max = g_n;
      g_min = g_n;
    } else if (n >= report.tail_window_start) {
      g_max = Piecewise::pointwise_max(g_max, g_n);
      g_min = Piecewise::pointwise_min(g_min, g_n);
    }
  }
  report.tail_limsup = g_max.to_step();
  report.tail_liminf = g_min.to_step();

  report.ae_pass.resize(report.eps_grid.size());
  for (std::size_t e = 0; e < report.eps_grid.size(); ++e) {
    report.ae_pass[e] =
        report.exceedance[report.tail_window_start - 1][e] <= report.eps_grid[e];
  }

  const std::size_t count = horizon - report.tail_window_start + 1;
  Rat first_max = 0, last_max = 0;
  for (std::size_t n = 1; n <= count; ++n) first_max = std::max(first_max, report.l1[n - 1]);
  for (std::size_t n = report.tail_window_start; n <= horizon; ++n) {
    last_max = std::max(last_max, report.l1[n - 1]);
  }
  report.l1_trend_pass = last_max == 0 || last_max < first_max;
  return report;
}

CoveringCrosscheck covering_crosscheck(const AlgebraSeq& seq, const DSet& a, const Rat& r,
                                       std::size_t horizon, const Rat& eps) {
  CoveringCrosscheck report;
  const Step chi = indicator(a);
  report.ae = ae_report(seq, chi, chi, horizon, {eps});
  report.witness_set = uniform_cover_witness(seq, a, r, horizon);
  report.witness_complement = uniform_cover_witness(seq, set_complement(a), r, horizon);
  report.verdict_set = check_uniform_cover(report.witness_set, a, eps);
  report.verdict_complement =
      check_uniform_cover(report.witness_complement, set_complement(a), eps);
  report.ae_pass = report.ae.ae_pass[0];
  report.witnesses_pass = report.verdict_set.pass && report.verdict_complement.pass;
  report.consistent = report.ae_pass == report.witnesses_pass;
  return report;
}

CNElement cn_element(const AlgebraSeq& seq, std::size_t window_start, std::size_t window_end,
                     std::vector<std::pair<std::size_t, DSet>> parts) {
  if (window_start == 0 || window_start >= window_end) {
    throw ValidationError("cn_element: window must satisfy 1 <= N < M");
  }
  seq.require_horizon(window_end - 1);

  std::sort(parts.begin(), parts.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  DSet covered;
  for (const auto& [k, set] : parts) {
    if (k < window_start || k >= window_end) {
      throw ValidationError("cn_element: part index " + std::to_string(k) +
                            " outside window [" + std::to_string(window_start) + ", " +
                            std::to_string(window_end) + ")");
    }
    if (!set_intersect(covered, set).empty()) {
      throw ValidationError("cn_element: parts overlap at index " + std::to_string(k));
    }
    covered = set_union(covered, set);
  }

  Piecewise h_acc;
  for (const auto& [k, set] : parts) {
    h_acc = Piecewise::zip(h_acc, Piecewise::from_step(cond_exp(indicator(set), seq.at(k))),
                           [](const Rat& x, const Rat& y) { return x + y; });
  }

  CNElement element;
  element.window_start = window_start;
  element.window_end = window_end;
  element.parts = std::move(parts);
  element.h = h_acc.to_step();
  element.l1 = h_acc.map([](const Rat& v) { return rat_abs(v); }).integral();
  element.l2sq = h_acc.map([](const Rat& v) { return v * v; }).integral();
  if (element.l1 != covered.measure()) {
    throw InvariantError("cn_element: ‖h‖_1 differs from μ(⋃ B_k)");
  }
  return element;
}

std::pair<CNElement, Rat> wperp_witness(const AlgebraSeq& seq, const Step& f, const Rat& eps,
                                        std::size_t window_start, std::size_t window_end) {
  if (!(eps > 0)) throw ValidationError("wperp_witness needs eps > 0");
  if (window_start == 0 || window_start >= window_end) {
    throw ValidationError("wperp_witness: window must satisfy 1 <= N < M");
  }
  seq.require_horizon(window_end - 1);

  std::vector<std::pair<std::size_t, DSet>> parts;
  DSet covered;
  for (std::size_t k = window_start; k < window_end; ++k) {
    const Step e = cond_exp(f, seq.at(k));
    const DSet a_k = level_selection(e, eps, /*strict=*/true, /*absolute=*/true);
    DSet b_k = set_diff(a_k, covered);
    covered = set_union(covered, a_k);
    if (!b_k.empty()) parts.emplace_back(k, std::move(b_k));
  }

  CNElement element = cn_element(seq, window_start, window_end, std::move(parts));
  const Rat pairing = inner(element.h, f);

  Rat adjoint_sum = 0;
  for (const auto& [k, set] : element.parts) {
    adjoint_sum += inner(indicator(set), cond_exp(f, seq.at(k)));
  }
  if (adjoint_sum != pairing) {
    throw InvariantError("wperp_witness: adjointness identity failed");
  }
  return {std::move(element), pairing};
}

std::vector<Rat> pairing_profile(const AlgebraSeq& seq, const Step& f, const Rat& eps,
                                 std::size_t horizon) {
  if (horizon < 2) throw ValidationError("pairing_profile needs horizon >= 2");
  seq.require_horizon(horizon);
  std::vector<Rat> profile;
  profile.reserve(horizon - 1);
  for (std::size_t n = 1; n < horizon; ++n) {
    profile.push_back(wperp_witness(seq, f, eps, n, horizon).second);
  }
  return profile;
}

} // namespace sigmalab
