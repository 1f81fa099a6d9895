#include "sigmalab/algebra_seq.hpp"

#include "sigmalab/errors.hpp"

namespace sigmalab {

AlgebraSeq::AlgebraSeq(std::string name, std::map<std::string, Rat> params,
                       std::function<Partition(std::size_t)> generator, std::size_t max_horizon)
    : name_(std::move(name)),
      params_(std::move(params)),
      generator_(std::move(generator)),
      max_horizon_(max_horizon) {
  if (!generator_) throw ValidationError("AlgebraSeq needs a generator");
}

Partition AlgebraSeq::at(std::size_t n) const {
  if (n == 0) throw ValidationError("sequence positions are 1-based");
  require_horizon(n);
  return generator_(n - 1);
}

void AlgebraSeq::require_horizon(std::size_t h) const {
  if (h > max_horizon_) {
    throw CapError("horizon " + std::to_string(h) + " exceeds max_horizon " +
                   std::to_string(max_horizon_) + " of sequence " + name_);
  }
}

LimitAlgebraReport limit_algebras(const AlgebraSeq& seq, std::size_t horizon) {
  if (horizon == 0) throw ValidationError("horizon must be at least 1");
  seq.require_horizon(horizon);

  std::vector<Partition> terms;
  terms.reserve(horizon);
  for (std::size_t n = 1; n <= horizon; ++n) terms.push_back(seq.at(n));

  LimitAlgebraReport report;
  report.tail_meets.resize(horizon);
  report.tail_joins.resize(horizon);
  report.tail_meets[horizon - 1] = terms[horizon - 1];
  report.tail_joins[horizon - 1] = terms[horizon - 1];
  for (std::size_t m = horizon - 1; m-- > 0;) {
    report.tail_meets[m] = meet(terms[m], report.tail_meets[m + 1]);
    report.tail_joins[m] = join(terms[m], report.tail_joins[m + 1]);
  }

  // Aggregate over windows of at least two indices: the trailing singleton
  // window would dominate both aggregates (its meet and join are the last
  // term itself) and collapse them to the final algebra.
  const std::size_t last_m = horizon > 1 ? horizon - 1 : 1;
  report.liminf = report.tail_meets[0];
  report.limsup = report.tail_joins[0];
  for (std::size_t m = 1; m < last_m; ++m) {
    report.liminf = join(report.liminf, report.tail_meets[m]);
    report.limsup = meet(report.limsup, report.tail_joins[m]);
  }
  return report;
}

Partition liminf_algebra(const AlgebraSeq& seq, std::size_t horizon) {
  return limit_algebras(seq, horizon).liminf;
}

Partition limsup_algebra(const AlgebraSeq& seq, std::size_t horizon) {
  return limit_algebras(seq, horizon).limsup;
}

} // namespace sigmalab
