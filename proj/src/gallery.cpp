#include "sigmalab/gallery.hpp"

#include "sigmalab/errors.hpp"

#include <limits>

namespace sigmalab {

namespace typewriter {

namespace {

void require_n(std::size_t n) {
  if (n < 1) throw ValidationError("typewriter index n starts at 1");
  if (n > max_n) {
    throw CapError("typewriter block " + std::to_string(n) + " exceeds cap " +
                   std::to_string(max_n));
  }
}

void require_nk(std::size_t n, std::size_t k) {
  require_n(n);
  const std::size_t cells = std::size_t{2} << n; // 2^(n+1)
  if (k >= cells) {
    throw ValidationError("typewriter cell index k = " + std::to_string(k) +
                          " out of range for n = " + std::to_string(n));
  }
}

} // namespace

DSet core(std::size_t n) {
  require_n(n);
  return DSet::from_intervals(
      {{Dyadic(1, 1), Dyadic((Int(1) << n) - 1, static_cast<std::uint32_t>(n))}});
}

DSet sliver(std::size_t n) {
  require_n(n);
  return DSet::from_intervals(
      {{Dyadic((Int(1) << (n + 1)) - 1, static_cast<std::uint32_t>(n + 1)), Dyadic::one()}});
}

DSet cell(std::size_t n, std::size_t k) {
  require_nk(n, k);
  return DSet::from_intervals({{Dyadic(Int(k), static_cast<std::uint32_t>(n + 2)),
                                Dyadic(Int(k) + 1, static_cast<std::uint32_t>(n + 2))}});
}

DSet block(std::size_t n, std::size_t k) { return set_union(cell(n, k), sliver(n)); }

DSet rest(std::size_t n, std::size_t k) {
  return set_complement(set_union(core(n), block(n, k)));
}

Partition partition(std::size_t n, std::size_t k) {
  require_nk(n, k);
  if (n < 2) {
    throw ValidationError("typewriter partitions start at n = 2 (the n = 1 core is empty)");
  }
  return Partition({core(n), block(n, k), rest(n, k)});
}

std::size_t flat_index(std::size_t n, std::size_t k) {
  require_nk(n, k);
  if (n < 2) throw ValidationError("typewriter partitions start at n = 2");
  return (std::size_t{1} << (n + 1)) - 8 + k;
}

std::pair<std::size_t, std::size_t> from_flat(std::size_t flat) {
  std::size_t n = 2;
  std::size_t first = 0;
  while (true) {
    const std::size_t cells = std::size_t{2} << n;
    if (flat < first + cells) return {n, flat - first};
    first += cells;
    ++n;
    if (n > max_n) {
      throw CapError("typewriter flat index " + std::to_string(flat) + " beyond block cap " +
                     std::to_string(max_n));
    }
  }
}

std::size_t horizon_through(std::size_t n_max) {
  if (n_max < 2) throw ValidationError("typewriter horizon needs n_max >= 2");
  if (n_max > max_n) {
    throw CapError("typewriter n_max " + std::to_string(n_max) + " exceeds cap " +
                   std::to_string(max_n));
  }
  return (std::size_t{1} << (n_max + 2)) - 8;
}

std::size_t block_first_position(std::size_t n) { return flat_index(n, 0) + 1; }

std::size_t block_of_position(std::size_t pos) {
  if (pos == 0) throw ValidationError("positions are 1-based");
  return from_flat(pos - 1).first;
}

AlgebraSeq sequence() {
  return AlgebraSeq("counterexample_s3", {},
                    [](std::size_t i) {
                      const auto [n, k] = from_flat(i);
                      return partition(n, k);
                    },
                    horizon_through(max_n));
}

} // namespace typewriter

Partition dyadic_partition(std::size_t level) {
  if (level > 20) {
    throw CapError("dyadic partition level " + std::to_string(level) + " exceeds cap 20");
  }
  std::vector<DSet> atoms;
  atoms.reserve(std::size_t{1} << level);
  for (std::size_t i = 0; i < (std::size_t{1} << level); ++i) {
    atoms.push_back(DSet::from_intervals({{Dyadic(Int(i), static_cast<std::uint32_t>(level)),
                                           Dyadic(Int(i) + 1, static_cast<std::uint32_t>(level))}}));
  }
  return Partition(std::move(atoms));
}

Partition dyadic_martingale(std::size_t n, MartingaleDirection direction,
                            std::size_t top_level) {
  if (direction == MartingaleDirection::increasing) return dyadic_partition(n);
  return dyadic_partition(top_level > n ? top_level - n : 0);
}

Step FunctionSpec::build() const {
  if (indicator_set.has_value() == explicit_step.has_value()) {
    throw ValidationError("function spec needs exactly one of indicator / step");
  }
  if (indicator_set) return indicator(*indicator_set);
  return *explicit_step;
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {
      "counterexample_s3", "dyadic_martingale_inc", "dyadic_martingale_dec", "constant",
      "alternating"};
  return names;
}

namespace {

std::size_t param_index(const std::map<std::string, Rat>& params, const std::string& key,
                        std::optional<std::size_t> fallback) {
  const auto it = params.find(key);
  if (it == params.end()) {
    if (fallback) return *fallback;
    throw ValidationError("missing sequence parameter: " + key);
  }
  const Rat& value = it->second;
  if (den(value) != 1 || num(value) < 0 || num(value) > 1000000) {
    throw ValidationError("sequence parameter " + key + " must be a small non-negative integer");
  }
  return static_cast<std::size_t>(num(value).convert_to<unsigned long long>());
}

constexpr std::size_t unbounded = std::numeric_limits<std::size_t>::max();

} // namespace

AlgebraSeq from_spec(const ScenarioSpec& spec) {
  if (spec.horizon == 0) throw ValidationError("scenario horizon must be at least 1");
  const SequenceSpec& s = spec.sequence;

  if (s.is_builtin()) {
    if (s.builtin == "counterexample_s3") {
      AlgebraSeq seq = typewriter::sequence();
      seq.require_horizon(spec.horizon);
      return seq;
    }
    if (s.builtin == "dyadic_martingale_inc") {
      // Levels are 0-based flat indices; the level cap bounds the horizon.
      return AlgebraSeq(s.builtin, s.params, [](std::size_t i) { return dyadic_partition(i); },
                        21);
    }
    if (s.builtin == "dyadic_martingale_dec") {
      const std::size_t top = param_index(s.params, "top_level", std::nullopt);
      return AlgebraSeq(
          s.builtin, s.params,
          [top](std::size_t i) {
            return dyadic_martingale(i, MartingaleDirection::decreasing, top);
          },
          unbounded);
    }
    if (s.builtin == "constant") {
      const std::size_t level = param_index(s.params, "level", 0);
      return AlgebraSeq(s.builtin, s.params,
                        [level](std::size_t) { return dyadic_partition(level); }, unbounded);
    }
    if (s.builtin == "alternating") {
      const std::size_t level_a = param_index(s.params, "level_a", std::nullopt);
      const std::size_t level_b = param_index(s.params, "level_b", std::nullopt);
      return AlgebraSeq(s.builtin, s.params,
                        [level_a, level_b](std::size_t i) {
                          return dyadic_partition(i % 2 == 0 ? level_a : level_b);
                        },
                        unbounded);
    }
    std::string known;
    for (const auto& name : builtin_names()) known += (known.empty() ? "" : ", ") + name;
    throw ValidationError("unknown builtin sequence: " + s.builtin + " (known: " + known + ")");
  }

  if (s.generator_lists.empty()) {
    throw ValidationError("explicit sequence needs at least one generator list");
  }
  if (!s.cycle && s.generator_lists.size() < spec.horizon) {
    throw ValidationError("explicit non-cycling sequence shorter than the horizon");
  }
  const auto lists = s.generator_lists;
  const bool cycle = s.cycle;
  const std::size_t cap = spec.caps.generate_generators;
  return AlgebraSeq("explicit", {},
                    [lists, cycle, cap](std::size_t i) {
                      return generate(lists[cycle ? i % lists.size() : i], cap);
                    },
                    cycle ? unbounded : lists.size());
}

} // namespace sigmalab
