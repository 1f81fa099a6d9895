#include "sigmalab/errors.hpp"
#include "sigmalab/gallery.hpp"
#include "sigmalab/step.hpp"

#include <doctest.h>

#include <future>

using namespace sigmalab;

namespace {

DSet ds(std::initializer_list<std::pair<const char*, const char*>> pairs) {
  std::vector<Interval> intervals;
  for (const auto& [lo, hi] : pairs) intervals.push_back({Dyadic::parse(lo), Dyadic::parse(hi)});
  return DSet::from_intervals(intervals);
}

} // namespace

TEST_SUITE_BEGIN("gallery");

TEST_CASE("typewriter sets at (2,0), pinned") {
  CHECK(typewriter::core(2) == ds({{"1/2", "3/4"}}));
  CHECK(typewriter::sliver(2) == ds({{"7/8", "1"}}));
  CHECK(typewriter::cell(2, 0) == ds({{"0", "1/16"}}));
  CHECK(typewriter::block(2, 0) == ds({{"0", "1/16"}, {"7/8", "1"}}));
  CHECK(typewriter::rest(2, 0) == ds({{"1/16", "1/2"}, {"3/4", "7/8"}}));
  CHECK(typewriter::core(1).empty()); // the degenerate first core
}

TEST_CASE("typewriter partition atoms and measures") {
  for (std::size_t n = 2; n <= 10; ++n) {
    const std::size_t cells = std::size_t{2} << n;
    for (std::size_t k : {std::size_t{0}, cells / 2, cells - 1}) {
      const Partition p = typewriter::partition(n, k);
      REQUIRE(p.size() == 3);
      CHECK(typewriter::block(n, k).measure() == Rat(3, Int(1) << (n + 2)));
      CHECK(typewriter::rest(n, k).measure() == Rat(1, 2) + Rat(1, Int(1) << (n + 2)));
      CHECK(typewriter::core(n).measure() == Rat(1, 2) - Rat(1, Int(1) << n));
    }
  }
  CHECK_THROWS_AS(typewriter::partition(1, 0), ValidationError);
  CHECK_THROWS_AS(typewriter::partition(2, 8), ValidationError);
  CHECK_THROWS_AS(typewriter::partition(15, 0), CapError);
}

TEST_CASE("each block of cells sweeps [0,1/2) exactly") {
  for (std::size_t n = 2; n <= 6; ++n) {
    DSet swept;
    for (std::size_t k = 0; k < (std::size_t{2} << n); ++k) {
      swept = set_union(swept, typewriter::cell(n, k));
    }
    CHECK(swept == ds({{"0", "1/2"}}));
  }
}

TEST_CASE("flat index enumeration is n-major, k-minor") {
  CHECK(typewriter::flat_index(2, 0) == 0);
  CHECK(typewriter::flat_index(2, 7) == 7);
  CHECK(typewriter::flat_index(3, 0) == 8);
  CHECK(typewriter::flat_index(3, 15) == 23);
  CHECK(typewriter::flat_index(4, 0) == 24);
  for (std::size_t flat = 0; flat < 120; ++flat) {
    const auto [n, k] = typewriter::from_flat(flat);
    CHECK(typewriter::flat_index(n, k) == flat);
  }
  CHECK(typewriter::horizon_through(2) == 8);
  CHECK(typewriter::horizon_through(10) == 4088);
  CHECK(typewriter::block_first_position(2) == 1);
  CHECK(typewriter::block_first_position(3) == 9);
  CHECK(typewriter::block_of_position(9) == 3);
  CHECK_THROWS_AS(typewriter::horizon_through(15), CapError);
}

TEST_CASE("closed-form conditional expectation on every block up to n = 6") {
  const Step chi = indicator(ds({{"1/2", "1"}}));
  for (std::size_t n = 2; n <= 6; ++n) {
    const Rat rest_value(2, 1 + (Int(1) << (n + 1)));
    for (std::size_t k = 0; k < (std::size_t{2} << n); ++k) {
      const Partition algebra = typewriter::partition(n, k);
      const Step e = cond_exp(chi, algebra);
      for (std::size_t i = 0; i < 3; ++i) {
        const DSet& atom = e.carrier.atoms()[i];
        if (atom == typewriter::core(n)) CHECK(e.values[i] == 1);
        else if (atom == typewriter::block(n, k)) CHECK(e.values[i] == Rat(2, 3));
        else CHECK(e.values[i] == rest_value);
      }
    }
  }
}

TEST_CASE("typewriter sequence flattens the partitions") {
  const AlgebraSeq seq = typewriter::sequence();
  CHECK(seq.at(1) == typewriter::partition(2, 0));
  CHECK(seq.at(8) == typewriter::partition(2, 7));
  CHECK(seq.at(9) == typewriter::partition(3, 0));
  CHECK(seq.max_horizon() == typewriter::horizon_through(typewriter::max_n));
}

TEST_CASE("dyadic partitions and martingales") {
  CHECK(dyadic_partition(0) == Partition());
  const Partition quarters = dyadic_partition(2);
  CHECK(quarters.size() == 4);
  for (const auto& atom : quarters.atoms()) CHECK(atom.measure() == Rat(1, 4));
  CHECK_THROWS_AS(dyadic_partition(21), CapError);

  CHECK(dyadic_martingale(0, MartingaleDirection::increasing) == Partition());
  CHECK(dyadic_martingale(2, MartingaleDirection::increasing) == dyadic_partition(2));
  CHECK(dyadic_martingale(5, MartingaleDirection::decreasing, 3) == Partition());
  CHECK(dyadic_martingale(1, MartingaleDirection::decreasing, 3) == dyadic_partition(2));
}

TEST_CASE("increasing martingale is a refinement chain") {
  for (std::size_t n = 0; n < 6; ++n) {
    const Partition coarse = dyadic_partition(n);
    const Partition fine = dyadic_partition(n + 1);
    CHECK(join(coarse, fine) == fine);
    CHECK(meet(coarse, fine) == coarse);
  }
}

TEST_CASE("from_spec builtins") {
  ScenarioSpec spec;
  spec.horizon = 8;
  spec.function.indicator_set = ds({{"1/2", "1"}});

  spec.sequence.builtin = "counterexample_s3";
  CHECK(from_spec(spec).at(1) == typewriter::partition(2, 0));

  spec.sequence.builtin = "dyadic_martingale_inc";
  CHECK(from_spec(spec).at(1) == Partition());
  CHECK(from_spec(spec).at(4) == dyadic_partition(3));

  spec.sequence.builtin = "dyadic_martingale_dec";
  spec.sequence.params["top_level"] = Rat(3);
  CHECK(from_spec(spec).at(1) == dyadic_partition(3));
  CHECK(from_spec(spec).at(5) == Partition());
  spec.sequence.params.clear();

  spec.sequence.builtin = "constant";
  spec.sequence.params["level"] = Rat(0);
  CHECK(from_spec(spec).at(7) == Partition());
  spec.sequence.params.clear();

  spec.sequence.builtin = "alternating";
  spec.sequence.params["level_a"] = Rat(1);
  spec.sequence.params["level_b"] = Rat(2);
  CHECK(from_spec(spec).at(1) == dyadic_partition(1));
  CHECK(from_spec(spec).at(2) == dyadic_partition(2));
  spec.sequence.params.clear();

  spec.sequence.builtin = "no_such_thing";
  CHECK_THROWS_AS(from_spec(spec), ValidationError);

  spec.sequence.builtin = "dyadic_martingale_dec"; // missing top_level
  CHECK_THROWS_AS(from_spec(spec), ValidationError);
}

TEST_CASE("from_spec explicit generator lists") {
  ScenarioSpec spec;
  spec.horizon = 5;
  spec.function.indicator_set = ds({{"0", "1/2"}});
  spec.sequence.generator_lists = {{ds({{"0", "1/2"}})}};
  spec.sequence.cycle = true;
  const AlgebraSeq constant = from_spec(spec);
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(constant.at(n) == Partition({ds({{"0", "1/2"}}), ds({{"1/2", "1"}})}));
  }

  spec.sequence.generator_lists = {{ds({{"0", "1/2"}})}, {ds({{"0", "1/4"}})}};
  const AlgebraSeq alternating = from_spec(spec);
  CHECK(alternating.at(1) == generate({ds({{"0", "1/2"}})}));
  CHECK(alternating.at(2) == generate({ds({{"0", "1/4"}})}));
  CHECK(alternating.at(3) == alternating.at(1));

  spec.sequence.cycle = false; // two lists cannot cover horizon 5
  CHECK_THROWS_AS(from_spec(spec), ValidationError);

  spec.sequence.generator_lists.clear();
  spec.sequence.cycle = true;
  CHECK_THROWS_AS(from_spec(spec), ValidationError);
}

TEST_CASE("concurrent evaluation at distinct indices matches serial results") {
  const AlgebraSeq seq = typewriter::sequence();
  const Step chi = indicator(ds({{"1/2", "1"}}));
  std::vector<Partition> serial;
  std::vector<Rat> serial_l1;
  for (std::size_t n = 1; n <= 48; ++n) {
    serial.push_back(seq.at(n));
    serial_l1.push_back(lp_dist(cond_exp(chi, serial.back()), chi, Norm::l1));
  }
  std::vector<std::future<std::pair<Partition, Rat>>> jobs;
  for (std::size_t n = 1; n <= 48; ++n) {
    jobs.push_back(std::async(std::launch::async, [&seq, &chi, n] {
      const Partition p = seq.at(n);
      return std::make_pair(p, lp_dist(cond_exp(chi, p), chi, Norm::l1));
    }));
  }
  for (std::size_t n = 1; n <= 48; ++n) {
    auto [p, l1] = jobs[n - 1].get();
    CHECK(p == serial[n - 1]);
    CHECK(l1 == serial_l1[n - 1]);
  }
}

TEST_CASE("from_spec determinism: equal specs give equal partitions") {
  ScenarioSpec spec;
  spec.horizon = 12;
  spec.function.indicator_set = ds({{"1/2", "1"}});
  spec.sequence.builtin = "counterexample_s3";
  const AlgebraSeq first = from_spec(spec);
  const AlgebraSeq second = from_spec(spec);
  for (std::size_t n = 1; n <= 12; ++n) CHECK(first.at(n) == second.at(n));
}

TEST_SUITE_END();
