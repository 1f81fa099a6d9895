#include "sigmalab/algebra_seq.hpp"
#include "sigmalab/errors.hpp"
#include "sigmalab/partition.hpp"

#include "support/oracles.hpp"
#include "support/random_gen.hpp"

#include <doctest.h>

using namespace sigmalab;

namespace {

DSet ds(std::initializer_list<std::pair<const char*, const char*>> pairs) {
  std::vector<Interval> intervals;
  for (const auto& [lo, hi] : pairs) intervals.push_back({Dyadic::parse(lo), Dyadic::parse(hi)});
  return DSet::from_intervals(intervals);
}

Partition dyadic(std::uint32_t level) {
  std::vector<DSet> atoms;
  for (std::size_t i = 0; i < (std::size_t{1} << level); ++i) {
    atoms.push_back(DSet::from_intervals({{Dyadic(Int(i), level), Dyadic(Int(i) + 1, level)}}));
  }
  return Partition(std::move(atoms));
}

AlgebraSeq seq_of(std::vector<Partition> terms, bool cycle) {
  const std::size_t n = terms.size();
  return AlgebraSeq("test", {},
                    [terms = std::move(terms), cycle, n](std::size_t i) {
                      return terms[cycle ? i % n : i];
                    },
                    cycle ? std::size_t(1) << 20 : n);
}

} // namespace

TEST_SUITE_BEGIN("partition");

TEST_CASE("partition construction validates the tiling") {
  CHECK(Partition().size() == 1);
  CHECK(Partition().atoms()[0] == DSet::full());
  CHECK_THROWS_AS(Partition({ds({{"0", "1/2"}})}), ValidationError);              // gap
  CHECK_THROWS_AS(Partition({ds({{"0", "3/4"}}), ds({{"1/2", "1"}})}), ValidationError); // overlap
  CHECK_THROWS_AS(Partition({ds({{"0", "1"}}), ds({})}), ValidationError);        // null atom
}

TEST_CASE("atoms are sorted by leftmost endpoint") {
  const Partition p({ds({{"1/2", "1"}}), ds({{"0", "1/2"}})});
  CHECK(p.atoms()[0] == ds({{"0", "1/2"}}));
  CHECK(p.atoms()[1] == ds({{"1/2", "1"}}));
}

TEST_CASE("generate: empty input gives the trivial algebra") {
  CHECK(generate({}) == Partition());
}

TEST_CASE("generate: single set gives the set and its complement") {
  const Partition p = generate({ds({{"0", "1/2"}})});
  REQUIRE(p.size() == 2);
  CHECK(p.atoms()[0] == ds({{"0", "1/2"}}));
  CHECK(p.atoms()[1] == ds({{"1/2", "1"}}));
}

TEST_CASE("generate: the three-atom typewriter algebra at (2,0)") {
  const DSet core = ds({{"1/2", "3/4"}});
  const DSet block = ds({{"0", "1/16"}, {"7/8", "1"}});
  const Partition p = generate({core, block});
  REQUIRE(p.size() == 3);
  CHECK(p.atoms()[0] == block);
  CHECK(p.atoms()[1] == ds({{"1/16", "1/2"}, {"3/4", "7/8"}}));
  CHECK(p.atoms()[2] == core);
}

TEST_CASE("generate caps the generator count") {
  std::vector<DSet> many(21, ds({{"0", "1/2"}}));
  CHECK_THROWS_AS(generate(many), CapError);
  CHECK_NOTHROW(generate(std::vector<DSet>(20, ds({{"0", "1/2"}}))));
}

TEST_CASE("join, pinned") {
  const Partition halves = dyadic(1);
  const Partition offset({ds({{"1/4", "3/4"}}), ds({{"0", "1/4"}, {"3/4", "1"}})});
  CHECK(join(halves, halves) == halves);
  CHECK(join(Partition(), offset) == offset);
  const Partition j = join(halves, offset);
  REQUIRE(j.size() == 4);
  CHECK(j == dyadic(2));
}

TEST_CASE("meet, pinned against the member-enumeration oracle") {
  const Partition p({ds({{"0", "1/4"}}), ds({{"1/4", "1/2"}}), ds({{"1/2", "1"}})});
  const Partition q({ds({{"0", "1/2"}}), ds({{"1/2", "3/4"}}), ds({{"3/4", "1"}})});
  const Partition expected = dyadic(1);
  CHECK(meet(p, q) == expected);
  CHECK(oracle::meet(p, q) == expected);
  CHECK(meet(p, p) == p);
  CHECK(meet(p, Partition()) == Partition());
}

TEST_CASE("meet matches the oracle on random pairs") {
  testgen::Rng rng(424242);
  for (int trial = 0; trial < 200; ++trial) {
    const Partition p = testgen::random_partition(rng, 4, 1 + rng.below(6));
    const Partition q = testgen::random_partition(rng, 4, 1 + rng.below(6));
    CHECK(meet(p, q) == oracle::meet(p, q));
  }
}

TEST_CASE("contains, pinned") {
  const Partition halves = dyadic(1);
  CHECK(contains(halves, ds({{"0", "1/2"}})));
  CHECK(contains(halves, ds({})));
  CHECK(contains(halves, DSet::full()));
  CHECK_FALSE(contains(halves, ds({{"0", "1/4"}})));

  // core ∪ block is a member of the typewriter algebra (its third atom is
  // the complement of that union).
  const DSet core = ds({{"1/2", "3/4"}});
  const DSet block = ds({{"0", "1/16"}, {"7/8", "1"}});
  CHECK(contains(generate({core, block}), set_union(core, block)));
}

TEST_CASE("lattice laws on random pairs") {
  testgen::Rng rng(987654);
  for (int trial = 0; trial < 100; ++trial) {
    const Partition p = testgen::random_partition(rng, 4, 1 + rng.below(5));
    const Partition q = testgen::random_partition(rng, 4, 1 + rng.below(5));
    const Partition r = testgen::random_partition(rng, 4, 1 + rng.below(5));
    CHECK(join(p, q) == join(q, p));
    CHECK(meet(p, q) == meet(q, p));
    CHECK(join(p, p) == p);
    CHECK(meet(p, p) == p);
    CHECK(join(join(p, q), r) == join(p, join(q, r)));
    CHECK(meet(meet(p, q), r) == meet(p, meet(q, r)));
    CHECK(join(p, meet(p, q)) == p); // absorption
    CHECK(meet(p, join(p, q)) == p);
  }
}

TEST_CASE("contains respects the lattice") {
  testgen::Rng rng(13579);
  for (int trial = 0; trial < 100; ++trial) {
    const Partition p = testgen::random_partition(rng, 4, 1 + rng.below(5));
    const Partition q = testgen::random_partition(rng, 4, 1 + rng.below(5));
    const DSet a = testgen::random_dset(rng, 4);
    if (contains(p, a) && contains(q, a)) CHECK(contains(meet(p, q), a));
    if (contains(p, a)) CHECK(contains(join(p, q), a));
  }
}

TEST_CASE("generate over the atoms reproduces the partition") {
  testgen::Rng rng(1111);
  for (int trial = 0; trial < 50; ++trial) {
    const Partition p = testgen::random_partition(rng, 4, 1 + rng.below(6));
    CHECK(generate(p.atoms()) == p);
  }
}

TEST_CASE("limit algebras: constant sequence") {
  const Partition p = dyadic(2);
  const AlgebraSeq seq = seq_of({p}, true);
  for (std::size_t h : {1, 2, 5}) {
    const LimitAlgebraReport r = limit_algebras(seq, h);
    CHECK(r.liminf == p);
    CHECK(r.limsup == p);
  }
}

TEST_CASE("limit algebras: alternating pair gives meet and join") {
  const Partition p({ds({{"0", "1/4"}}), ds({{"1/4", "1/2"}}), ds({{"1/2", "1"}})});
  const Partition q({ds({{"0", "1/2"}}), ds({{"1/2", "3/4"}}), ds({{"3/4", "1"}})});
  const AlgebraSeq seq = seq_of({p, q}, true);
  for (std::size_t h : {2, 3, 6, 9}) {
    const LimitAlgebraReport r = limit_algebras(seq, h);
    CHECK(r.liminf == meet(p, q));
    CHECK(r.limsup == join(p, q));
  }
}

TEST_CASE("limit algebras: strictly refining chain trails by one window") {
  std::vector<Partition> chain;
  for (std::uint32_t level = 0; level <= 5; ++level) chain.push_back(dyadic(level));
  const AlgebraSeq seq = seq_of(chain, false);
  for (std::size_t h : {3, 6}) {
    const LimitAlgebraReport r = limit_algebras(seq, h);
    CHECK(r.liminf == dyadic(static_cast<std::uint32_t>(h - 2)));
    CHECK(r.limsup == dyadic(static_cast<std::uint32_t>(h - 1)));
    CHECK(r.tail_joins[0] == dyadic(static_cast<std::uint32_t>(h - 1)));
  }
  CHECK(limit_algebras(seq, 1).liminf == dyadic(0));
}

TEST_CASE("monotone sequences stabilized by the horizon have liminf == limsup") {
  std::vector<Partition> decreasing;
  for (std::uint32_t level = 3; level-- > 0;) decreasing.push_back(dyadic(level + 1));
  decreasing.push_back(dyadic(0));
  decreasing.push_back(dyadic(0));
  decreasing.push_back(dyadic(0));
  const AlgebraSeq dec = seq_of(decreasing, false);
  for (std::size_t h = 5; h <= decreasing.size(); ++h) {
    const LimitAlgebraReport r = limit_algebras(dec, h);
    CHECK(r.liminf == r.limsup);
    CHECK(r.liminf == dyadic(0));
  }

  std::vector<Partition> increasing{dyadic(0), dyadic(1), dyadic(2), dyadic(3),
                                    dyadic(3), dyadic(3)};
  const AlgebraSeq inc = seq_of(increasing, false);
  for (std::size_t h = 5; h <= increasing.size(); ++h) {
    const LimitAlgebraReport r = limit_algebras(inc, h);
    CHECK(r.liminf == r.limsup);
    CHECK(r.liminf == dyadic(3));
  }
}

TEST_CASE("horizon past max_horizon is a cap error") {
  const AlgebraSeq seq = seq_of({dyadic(1), dyadic(2)}, false);
  CHECK_THROWS_AS(limit_algebras(seq, 3), CapError);
  CHECK_THROWS_AS(seq.at(3), CapError);
  CHECK_THROWS_AS(seq.at(0), ValidationError);
}

TEST_SUITE_END();
