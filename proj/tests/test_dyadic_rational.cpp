#include "sigmalab/dyadic.hpp"
#include "sigmalab/errors.hpp"
#include "sigmalab/rational.hpp"

#include "support/random_gen.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <doctest.h>

using namespace sigmalab;

TEST_SUITE_BEGIN("dyadic_rational");

TEST_CASE("dyadic normalization strips trailing zero bits") {
  CHECK(Dyadic(2, 2) == Dyadic(1, 1));
  CHECK(Dyadic(4, 4) == Dyadic(1, 2));
  CHECK(Dyadic(0, 7) == Dyadic::zero());
  CHECK(Dyadic(8, 3) == Dyadic::one());
  CHECK(Dyadic(7, 3).numerator() == 7);
  CHECK(Dyadic(7, 3).level() == 3);
}

TEST_CASE("dyadic stays inside [0,1]") {
  CHECK_THROWS_AS(Dyadic(9, 3), ValidationError);
  CHECK_THROWS_AS(Dyadic(3, 1), ValidationError);
  CHECK_NOTHROW(Dyadic(8, 3)); // normalizes to 1
}

TEST_CASE("dyadic ordering crosses levels") {
  CHECK(Dyadic(1, 2) < Dyadic(1, 1));  // 1/4 < 1/2
  CHECK(Dyadic(3, 2) > Dyadic(1, 1));  // 3/4 > 1/2
  CHECK(Dyadic(5, 3) < Dyadic(3, 2));  // 5/8 < 6/8
  CHECK(Dyadic::zero() < Dyadic::one());
}

TEST_CASE("dyadic serialization round-trips bit-exactly") {
  const char* cases[] = {"0/1", "1/1", "1/2", "7/8", "13/16", "1/1024"};
  for (const char* text : cases) {
    const Dyadic d = Dyadic::parse(text);
    CHECK(d.to_string() == text);
    CHECK(Dyadic::parse(d.to_string()) == d);
  }
  CHECK(Dyadic::parse("0") == Dyadic::zero());
  CHECK(Dyadic::parse("1") == Dyadic::one());
  CHECK(Dyadic::parse("2/4") == Dyadic::parse("1/2"));
}

TEST_CASE("dyadic parse rejects non-dyadic input") {
  CHECK_THROWS_AS(Dyadic::parse("1/3"), ValidationError);
  CHECK_THROWS_AS(Dyadic::parse("5/6"), ValidationError);
  CHECK_THROWS_AS(Dyadic::parse("3/2"), ValidationError);
  CHECK_THROWS_AS(Dyadic::parse("x/2"), ValidationError);
  CHECK_THROWS_AS(Dyadic::parse(""), ValidationError);
}

TEST_CASE("rational canonical form and parsing") {
  CHECK(rat_to_string(Rat(2, 9)) == "2/9");
  CHECK(rat_to_string(Rat(0)) == "0/1");
  CHECK(rat_to_string(Rat(4, 8)) == "1/2");
  CHECK(rat_to_string(Rat(-6, 4)) == "-3/2");
  CHECK(parse_rat("2/9") == Rat(2, 9));
  CHECK(parse_rat("-3/6") == Rat(-1, 2));
  CHECK(parse_rat("7") == Rat(7));
  CHECK_THROWS_AS(parse_rat("1/0"), ValidationError);
  CHECK_THROWS_AS(parse_rat("1/-2"), ValidationError);
  CHECK_THROWS_AS(parse_rat("abc"), ValidationError);
}

TEST_CASE("decimal rendering stays within half an ulp of the exact value") {
  using Dec = boost::multiprecision::cpp_dec_float_50;
  testgen::Rng rng(191919);
  for (int trial = 0; trial < 200; ++trial) {
    const Rat r = testgen::random_rat(rng, 1000, 1000);
    if (r == 0) continue;
    const Dec parsed(rat_to_decimal(r));
    const Dec exact = Dec(num(r).str()) / Dec(den(r).str());
    const Dec err = boost::multiprecision::abs(parsed - exact) / boost::multiprecision::abs(exact);
    CHECK(err <= Dec("5e-15"));
  }
}

TEST_CASE("decimal rendering is deterministic and value-faithful") {
  CHECK(rat_to_decimal(Rat(1, 2)) == "0.5");
  CHECK(rat_to_decimal(Rat(0)) == "0");
  CHECK(rat_to_decimal(Rat(1)) == "1");
  CHECK(rat_to_decimal(Rat(-1, 4)) == "-0.25");
  CHECK(rat_to_decimal(Rat(1, 3)) == "0.333333333333333");
  CHECK(rat_to_decimal(Rat(2, 3)) == "0.666666666666667");
  CHECK(rat_to_decimal(Rat(5, 18)) == "0.277777777777778");
  CHECK(rat_to_decimal(Rat(1, 1024)) == "0.0009765625");
  CHECK(rat_to_decimal(Rat(1, 3), 3) == "0.333");
  CHECK(rat_to_decimal(Rat(999, 1000), 2) == "1"); // rounds up across a power of ten
  CHECK(rat_to_decimal(Rat(1, Int(1) << 40)) == "9.09494701772928e-13");
}

TEST_SUITE_END();
