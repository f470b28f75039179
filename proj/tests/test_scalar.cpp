#include <catch_amalgamated.hpp>

#include <random>
#include <stdexcept>

#include "graphfp/scalar.hpp"

using graphfp::Scalar;

TEST_CASE("scalar parsing and canonical form") {
  CHECK(Scalar::parse("6/4") == Scalar(mpq_class(3, 2)));
  CHECK(Scalar::parse("-3", "1/2") == Scalar(mpq_class(-3), mpq_class(1, 2)));
  CHECK(Scalar::parse("0", "-0").is_zero());
  CHECK_THROWS_AS(Scalar::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse("1", "x"), std::invalid_argument);
}

TEST_CASE("scalar formatting") {
  CHECK(Scalar(mpq_class(3, 2)).to_string() == "3/2");
  CHECK(Scalar(0, -1).to_string() == "-i");
  CHECK(Scalar(1, mpq_class(2, 3)).to_string() == "1+2/3i");
  CHECK(Scalar().to_string() == "0");
}

TEST_CASE("complex rational arithmetic against integer cross-multiplication") {
  // (a/b + c/d i)(e/f + g/h i) with small integers, compared to the expansion
  // carried out on numerators over a common denominator.
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    long e = num(rng), f = den(rng), g = num(rng), h = den(rng);
    Scalar x(mpq_class(a, b), mpq_class(c, d));
    Scalar y(mpq_class(e, f), mpq_class(g, h));
    mpq_class re(a * e * d * h - c * g * b * f, b * d * f * h);
    mpq_class im(a * g * d * f + c * e * b * h, b * d * f * h);
    re.canonicalize();
    im.canonicalize();
    CHECK(x * y == Scalar(re, im));
    CHECK((x + y) - y == x);
    CHECK((x * y).conj() == x.conj() * y.conj());
  }
}

TEST_CASE("i squared is -1") {
  Scalar i(0, 1);
  CHECK(i * i == Scalar(-1));
  CHECK(i.conj() == -i);
  CHECK_FALSE(i.is_real());
}
