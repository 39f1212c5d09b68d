#include "doctest.h"

#include <numeric>
#include <random>

#include "qo/qofield.hpp"

using namespace qo;

TEST_CASE("extrat add examples") {
  CHECK(ExtRat(3, 2) + ExtRat(1, 2) == ExtRat(2));
  CHECK(ExtRat::infinity() + ExtRat(5, 7) == ExtRat::infinity());
  CHECK(ExtRat(1, 3) + ExtRat(1, 6) == ExtRat(1, 2));
}

TEST_CASE("extrat sub_checked examples") {
  CHECK(sub_checked(ExtRat(3, 2), ExtRat(1, 2)) == ExtRat(1));
  CHECK(sub_checked(ExtRat::infinity(), ExtRat(2)) == ExtRat::infinity());
  CHECK_THROWS_WITH_AS(sub_checked(ExtRat(1, 2), ExtRat(1)), doctest::Contains("NegativeExponent"),
                       Error);
}

TEST_CASE("extrat ordering is total with infinity on top") {
  CHECK(ExtRat(7, 3) < ExtRat::infinity());
  CHECK(!(ExtRat::infinity() < ExtRat::infinity()));
  CHECK(ExtRat::infinity() == ExtRat::infinity());
  CHECK(ExtRat(1, 2) < ExtRat(2, 3));
}

TEST_CASE("extrat arithmetic properties on random fractions") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> num(0, 40), den(1, 12);
  for (int i = 0; i < 500; ++i) {
    ExtRat a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    ExtRat s = a + b;
    CHECK(std::gcd(s.rat().num, s.rat().den) == 1);
  }
}

TEST_CASE("extrat serialization round trip") {
  CHECK(ExtRat::parse("3/2").str() == "3/2");
  CHECK(ExtRat::parse("4").str() == "4");
  CHECK(ExtRat::parse("inf").is_infinite());
  CHECK(ExtRat::parse("6/4") == ExtRat(3, 2));
  CHECK_THROWS_AS(ExtRat::parse("3/2/5"), Error);
  CHECK_THROWS_AS(ExtRat::parse("x"), Error);
  CHECK_THROWS_AS(ExtRat::parse("-1/2"), Error);
}

TEST_CASE("projpoint distance examples") {
  ProjPoint2 a(Complex(1), Complex(0), Complex(0));
  ProjPoint2 b(Complex(2), Complex(0), Complex(0));
  ProjPoint2 c(Complex(0), Complex(1), Complex(0));
  ProjPoint2 d(Complex(1), Complex(1), Complex(0));
  CHECK(projpoint_distance(a, b) == doctest::Approx(0.0));
  CHECK(projpoint_distance(a, c) == doctest::Approx(1.0));
  double mid = projpoint_distance(d, a);
  CHECK(mid > 0.0);
  CHECK(mid < 1.0);
}

TEST_CASE("projpoint metric and scale invariance on random points") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto rnd = [&]() {
    return ProjPoint2(Complex(u(rng), u(rng)), Complex(u(rng), u(rng)),
                      Complex(u(rng), u(rng)));
  };
  for (int i = 0; i < 300; ++i) {
    ProjPoint2 p = rnd(), q = rnd(), r = rnd();
    CHECK(projpoint_distance(p, q) == doctest::Approx(projpoint_distance(q, p)));
    CHECK(projpoint_distance(p, p) == doctest::Approx(0.0));
    // triangle inequality for the chordal metric
    CHECK(projpoint_distance(p, r) <=
          projpoint_distance(p, q) + projpoint_distance(q, r) + 1e-12);
    Complex scale(u(rng) + 2.0, u(rng));
    ProjPoint2 ps(p.coords()[0] * scale, p.coords()[1] * scale, p.coords()[2] * scale);
    CHECK(projpoint_distance(p, ps) == doctest::Approx(0.0));
  }
}

TEST_CASE("projpoint normalization is deterministic") {
  ProjPoint2 p(Complex(0, 2), Complex(2, 0), Complex(1, 0));
  // first index of maximal modulus wins the tie
  CHECK(p.coords()[0] == Complex(1.0, 0.0));
}
