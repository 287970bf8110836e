#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "vf/scalar.hpp"

using vf::GaussianRational;

namespace {

GaussianRational gr(long re, long im = 0) { return {mpq_class(re), mpq_class(im)}; }

GaussianRational gr(long rn, long rd, long in, long id) {
  return {mpq_class(rn, rd), mpq_class(in, id)};
}

// small random scalar with numerators in [-9, 9], denominators in [1, 4]
GaussianRational randomScalar(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  return gr(num(rng), den(rng), num(rng), den(rng));
}

}  // namespace

TEST_CASE("field operations") {
  CHECK(gr(1, 2, 1, 1) * gr(1, 2, -1, 1) == gr(5, 4, 0, 1));  // |1/2+i|^2
  CHECK(gr(0) + gr(0) == gr(0));
  CHECK(GaussianRational::imaginaryUnit() * (-GaussianRational::imaginaryUnit()) ==
        gr(1));
  CHECK(gr(3).conj() == gr(3));
  CHECK(gr(1, 1).conj() == gr(1, -1));
  CHECK(gr(7) / gr(7) == gr(1));
  CHECK_THROWS_AS(gr(1) / gr(0), vf::DivisionByZeroError);
}

TEST_CASE("stored fractions are reduced") {
  GaussianRational x{mpq_class(2, 4), mpq_class(-3, -6)};
  CHECK(x.re().get_num() == 1);
  CHECK(x.re().get_den() == 2);
  CHECK(x.im().get_den() == 2);
  CHECK(x == gr(1, 2, 1, 2));
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    GaussianRational a = randomScalar(rng), b = randomScalar(rng), c = randomScalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    if (!a.isZero()) CHECK((b / a) * a == b);
  }
}

TEST_CASE("descending factorial") {
  CHECK(vf::descendingFactorial(gr(5, 1, 3, 7), 0) == gr(1));
  CHECK(vf::descendingFactorial(gr(3), 2) == gr(6));
  CHECK(vf::descendingFactorial(gr(0), 1) == gr(0));

  // recurrence (x)_{n+1} = (x)_n (x - n)
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    GaussianRational x = randomScalar(rng);
    for (unsigned n = 0; n < 6; ++n) {
      GaussianRational lhs = vf::descendingFactorial(x, n + 1);
      GaussianRational rhs = vf::descendingFactorial(x, n) *
                             (x - GaussianRational(static_cast<long>(n)));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("integrality predicates") {
  CHECK(gr(3).isNatural());
  CHECK(gr(3).isInteger());
  CHECK(gr(-4).isInMinusTwoN());
  CHECK(gr(0).isInMinusTwoN());
  CHECK(!gr(-3).isInMinusTwoN());
  CHECK(!gr(2).isInMinusTwoN());
  GaussianRational i = GaussianRational::imaginaryUnit();
  CHECK(!i.isInteger());
  CHECK(!i.isNatural());
  CHECK(!i.isInMinusTwoN());
  CHECK(!gr(1, 2, 0, 1).isInteger());
  CHECK(!gr(-1).isNatural());
  CHECK(gr(-1).isInteger());
}

TEST_CASE("parse examples") {
  CHECK(vf::parseScalar("3/2+1/2i") == gr(3, 2, 1, 2));
  CHECK(vf::parseScalar("-2") == gr(-2));
  CHECK(vf::parseScalar("2/4") == gr(1, 2, 0, 1));
  CHECK(vf::parseScalar("i") == gr(0, 1, 1, 1));
  CHECK(vf::parseScalar("-i") == gr(0, 1, -1, 1));
  CHECK(vf::parseScalar("3i") == gr(0, 1, 3, 1));
  CHECK(vf::parseScalar("1/2i") == gr(0, 1, 1, 2));
  CHECK(vf::parseScalar("3/2-1/2i") == gr(3, 2, -1, 2));
  CHECK(vf::parseScalar("-1/2+i") == gr(-1, 2, 1, 1));
  CHECK(vf::parseScalar("0") == gr(0));
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(vf::parseScalar(""), vf::ParseError);
  CHECK_THROWS_AS(vf::parseScalar("1/0"), vf::ParseError);
  CHECK_THROWS_AS(vf::parseScalar("2+"), vf::ParseError);
  CHECK_THROWS_AS(vf::parseScalar("i+2"), vf::ParseError);
  CHECK_THROWS_AS(vf::parseScalar("1x"), vf::ParseError);
  CHECK_THROWS_AS(vf::parseScalar("1+2"), vf::ParseError);
  try {
    vf::parseScalar("3/2-1/0i");
    FAIL("expected ParseError");
  } catch (const vf::ParseError& e) {
    CHECK(e.position() == 6);
  }
}

TEST_CASE("format/parse round-trip") {
  CHECK(vf::formatScalar(gr(3, 2, 1, 2)) == "3/2+1/2i");
  CHECK(vf::formatScalar(gr(-2)) == "-2");
  CHECK(vf::formatScalar(gr(0, 1, 1, 1)) == "i");
  CHECK(vf::formatScalar(gr(0, 1, -1, 1)) == "-i");
  CHECK(vf::formatScalar(gr(2, 1, -1, 1)) == "2-i");
  CHECK(vf::formatScalar(gr(0)) == "0");

  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    GaussianRational x = randomScalar(rng);
    CHECK(vf::parseScalar(vf::formatScalar(x)) == x);
  }
}
