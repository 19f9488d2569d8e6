#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ellchar/exactnum.hpp"
#include "ellchar/serialize.hpp"

using namespace ellchar;

TEST_CASE("roots of unity reduce modulo the cyclotomic polynomial") {
  CHECK(CycNum::zeta(3) + CycNum::zeta(3, 2) == CycNum(-1));
  CHECK(CycNum::zeta(4) * CycNum::zeta(4) == CycNum(-1));
  CHECK(CycNum::zeta(12, 12) == CycNum(1));
  CycNum s;
  for (long k = 0; k < 5; ++k) s += CycNum::zeta(5, k);
  CHECK(s.is_zero());
  CHECK(s.conductor() == 1);
}

TEST_CASE("square roots of integers and rationals") {
  for (long d : {2L, 3L, 5L, 6L, -1L, -2L, -3L, 7L, -15L}) {
    const CycNum r = sqrt_int(d);
    CHECK(r * r == CycNum(d));
  }
  CHECK(sqrt_int(2).shadow().real() > 0);
  CHECK(sqrt_int(-3).shadow().imag() > 0);
  const CycNum q = sqrt_rat(Rat(3, 8));
  CHECK(q * q == CycNum(Rat(3, 8)));
  CHECK(sqrt_rat(Rat(9, 4)) == CycNum(Rat(3, 2)));
}

TEST_CASE("field operations") {
  const CycNum a = CycNum::zeta(8) + CycNum(Rat(1, 2));
  CHECK(a * a.inverse() == CycNum(1));
  CHECK((a / a) == CycNum(1));
  CHECK(a.galois(3).galois(3) == a);
  CHECK(a.conj().conj() == a);
  CHECK((a - a).is_zero());
  CHECK((a * a.conj()).conj() == a * a.conj());
  CHECK(is_rational(sqrt_int(5) * sqrt_int(5).conj()) == Rat(5));
}

TEST_CASE("mixed conductors combine in the least common field") {
  const CycNum x = CycNum::zeta(3) * CycNum::zeta(4);
  CHECK(x == CycNum::zeta(12, 7));
  CHECK(sqrt_int(2) * sqrt_int(3) == sqrt_int(6));
}

TEST_CASE("pretty printing") {
  CHECK(CycNum(Rat(-3, 4)).pretty() == "-3/4");
  CHECK(sqrt_int(2).pretty() == "√2");
  CHECK(sqrt_int(-3).pretty() == "i√3");
}

TEST_CASE("JSON round trip") {
  const CycNum a = CycNum::zeta(7, 3) * Rat(-5, 9) + sqrt_int(5);
  const Json j = to_json(a);
  CHECK(j.contains("N"));
  CHECK(j.contains("coeffs"));
  CHECK(cycnum_from_json(j) == a);
  CHECK(to_json(Rat(-2) / 6) == "-1/3");
}
