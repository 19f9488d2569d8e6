#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ellchar/verify.hpp"

using namespace ellchar;

TEST_CASE("A1 Casimir scalar and calibration") {
  const KappaCalibration& cal = calibrate_kappa();
  CHECK(cal.kappa == 1);
  CHECK(cal.a_positive == CycNum(Rat(1, 2)));
  CHECK(cal.a_negative == CycNum(Rat(-1, 2)));
  CHECK(check_a1_calibration().pass);
}

TEST_CASE("Casimir is central with real scalars") {
  for (auto [t, n] : {std::pair{CartanType::A, 2}, {CartanType::B, 2}, {CartanType::G, 2}, {CartanType::C, 3}}) {
    auto m = Model::build(t, n);
    const RootSystem& rs = m.weyl->roots();
    CHECK(check_casimir_central(*m.pin, build_casimir(*m.pin, ParamFn::equal(rs))).pass);
    CHECK(check_casimir_central(*m.pin, build_casimir(*m.pin, ParamFn::by_length(rs, Rat(1), Rat(2)))).pass);
    CHECK(check_casimir_central(*m.pin, build_casimir(*m.pin, ParamFn::equal(rs),
                                                      CasimirConvention::ReflectedPositive)).pass);
  }
}

TEST_CASE("Clifford image of the Casimir element is a scalar") {
  auto m = Model::build(CartanType::G, 2);
  const CasimirElem om = build_casimir(*m.pin, ParamFn::equal(m.weyl->roots()));
  for (unsigned i = 1; i < om.clifford.size(); ++i) CHECK(om.clifford[i] == 0);
}

TEST_CASE("index map is an isometry up to 2") {
  for (auto [t, n] : {std::pair{CartanType::A, 1}, {CartanType::A, 3}, {CartanType::B, 2}, {CartanType::G, 2}}) {
    auto m = Model::build(t, n);
    CHECK(check_isometry(*m.pin).pass);
    CHECK(check_spin_square(*m.pin).pass);
  }
}

TEST_CASE("index vanishes on characters induced from proper parabolics") {
  auto m = Model::build(CartanType::B, 2);
  ClassFunction reg = ClassFunction::constant(m.weyl->group(), CycNum(0));
  for (const auto& r : m.weyl->table().rows) reg += r * r.degree();
  CHECK(index_map(*m.pin, reg).is_zero());
}

TEST_CASE("B_n family against Murnaghan-Nakayama") {
  for (int n : {1, 2, 3}) {
    const BnCheck c = check_bn_example(n);
    CHECK_MESSAGE(c.example.pass, c.example.detail);
    CHECK_MESSAGE(c.index_norm.pass, c.index_norm.detail);
    CHECK(c.rows.size() == partitions(n).size());
  }
  const BnCheck c = check_bn_example(3);
  for (const auto& row : c.rows) {
    CHECK(row.pair.support_plus.size() == 1);
    for (std::size_t i = 0; i < row.values.size(); ++i) CHECK(row.values[i] == CycNum(row.sign * row.mn[i]));
  }
}

TEST_CASE("elliptic character is lift independent and antisymmetric") {
  auto m = Model::build(CartanType::B, 2);
  const CasimirElem om = build_casimir(*m.pin, ParamFn::by_length(m.weyl->roots(), Rat(1), Rat(1, 3)));
  const SigmaPair p = select_sigma_pair(*m.pin, om, bn_type_character(*m.weyl, {2}));
  SigmaPair swapped = p;
  std::swap(swapped.plus, swapped.minus);
  for (int k : elliptic_classes(*m.weyl).classes)
    for (int x : m.weyl->group().class_members(k)) {
      const CycNum v = elliptic_character(*m.pin, p, x, 1);
      CHECK(v == elliptic_character(*m.pin, p, x, -1));
      CHECK(v == elliptic_character(*m.pin, p, m.weyl->group().class_rep(k)));
      CHECK(elliptic_character(*m.pin, swapped, x) == -v);
    }
}

TEST_CASE("scale covariance") {
  CHECK(check_scale_covariance(CartanType::A, 2, Rat(1, 2)).pass);
  CHECK(check_scale_covariance(CartanType::B, 2, Rat(2)).pass);
}
