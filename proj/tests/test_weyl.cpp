#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ellchar/weyl.hpp"

using namespace ellchar;

TEST_CASE("orders, classes and elliptic classes") {
  struct Case {
    CartanType t;
    int rank, order, classes, elliptic;
  };
  using C = CartanType;
  const Case cases[] = {{C::A, 1, 2, 2, 1},   {C::A, 3, 24, 5, 1},  {C::B, 2, 8, 5, 2},  {C::B, 3, 48, 10, 3},
                        {C::C, 3, 48, 10, 3}, {C::D, 4, 192, 13, 3}, {C::G, 2, 12, 6, 3}, {C::B, 4, 384, 20, 5}};
  for (const auto& c : cases) {
    CAPTURE(c.rank);
    auto w = WeylGroup::build(c.t, c.rank);
    CHECK(w->group().order() == c.order);
    CHECK(w->group().num_classes() == c.classes);
    CHECK(static_cast<int>(elliptic_classes(*w).classes.size()) == c.elliptic);
    CHECK(elliptic_rank(*w) == c.elliptic);
    CHECK(wedge_pm_character(*w) == det_one_minus_character(*w));
  }
}

TEST_CASE("type B elliptic classes carry partition labels") {
  auto w = WeylGroup::build(CartanType::B, 3);
  const auto e = elliptic_classes(*w);
  REQUIRE(e.labels.size() == 3);
  for (const auto& lam : partitions(3)) {
    const int x = bn_elliptic_element(*w, lam);
    CHECK(sgn(w->det_one_minus(x)) != 0);
    CHECK(w->det_one_minus(x) == Rat(1) * (1 << lam.size()));
  }
}

TEST_CASE("sigma x (empty) restricts to the S_n character") {
  auto w = WeylGroup::build(CartanType::B, 3);
  for (const auto& sigma : partitions(3)) {
    const ClassFunction chi = bn_type_character(*w, sigma);
    CHECK(w->table().find_row(chi) >= 0);
    for (const auto& lam : partitions(3))
      CHECK(chi[w->group().class_of(bn_elliptic_element(*w, lam))] == CycNum(mn_character_Sn(sigma, lam)));
  }
}

TEST_CASE("elliptic pairing kills induced characters") {
  auto w = WeylGroup::build(CartanType::A, 2);
  const auto& t = w->table();
  // triv + 2 refl + sgn... the regular character is induced from the trivial subgroup.
  ClassFunction reg = ClassFunction::constant(w->group(), CycNum(0));
  for (const auto& r : t.rows) reg += r * r.degree();
  for (const auto& r : t.rows) CHECK(elliptic_pairing(*w, reg, r) == 0);
  CHECK(elliptic_pairing(*w, t.rows[0], t.rows[0]) == 1);
}

TEST_CASE("MN oracle spot values") {
  CHECK(mn_character_Sn({2, 1}, {3}) == -1);
  CHECK(mn_character_Sn({2, 1}, {1, 1, 1}) == 2);
  CHECK(mn_character_Sn({3, 1}, {2, 2}) == -1);
  CHECK(mn_character_Sn({2, 2}, {2, 2}) == 2);
  CHECK(partitions(5).size() == 7);
}

TEST_CASE("invariant degrees multiply to the order") {
  for (auto [t, n] : {std::pair{CartanType::F, 4}, {CartanType::G, 2}, {CartanType::D, 4}}) {
    long p = 1;
    for (int d : invariant_degrees(t, n)) p *= d;
    CHECK(p == WeylGroup::build(t, n)->group().order());
  }
}
