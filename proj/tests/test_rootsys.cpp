#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ellchar/rootsys.hpp"

using namespace ellchar;

namespace {

struct Expect {
  CartanType type;
  int rank, roots, coxeter;
};

}  // namespace

TEST_CASE("root counts and Coxeter numbers") {
  using C = CartanType;
  const Expect cases[] = {{C::A, 1, 2, 2},  {C::A, 2, 6, 3},  {C::A, 5, 30, 6}, {C::B, 2, 8, 4},
                          {C::B, 3, 18, 6}, {C::B, 4, 32, 8}, {C::C, 3, 18, 6}, {C::C, 4, 32, 8},
                          {C::D, 4, 24, 6}, {C::G, 2, 12, 6}, {C::F, 4, 48, 12}};
  for (const auto& e : cases) {
    CAPTURE(e.rank);
    const RootSystem rs = build_root_system(e.type, e.rank);
    CHECK(static_cast<int>(rs.roots.size()) == e.roots);
    CHECK(rs.num_positive() * 2 == e.roots);
    CHECK(rs.coxeter_number() == e.coxeter);
    CHECK(e.roots == e.rank * e.coxeter);
  }
}

TEST_CASE("reflections permute the roots and fix the form") {
  const RootSystem rs = build_root_system(CartanType::G, 2);
  for (int a = 0; a < static_cast<int>(rs.roots.size()); ++a)
    for (int b = 0; b < static_cast<int>(rs.roots.size()); ++b) {
      const RatVec r = rs.reflect(a, rs.roots[b]);
      REQUIRE(rs.index_of(r) >= 0);
      CHECK(rs.inner(r, r) == rs.norm2(b));
    }
  CHECK(rs.num_orbits() == 2);
}

TEST_CASE("orthogonal basis of V0") {
  const RootSystem a2 = build_root_system(CartanType::A, 2);
  REQUIRE(a2.ortho_basis.size() == 2);
  CHECK(a2.inner(a2.ortho_basis[0], a2.ortho_basis[1]) == 0);
  const RootSystem f4 = build_root_system(CartanType::F, 4);
  for (int a = 0; a < static_cast<int>(f4.roots.size()); ++a) {
    const RatVec c = f4.ortho_coords(f4.roots[a]);
    Rat n = 0;
    for (int i = 0; i < 4; ++i) n += c[i] * c[i] * f4.ortho_norms[i];
    CHECK(n == f4.norm2(a));
  }
}

TEST_CASE("unsupported types are rejected") {
  CHECK_THROWS_AS(build_root_system(CartanType::E, 6), UnsupportedRootSystem);
  CHECK_THROWS_AS(build_root_system(CartanType::G, 3), UnsupportedRootSystem);
  CHECK_THROWS(parse_cartan("X"));
}

TEST_CASE("parameter functions") {
  const RootSystem b2 = build_root_system(CartanType::B, 2);
  const ParamFn p = ParamFn::by_length(b2, Rat(1), Rat(1, 3));
  CHECK_FALSE(p.is_constant());
  CHECK(p.describe() == "geometric:1,1/3");
  for (int a = 0; a < static_cast<int>(b2.roots.size()); ++a) CHECK(p(a) == (b2.norm2(a) == 2 ? 1 : Rat(1, 3)));
  CHECK(ParamFn::equal(b2).is_constant());
}
