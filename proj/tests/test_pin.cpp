#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ellchar/model.hpp"

using namespace ellchar;

TEST_CASE("Clifford relations") {
  const CliffordAlgebra cl({Rat(2), Rat(3, 2)}, 1);
  const Multivector u0 = cl.vector({Rat(1), Rat(0)});
  const Multivector u1 = cl.vector({Rat(0), Rat(1)});
  CHECK(cl.mul(u0, u0) == cl.scalar(2));
  CHECK(cl.mul(u1, u1) == cl.scalar(Rat(3, 2)));
  Multivector anti = cl.mul(u0, u1);
  const Multivector other = cl.mul(u1, u0);
  for (unsigned i = 0; i < anti.size(); ++i) anti[i] += other[i];
  CHECK(anti == cl.scalar(0));
  CHECK(cl.parity(u0) == -1);
  CHECK(cl.parity(cl.mul(u0, u1)) == 1);
  CHECK(cl.volume_square() == -3);
  const CliffordAlgebra neg({Rat(1)}, -1);
  CHECK(neg.mul(neg.vector({Rat(1)}), neg.vector({Rat(1)})) == neg.scalar(-1));
}

TEST_CASE("the Pin cover is a double cover") {
  for (auto [t, n] : {std::pair{CartanType::A, 2}, {CartanType::B, 3}, {CartanType::G, 2}, {CartanType::D, 4}}) {
    auto m = Model::build(t, n);
    const int order = m.weyl->group().order();
    CHECK(m.pin->wtilde().order() == 2 * order);
    CHECK(m.pin->prime().order() == 2 * order / m.weyl->prime_index());
    // z is central of order two.
    const FinGroup& g = m.pin->wtilde();
    CHECK(g.element_order(PinCover::z) == 2);
    for (int x = 0; x < g.order(); ++x) CHECK(g.mul(x, PinCover::z) == g.mul(PinCover::z, x));
    // Projection is a homomorphism onto W.
    for (int x = 0; x < g.order(); x += 7)
      for (int y = 0; y < g.order(); y += 5)
        CHECK(PinCover::project(g.mul(x, y)) ==
              m.weyl->group().mul(PinCover::project(x), PinCover::project(y)));
  }
}

TEST_CASE("cocycle: serial reference and parallel kernel agree") {
  auto m = Model::build(CartanType::B, 3);
  const FinGroup& g = m.weyl->group();
  std::vector<Multivector> lifts;
  std::vector<Rat> norms;
  for (int w = 0; w < g.order(); ++w) {
    lifts.push_back(m.pin->lift(w));
    norms.push_back(m.pin->lift_norm(w));
  }
  const auto a = fill_cocycle(m.pin->clifford(), g, lifts, norms, Exec::Serial);
  const auto b = fill_cocycle(m.pin->clifford(), g, lifts, norms, Exec::Parallel);
  CHECK(a == b);
  // Associativity of the cocycle.
  for (int x = 0; x < g.order(); x += 3)
    for (int y = 0; y < g.order(); y += 5)
      for (int z = 0; z < g.order(); z += 7)
        CHECK(m.pin->cocycle(x, y) * m.pin->cocycle(g.mul(x, y), z) ==
              m.pin->cocycle(y, z) * m.pin->cocycle(x, g.mul(y, z)));
}

TEST_CASE("spin characters") {
  auto m = Model::build(CartanType::A, 3);
  const PinCover& pin = *m.pin;
  const auto& t = pin.prime_table();
  CHECK(t.find_row(pin.spin_plus()) >= 0);
  CHECK(t.find_row(pin.spin_minus()) >= 0);
  CHECK(pin.spin_plus() != pin.spin_minus());
  CHECK(pin.spin_plus() - pin.spin_minus() == pin.spin_diff());
  CHECK(pin.spin_plus().degree() == CycNum(2));
  const auto genuine = pin.genuine_rows();
  CHECK(std::find(genuine.begin(), genuine.end(), t.find_row(pin.spin_plus())) != genuine.end());
  // Swapping the labels is an involution exchanging S+ and S-.
  CHECK(pin.swap_partner(pin.spin_plus()) == pin.spin_minus());
  CHECK(pin.swap_partner(pin.swap_partner(pin.spin_plus())) == pin.spin_plus());
}

TEST_CASE("odd rank: S- is S+ twisted by the sign character") {
  auto m = Model::build(CartanType::B, 3);
  CHECK(m.pin->swap_partner(m.pin->spin_plus()) == m.pin->spin_minus());
  CHECK(m.pin->spin_plus().degree() == CycNum(2));
}

TEST_CASE("A1 covers under both Clifford signs") {
  auto plus = Model::build(CartanType::A, 1, Rat(1), true, 1);
  auto minus = Model::build(CartanType::A, 1, Rat(1), true, -1);
  CHECK(plus.pin->wtilde().exponent() == 2);
  CHECK(minus.pin->wtilde().exponent() == 4);
}
