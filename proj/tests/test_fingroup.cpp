#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ellchar/kernels.hpp"
#include "ellchar/partitions.hpp"
#include "ellchar/weyl.hpp"

using namespace ellchar;

namespace {

RatMatrix perm_matrix(const std::vector<int>& p) {
  RatMatrix m(p.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m(p[i], i) = 1;
  return m;
}

FinGroup cyclic(int n) {
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
  return FinGroup::from_table(mul);
}

}  // namespace

TEST_CASE("symmetric group S4 from permutation matrices") {
  const FinGroup g = FinGroup::generate({perm_matrix({1, 0, 2, 3}), perm_matrix({1, 2, 3, 0})});
  CHECK(g.order() == 24);
  CHECK(g.num_classes() == 5);
  CHECK(g.exponent() == 12);
  const CharTable t = dixon_character_table(g);
  CHECK(t.size() == 5);
  long sum = 0;
  for (const auto& r : t.rows) sum += is_rational(r.degree())->get_num().get_si() * is_rational(r.degree())->get_num().get_si();
  CHECK(sum == 24);
  // Every row agrees with Murnaghan-Nakayama on some partition.
  for (const auto& sigma : partitions(4)) {
    std::vector<CycNum> v;
    for (int c = 0; c < g.num_classes(); ++c) {
      const RatMatrix& m = g.matrix(g.class_rep(c));
      std::vector<int> p(4);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          if (m(j, i) == 1) p[i] = j;
      v.push_back(CycNum(mn_character_Sn(sigma, cycle_type(p))));
    }
    CHECK(t.find_row(ClassFunction(g, v)) >= 0);
  }
}

TEST_CASE("cyclic groups have irrational characters") {
  const FinGroup g = cyclic(5);
  const CharTable t = dixon_character_table(g);
  REQUIRE(t.size() == 5);
  int irrational = 0;
  for (const auto& r : t.rows)
    for (const auto& v : r.values()) irrational += !is_rational(v).has_value();
  CHECK(irrational == 16);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) CHECK(inner_product(t.rows[i], t.rows[j]) == CycNum(i == j ? 1 : 0));
}

TEST_CASE("words, powers and inverses") {
  const FinGroup g = FinGroup::generate({perm_matrix({1, 0, 2}), perm_matrix({0, 2, 1})});
  for (int a = 0; a < g.order(); ++a) {
    CHECK(g.mul(a, g.inv(a)) == 0);
    CHECK(g.power(a, g.element_order(a)) == 0);
    RatMatrix m = RatMatrix::identity(3);
    for (int s : g.word(a)) m = m * g.matrix(s == 0 ? g.find(perm_matrix({1, 0, 2})) : g.find(perm_matrix({0, 2, 1})));
    CHECK(m == g.matrix(a));
  }
}

TEST_CASE("induction and restriction satisfy Frobenius reciprocity") {
  auto w = WeylGroup::build(CartanType::B, 3);
  const FinGroup& g = w->group();
  std::vector<int> elems{0};
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (int i : {0, 1}) {
      const int y = g.mul(elems[k], w->reflection(w->roots().simple[i]));
      if (std::find(elems.begin(), elems.end(), y) == elems.end()) elems.push_back(y);
    }
  std::sort(elems.begin(), elems.end());
  const FinGroup h = g.subgroup(elems);
  CHECK(h.order() == 6);
  const Embedding e(h, g, elems);
  const CharTable th = dixon_character_table(h);
  for (const auto& chi : w->table().rows)
    for (const auto& psi : th.rows) CHECK(inner_product(induce(psi, e), chi) == inner_product(psi, restrict(chi, e)));
}

TEST_CASE("structure constants: serial and parallel kernels agree") {
  auto w = WeylGroup::build(CartanType::D, 4);
  const auto a = class_structure_constants(w->group(), Exec::Serial);
  const auto b = class_structure_constants(w->group(), Exec::Parallel);
  CHECK(a == b);
  // Row sums: sum_j a[i][j][l] = |C_i|.
  const int k = w->group().num_classes();
  for (int i = 0; i < k; ++i)
    for (int l = 0; l < k; ++l) {
      long s = 0;
      for (int j = 0; j < k; ++j) s += a[(static_cast<std::size_t>(i) * k + j) * k + l];
      CHECK(s == w->group().class_size(i));
    }
}

TEST_CASE("serial and parallel Dixon tables agree") {
  auto w = WeylGroup::build(CartanType::C, 3);
  const CharTable s = dixon_character_table(w->group(), false);
  const CharTable p = dixon_character_table(w->group(), true);
  REQUIRE(s.size() == p.size());
  for (int r = 0; r < s.size(); ++r) CHECK(s.rows[r] == p.rows[r]);
}
