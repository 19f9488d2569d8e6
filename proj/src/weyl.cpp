#include "ellchar/weyl.hpp"

#include <numeric>

namespace ellchar {

std::unique_ptr<WeylGroup> WeylGroup::build(CartanType type, int rank, const Rat& form_scale, bool parallel) {
  std::unique_ptr<WeylGroup> w(new WeylGroup());
  w->rs_ = build_root_system(type, rank, form_scale);
  std::vector<RatMatrix> gens;
  for (int i = 0; i < rank; ++i) gens.push_back(w->rs_.reflection_matrix(w->rs_.simple[i]));
  w->g_ = FinGroup::generate(gens);

  for (std::size_t a = 0; a < w->rs_.roots.size(); ++a) {
    int e = w->g_.find(w->rs_.reflection_matrix(static_cast<int>(a)));
    if (e < 0) throw GroupError("reflection missing from the group");
    w->reflection_.push_back(e);
  }
  for (int e = 0; e < w->g_.order(); ++e) {
    Rat d = determinant(w->v0_matrix(e));
    if (d != 1 && d != -1) throw GroupError("element is not orthogonal on V0");
    w->det_.push_back(d > 0 ? 1 : -1);
  }
  std::vector<CycNum> s;
  for (int c = 0; c < w->g_.num_classes(); ++c) s.emplace_back(static_cast<long>(w->det_[w->g_.class_rep(c)]));
  w->sgn_ = ClassFunction(w->g_, std::move(s));
  w->table_ = dixon_character_table(w->g_, parallel);
  return w;
}

RatMatrix WeylGroup::v0_matrix(int elem) const {
  const int n = rs_.rank;
  const RatMatrix& m = g_.matrix(elem);
  RatMatrix a(n, n);
  for (int i = 0; i < n; ++i) {
    RatVec img = m.apply(rs_.ortho_basis[i]);
    for (int j = 0; j < n; ++j) a(j, i) = rs_.inner(img, rs_.ortho_basis[j]) / rs_.ortho_norms[j];
  }
  return a;
}

Rat WeylGroup::det_one_minus(int elem) const {
  return determinant(RatMatrix::identity(rs_.rank) - v0_matrix(elem));
}

EllipticClassSet elliptic_classes(const WeylGroup& w) {
  EllipticClassSet e;
  const FinGroup& g = w.group();
  for (int c = 0; c < g.num_classes(); ++c) {
    Rat d = w.det_one_minus(g.class_rep(c));
    if (sgn(d) == 0) continue;
    e.classes.push_back(c);
    e.det1mw.push_back(d);
  }
  if (w.roots().type == CartanType::B) {
    e.labels.assign(e.classes.size(), {});
    for (const auto& lam : partitions(w.dim())) {
      int c = g.class_of(bn_elliptic_element(w, lam));
      for (std::size_t i = 0; i < e.classes.size(); ++i)
        if (e.classes[i] == c) e.labels[i] = lam;
    }
  }
  return e;
}

ClassFunction det_one_minus_character(const WeylGroup& w) {
  std::vector<CycNum> v;
  for (int c = 0; c < w.group().num_classes(); ++c) v.emplace_back(w.det_one_minus(w.group().class_rep(c)));
  return ClassFunction(w.group(), std::move(v));
}

ClassFunction wedge_pm_character(const WeylGroup& w) {
  std::vector<CycNum> v;
  for (int c = 0; c < w.group().num_classes(); ++c) {
    std::vector<Rat> e = principal_minor_sums(w.v0_matrix(w.group().class_rep(c)));
    Rat s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) s += (i % 2 ? -e[i] : e[i]);
    v.emplace_back(s);
  }
  return ClassFunction(w.group(), std::move(v));
}

Rat elliptic_pairing(const WeylGroup& w, const ClassFunction& a, const ClassFunction& b) {
  CycNum ip = inner_product(tensor(a, wedge_pm_character(w)), b);
  auto r = is_rational(ip);
  if (!r) throw ArithmeticError("elliptic pairing is not rational");
  return *r;
}

std::vector<std::vector<Rat>> elliptic_gram(const WeylGroup& w) {
  const CharTable& t = w.table();
  ClassFunction wedge = wedge_pm_character(w);
  std::vector<std::vector<Rat>> gram(t.size(), std::vector<Rat>(t.size()));
  for (int i = 0; i < t.size(); ++i) {
    ClassFunction ti = tensor(t.rows[i], wedge);
    for (int j = 0; j < t.size(); ++j) {
      auto r = is_rational(inner_product(ti, t.rows[j]));
      if (!r) throw ArithmeticError("elliptic pairing is not rational");
      gram[i][j] = *r;
    }
  }
  return gram;
}

int elliptic_rank(const WeylGroup& w) {
  auto gram = elliptic_gram(w);
  RatMatrix m(gram.size(), gram.size());
  for (std::size_t i = 0; i < gram.size(); ++i)
    for (std::size_t j = 0; j < gram.size(); ++j) m(i, j) = gram[i][j];
  return static_cast<int>(rank(m));
}

std::vector<int> invariant_degrees(CartanType type, int n) {
  std::vector<int> d;
  switch (type) {
    case CartanType::A:
      for (int i = 2; i <= n + 1; ++i) d.push_back(i);
      break;
    case CartanType::B:
    case CartanType::C:
      for (int i = 1; i <= n; ++i) d.push_back(2 * i);
      break;
    case CartanType::D:
      for (int i = 1; i < n; ++i) d.push_back(2 * i);
      d.push_back(n);
      break;
    case CartanType::G: d = {2, 6}; break;
    case CartanType::F: d = {2, 6, 8, 12}; break;
    case CartanType::E:
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (n == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
  }
  return d;
}

int bn_elliptic_element(const WeylGroup& w, const Partition& lambda) {
  const RootSystem& rs = w.roots();
  if (rs.type != CartanType::B) throw std::invalid_argument("negative-cycle classes need type B");
  if (std::accumulate(lambda.begin(), lambda.end(), 0) != rs.rank)
    throw std::invalid_argument("partition size differs from the rank");
  RatMatrix m(rs.rank, rs.rank);
  int start = 0;
  for (int len : lambda) {
    for (int i = 0; i < len; ++i) {
      int from = start + i;
      if (i + 1 < len)
        m(from + 1, from) = 1;
      else
        m(start, from) = -1;
    }
    start += len;
  }
  int e = w.group().find(m);
  if (e < 0) throw GroupError("block Coxeter element not found");
  return e;
}

ClassFunction bn_type_character(const WeylGroup& w, const Partition& sigma) {
  if (w.roots().type != CartanType::B) throw std::invalid_argument("sigma x (empty) needs type B");
  const int n = w.dim();
  std::vector<CycNum> v;
  for (int c = 0; c < w.group().num_classes(); ++c) {
    const RatMatrix& m = w.group().matrix(w.group().class_rep(c));
    std::vector<int> perm(n, -1);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        if (sgn(m(i, j)) != 0) perm[j] = i;
    v.emplace_back(mn_character_Sn(sigma, cycle_type(perm)));
  }
  return ClassFunction(w.group(), std::move(v));
}

}  // namespace ellchar
