#include "ellchar/pin.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>

namespace ellchar {

CliffordAlgebra::CliffordAlgebra(std::vector<Rat> norms, int kappa)
    : n_(static_cast<int>(norms.size())), kappa_(kappa), q_(std::move(norms)) {
  if (kappa != 1 && kappa != -1) throw std::invalid_argument("kappa must be +1 or -1");
  if (n_ > 8) throw std::invalid_argument("Clifford algebra dimension too large");
  const unsigned m = size();
  factor_.resize(static_cast<std::size_t>(m) * m);
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned j = 0; j < m; ++j) {
      int swaps = 0;
      for (int b = 0; b < n_; ++b)
        if (j & (1u << b)) swaps += std::popcount(i >> (b + 1));
      Rat f = swaps % 2 ? -1 : 1;
      for (int b = 0; b < n_; ++b)
        if ((i & j) & (1u << b)) f *= kappa_ * q_[b];
      factor_[i * m + j] = f;
    }
  }
}

Multivector CliffordAlgebra::scalar(const Rat& r) const {
  Multivector a(size());
  a[0] = r;
  return a;
}

Multivector CliffordAlgebra::vector(const RatVec& coords) const {
  if (static_cast<int>(coords.size()) != n_) throw std::invalid_argument("vector has the wrong dimension");
  Multivector a(size());
  for (int i = 0; i < n_; ++i) a[1u << i] = coords[i];
  return a;
}

Multivector CliffordAlgebra::mul(const Multivector& a, const Multivector& b) const {
  const unsigned m = size();
  Multivector out(m);
  Rat t;
  for (unsigned i = 0; i < m; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (unsigned j = 0; j < m; ++j) {
      if (sgn(b[j]) == 0) continue;
      t = a[i] * b[j];
      t *= factor(i, j);
      out[i ^ j] += t;
    }
  }
  return out;
}

Rat CliffordAlgebra::mul_coeff(const Multivector& a, const Multivector& b, unsigned mask) const {
  Rat s = 0, t;
  for (unsigned i = 0; i < size(); ++i) {
    const unsigned j = i ^ mask;
    if (sgn(a[i]) == 0 || sgn(b[j]) == 0) continue;
    t = a[i] * b[j];
    t *= factor(i, j);
    s += t;
  }
  return s;
}

int CliffordAlgebra::parity(const Multivector& a) const {
  int p = 0;
  for (unsigned i = 0; i < size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    int q = std::popcount(i) % 2 ? -1 : 1;
    if (p == 0)
      p = q;
    else if (p != q)
      return 0;
  }
  return p;
}

Multivector CliffordAlgebra::transpose(const Multivector& a) const {
  Multivector out = a;
  for (unsigned i = 0; i < size(); ++i) {
    int k = std::popcount(i);
    int s = (k * (k - 1) / 2) % 2 ? -1 : 1;
    if (k % 2 && kappa_ == 1) s = -s;
    if (s < 0) out[i] = -out[i];
  }
  return out;
}

Rat CliffordAlgebra::volume_square() const { return factor(size() - 1, size() - 1); }

namespace {

unsigned leading_mask(const Multivector& a) {
  for (unsigned i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0) return i;
  throw std::logic_error("zero lift");
}

}  // namespace

std::vector<signed char> fill_cocycle(const CliffordAlgebra& cl, const FinGroup& w,
                                      const std::vector<Multivector>& lifts, const std::vector<Rat>& norms,
                                      Exec exec) {
  const int n = w.order();
  std::vector<signed char> c(static_cast<std::size_t>(n) * n, 0);
  std::vector<unsigned> lead(n);
  for (int x = 0; x < n; ++x) lead[x] = leading_mask(lifts[x]);

  if (exec == Exec::Serial) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        const int ab = w.mul(a, b);
        Multivector prod = cl.mul(lifts[a], lifts[b]);
        const unsigned m = lead[ab];
        Rat r = prod[m] / lifts[ab][m];
        for (unsigned i = 0; i < prod.size(); ++i)
          if (prod[i] != r * lifts[ab][i]) throw std::logic_error("lift product is not proportional to the lift");
        if (r * r != norms[a] * norms[b] / norms[ab]) throw std::logic_error("lift norms are inconsistent");
        c[static_cast<std::size_t>(a) * n + b] = static_cast<signed char>(sgn(r));
      }
    }
    return c;
  }

  std::atomic<bool> failed{false};
#pragma omp parallel for schedule(dynamic, 8) num_threads(kernel_threads())
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = w.mul(a, b);
      const unsigned m = lead[ab];
      Rat v = cl.mul_coeff(lifts[a], lifts[b], m);
      int s = sgn(v) * sgn(lifts[ab][m]);
      if (s == 0) failed = true;
      c[static_cast<std::size_t>(a) * n + b] = static_cast<signed char>(s);
    }
  }
  if (failed) throw std::logic_error("lift product vanishes on the leading monomial");
  return c;
}

std::unique_ptr<PinCover> PinCover::build(const WeylGroup& w, const PinOptions& opt) {
  const RootSystem& rs = w.roots();
  std::unique_ptr<PinCover> p(new PinCover(w, CliffordAlgebra(rs.ortho_norms, opt.kappa)));
  const CliffordAlgebra& cl = p->cl_;
  const FinGroup& g = w.group();
  const int n = rs.rank;

  std::vector<Multivector> simple;
  for (int i = 0; i < n; ++i) simple.push_back(cl.vector(rs.ortho_coords(rs.simple_root(i))));
  for (int x = 0; x < g.order(); ++x) {
    Multivector m = cl.scalar(1);
    Rat norm = 1;
    for (int i : g.word(x)) {
      m = cl.mul(m, simple[i]);
      norm *= rs.norm2(rs.simple[i]);
    }
    p->lifts_.push_back(std::move(m));
    p->norms_.push_back(norm);
  }

  // p(lift(w)) = w, checked on the basis: eps(P) P u_i = w(u_i) P.
  for (int x = 0; x < g.order(); ++x) {
    const Multivector& lx = p->lifts_[x];
    const int eps = cl.parity(lx);
    if (eps == 0) throw std::logic_error("lift is not homogeneous");
    RatMatrix a = w.v0_matrix(x);
    for (int i = 0; i < n; ++i) {
      RatVec e(n);
      e[i] = 1;
      Multivector lhs = cl.mul(lx, cl.vector(e));
      if (eps < 0)
        for (auto& v : lhs) v = -v;
      RatVec col(n);
      for (int j = 0; j < n; ++j) col[j] = a(j, i);
      if (lhs != cl.mul(cl.vector(col), lx)) throw std::logic_error("lift does not project to the Weyl group element");
    }
  }

  p->cocycle_ = fill_cocycle(cl, g, p->lifts_, p->norms_, opt.parallel ? Exec::Parallel : Exec::Serial);

  const int nw = g.order();
  std::vector<std::vector<int>> t(2 * nw, std::vector<int>(2 * nw));
  for (int a = 0; a < nw; ++a)
    for (int b = 0; b < nw; ++b) {
      const int ab = g.mul(a, b);
      const int c = p->cocycle(a, b);
      for (int sa = 0; sa < 2; ++sa)
        for (int sb = 0; sb < 2; ++sb) t[2 * a + sa][2 * b + sb] = 2 * ab + ((sa ^ sb ^ (c < 0 ? 1 : 0)) & 1);
    }
  p->wt_ = FinGroup::from_table(std::move(t));

  std::vector<int> elems;
  for (int x = 0; x < 2 * nw; ++x)
    if (w.in_prime(project(x))) elems.push_back(x);
  if (w.odd()) {
    p->emb_ = Embedding(p->wt_, p->wt_, elems);
  } else {
    p->wtp_ = std::make_unique<FinGroup>(p->wt_.subgroup(elems));
    p->emb_ = Embedding(*p->wtp_, p->wt_, elems);
  }

  p->local_.assign(2 * nw, -1);
  for (std::size_t i = 0; i < elems.size(); ++i) p->local_[elems[i]] = static_cast<int>(i);

  // Spin characters on W~'.
  const FinGroup& h = p->prime();
  std::vector<CycNum> sum, diff;
  p->orientation_ = 0;
  for (int c = 0; c < h.num_classes(); ++c) {
    const int x = p->prime_to_wtilde(h.class_rep(c));
    sum.push_back(p->spin_sum(x));
    diff.push_back(p->raw_spin_diff(x));
    if (p->orientation_ == 0 && sgn(w.det_one_minus(project(x))) != 0) {
      const Multivector& l = p->lifts_[project(x)];
      p->orientation_ = sgn(l[cl.size() - 1]) * sign(x);
      if (p->orientation_ == 0) throw std::logic_error("spin difference vanishes on an elliptic lift");
    }
  }
  if (p->orientation_ == 0) throw std::logic_error("no elliptic class");
  std::vector<CycNum> plus, minus;
  for (std::size_t c = 0; c < sum.size(); ++c) {
    diff[c] *= Rat(p->orientation_);
    plus.push_back((sum[c] + diff[c]) * Rat(1, 2));
    minus.push_back((sum[c] - diff[c]) * Rat(1, 2));
  }
  p->s_plus_ = ClassFunction(h, std::move(plus));
  p->s_minus_ = ClassFunction(h, std::move(minus));
  p->s_diff_ = ClassFunction(h, std::move(diff));

  if (!w.odd()) {
    p->outer_ = element(w.reflection(rs.simple[0]), 1);
    const FinGroup& wt = p->wt_;
    for (int c = 0; c < h.num_classes(); ++c) {
      const int x = p->prime_to_wtilde(h.class_rep(c));
      const int y = wt.mul(wt.mul(p->outer_, x), wt.inv(p->outer_));
      p->outer_class_map_.push_back(h.class_of(p->local_[y]));
    }
  }
  return p;
}

int PinCover::prime_z() const {
  for (int i = 0; i < prime().order(); ++i)
    if (prime_to_wtilde(i) == z) return i;
  throw std::logic_error("z is missing from W~'");
}

namespace {

Rat spin_scale(int n) { return Rat(BigInt(1) << ((n + 1) / 2)); }

}  // namespace

CycNum PinCover::spin_sum(int x) const {
  const Multivector& l = lifts_[project(x)];
  if (sgn(l[0]) == 0) return CycNum(0);
  return sqrt_rat(1 / norms_[project(x)]) * (spin_scale(cl_.dim()) * l[0] * sign(x));
}

CycNum PinCover::raw_spin_diff(int x) const {
  const Multivector& l = lifts_[project(x)];
  const Rat& top = l[cl_.size() - 1];
  if (sgn(top) == 0) return CycNum(0);
  return sqrt_rat(cl_.volume_square() / norms_[project(x)]) * (spin_scale(cl_.dim()) * top * sign(x));
}

const CharTable& PinCover::wtilde_table() const {
  if (!wt_table_) wt_table_ = dixon_character_table(wt_);
  return *wt_table_;
}

const CharTable& PinCover::prime_table() const {
  if (w_.odd()) return wtilde_table();
  if (!prime_table_) prime_table_ = dixon_character_table(*wtp_);
  return *prime_table_;
}

ClassFunction PinCover::pull_back(const ClassFunction& f) const {
  if (&f.group() != &w_.group()) throw GroupError("pull back expects a class function of W");
  const FinGroup& h = prime();
  std::vector<CycNum> v;
  for (int c = 0; c < h.num_classes(); ++c)
    v.push_back(f[w_.group().class_of(project(prime_to_wtilde(h.class_rep(c))))]);
  return ClassFunction(h, std::move(v));
}

std::vector<int> PinCover::genuine_rows() const {
  const CharTable& t = prime_table();
  const int zc = prime().class_of(prime_z());
  std::vector<int> rows;
  for (int i = 0; i < t.size(); ++i)
    if (t.rows[i][zc] == -t.rows[i][0]) rows.push_back(i);
  return rows;
}

ClassFunction PinCover::swap_partner(const ClassFunction& f) const {
  if (w_.odd()) return tensor(f, pull_back(w_.sgn()));
  std::vector<CycNum> v;
  for (int m : outer_class_map_) v.push_back(f[m]);
  return ClassFunction(f.group(), std::move(v));
}

}  // namespace ellchar
