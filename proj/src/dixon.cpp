// Dixon-Schneider: the class-sum algebra is split into common eigenspaces over
// F_p, and the resulting central characters are lifted to exact cyclotomic
// character values by counting eigenvalue multiplicities.

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ellchar/fingroup.hpp"
#include "ellchar/kernels.hpp"

namespace ellchar {

namespace {

using i64 = long long;
using Vec = std::vector<i64>;

struct Fp {
  i64 p;
  i64 norm(i64 x) const {
    x %= p;
    return x < 0 ? x + p : x;
  }
  i64 mul(i64 a, i64 b) const { return a * b % p; }
  i64 pow(i64 a, i64 e) const {
    i64 r = 1;
    a = norm(a);
    for (; e > 0; e >>= 1, a = mul(a, a))
      if (e & 1) r = mul(r, a);
    return r;
  }
  i64 inv(i64 a) const {
    if (norm(a) == 0) throw ArithmeticError("inverse of zero mod p");
    return pow(a, p - 2);
  }
};

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

i64 primitive_root(const Fp& f) {
  std::vector<i64> qs;
  i64 m = f.p - 1;
  for (i64 q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      qs.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  if (m > 1) qs.push_back(m);
  for (i64 g = 2; g < f.p; ++g) {
    if (std::all_of(qs.begin(), qs.end(), [&](i64 q) { return f.pow(g, (f.p - 1) / q) != 1; })) return g;
  }
  throw ArithmeticError("no primitive root");
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(std::vector<Vec>& rows, const Fp& f) {
  std::vector<int> piv;
  std::size_t r = 0;
  const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (int c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t s = r;
    while (s < rows.size() && rows[s][c] == 0) ++s;
    if (s == rows.size()) continue;
    std::swap(rows[s], rows[r]);
    i64 iv = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, iv);
    for (std::size_t t = 0; t < rows.size(); ++t) {
      if (t == r || rows[t][c] == 0) continue;
      i64 u = rows[t][c];
      for (int j = 0; j < cols; ++j) rows[t][j] = f.norm(rows[t][j] - u * rows[r][j]);
    }
    piv.push_back(c);
    ++r;
  }
  rows.resize(r);
  return piv;
}

// Null space of a square matrix (given by rows).
std::vector<Vec> kernel(std::vector<Vec> a, const Fp& f) {
  const int n = static_cast<int>(a.size());
  std::vector<int> piv = rref(a, f);
  std::vector<bool> is_piv(n, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<Vec> ker;
  for (int free = 0; free < n; ++free) {
    if (is_piv[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = f.norm(-a[r][free]);
    ker.push_back(std::move(v));
  }
  return ker;
}

// Characteristic polynomial via reduction to Hessenberg form; constant first.
Vec char_poly(std::vector<Vec> h, const Fp& f) {
  const int n = static_cast<int>(h.size());
  for (int m = 1; m + 1 < n; ++m) {
    int i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (int r = 0; r < n; ++r) std::swap(h[r][i], h[r][m]);
    }
    i64 iv = f.inv(h[m][m - 1]);
    for (int r = m + 1; r < n; ++r) {
      i64 u = f.mul(h[r][m - 1], iv);
      if (u == 0) continue;
      for (int c = 0; c < n; ++c) h[r][c] = f.norm(h[r][c] - u * h[m][c]);
      for (int c = 0; c < n; ++c) h[c][m] = f.norm(h[c][m] + u * h[c][r]);
    }
  }
  std::vector<Vec> pol(n + 1);
  pol[0] = {1};
  for (int m = 1; m <= n; ++m) {
    Vec pm(m + 1, 0);
    for (int d = 0; d < m; ++d) {
      pm[d + 1] = f.norm(pm[d + 1] + pol[m - 1][d]);
      pm[d] = f.norm(pm[d] - h[m - 1][m - 1] * pol[m - 1][d]);
    }
    i64 t = 1;
    for (int i = 1; i < m; ++i) {
      t = f.mul(t, h[m - i][m - i - 1]);
      i64 u = f.mul(t, h[m - i - 1][m - 1]);
      for (std::size_t d = 0; d < pol[m - i - 1].size(); ++d) pm[d] = f.norm(pm[d] - u * pol[m - i - 1][d]);
    }
    pol[m] = std::move(pm);
  }
  return pol[n];
}

i64 eval(const Vec& poly, i64 x, const Fp& f) {
  i64 r = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) r = f.norm(r * x + *it);
  return r;
}

// A subspace stored as RREF rows together with the pivot columns.
struct Space {
  std::vector<Vec> basis;
  std::vector<int> piv;
};

std::vector<Space> split(const Space& s, const std::vector<Vec>& m, const Fp& f) {
  const int d = static_cast<int>(s.basis.size());
  const int k = static_cast<int>(m.size());
  std::vector<Vec> images;
  for (const auto& b : s.basis) {
    Vec y(k, 0);
    for (int j = 0; j < k; ++j) {
      i64 acc = 0;
      for (int l = 0; l < k; ++l)
        if (b[l]) acc = (acc + m[j][l] * b[l]) % f.p;
      y[j] = acc;
    }
    images.push_back(std::move(y));
  }
  std::vector<Vec> r(d, Vec(d));
  for (int t = 0; t < d; ++t)
    for (int c = 0; c < d; ++c) r[t][c] = images[c][s.piv[t]];

  Vec cp = char_poly(r, f);
  std::vector<Space> out;
  int total = 0;
  for (i64 lam = 0; lam < f.p; ++lam) {
    if (eval(cp, lam, f) != 0) continue;
    std::vector<Vec> a = r;
    for (int t = 0; t < d; ++t) a[t][t] = f.norm(a[t][t] - lam);
    std::vector<Vec> ker = kernel(a, f);
    Space e;
    for (const auto& y : ker) {
      Vec v(k, 0);
      for (int c = 0; c < d; ++c)
        if (y[c])
          for (int j = 0; j < k; ++j) v[j] = (v[j] + y[c] * s.basis[c][j]) % f.p;
      e.basis.push_back(std::move(v));
    }
    e.piv = rref(e.basis, f);
    total += static_cast<int>(e.basis.size());
    out.push_back(std::move(e));
  }
  if (total != d) throw ArithmeticError("class matrix is not diagonalizable over the chosen prime");
  return out;
}

}  // namespace

CharTable dixon_character_table(const FinGroup& g, bool parallel) {
  const int k = g.num_classes();
  const i64 order = g.order();
  const int e = g.exponent();

  i64 p = e + 1;
  const double bound = 2.0 * std::sqrt(static_cast<double>(order));
  while (!(is_prime(p) && static_cast<double>(p) > bound)) p += e;
  const Fp f{p};

  std::vector<long> a = class_structure_constants(g, parallel ? Exec::Parallel : Exec::Serial);

  Space whole;
  for (int j = 0; j < k; ++j) {
    Vec v(k, 0);
    v[j] = 1;
    whole.basis.push_back(std::move(v));
    whole.piv.push_back(j);
  }
  std::vector<Space> spaces{whole};
  for (int i = 1; i < k; ++i) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const Space& s) { return s.basis.size() == 1; })) break;
    std::vector<Vec> m(k, Vec(k));
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l) m[j][l] = a[(static_cast<std::size_t>(i) * k + j) * k + l] % p;
    std::vector<Space> next;
    for (const auto& s : spaces) {
      if (s.basis.size() == 1) {
        next.push_back(s);
        continue;
      }
      for (auto& piece : split(s, m, f)) next.push_back(std::move(piece));
    }
    spaces = std::move(next);
  }
  if (static_cast<int>(spaces.size()) != k) throw ArithmeticError("class-sum algebra did not split completely");

  const i64 z = f.pow(primitive_root(f), (p - 1) / e);
  const i64 root_bound = static_cast<i64>(std::floor(std::sqrt(static_cast<double>(order))));

  CharTable table;
  table.group = &g;
  table.prime = static_cast<int>(p);
  long degree_sum = 0;
  std::vector<long> degrees;
  for (const auto& s : spaces) {
    const Vec& v = s.basis.front();
    if (v[0] != 1) throw ArithmeticError("central character does not fix the identity class");
    i64 sum = 0;
    for (int j = 0; j < k; ++j)
      sum = f.norm(sum + f.mul(f.mul(v[j], v[g.inverse_class(j)]), f.inv(g.class_size(j))));
    const i64 d2 = f.mul(f.norm(order), f.inv(sum));
    i64 d = 0;
    for (i64 t = 1; t <= root_bound; ++t)
      if (f.norm(t * t) == d2) d = t;
    if (d == 0) throw ArithmeticError("degree recovery failed");

    Vec modval(k);
    for (int j = 0; j < k; ++j) modval[j] = f.mul(f.mul(v[j], d), f.inv(g.class_size(j)));

    std::vector<CycNum> values;
    for (int j = 0; j < k; ++j) {
      const int o = g.element_order(g.class_rep(j));
      const i64 zo = f.pow(z, e / o);
      const i64 inv_o = f.inv(o);
      std::vector<Rat> coeff(o);
      for (int t = 0; t < o; ++t) {
        i64 acc = 0;
        for (int l = 0; l < o; ++l) acc = f.norm(acc + f.mul(modval[g.power_class(j, l)], f.pow(zo, ((-t * l) % o + o) % o)));
        acc = f.mul(acc, inv_o);
        if (acc > d) throw ArithmeticError("eigenvalue multiplicity out of range");
        coeff[t] = Rat(static_cast<long>(acc));
      }
      values.push_back(CycNum::from_powers(o, std::move(coeff)));
    }
    degree_sum += d * d;
    degrees.push_back(d);
    table.rows.emplace_back(g, std::move(values));
  }
  if (degree_sum != order) throw ArithmeticError("sum of squared degrees differs from the group order");

  // Reproducible row order.
  std::vector<std::vector<std::vector<Rat>>> keys;
  for (const auto& r : table.rows) {
    std::vector<std::vector<Rat>> kc;
    for (const auto& x : r.values()) kc.push_back(x.coeffs_in(e));
    keys.push_back(std::move(kc));
  }
  auto trivial = [&](int r) {
    return std::all_of(table.rows[r].values().begin(), table.rows[r].values().end(),
                       [](const CycNum& x) { return x == CycNum(1); });
  };
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int x, int y) {
    if (degrees[x] != degrees[y]) return degrees[x] < degrees[y];
    if (trivial(x) != trivial(y)) return trivial(x);
    return keys[x] > keys[y];
  });
  std::vector<ClassFunction> sorted;
  for (int i : idx) sorted.push_back(table.rows[i]);
  table.rows = std::move(sorted);
  return table;
}

}  // namespace ellchar
