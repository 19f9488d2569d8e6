#include "ellchar/dirac.hpp"

#include <algorithm>

namespace ellchar {

namespace {

unsigned leading(const Multivector& a) {
  for (unsigned i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0) return i;
  throw std::logic_error("zero multivector");
}

bool less_real(const CycNum& a, const CycNum& b) {
  auto ra = is_rational(a), rb = is_rational(b);
  if (ra && rb) return *ra < *rb;
  return shadow_real(a) < shadow_real(b);
}

}  // namespace

double shadow_real(const CycNum& x) { return x.shadow().real(); }

CasimirElem build_casimir(const PinCover& pin, const ParamFn& c, CasimirConvention conv) {
  const WeylGroup& w = pin.weyl();
  const RootSystem& rs = w.roots();
  const CliffordAlgebra& cl = pin.clifford();
  CasimirElem om;
  om.params = c;
  om.convention = conv;
  om.coeff.assign(pin.wtilde().order(), CycNum(0));
  om.clifford = cl.scalar(0);

  const int nr = static_cast<int>(rs.roots.size());
  for (int a = 0; a < nr; ++a) {
    if (!rs.positive[a]) continue;
    const Multivector va = cl.vector(rs.ortho_coords(rs.roots[a]));
    for (int b = 0; b < nr; ++b) {
      if (!rs.positive[b]) continue;
      const int img = rs.index_of(rs.reflect(a, rs.roots[b]));
      const bool neg = !rs.positive[img];
      if (neg != (conv == CasimirConvention::ReflectedNegative)) continue;

      const Multivector prod = cl.mul(va, cl.vector(rs.ortho_coords(rs.roots[b])));
      const int x = w.group().mul(w.reflection(a), w.reflection(b));
      const Multivector& lx = pin.lift(x);
      const unsigned m = leading(lx);
      const Rat r = prod[m] / lx[m];
      for (unsigned i = 0; i < prod.size(); ++i)
        if (prod[i] != r * lx[i]) throw std::logic_error("root product is not a multiple of the lift");
      const Rat len2 = rs.norm2(a) * rs.norm2(b);
      if (r * r * pin.lift_norm(x) != len2) throw std::logic_error("root product has the wrong norm");

      const Rat cc = c(a) * c(b);
      om.coeff[PinCover::element(x, sgn(r))] += sqrt_rat(1 / len2) * cc;
      const Rat f = cc / len2;
      for (unsigned i = 0; i < prod.size(); ++i) om.clifford[i] += f * prod[i];
    }
  }
  return om;
}

bool casimir_is_central(const PinCover& pin, const CasimirElem& omega) {
  const FinGroup& g = pin.wtilde();
  const WeylGroup& w = pin.weyl();
  std::vector<int> gens{PinCover::z};
  for (int i = 0; i < w.dim(); ++i) gens.push_back(PinCover::element(w.reflection(w.roots().simple[i]), 1));
  for (int s : gens) {
    const int si = g.inv(s);
    for (int x = 0; x < g.order(); ++x)
      if (omega.coeff[g.mul(x, si)] != omega.coeff[g.mul(si, x)]) return false;
  }
  return true;
}

std::vector<CycNum> casimir_class_sums(const PinCover& pin, const CasimirElem& omega) {
  const FinGroup& h = pin.prime();
  std::vector<CycNum> sums(h.num_classes());
  for (int x = 0; x < pin.wtilde().order(); ++x) {
    if (omega.coeff[x].is_zero()) continue;
    const int l = pin.wtilde_to_prime(x);
    if (l < 0) throw std::logic_error("Casimir element leaves W~'");
    sums[h.class_of(l)] += omega.coeff[x];
  }
  return sums;
}

CycNum casimir_scalar(const PinCover& pin, const CasimirElem& omega, const ClassFunction& chi) {
  const std::vector<CycNum> sums = casimir_class_sums(pin, omega);
  CycNum s;
  for (std::size_t c = 0; c < sums.size(); ++c)
    if (!sums[c].is_zero()) s += sums[c] * chi[static_cast<int>(c)];
  return s / chi.degree();
}

ClassFunction index_map(const PinCover& pin, const ClassFunction& sigma) {
  return tensor(pin.pull_back(sigma), pin.spin_diff());
}

SigmaPair select_sigma_pair(const PinCover& pin, const CasimirElem& omega, const ClassFunction& sigma,
                            const std::optional<Rat>& target) {
  const CharTable& t = pin.prime_table();
  const std::vector<CycNum> sums = casimir_class_sums(pin, omega);
  auto scalar = [&](int row) {
    CycNum s;
    for (std::size_t c = 0; c < sums.size(); ++c)
      if (!sums[c].is_zero()) s += sums[c] * t.rows[row][static_cast<int>(c)];
    return s / t.rows[row].degree();
  };

  const ClassFunction pb = pin.pull_back(sigma);
  const ClassFunction plus_f = tensor(pb, pin.spin_plus());
  const ClassFunction minus_f = tensor(pb, pin.spin_minus());

  SigmaPair pair;
  pair.odd = pin.weyl().odd();
  std::vector<int> minus_support;
  std::vector<CycNum> minus_a;
  for (int r : pin.genuine_rows()) {
    if (!inner_product(t.rows[r], plus_f).is_zero()) {
      pair.support_plus.push_back(r);
      pair.support_a.push_back(scalar(r));
    }
    if (!inner_product(t.rows[r], minus_f).is_zero()) {
      minus_support.push_back(r);
      minus_a.push_back(scalar(r));
    }
  }
  if (pair.support_plus.empty()) throw SelectionError("sigma (x) S+ has no genuine constituent");

  CycNum least = pair.support_a.front();
  for (const auto& a : pair.support_a)
    if (less_real(a, least)) least = a;
  const CycNum want = target ? CycNum(*target) : least;

  std::vector<int> hits;
  for (std::size_t i = 0; i < pair.support_plus.size(); ++i)
    if (pair.support_a[i] == want) hits.push_back(pair.support_plus[i]);
  if (hits.size() != 1)
    throw SelectionError(std::to_string(hits.size()) + " constituents of sigma (x) S+ have Casimir scalar " +
                         want.pretty());
  pair.plus = hits.front();
  pair.a = want;
  pair.minimal = (want == least);

  std::vector<int> partner;
  for (std::size_t i = 0; i < minus_support.size(); ++i)
    if (minus_a[i] == want) partner.push_back(minus_support[i]);
  if (partner.size() != 1)
    throw SelectionError(std::to_string(partner.size()) + " constituents of sigma (x) S- have Casimir scalar " +
                         want.pretty());
  pair.minus = partner.front();
  if (pair.minus == pair.plus) throw SelectionError("selected constituents coincide");
  if (t.find_row(pin.swap_partner(t.rows[pair.plus])) != pair.minus)
    throw SelectionError("selected constituents are not swapped by the outer twist");

  pair.mult_plus = inner_product(t.rows[pair.plus], plus_f);
  pair.mult_minus = inner_product(t.rows[pair.minus], minus_f);
  return pair;
}

CycNum elliptic_character(const PinCover& pin, const SigmaPair& pair, int w, int s) {
  const int l = pin.wtilde_to_prime(PinCover::element(w, s));
  if (l < 0) throw std::invalid_argument("element is outside W'");
  const int c = pin.prime().class_of(l);
  const CycNum& den = pin.spin_diff()[c];
  if (den.is_zero()) throw std::invalid_argument("element is not elliptic");
  const CharTable& t = pin.prime_table();
  return (t.rows[pair.plus][c] - t.rows[pair.minus][c]) / den;
}

std::vector<BnExampleRow> bn_example_report(const PinCover& pin, const CasimirElem& omega) {
  const WeylGroup& w = pin.weyl();
  const CharTable& t = pin.prime_table();
  std::vector<BnExampleRow> out;
  for (const auto& sigma : partitions(w.dim())) {
    BnExampleRow row;
    row.sigma = sigma;
    row.pair = select_sigma_pair(pin, omega, bn_type_character(w, sigma));
    ClassFunction idx = t.rows[row.pair.plus] - t.rows[row.pair.minus];
    row.index_norm = inner_product(idx, idx);
    std::optional<CycNum> ratio;
    bool constant = true;
    for (const auto& lam : partitions(w.dim())) {
      const CycNum v = elliptic_character(pin, row.pair, bn_elliptic_element(w, lam));
      const long m = mn_character_Sn(sigma, lam);
      row.lambdas.push_back(lam);
      row.values.push_back(v);
      row.mn.push_back(m);
      if (m == 0) {
        if (!v.is_zero()) constant = false;
        continue;
      }
      CycNum r = v * (Rat(1) / m);
      if (!ratio)
        ratio = r;
      else if (*ratio != r)
        constant = false;
    }
    if (constant && ratio && (*ratio == CycNum(1) || *ratio == CycNum(-1)))
      row.sign = *ratio == CycNum(1) ? 1 : -1;
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace ellchar
