#include "ellchar/exactnum.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <numbers>
#include <sstream>

namespace ellchar {

namespace {

std::mutex cache_mutex;

// Exact division of integer polynomials by a monic divisor.
std::vector<long> divide_monic(std::vector<long> num, const std::vector<long>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<long> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    long c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

// Row j holds zeta_m^j reduced modulo Phi_m, for 0 <= j < m.
const std::vector<std::vector<long>>& power_table(unsigned m) {
  static std::map<unsigned, std::vector<std::vector<long>>> cache;
  {
    std::lock_guard lock(cache_mutex);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  const auto& phi_poly = cyclotomic_polynomial(m);
  const std::size_t deg = phi_poly.size() - 1;
  std::vector<std::vector<long>> rows(m, std::vector<long>(deg, 0));
  std::vector<long> cur(deg, 0);
  cur[0] = 1;
  if (deg == 0) cur.assign(1, 1);
  for (unsigned j = 0; j < m; ++j) {
    rows[j] = cur;
    if (deg == 0) continue;
    // multiply by x and reduce
    long top = cur[deg - 1];
    for (std::size_t i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (std::size_t i = 0; i < deg; ++i) cur[i] -= top * phi_poly[i];
  }
  if (deg == 0) {
    // m = 1: the field is Q and every power is 1
    for (auto& r : rows) r.assign(1, 1);
  }
  std::lock_guard lock(cache_mutex);
  return cache.emplace(m, std::move(rows)).first->second;
}

// Reduce a coefficient vector indexed by exponent (any length) into the power
// basis of Q(zeta_m).
std::vector<Rat> reduce(unsigned m, const std::vector<Rat>& by_power) {
  const unsigned deg = m == 1 ? 1 : euler_phi(m);
  std::vector<Rat> folded(m);
  for (std::size_t j = 0; j < by_power.size(); ++j) {
    if (sgn(by_power[j]) != 0) folded[j % m] += by_power[j];
  }
  if (m == 1) return {folded[0]};
  std::vector<Rat> out(deg);
  const auto& table = power_table(m);
  for (unsigned j = 0; j < m; ++j) {
    if (sgn(folded[j]) == 0) continue;
    if (j < deg) {
      out[j] += folded[j];
      continue;
    }
    const auto& row = table[j];
    for (unsigned i = 0; i < deg; ++i) {
      if (row[i] != 0) out[i] += folded[j] * row[i];
    }
  }
  return out;
}

long legendre(long a, long p) {
  long r = 1, base = ((a % p) + p) % p, e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) r = (r * base) % p;
    base = (base * base) % p;
    e >>= 1;
  }
  return r == 1 ? 1 : (r == 0 ? 0 : -1);
}

CycNum sqrt_prime(long p) {
  if (p == 2) return CycNum::zeta(8, 1) - CycNum::zeta(8, 3);
  std::vector<Rat> g(p);
  for (long a = 1; a < p; ++a) g[a] = Rat(legendre(a, p));
  CycNum gauss = CycNum::from_powers(p, g);
  if (p % 4 == 1) return gauss;
  // gauss = i sqrt(p)
  return -(CycNum::zeta(4, 1) * gauss);
}

}  // namespace

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

unsigned lcm_conductor(unsigned a, unsigned b) { return std::lcm(a, b); }

const std::vector<long>& cyclotomic_polynomial(unsigned n) {
  static std::map<unsigned, std::vector<long>> cache;
  {
    std::lock_guard lock(cache_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  if (n == 0) throw ArithmeticError("cyclotomic polynomial of order 0");
  std::vector<long> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) poly = divide_monic(poly, cyclotomic_polynomial(d));
  }
  std::lock_guard lock(cache_mutex);
  return cache.emplace(n, std::move(poly)).first->second;
}

CycNum CycNum::zeta(unsigned n, long k) {
  if (n == 0) throw ArithmeticError("zeta_0 is undefined");
  long e = ((k % static_cast<long>(n)) + n) % n;
  std::vector<Rat> p(e + 1);
  p[e] = 1;
  return from_powers(n, std::move(p));
}

CycNum CycNum::from_powers(unsigned n, std::vector<Rat> coeff) {
  if (n == 0) throw ArithmeticError("conductor 0");
  CycNum out(n, reduce(n, coeff));
  out.normalize();
  return out;
}

void CycNum::normalize() {
  if (n_ <= 2) {
    n_ = 1;
    c_.resize(1);
    return;
  }
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (sgn(c_[i]) != 0) return;
  }
  n_ = 1;
  c_.resize(1);
}

bool CycNum::is_zero() const { return n_ == 1 && sgn(c_[0]) == 0; }

std::optional<Rat> CycNum::rational() const {
  if (n_ == 1) return c_[0];
  return std::nullopt;
}

std::vector<Rat> CycNum::coeffs_in(unsigned m) const {
  if (m % n_ != 0) throw ArithmeticError("target field does not contain the value");
  if (m == n_) return c_;
  const unsigned step = m / n_;
  if (n_ == 1) {
    std::vector<Rat> out(m == 1 ? 1 : (m == 2 ? 1 : euler_phi(m)));
    out[0] = c_[0];
    return out;
  }
  std::vector<Rat> p(m);
  for (std::size_t j = 0; j < c_.size(); ++j) p[j * step] = c_[j];
  return reduce(m, p);
}

CycNum CycNum::galois(long k) const {
  if (n_ == 1) return *this;
  const long n = n_;
  long kk = ((k % n) + n) % n;
  if (std::gcd(kk, n) != 1) throw ArithmeticError("galois exponent not a unit");
  std::vector<Rat> p(n_);
  for (std::size_t j = 0; j < c_.size(); ++j) p[(j * kk) % n] += c_[j];
  return from_powers(n_, std::move(p));
}

CycNum CycNum::inverse() const {
  if (n_ == 1) {
    if (sgn(c_[0]) == 0) throw ArithmeticError("division by zero");
    return CycNum(Rat(1) / c_[0]);
  }
  CycNum prod(1);
  for (long k = 2; k < static_cast<long>(n_); ++k) {
    if (std::gcd(k, static_cast<long>(n_)) == 1) prod *= galois(k);
  }
  auto norm = (*this * prod).rational();
  if (!norm || sgn(*norm) == 0) throw ArithmeticError("norm computation failed");
  prod *= Rat(1) / *norm;
  return prod;
}

std::complex<double> CycNum::shadow() const {
  std::complex<double> s = 0;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (sgn(c_[j]) == 0) continue;
    double ang = 2.0 * std::numbers::pi * static_cast<double>(j) / n_;
    s += c_[j].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return s;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (n_ == o.n_) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  } else {
    unsigned m = std::lcm(n_, o.n_);
    auto a = coeffs_in(m);
    auto b = o.coeffs_in(m);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    n_ = m;
    c_ = std::move(a);
  }
  normalize();
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycNum& CycNum::operator*=(const Rat& r) {
  if (sgn(r) == 0) return *this = CycNum();
  for (auto& x : c_) x *= r;
  return *this;
}

CycNum& CycNum::operator*=(const CycNum& o) {
  if (o.n_ == 1) return *this *= o.c_[0];
  if (n_ == 1) {
    Rat r = c_[0];
    *this = o;
    return *this *= r;
  }
  unsigned m = std::lcm(n_, o.n_);
  auto a = coeffs_in(m);
  auto b = o.coeffs_in(m);
  std::vector<Rat> p(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) == 0) continue;
      p[i + j] += a[i] * b[j];
    }
  }
  n_ = m;
  c_ = reduce(m, p);
  normalize();
  return *this;
}

CycNum& CycNum::operator/=(const CycNum& o) {
  if (o.n_ == 1) {
    if (sgn(o.c_[0]) == 0) throw ArithmeticError("division by zero");
    return *this *= Rat(1) / o.c_[0];
  }
  return *this *= o.inverse();
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.n_ == b.n_) return a.c_ == b.c_;
  unsigned m = std::lcm(a.n_, b.n_);
  return a.coeffs_in(m) == b.coeffs_in(m);
}

void squarefree_split(const BigInt& n, BigInt& s, BigInt& d) {
  if (n == 0) throw ArithmeticError("squarefree part of zero");
  BigInt rem = abs(n);
  s = 1;
  d = n < 0 ? -1 : 1;
  for (unsigned long p = 2; p < 1'000'000 && BigInt(p) * p <= rem; ++p) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
      rem /= p;
      ++e;
    }
    for (unsigned i = 0; i + 1 < e; i += 2) s *= p;
    if (e % 2) d *= p;
  }
  if (rem > 1) {
    if (mpz_perfect_square_p(rem.get_mpz_t())) {
      BigInt r = sqrt(rem);
      s *= r;
    } else {
      d *= rem;
    }
  }
}

CycNum sqrt_int(long d) {
  if (d == 0) throw ArithmeticError("sqrt_int(0)");
  BigInt s, core;
  squarefree_split(BigInt(d), s, core);
  if (s != 1) throw ArithmeticError("sqrt_int: radicand not squarefree");
  CycNum out(1);
  long rem = d < 0 ? -d : d;
  if (d < 0) out = CycNum::zeta(4, 1);
  for (long p = 2; p <= rem; ++p) {
    if (rem % p == 0) {
      out *= sqrt_prime(p);
      rem /= p;
    }
  }
  return out;
}

CycNum sqrt_rat(const Rat& r) {
  if (sgn(r) == 0) throw ArithmeticError("sqrt_rat(0)");
  BigInt prod = r.get_num() * r.get_den();
  BigInt s, d;
  squarefree_split(prod, s, d);
  if (!d.fits_slong_p()) throw ArithmeticError("radicand out of range");
  Rat scale(s, r.get_den());
  scale.canonicalize();
  return sqrt_int(d.get_si()) * scale;
}

std::optional<Rat> is_rational(const CycNum& a) { return a.rational(); }

bool lex_less(const CycNum& a, const CycNum& b, unsigned m) {
  auto va = a.coeffs_in(m);
  auto vb = b.coeffs_in(m);
  return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

std::string rat_string(const Rat& r) { return r.get_str(); }

std::string CycNum::pretty() const {
  if (n_ == 1) return rat_string(c_[0]);
  auto sq = (*this * *this).rational();
  if (sq && sgn(*sq) != 0) {
    CycNum root = sqrt_rat(*sq);
    bool neg = false;
    if (root == -*this) neg = true;
    if (neg || root == *this) {
      BigInt prod = sq->get_num() * sq->get_den();
      BigInt s, d;
      squarefree_split(prod, s, d);
      Rat coef(s, sq->get_den());
      coef.canonicalize();
      if (neg) coef = -coef;
      std::ostringstream os;
      if (coef == -1) {
        os << "-";
      } else if (coef != 1) {
        if (coef.get_den() != 1) {
          os << "(" << rat_string(coef) << ")";
        } else {
          os << rat_string(coef);
        }
      }
      BigInt ad = abs(d);
      if (d < 0) os << "i";
      if (ad != 1) os << "√" << ad.get_str();
      return os.str();
    }
  }
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    const Rat& c = c_[j];
    if (sgn(c) == 0) continue;
    Rat mag = abs(c);
    os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    first = false;
    if (j == 0) {
      os << rat_string(mag);
      continue;
    }
    if (mag != 1) os << rat_string(mag) << "*";
    os << "ζ" << n_;
    if (j != 1) os << "^" << j;
  }
  return os.str();
}

}  // namespace ellchar
