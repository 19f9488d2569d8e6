#pragma once

// Exact scalars: big rationals and elements of cyclotomic fields Q(zeta_N).

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ellchar {

using BigInt = mpz_class;
using Rat = mpq_class;

struct ArithmeticError : std::domain_error {
  using std::domain_error::domain_error;
};

unsigned euler_phi(unsigned n);
unsigned lcm_conductor(unsigned a, unsigned b);

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
/// Memoized; safe to call from several threads.
const std::vector<long>& cyclotomic_polynomial(unsigned n);

/// An element of Q(zeta_N) stored in the power basis 1, z, ..., z^{phi(N)-1}
/// modulo Phi_N. Rational values always carry conductor 1.
class CycNum {
 public:
  CycNum() : n_(1), c_{Rat(0)} {}
  CycNum(long v) : n_(1), c_{Rat(v)} {}  // NOLINT(google-explicit-constructor)
  CycNum(const Rat& r) : n_(1), c_{r} {}  // NOLINT(google-explicit-constructor)

  /// zeta_n^k with zeta_n = exp(2 pi i / n) under the float shadow.
  static CycNum zeta(unsigned n, long k = 1);

  /// Sum of coeff[j] * zeta_n^j for j < coeff.size(); any length is accepted.
  static CycNum from_powers(unsigned n, std::vector<Rat> coeff);

  unsigned conductor() const { return n_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  std::optional<Rat> rational() const;

  /// The automorphism zeta -> zeta^k, gcd(k, N) = 1.
  CycNum galois(long k) const;
  CycNum conj() const { return galois(-1); }
  CycNum inverse() const;

  /// Power-basis coefficients of the same value in Q(zeta_m) (length phi(m));
  /// m must be a multiple of the conductor.
  std::vector<Rat> coeffs_in(unsigned m) const;

  /// Evaluation under zeta_N -> exp(2 pi i / N). Cross-check only.
  std::complex<double> shadow() const;

  std::string pretty() const;

  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o);
  CycNum& operator*=(const Rat& r);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  friend CycNum operator*(CycNum a, const Rat& r) { return a *= r; }
  friend CycNum operator*(const Rat& r, CycNum a) { return a *= r; }
  CycNum operator-() const;

  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

 private:
  CycNum(unsigned n, std::vector<Rat> c) : n_(n), c_(std::move(c)) {}
  void normalize();

  unsigned n_;
  std::vector<Rat> c_;
};

/// A square root of a squarefree nonzero integer, built from quadratic Gauss
/// sums. Branch: positive real for d > 0, positive imaginary for d < 0.
CycNum sqrt_int(long d);

/// A square root of a nonzero rational, same branch rule as sqrt_int.
CycNum sqrt_rat(const Rat& r);

std::optional<Rat> is_rational(const CycNum& a);

/// Lexicographic comparison of coefficient vectors after writing both values in
/// Q(zeta_m). A total order on Q(zeta_m) used only for reproducible sorting.
bool lex_less(const CycNum& a, const CycNum& b, unsigned m);

/// Squarefree decomposition n = s^2 * d (sign kept in d).
void squarefree_split(const BigInt& n, BigInt& s, BigInt& d);

std::string rat_string(const Rat& r);

}  // namespace ellchar
