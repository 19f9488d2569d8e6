#pragma once

// The Clifford algebra of V0 in an orthogonal basis, rational Pin lifts of
// Weyl group elements, the double cover W~ as (w, sign) pairs with a 2-cocycle,
// and the spin characters.

#include <memory>
#include <optional>
#include <vector>

#include "ellchar/kernels.hpp"
#include "ellchar/weyl.hpp"

namespace ellchar {

/// Dense element of C(V0): coefficient of the monomial u_I at bitmask I.
using Multivector = std::vector<Rat>;

/// C(V0) with u_i^2 = kappa * q_i and u_i u_j = -u_j u_i for i != j.
class CliffordAlgebra {
 public:
  CliffordAlgebra(std::vector<Rat> norms, int kappa);

  int dim() const { return n_; }
  unsigned size() const { return 1u << n_; }
  int kappa() const { return kappa_; }
  const std::vector<Rat>& norms() const { return q_; }

  Multivector scalar(const Rat& r) const;
  /// sum_i c_i u_i.
  Multivector vector(const RatVec& coords) const;

  /// u_I u_J = factor(I, J) u_{I xor J}.
  const Rat& factor(unsigned i, unsigned j) const { return factor_[i * size() + j]; }

  Multivector mul(const Multivector& a, const Multivector& b) const;
  /// Coefficient of u_mask in a*b, without forming the product.
  Rat mul_coeff(const Multivector& a, const Multivector& b, unsigned mask) const;

  /// +1 or -1 for homogeneous parity, 0 for a mixed element.
  int parity(const Multivector& a) const;
  /// Anti-automorphism with v^t = -kappa v on V0, so that unit vectors satisfy v^t v = 1.
  Multivector transpose(const Multivector& a) const;
  /// u_full^2 = (-1)^{n(n-1)/2} kappa^n prod q_i.
  Rat volume_square() const;

 private:
  int n_;
  int kappa_;
  std::vector<Rat> q_;
  std::vector<Rat> factor_;
};

/// Cocycle c(w1, w2) in {+1, -1} at index w1*|W| + w2, defined by
/// P_{w1} P_{w2} = c * lambda * P_{w1 w2} with lambda > 0. The serial reference
/// forms every product and checks proportionality and the norm identity; the
/// parallel kernel compares a single coefficient.
std::vector<signed char> fill_cocycle(const CliffordAlgebra& cl, const FinGroup& w,
                                      const std::vector<Multivector>& lifts, const std::vector<Rat>& norms,
                                      Exec exec);

struct PinOptions {
  int kappa = 1;
  bool parallel = true;
};

class PinCover {
 public:
  static std::unique_ptr<PinCover> build(const WeylGroup& w, const PinOptions& opt = {});

  PinCover(const PinCover&) = delete;
  PinCover& operator=(const PinCover&) = delete;

  const WeylGroup& weyl() const { return w_; }
  const CliffordAlgebra& clifford() const { return cl_; }
  int kappa() const { return cl_.kappa(); }

  /// Unnormalized lift P_w = alpha_{i1} ... alpha_{ik} along the stored word,
  /// and N_w = prod |alpha_ij|^2; the Pin element is P_w / sqrt(N_w).
  const Multivector& lift(int w) const { return lifts_[w]; }
  const Rat& lift_norm(int w) const { return norms_[w]; }
  int cocycle(int w1, int w2) const { return cocycle_[static_cast<std::size_t>(w1) * w_.group().order() + w2]; }

  /// W~ with element 2w + (s < 0) standing for s * P_w / sqrt(N_w).
  const FinGroup& wtilde() const { return wt_; }
  static int element(int w, int s) { return 2 * w + (s < 0 ? 1 : 0); }
  static int project(int x) { return x / 2; }
  static int sign(int x) { return x % 2 ? -1 : 1; }
  static constexpr int z = 1;

  /// W~' = p^{-1}(W'); the same group as W~ in odd dimension.
  const FinGroup& prime() const { return w_.odd() ? wt_ : *wtp_; }
  const Embedding& prime_embedding() const { return emb_; }
  /// W~ element of a W~' element.
  int prime_to_wtilde(int x) const { return emb_.element_map[x]; }
  /// W~' element of a W~ element, or -1 if it lies outside W~'.
  int wtilde_to_prime(int x) const { return local_[x]; }
  int prime_z() const;

  const CharTable& wtilde_table() const;
  const CharTable& prime_table() const;

  /// Spin characters on W~' (labels fixed by the orientation rule below).
  const ClassFunction& spin_plus() const { return s_plus_; }
  const ClassFunction& spin_minus() const { return s_minus_; }
  const ClassFunction& spin_diff() const { return s_diff_; }
  /// +1 or -1: the global label orientation applied to the raw volume trace.
  int orientation() const { return orientation_; }

  /// Raw difference chi_{S+} - chi_{S-} at a W~ element over W', before orientation.
  CycNum raw_spin_diff(int x) const;
  CycNum spin_sum(int x) const;

  /// Pull back a class function of W through W~' -> W' -> W.
  ClassFunction pull_back(const ClassFunction& f) const;

  /// Rows of the W~' table with chi(z) = -chi(1).
  std::vector<int> genuine_rows() const;

  /// Even case: f(y x y^{-1}) for a fixed odd lift y; odd case: f tensored with sgn.
  ClassFunction swap_partner(const ClassFunction& f) const;
  /// The odd lift used for the outer twist (even case), as a W~ element.
  int outer_element() const { return outer_; }

 private:
  PinCover(const WeylGroup& w, CliffordAlgebra cl) : w_(w), cl_(std::move(cl)) {}

  const WeylGroup& w_;
  CliffordAlgebra cl_;
  std::vector<Multivector> lifts_;
  std::vector<Rat> norms_;
  std::vector<signed char> cocycle_;
  FinGroup wt_;
  std::unique_ptr<FinGroup> wtp_;
  Embedding emb_;
  std::vector<int> local_;
  mutable std::optional<CharTable> wt_table_;
  mutable std::optional<CharTable> prime_table_;
  ClassFunction s_plus_, s_minus_, s_diff_;
  int orientation_ = 1;
  int outer_ = -1;
  std::vector<int> outer_class_map_;
};

}  // namespace ellchar
