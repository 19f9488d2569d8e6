#pragma once

// Weyl groups on V0: sign character, the subgroup W', elliptic classes, the
// alternating exterior character and the elliptic pairing.

#include <memory>
#include <string>
#include <vector>

#include "ellchar/fingroup.hpp"
#include "ellchar/partitions.hpp"
#include "ellchar/rootsys.hpp"

namespace ellchar {

class WeylGroup {
 public:
  /// Generated by the simple reflections, generator i acting as s_{alpha_i}.
  static std::unique_ptr<WeylGroup> build(CartanType type, int rank, const Rat& form_scale = Rat(1),
                                          bool parallel = true);

  WeylGroup(const WeylGroup&) = delete;
  WeylGroup& operator=(const WeylGroup&) = delete;

  const RootSystem& roots() const { return rs_; }
  const FinGroup& group() const { return g_; }
  const CharTable& table() const { return table_; }
  const ClassFunction& sgn() const { return sgn_; }

  int dim() const { return rs_.rank; }
  bool odd() const { return rs_.rank % 2 == 1; }
  /// [W : W'], 1 in odd dimension and 2 in even dimension.
  int prime_index() const { return odd() ? 1 : 2; }
  bool in_prime(int elem) const { return odd() || det_[elem] > 0; }

  /// Element index of s_alpha.
  int reflection(int root) const { return reflection_[root]; }

  /// Matrix of w on V0 in the orthogonal basis: entry (j, i) = <w u_i, u_j> / q_j.
  RatMatrix v0_matrix(int elem) const;
  Rat det_one_minus(int elem) const;
  int det(int elem) const { return det_[elem]; }

 private:
  WeylGroup() = default;

  RootSystem rs_;
  FinGroup g_;
  CharTable table_;
  ClassFunction sgn_;
  std::vector<int> reflection_;
  std::vector<int> det_;
};

struct EllipticClassSet {
  std::vector<int> classes;
  std::vector<Rat> det1mw;
  std::vector<Partition> labels;  // type B only: lambda with w_lambda in the class
};

EllipticClassSet elliptic_classes(const WeylGroup& w);

/// w -> det(1 - w) on V0, by Gaussian elimination.
ClassFunction det_one_minus_character(const WeylGroup& w);

/// sum_i (-1)^i tr(wedge^i w), from the principal minor sums of w on V0.
ClassFunction wedge_pm_character(const WeylGroup& w);

Rat elliptic_pairing(const WeylGroup& w, const ClassFunction& a, const ClassFunction& b);

/// Gram matrix of the elliptic pairing on the irreducible characters.
std::vector<std::vector<Rat>> elliptic_gram(const WeylGroup& w);
int elliptic_rank(const WeylGroup& w);

/// Degrees of the basic invariants.
std::vector<int> invariant_degrees(CartanType type, int rank);

/// Type B: the product of negative cycles on consecutive blocks of sizes lambda.
int bn_elliptic_element(const WeylGroup& w, const Partition& lambda);

/// Type B: the character of sigma x (empty), i.e. sigma inflated along
/// W(B_n) -> S_n, evaluated with the Murnaghan-Nakayama oracle.
ClassFunction bn_type_character(const WeylGroup& w, const Partition& sigma);

}  // namespace ellchar
