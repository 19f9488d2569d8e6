#pragma once

// Reduced crystallographic root systems in their classical ambient
// realizations, with exact rational coordinates.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ellchar/linalg.hpp"

namespace ellchar {

enum class CartanType { A, B, C, D, E, F, G };

char cartan_letter(CartanType t);
CartanType parse_cartan(const std::string& s);

struct UnsupportedRootSystem : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Root system with the W-invariant form form_scale * (ambient dot product).
///
/// Roots are ordered lexicographically by their coordinates in the simple
/// roots; `simple[i]` is the index of the i-th Bourbaki simple root.
struct RootSystem {
  CartanType type{};
  int rank = 0;
  int ambient_dim = 0;
  Rat form_scale{1};

  std::vector<RatVec> roots;
  std::vector<std::vector<long>> simple_coords;
  std::vector<bool> positive;
  std::vector<int> simple;
  std::vector<RatVec> coroots;
  std::vector<int> orbit;  // W-orbit id of each root

  // Orthogonal rational basis of V0 and its norms <u_i, u_i>.
  std::vector<RatVec> ortho_basis;
  std::vector<Rat> ortho_norms;

  std::string name() const;
  Rat inner(const RatVec& a, const RatVec& b) const;
  Rat norm2(int root) const { return inner(roots[root], roots[root]); }
  const RatVec& simple_root(int i) const { return roots[simple[i]]; }
  int num_positive() const;
  int num_orbits() const;

  /// Index of v in the root list, or -1.
  int index_of(const RatVec& v) const;

  /// s_alpha(v) = v - (v, alpha^vee) alpha.
  RatVec reflect(int root, const RatVec& v) const;

  /// Matrix of s_alpha on the ambient space.
  RatMatrix reflection_matrix(int root) const;

  /// Coordinates of v in ortho_basis (v must lie in V0 for this to be exact).
  RatVec ortho_coords(const RatVec& v) const;

  /// Order of the product of the simple reflections.
  int coxeter_number() const;
};

RootSystem build_root_system(CartanType type, int rank, const Rat& form_scale = Rat(1));

/// Gram-Schmidt over Q of the given spanning vectors (zero vectors dropped).
void gram_schmidt(const RootSystem& rs, const std::vector<RatVec>& span, std::vector<RatVec>& basis,
                  std::vector<Rat>& norms);

/// W-invariant parameter function, stored per root.
class ParamFn {
 public:
  static ParamFn equal(const RootSystem& rs, const Rat& c = Rat(1));
  /// c_long on roots of maximal length, c_short on the others.
  static ParamFn by_length(const RootSystem& rs, const Rat& c_long, const Rat& c_short);

  const Rat& operator()(int root) const { return values_[root]; }
  bool is_constant() const;
  std::string describe() const { return description_; }

 private:
  std::vector<Rat> values_;
  std::string description_;
};

}  // namespace ellchar
