#pragma once

// Finite groups with a full multiplication table, conjugacy classes, power
// maps, class functions and exact character tables (Dixon-Schneider).

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ellchar/exactnum.hpp"
#include "ellchar/linalg.hpp"

namespace ellchar {

struct GroupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class FinGroup {
 public:
  /// BFS closure of the group generated by `gens`. Element 0 is the identity;
  /// each BFS layer is sorted lexicographically on matrix entries, and every
  /// element records a shortest word in the generators.
  static FinGroup generate(const std::vector<RatMatrix>& gens, std::size_t bound = 1000000);

  /// Abstract group from a multiplication table; element 0 must be the identity.
  static FinGroup from_table(std::vector<std::vector<int>> mul);

  int order() const { return static_cast<int>(mul_.size()); }
  int mul(int a, int b) const { return mul_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  int power(int a, long k) const;
  int element_order(int a) const { return elt_order_[a]; }
  int exponent() const { return exponent_; }

  int num_classes() const { return static_cast<int>(classes_.size()); }
  const std::vector<int>& class_members(int c) const { return classes_[c]; }
  int class_of(int a) const { return class_of_[a]; }
  int class_size(int c) const { return static_cast<int>(classes_[c].size()); }
  int class_rep(int c) const { return classes_[c].front(); }
  /// Class of g^k for g in class c.
  int power_class(int c, long k) const;
  int inverse_class(int c) const { return class_of_[inv_[class_rep(c)]]; }

  bool has_matrices() const { return !matrices_.empty(); }
  const RatMatrix& matrix(int a) const { return matrices_.at(a); }
  int find(const RatMatrix& m) const;

  /// Shortest word (generator indices) whose product is the element; only for
  /// groups built by generate().
  std::vector<int> word(int a) const;

  /// Multiplication table restricted to `elems` (must contain the identity and
  /// be closed); element i of the result is elems[i].
  FinGroup subgroup(const std::vector<int>& elems) const;

 private:
  void finish();

  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
  std::vector<int> elt_order_;
  int exponent_ = 1;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;

  std::vector<RatMatrix> matrices_;
  std::vector<int> parent_;
  std::vector<int> last_gen_;
};

/// Class fusion of a subgroup H into G.
struct Embedding {
  const FinGroup* sub = nullptr;
  const FinGroup* super = nullptr;
  std::vector<int> element_map;  // element of H -> element of G
  std::vector<int> class_fusion;  // class of H -> class of G

  Embedding() = default;
  Embedding(const FinGroup& h, const FinGroup& g, std::vector<int> elements);
};

class ClassFunction {
 public:
  ClassFunction() = default;
  ClassFunction(const FinGroup& g, std::vector<CycNum> values);
  static ClassFunction constant(const FinGroup& g, const CycNum& v);

  const FinGroup& group() const { return *g_; }
  const std::vector<CycNum>& values() const { return v_; }
  const CycNum& operator[](int c) const { return v_[c]; }
  CycNum& operator[](int c) { return v_[c]; }
  std::size_t size() const { return v_.size(); }
  const CycNum& degree() const { return v_.front(); }

  ClassFunction conj() const;
  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction& operator-=(const ClassFunction& o);
  ClassFunction& operator*=(const CycNum& s);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(ClassFunction a, const CycNum& s) { return a *= s; }
  friend bool operator==(const ClassFunction& a, const ClassFunction& b);

  bool is_zero() const;

 private:
  void check_same(const ClassFunction& o) const;
  const FinGroup* g_ = nullptr;
  std::vector<CycNum> v_;
};

/// (1/|G|) sum_g conj(f(g)) g(g).
CycNum inner_product(const ClassFunction& f, const ClassFunction& g);
ClassFunction tensor(const ClassFunction& f, const ClassFunction& g);
ClassFunction twist_sgn(const ClassFunction& f, const ClassFunction& sgn);
ClassFunction restrict(const ClassFunction& f, const Embedding& e);
ClassFunction induce(const ClassFunction& f, const Embedding& e);

struct CharTable {
  const FinGroup* group = nullptr;
  std::vector<ClassFunction> rows;
  int prime = 0;  // the prime used for the modular stage

  int size() const { return static_cast<int>(rows.size()); }
  /// Multiplicities <row_i, f>.
  std::vector<CycNum> decompose(const ClassFunction& f) const;
  /// Row index whose values equal f exactly, or -1.
  int find_row(const ClassFunction& f) const;
};

/// Exact character table by the Dixon-Schneider method. Rows are sorted by
/// degree, the trivial character first, then by the lexicographic order of
/// values written in Q(zeta_e), e the exponent.
CharTable dixon_character_table(const FinGroup& g, bool parallel = true);

}  // namespace ellchar
