#pragma once

// Small dense linear algebra over Q.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ellchar/exactnum.hpp"

namespace ellchar {

using RatVec = std::vector<Rat>;

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RatVec apply(const RatVec& v) const;
  RatMatrix transpose() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

  /// Entry-wise serialization used as a hash key.
  std::string key() const;
  const std::vector<Rat>& data() const { return a_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> a_;
};

Rat dot(const RatVec& a, const RatVec& b);

Rat determinant(RatMatrix m);
std::size_t rank(RatMatrix m);

/// Unique solution of a square nonsingular system, if any.
std::optional<RatVec> solve(RatMatrix a, RatVec b);

/// e_0..e_n where e_i is the sum of the principal i x i minors, so that
/// det(xI - m) = sum_i (-1)^i e_i x^{n-i}. Computed minor by minor.
std::vector<Rat> principal_minor_sums(const RatMatrix& m);

}  // namespace ellchar
