#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grassqh/rational.hpp"
#include "grassqh/unipoly.hpp"

namespace grassqh {

/// Dense row-major matrix over exact rationals.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);

  static ExactMatrix identity(std::size_t n);
  // Columns are the given vectors, all of length `rows`.
  static ExactMatrix from_columns(std::size_t rows, const std::vector<RationalVector>& cols);
  static ExactMatrix from_ints(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector column(std::size_t c) const;
  RationalVector row(std::size_t r) const;

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  ExactMatrix& operator*=(const Rational& c);
  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const Rational& c) { return a *= c; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  RationalVector operator*(const RationalVector& v) const;

  ExactMatrix pow(unsigned e) const;
  ExactMatrix transpose() const;
  ExactMatrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;

  bool is_zero() const;
  bool operator==(const ExactMatrix& o) const = default;
  Rational trace() const;

  std::size_t rank() const;
  Rational determinant() const;
  // Basis of the right null space, in reduced echelon normal form.
  std::vector<RationalVector> kernel() const;
  // Some x with A x = b, or nullopt when inconsistent.
  std::optional<RationalVector> solve(const RationalVector& b) const;
  // Some X with A X = B (all columns at once), or nullopt when inconsistent.
  std::optional<ExactMatrix> solve(const ExactMatrix& b) const;
  std::optional<ExactMatrix> inverse() const;

  /// Monic characteristic polynomial det(x I - A), computed by similarity
  /// reduction to upper Hessenberg form followed by the Hessenberg
  /// determinant recurrence. Exact throughout.
  UniPoly char_poly() const;

  bool commutes_with(const ExactMatrix& o) const { return (*this) * o == o * (*this); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Row-reduces `m` in place to reduced row echelon form and returns the pivot
// column of each nonzero row.
std::vector<std::size_t> row_reduce(ExactMatrix& m);

// Evaluates p(A) by Horner's rule.
ExactMatrix evaluate(const UniPoly& p, const ExactMatrix& a);

}  // namespace grassqh
