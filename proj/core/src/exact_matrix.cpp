#include "grassqh/exact_matrix.hpp"

#include <algorithm>
#include <utility>

#include "grassqh/errors.hpp"

namespace grassqh {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_columns(std::size_t rows, const std::vector<RationalVector>& cols) {
  ExactMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw InvalidInput("from_columns: column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

ExactMatrix ExactMatrix::from_ints(const std::vector<std::vector<long>>& rows) {
  const std::size_t nc = rows.empty() ? 0 : rows.front().size();
  ExactMatrix m(rows.size(), nc);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != nc) throw InvalidInput("from_ints: ragged rows");
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalVector ExactMatrix::column(std::size_t c) const {
  RationalVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RationalVector ExactMatrix::row(std::size_t r) const {
  return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInput("matrix shape mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInput("matrix shape mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const Rational& c) {
  for (auto& x : data_) x *= c;
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidInput("matrix shape mismatch in *");
  ExactMatrix c(a.rows_, b.cols_);
  Rational t;
  // Operator matrices here are sparse; skipping zeros dominates the cost.
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b(k, j);
        if (sgn(bkj) == 0) continue;
        mpq_mul(t.get_mpq_t(), aik.get_mpq_t(), bkj.get_mpq_t());
        c(i, j) += t;
      }
    }
  }
  return c;
}

RationalVector ExactMatrix::operator*(const RationalVector& v) const {
  if (v.size() != cols_) throw InvalidInput("matrix-vector shape mismatch");
  RationalVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      if (sgn(v[k]) == 0 || sgn((*this)(i, k)) == 0) continue;
      out[i] += (*this)(i, k) * v[k];
    }
  }
  return out;
}

ExactMatrix ExactMatrix::pow(unsigned e) const {
  if (!is_square()) throw InvalidInput("pow of a non-square matrix");
  ExactMatrix result = identity(rows_);
  ExactMatrix base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ExactMatrix ExactMatrix::submatrix(std::span<const std::size_t> row_idx,
                                   std::span<const std::size_t> col_idx) const {
  ExactMatrix s(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j) s(i, j) = (*this)(row_idx[i], col_idx[j]);
  return s;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Rational ExactMatrix::trace() const {
  if (!is_square()) throw InvalidInput("trace of a non-square matrix");
  Rational t{0};
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

std::vector<std::size_t> row_reduce(ExactMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t ExactMatrix::rank() const {
  ExactMatrix m = *this;
  return row_reduce(m).size();
}

Rational ExactMatrix::determinant() const {
  if (!is_square()) throw InvalidInput("determinant of a non-square matrix");
  ExactMatrix m = *this;
  Rational det{1};
  const std::size_t n = rows_;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return Rational{0};
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    Rational inv = 1 / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j)
        if (sgn(m(c, j)) != 0) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

std::vector<RationalVector> ExactMatrix::kernel() const {
  ExactMatrix m = *this;
  auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols_);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> ExactMatrix::solve(const RationalVector& b) const {
  if (b.size() != rows_) throw InvalidInput("solve: right-hand side length mismatch");
  ExactMatrix aug(rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_) = b[i];
  }
  auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  RationalVector x(cols_);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, cols_);
  return x;
}

std::optional<ExactMatrix> ExactMatrix::solve(const ExactMatrix& b) const {
  if (b.rows() != rows_) throw InvalidInput("solve: right-hand side row mismatch");
  ExactMatrix aug(rows_, cols_ + b.cols());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug(i, cols_ + j) = b(i, j);
  }
  auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() >= cols_) return std::nullopt;
  ExactMatrix x(cols_, b.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[r], j) = aug(r, cols_ + j);
  return x;
}

std::optional<ExactMatrix> ExactMatrix::inverse() const {
  if (!is_square()) throw InvalidInput("inverse of a non-square matrix");
  if (rank() != rows_) return std::nullopt;
  return solve(identity(rows_));
}

UniPoly ExactMatrix::char_poly() const {
  if (!is_square()) throw InvalidInput("char_poly of a non-square matrix");
  const std::size_t n = rows_;
  ExactMatrix h = *this;

  // Similarity reduction to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t p = m;
    while (p < n && sgn(h(p, m - 1)) == 0) ++p;
    if (p == n) continue;
    if (p != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(p, j), h(m, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, p), h(i, m));
    }
    const Rational inv = 1 / h(m, m - 1);
    for (std::size_t i = m + 1; i < n; ++i) {
      if (sgn(h(i, m - 1)) == 0) continue;
      const Rational u = h(i, m - 1) * inv;
      // row_i -= u row_m, then col_m += u col_i keeps the similarity class.
      for (std::size_t j = 0; j < n; ++j)
        if (sgn(h(m, j)) != 0) h(i, j) -= u * h(m, j);
      for (std::size_t r = 0; r < n; ++r)
        if (sgn(h(r, i)) != 0) h(r, m) += u * h(r, i);
    }
  }

  // p_0 = 1, p_m = (x - h_mm) p_{m-1} - sum_{i<m} h_{i m} (prod_{j=i+1}^{m} h_{j,j-1}) p_{i-1}
  std::vector<UniPoly> p;
  p.reserve(n + 1);
  p.push_back(UniPoly::constant(Rational{1}));
  for (std::size_t m = 1; m <= n; ++m) {
    UniPoly next = UniPoly(std::vector<Rational>{-h(m - 1, m - 1), Rational{1}}) * p[m - 1];
    Rational prod{1};
    for (std::size_t i = m - 1; i-- > 0;) {
      prod *= h(i + 1, i);
      if (sgn(prod) == 0) break;
      const Rational& him = h(i, m - 1);
      if (sgn(him) == 0) continue;
      next -= p[i] * (him * prod);
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

ExactMatrix evaluate(const UniPoly& poly, const ExactMatrix& a) {
  if (!a.is_square()) throw InvalidInput("evaluate: matrix must be square");
  ExactMatrix acc(a.rows(), a.cols());
  const auto& c = poly.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * a;
    for (std::size_t d = 0; d < a.rows(); ++d) acc(d, d) += c[i];
  }
  return acc;
}

}  // namespace grassqh
