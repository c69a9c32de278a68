#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "grassqh/exact_matrix.hpp"
#include "grassqh/rational.hpp"

namespace grassqh {

/// Polynomial in a fixed number of commuting symbols with rational
/// coefficients. Used for Giambelli determinants in E_1..E_k, the complete
/// homogeneous polynomials h_m, and the lifted expressions of section
/// classes.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;

  explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Rational& c);
  // The symbol with index `var` (0-based).
  static MultiPoly variable(std::size_t nvars, std::size_t var);
  // Builds sum of c * prod var_i^e_i; used for literal polynomials in tests and tables.
  static MultiPoly from_terms(std::size_t nvars, const std::vector<std::pair<long, Exponents>>& terms);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  // Weighted degree of every term, or -1 if the polynomial is not
  // homogeneous for the given weights (zero polynomial: 0).
  int homogeneous_degree(const std::vector<int>& weights) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::size_t nvars_;
  std::map<Exponents, Rational> terms_;
};

/// Evaluates polynomials on a fixed tuple of pairwise commuting square
/// matrices, memoizing monomial products so that many polynomials sharing
/// monomials (all Giambelli determinants of one box) stay cheap.
class CommutingEvaluator {
 public:
  explicit CommutingEvaluator(std::vector<ExactMatrix> generators);

  const std::vector<ExactMatrix>& generators() const { return gens_; }
  std::size_t dim() const { return gens_.empty() ? 0 : gens_.front().rows(); }

  ExactMatrix evaluate(const MultiPoly& p);
  // p(G) v without forming p(G); memoizes nothing.
  RationalVector apply(const MultiPoly& p, const RationalVector& v) const;

 private:
  const ExactMatrix& monomial(const MultiPoly::Exponents& e);
  std::vector<ExactMatrix> gens_;
  std::map<MultiPoly::Exponents, ExactMatrix> cache_;
};

}  // namespace grassqh
