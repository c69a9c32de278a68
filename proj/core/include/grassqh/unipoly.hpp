#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "grassqh/rational.hpp"

namespace grassqh {

/// Univariate polynomial with exact rational coefficients, stored lowest
/// degree first. The coefficient vector never ends in a zero, so the zero
/// polynomial has an empty vector and degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<std::int64_t> coeffs);

  static UniPoly from_ints(const std::vector<std::int64_t>& coeffs);
  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, int degree);
  static UniPoly x() { return monomial(Rational{1}, 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  // Coefficient of x^i, zero when i is out of range.
  Rational coeff(int i) const;
  Rational leading() const;
  bool is_monic() const { return !is_zero() && leading() == 1; }
  bool has_integer_coeffs() const;

  // Divides by the leading coefficient.
  UniPoly monic() const;
  Rational evaluate(const Rational& x) const;
  // Largest v such that x^v divides the polynomial.
  int x_adic_valuation() const;
  UniPoly shift_down(int v) const;
  bool is_palindromic() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  UniPoly operator-() const;
  UniPoly pow(int e) const;

  // Quotient and remainder; throws InvalidInput for a zero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
  // Throws ConsistencyError when the remainder is nonzero.
  UniPoly exact_div(const UniPoly& divisor) const;

  bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }

  // Lowest degree first, e.g. "1 - 57*x - 289*x^2 + x^3".
  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

UniPoly gaussian_binomial(int n, int k);

// Lagrange interpolation through (xs[i], ys[i]); xs pairwise distinct.
UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace grassqh
