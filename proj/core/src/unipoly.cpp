#include "grassqh/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "grassqh/errors.hpp"

namespace grassqh {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

UniPoly::UniPoly(std::initializer_list<std::int64_t> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (auto c : coeffs) coeffs_.push_back(make_rational(c));
  normalize();
}

UniPoly UniPoly::from_ints(const std::vector<std::int64_t>& coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (auto v : coeffs) c.push_back(make_rational(v));
  return UniPoly(std::move(c));
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, int degree) {
  if (degree < 0) throw InvalidInput("negative monomial degree");
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

void UniPoly::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational{0};
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational UniPoly::leading() const { return is_zero() ? Rational{0} : coeffs_.back(); }

bool UniPoly::has_integer_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return is_integer(c); });
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  UniPoly r = *this;
  Rational inv = 1 / leading();
  r *= inv;
  return r;
}

Rational UniPoly::evaluate(const Rational& x) const {
  Rational acc{0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int UniPoly::x_adic_valuation() const {
  int v = 0;
  while (v < static_cast<int>(coeffs_.size()) && sgn(coeffs_[static_cast<std::size_t>(v)]) == 0) ++v;
  return v;
}

UniPoly UniPoly::shift_down(int v) const {
  if (v > x_adic_valuation()) throw InvalidInput("shift_down past a nonzero coefficient");
  return UniPoly(std::vector<Rational>(coeffs_.begin() + v, coeffs_.end()));
}

bool UniPoly::is_palindromic() const {
  const int d = degree();
  for (int i = 0; i <= d; ++i)
    if (coeff(i) != coeff(d - i)) return false;
  return true;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  normalize();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

UniPoly UniPoly::pow(int e) const {
  if (e < 0) throw InvalidInput("negative exponent");
  UniPoly result = constant(Rational{1});
  UniPoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw InvalidInput("polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  const int dd = divisor.degree();
  const int nd = degree();
  if (nd < dd) return {UniPoly{}, *this};
  std::vector<Rational> quot(static_cast<std::size_t>(nd - dd) + 1);
  const Rational lead_inv = 1 / divisor.leading();
  for (int i = nd; i >= dd; --i) {
    Rational c = rem[static_cast<std::size_t>(i)] * lead_inv;
    quot[static_cast<std::size_t>(i - dd)] = c;
    if (sgn(c) == 0) continue;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(i - dd + j)] -= c * divisor.coeffs_[static_cast<std::size_t>(j)];
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::exact_div(const UniPoly& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) {
    throw ConsistencyError("inexact polynomial division: (" + to_string() + ") / (" +
                           divisor.to_string() + ")");
  }
  return q;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

UniPoly gaussian_binomial(int n, int k) {
  if (k < 0 || k > n) return UniPoly{};
  // [n choose k]_t = prod_{i=1}^{k} (1 - t^{n-k+i}) / (1 - t^i)
  UniPoly num = UniPoly::constant(Rational{1});
  UniPoly den = UniPoly::constant(Rational{1});
  for (int i = 1; i <= k; ++i) {
    num *= UniPoly::constant(Rational{1}) - UniPoly::monomial(Rational{1}, n - k + i);
    den *= UniPoly::constant(Rational{1}) - UniPoly::monomial(Rational{1}, i);
  }
  return num.exact_div(den);
}

UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw InvalidInput("interpolate: size mismatch");
  // Newton divided differences.
  const std::size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      Rational den = xs[i] - xs[i - level];
      if (sgn(den) == 0) throw InvalidInput("interpolate: repeated node");
      dd[i] = (dd[i] - dd[i - 1]) / den;
    }
  }
  UniPoly result;
  for (std::size_t i = n; i-- > 0;) {
    // result = result * (x - xs[i]) + dd[i]
    result *= UniPoly(std::vector<Rational>{-xs[i], Rational{1}});
    result += UniPoly::constant(dd[i]);
  }
  return result;
}

}  // namespace grassqh
