#include "grassqh/hodge.hpp"

#include <random>
#include <set>

#include "grassqh/errors.hpp"
#include "grassqh/partitions.hpp"

namespace grassqh {

HodgeDiamond::HodgeDiamond(int dimension) : dim_(dimension) {
  if (dimension < 0) throw InvalidInput("negative diamond dimension");
  h_.assign(static_cast<std::size_t>(dim_ + 1) * (dim_ + 1), 0);
}

std::int64_t HodgeDiamond::at(int p, int q) const {
  if (p < 0 || q < 0 || p > dim_ || q > dim_) return 0;
  return h_[static_cast<std::size_t>(p) * (dim_ + 1) + q];
}

void HodgeDiamond::set(int p, int q, std::int64_t v) {
  if (p < 0 || q < 0 || p > dim_ || q > dim_) throw InvalidInput("Hodge index out of range");
  h_[static_cast<std::size_t>(p) * (dim_ + 1) + q] = v;
}

std::int64_t HodgeDiamond::total() const {
  std::int64_t s = 0;
  for (auto v : h_) s += v;
  return s;
}

std::vector<std::int64_t> HodgeDiamond::diagonal() const {
  std::vector<std::int64_t> d;
  for (int p = 0; p <= dim_; ++p) d.push_back(at(p, p));
  return d;
}

bool HodgeDiamond::is_hodge_tate() const {
  for (int p = 0; p <= dim_; ++p)
    for (int q = 0; q <= dim_; ++q)
      if (p != q && at(p, q) != 0) return false;
  return true;
}

std::vector<FixedPoint> fixed_points(int k, const std::vector<std::int64_t>& a) {
  const int n = static_cast<int>(a.size());
  if (k < 1 || k > n) throw InvalidInput("fixed_points requires 1 <= k <= n");
  std::vector<FixedPoint> out;
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + k, true);
  // prev_permutation on a true-first mask walks subsets in lexicographic order.
  do {
    FixedPoint fp;
    fp.line_weight = 0;
    for (int i = 0; i < n; ++i)
      if (mask[i]) {
        fp.subset.push_back(i + 1);
        fp.line_weight += a[i];
      }
    for (int i = 0; i < n; ++i) {
      if (!mask[i]) continue;
      for (int j = 0; j < n; ++j)
        if (!mask[j]) fp.tangent_weights.push_back(a[j] - a[i]);
    }
    out.push_back(std::move(fp));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

namespace {

using Series = std::vector<Rational>;  // truncated power series, lowest first

Series series_log(const Series& s) {
  // s[0] must be 1; L' = s'/s.
  Series l(s.size());
  for (std::size_t m = 1; m < s.size(); ++m) {
    Rational acc = s[m] * static_cast<long>(m);
    for (std::size_t i = 1; i < m; ++i) acc -= l[i] * static_cast<long>(i) * s[m - i];
    l[m] = acc / static_cast<long>(m);
  }
  return l;
}

Series series_exp(const Series& c) {
  // c[0] is ignored (taken as 0).
  Series e(c.size());
  e[0] = 1;
  for (std::size_t m = 1; m < c.size(); ++m) {
    Rational acc;
    for (std::size_t i = 1; i <= m; ++i)
      if (sgn(c[i]) != 0) acc += c[i] * static_cast<long>(i) * e[m - i];
    e[m] = acc / static_cast<long>(m);
  }
  return e;
}

Rational inverse_factorial(std::size_t m) {
  Integer f = 1;
  for (std::size_t i = 2; i <= m; ++i) f *= static_cast<unsigned long>(i);
  return Rational(Integer(1), f);
}

// Taylor data independent of y, up to z^order.
struct Todd {
  Series f;  // log(z / (1 - e^{-z}))
  Series h;  // log((e^z - 1) / z)
};

Todd todd_series(std::size_t order) {
  Series b(order + 1), c(order + 1);
  for (std::size_t m = 0; m <= order; ++m) {
    b[m] = inverse_factorial(m + 1) * ((m % 2) ? -1 : 1);
    c[m] = inverse_factorial(m + 1);
  }
  Todd t{series_log(b), series_log(c)};
  for (auto& v : t.f) v = -v;
  return t;
}

// log((1 + y e^{-z}) / (1 + y)) up to z^order.
Series y_series(const Rational& y, std::size_t order) {
  Series s(order + 1);
  s[0] = 1;
  Rational ratio = y / (1 + y);
  for (std::size_t m = 1; m <= order; ++m) s[m] = ratio * inverse_factorial(m) * ((m % 2) ? -1 : 1);
  return series_log(s);
}

std::vector<std::int64_t> draw_parameters(int k, int n, bool section, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(-25 * n, 25 * n);
  constexpr int kRetryBudget = 64;
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    std::vector<std::int64_t> a(n);
    std::set<std::int64_t> seen;
    for (auto& v : a) {
      v = dist(rng);
      seen.insert(v);
    }
    if (static_cast<int>(seen.size()) != n) continue;
    bool ok = true;
    if (section)
      for (const auto& fp : fixed_points(k, a))
        if (fp.line_weight == 0) ok = false;
    if (ok) return a;
  }
  throw ConsistencyError("could not draw nondegenerate torus parameters");
}

}  // namespace

UniPoly chi_y(int k, int n, bool section, std::uint64_t seed) {
  if (k < 1 || k > n - 1) throw InvalidInput("chi_y requires 1 <= k <= n-1");
  const int dim = k * (n - k);
  // Degree of the integrand we need: dim for X, dim - 1 after factoring h out for Y.
  const int order = section ? dim - 1 : dim;
  const int ydeg = section ? dim - 1 : dim;

  const auto a = draw_parameters(k, n, section, seed);
  const auto points = fixed_points(k, a);
  const Todd todd = todd_series(static_cast<std::size_t>(std::max(order, 1)));

  // Per fixed point: power sums of tangent weights and the weight product.
  struct PointData {
    std::vector<Rational> power_sums;
    Rational weight_product;
    Rational line_weight;
  };
  std::vector<PointData> data;
  for (const auto& fp : points) {
    PointData d;
    d.power_sums.assign(order + 1, Rational{0});
    Integer prod = 1;
    for (auto w : fp.tangent_weights) {
      prod *= static_cast<long>(w);
      Integer pw = 1;
      for (int j = 1; j <= order; ++j) {
        pw *= static_cast<long>(w);
        d.power_sums[j] += pw;
      }
    }
    d.weight_product = prod;
    d.line_weight = Rational(static_cast<long>(fp.line_weight));
    data.push_back(std::move(d));
  }

  std::vector<Rational> ys, values;
  for (int t = 0; t < ydeg + 2; ++t) {
    Rational y = t + 1;
    Series g = y_series(y, static_cast<std::size_t>(std::max(order, 1)));
    Rational total;
    for (const auto& d : data) {
      Series c(order + 1);
      Rational hp = 1;
      for (int j = 1; j <= order; ++j) {
        c[j] = (todd.f[j] + g[j]) * d.power_sums[j];
        if (section) {
          hp *= d.line_weight;
          c[j] += (todd.h[j] - ((j % 2) ? -g[j] : g[j])) * hp;
        }
      }
      Series e = series_exp(c);
      Rational term = e[order] / d.weight_product;
      if (section) term *= -d.line_weight;
      total += term;
    }
    Rational prefactor = 1;
    for (int i = 0; i < ydeg; ++i) prefactor *= (1 + y);
    ys.push_back(y);
    values.push_back(total * prefactor);
  }

  UniPoly p = interpolate(ys, values);
  if (p.degree() > ydeg || !p.has_integer_coeffs())
    throw ConsistencyError("localization sum is not an integral polynomial of the expected degree");
  return p;
}

std::vector<std::int64_t> box_counts(int k, int n) {
  BoxConstraint box(k, n);
  std::vector<std::int64_t> c(box.area() + 1, 0);
  for (const auto& lam : partitions_in_box(box)) ++c[lam.size()];
  return c;
}

HodgeDiamond ambient_diamond(int k, int n) {
  auto c = box_counts(k, n);
  HodgeDiamond d(k * (n - k));
  for (int p = 0; p <= d.dimension(); ++p) d.set(p, p, c[p]);
  return d;
}

HodgeDiamond diamond(int k, int n, std::uint64_t seed) {
  if (n < 2 || k < 1 || 2 * k > n) throw InvalidInput("diamond requires n >= 2 and 1 <= k <= n/2");
  const int m = k * (n - k) - 1;
  auto counts = box_counts(k, n);
  UniPoly chi = chi_y(k, n, true, seed);
  HodgeDiamond d(m);
  for (int p = 0; p <= m; ++p) {
    if (2 * p < m) d.set(p, p, counts[p]);
    if (2 * p > m) d.set(p, p, counts[m - p]);
  }
  for (int p = 0; p <= m; ++p) {
    std::int64_t chi_p = to_int64(chi.coeff(p));
    std::int64_t diag = (2 * p != m) ? d.at(p, p) : 0;
    std::int64_t rest = chi_p - ((p % 2) ? -diag : diag);
    std::int64_t v = ((m - p) % 2) ? -rest : rest;
    if (v < 0) throw ConsistencyError("negative Hodge number solved from chi_y");
    d.set(p, m - p, v);
  }
  for (int p = 0; p <= m; ++p)
    if (d.at(p, m - p) != d.at(m - p, p)) throw ConsistencyError("middle row of the diamond is not symmetric");
  return d;
}

HodgeTateResult is_hodge_tate(int k, int n, std::uint64_t seed) {
  if (k < 1 || n < 2 * k) throw InvalidInput("is_hodge_tate requires 1 <= k and n >= 2k");
  const int dim = k * (n - k);
  if (dim > 2 * n) {
    return {false,
            "h^{" + std::to_string(dim - n) + "," + std::to_string(n - 1) + "} = 1 since k(n-k) > 2n",
            false};
  }
  HodgeDiamond d = diamond(k, n, seed);
  for (int p = 0; p <= d.dimension(); ++p)
    for (int q = 0; q <= d.dimension(); ++q)
      if (p != q && d.at(p, q) != 0)
        return {false, "h^{" + std::to_string(p) + "," + std::to_string(q) + "} = " + std::to_string(d.at(p, q)),
                true};
  return {true, "all off-diagonal Hodge numbers vanish", true};
}

bool vanishing_check(int k, int n) {
  if (k < 1 || k > n || k * (n - k) <= 2 * n) throw PreconditionViolation("vanishing_check requires k(n-k) > 2n");
  BoxConstraint box(k, n);
  const int dim = box.area();
  for (int p = 2; p <= n; ++p)
    for (int j = 1; j < p; ++j)
      if (!snow_witnesses(box, dim - j, p - j).empty()) return false;
  return true;
}

}  // namespace grassqh
