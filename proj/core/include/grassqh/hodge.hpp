#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grassqh/unipoly.hpp"

namespace grassqh {

// Default seed for the torus parameters of the localization sum.
inline constexpr std::uint64_t kDefaultHodgeSeed = 1729;

/// Hodge numbers h^{p,q}, 0 <= p, q <= dimension.
class HodgeDiamond {
 public:
  explicit HodgeDiamond(int dimension);

  int dimension() const { return dim_; }
  std::int64_t at(int p, int q) const;
  void set(int p, int q, std::int64_t v);

  std::int64_t total() const;
  // h^{p,p} for p = 0..dim.
  std::vector<std::int64_t> diagonal() const;
  bool is_hodge_tate() const;
  bool operator==(const HodgeDiamond&) const = default;

 private:
  int dim_;
  std::vector<std::int64_t> h_;
};

/// Fixed point of the torus action on Gr(k,n): a k-subset S of {1..n}.
struct FixedPoint {
  std::vector<int> subset;          // 1-based, increasing
  std::vector<std::int64_t> tangent_weights;  // a_j - a_i, i in S, j not in S
  std::int64_t line_weight;         // sum of a_i over S
};

// The C(n,k) fixed points for integer torus parameters a_1..a_n.
std::vector<FixedPoint> fixed_points(int k, const std::vector<std::int64_t>& a);

/// chi_y of Gr(k,n), or of its smooth hyperplane section, by localization
/// at generic integer torus parameters drawn from `seed`. Integral
/// coefficients of y^0, y^1, ... are asserted (ConsistencyError otherwise).
UniPoly chi_y(int k, int n, bool section, std::uint64_t seed = kDefaultHodgeSeed);

// Number of partitions of each size 0..k(n-k) in the k x (n-k) box.
std::vector<std::int64_t> box_counts(int k, int n);

HodgeDiamond ambient_diamond(int k, int n);

/// Diamond of the smooth hyperplane section of Gr(k,n). Entries off the
/// middle row come from the Lefschetz hyperplane theorem; the middle row is
/// solved from chi_y. Requires n >= 2 and 1 <= k <= n/2.
HodgeDiamond diamond(int k, int n, std::uint64_t seed = kDefaultHodgeSeed);

struct HodgeTateResult {
  bool hodge_tate;
  std::string certificate;
  bool used_localization;
};

/// Whether the hyperplane section of Gr(k,n) has only (p,p) classes. When
/// k(n-k) > 2n the answer is "no" via h^{k(n-k)-n, n-1} = 1 without any
/// localization. Requires n >= 2k.
HodgeTateResult is_hodge_tate(int k, int n, std::uint64_t seed = kDefaultHodgeSeed);

/// Checks H^j(Gr(k,n), Ω^{dim-j}(p-j)) = 0 for all 1 <= j < p <= n through
/// the hook-length criterion. Requires k(n-k) > 2n.
bool vanishing_check(int k, int n);

}  // namespace grassqh
