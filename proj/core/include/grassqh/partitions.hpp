#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace grassqh {

/// Weakly decreasing sequence of nonnegative integers, stored without
/// trailing zeros. Ordering is lexicographic on the zero-padded parts.
class Partition {
 public:
  Partition() = default;
  // Throws InvalidInput unless parts are nonnegative and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  // Number of nonzero parts.
  int length() const { return static_cast<int>(parts_.size()); }
  // parts[i] for 0-based i, zero past the end.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }

  Partition transpose() const;

  auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }
  bool operator==(const Partition& o) const { return parts_ == o.parts_; }

  // "(4,3)"; the empty partition prints as "()".
  std::string to_string() const;
  // Zero-padded to `width` parts, e.g. "(4,3,0)".
  std::string to_string(int width) const;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Parses "4,3,0", "(4,3,0)" or "" into a partition; throws InvalidInput.
Partition parse_partition(const std::string& text);

/// The k x (n-k) box indexing Schubert classes of Gr(k,n).
struct BoxConstraint {
  int k;
  int n;

  // Throws InvalidInput unless 1 <= k <= n.
  BoxConstraint(int k_, int n_);

  int rows() const { return k; }
  int cols() const { return n - k; }
  int area() const { return k * (n - k); }
  bool fits(const Partition& p) const;
  bool operator==(const BoxConstraint&) const = default;
};

// The complement of λ in the box, rotated: λ^∨_i = (n-k) - λ_{k+1-i}.
Partition dual_in_box(const Partition& p, const BoxConstraint& box);

// All partitions fitting the box, lexicographically decreasing.
std::vector<Partition> partitions_in_box(const BoxConstraint& box);
// Same, restricted to |λ| = size.
std::vector<Partition> partitions_in_box(const BoxConstraint& box, int size);

// hooks[i][j] for the cell in row i, column j (0-based).
std::vector<std::vector<int>> hook_lengths(const Partition& p);

// True iff no cell has hook length ell. Throws InvalidInput for ell <= 0.
bool is_core(const Partition& p, int ell);

// a_i = λ_i + k - i + 1 (1-based i), strictly decreasing, inside [1, n].
std::vector<int> to_beta_set(const Partition& p, const BoxConstraint& box);
// Inverse of to_beta_set; accepts the k elements in any order.
Partition from_beta_set(std::vector<int> beta, const BoxConstraint& box);

struct SnowWitness {
  Partition partition;
  int j;  // number of cells with hook length > ell
  bool operator==(const SnowWitness&) const = default;
};

/// Partitions λ in the box with |λ| = p that are ell-cores, paired with the
/// number of cells of hook length exceeding ell. These index the nonzero
/// groups H^j(Gr(k,n), Ω^p(ell)).
std::vector<SnowWitness> snow_witnesses(const BoxConstraint& box, int p, int ell);

struct CoreWitness {
  Partition partition;
  int i;
  bool operator==(const CoreWitness&) const = default;
};

/// All (λ, i) with 1 <= i <= n-1, |λ| >= k(n-k) - i and λ an (n-i)-core.
/// Ordered by i ascending, then λ lexicographically decreasing.
/// Requires 3 <= k <= n/2 (PreconditionViolation otherwise).
std::vector<CoreWitness> core_search(const BoxConstraint& box);

}  // namespace grassqh
