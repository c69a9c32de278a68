#include "grassqh/partitions.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "grassqh/errors.hpp"

namespace grassqh {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw InvalidInput("partition parts must be nonnegative");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidInput("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (int x : parts_) size_ += x;
}

Partition Partition::transpose() const {
  if (parts_.empty()) return {};
  std::vector<int> t(parts_.front(), 0);
  for (int row : parts_)
    for (int c = 0; c < row; ++c) ++t[c];
  return Partition(std::move(t));
}

std::string Partition::to_string() const { return to_string(length()); }

std::string Partition::to_string(int width) const {
  std::ostringstream os;
  os << "(";
  int w = std::max(width, length());
  for (int i = 0; i < w; ++i) {
    if (i) os << ",";
    os << (*this)[static_cast<std::size_t>(i)];
  }
  os << ")";
  return os.str();
}

Partition parse_partition(const std::string& text) {
  std::string body;
  for (char c : text)
    if (c != '(' && c != ')' && c != ' ') body += c;
  std::vector<int> parts;
  if (body.empty()) return {};
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw InvalidInput("malformed partition: " + text);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InvalidInput("malformed partition: " + text);
    }
    if (used != item.size()) throw InvalidInput("malformed partition: " + text);
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

BoxConstraint::BoxConstraint(int k_, int n_) : k(k_), n(n_) {
  if (k < 1 || n < k) throw InvalidInput("box requires 1 <= k <= n");
}

bool BoxConstraint::fits(const Partition& p) const {
  return p.length() <= k && p[0] <= cols();
}

Partition dual_in_box(const Partition& p, const BoxConstraint& box) {
  if (!box.fits(p)) throw InvalidInput("partition " + p.to_string() + " does not fit the box");
  std::vector<int> d(box.k);
  for (int i = 0; i < box.k; ++i) d[i] = box.cols() - p[static_cast<std::size_t>(box.k - 1 - i)];
  return Partition(std::move(d));
}

namespace {

// Visits partitions in the box with size in [min_size, max_size], in
// lexicographically decreasing order.
void enumerate(const BoxConstraint& box, int min_size, int max_size,
               const std::function<void(const Partition&)>& visit) {
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int cap, int size) {
    int row = static_cast<int>(cur.size());
    if (row == box.k) {
      if (size >= min_size) visit(Partition(cur));
      return;
    }
    int rows_left = box.k - row;
    for (int v = std::min(cap, max_size - size); v >= 0; --v) {
      if (size + v * rows_left < min_size) break;
      cur.push_back(v);
      rec(v, size + v);
      cur.pop_back();
    }
  };
  rec(box.cols(), 0);
}

}  // namespace

std::vector<Partition> partitions_in_box(const BoxConstraint& box) {
  std::vector<Partition> out;
  enumerate(box, 0, box.area(), [&](const Partition& p) { out.push_back(p); });
  return out;
}

std::vector<Partition> partitions_in_box(const BoxConstraint& box, int size) {
  std::vector<Partition> out;
  if (size < 0 || size > box.area()) return out;
  enumerate(box, size, size, [&](const Partition& p) { out.push_back(p); });
  return out;
}

std::vector<std::vector<int>> hook_lengths(const Partition& p) {
  Partition t = p.transpose();
  std::vector<std::vector<int>> hooks(p.length());
  for (int i = 0; i < p.length(); ++i) {
    hooks[i].resize(p[i]);
    for (int j = 0; j < p[i]; ++j) hooks[i][j] = p[i] - j + t[j] - i - 1;
  }
  return hooks;
}

bool is_core(const Partition& p, int ell) {
  if (ell <= 0) throw InvalidInput("core order must be positive");
  for (const auto& row : hook_lengths(p))
    for (int h : row)
      if (h == ell) return false;
  return true;
}

std::vector<int> to_beta_set(const Partition& p, const BoxConstraint& box) {
  if (!box.fits(p)) throw InvalidInput("partition " + p.to_string() + " does not fit the box");
  std::vector<int> beta(box.k);
  for (int i = 0; i < box.k; ++i) beta[i] = p[static_cast<std::size_t>(i)] + box.k - i;
  return beta;
}

Partition from_beta_set(std::vector<int> beta, const BoxConstraint& box) {
  if (static_cast<int>(beta.size()) != box.k) throw InvalidInput("beta-set must have k elements");
  std::sort(beta.begin(), beta.end(), std::greater<>());
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (beta[i] < 1 || beta[i] > box.n) throw InvalidInput("beta-set element out of [1, n]");
    if (i > 0 && beta[i] == beta[i - 1]) throw InvalidInput("beta-set elements must be distinct");
  }
  std::vector<int> parts(box.k);
  for (int i = 0; i < box.k; ++i) parts[i] = beta[i] - (box.k - i);
  return Partition(std::move(parts));
}

std::vector<SnowWitness> snow_witnesses(const BoxConstraint& box, int p, int ell) {
  std::vector<SnowWitness> out;
  if (ell < 0) return out;
  for (const auto& lam : partitions_in_box(box, p)) {
    int j = 0;
    bool core = true;
    for (const auto& row : hook_lengths(lam)) {
      for (int h : row) {
        if (h == ell) core = false;
        if (h > ell) ++j;
      }
    }
    if (core) out.push_back({lam, j});
  }
  return out;
}

std::vector<CoreWitness> core_search(const BoxConstraint& box) {
  if (box.k < 3 || 2 * box.k > box.n)
    throw PreconditionViolation("core_search requires 3 <= k <= n/2");
  std::vector<CoreWitness> out;
  for (int i = 1; i <= box.n - 1; ++i) {
    int ell = box.n - i;
    enumerate(box, box.area() - i, box.area(), [&](const Partition& lam) {
      if (is_core(lam, ell)) out.push_back({lam, i});
    });
  }
  return out;
}

}  // namespace grassqh
