#include "grassqh/root_data.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

#include "grassqh/errors.hpp"

namespace grassqh {

DynkinType::DynkinType(Family f, int r) : family(f), rank(r) {
  bool ok = false;
  switch (f) {
    case Family::A: ok = r >= 1; break;
    case Family::B:
    case Family::C: ok = r >= 2; break;
    case Family::D: ok = r >= 4; break;
    case Family::E: ok = r >= 6 && r <= 8; break;
    case Family::F: ok = r == 4; break;
    case Family::G: ok = r == 2; break;
  }
  if (!ok) throw InvalidInput("no Dynkin type " + std::string(1, "ABCDEFG"[static_cast<int>(f)]) + std::to_string(r));
}

DynkinType DynkinType::parse(const std::string& text) {
  if (text.size() < 2) throw InvalidInput("malformed Dynkin type: " + text);
  char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  auto pos = std::string("ABCDEFG").find(c);
  if (pos == std::string::npos) throw InvalidInput("unknown Dynkin family: " + text);
  std::string digits = text.substr(1);
  if (!std::all_of(digits.begin(), digits.end(), [](unsigned char d) { return std::isdigit(d); }) ||
      digits.size() > 4)
    throw InvalidInput("malformed Dynkin rank: " + text);
  return DynkinType(static_cast<Family>(pos), std::stoi(digits));
}

std::string DynkinType::to_string() const {
  return std::string(1, "ABCDEFG"[static_cast<int>(family)]) + std::to_string(rank);
}

GrassmannianId::GrassmannianId(DynkinType t, int k) : type(t), node(k) {
  if (k < 1 || k > t.rank) throw InvalidInput("node out of range for " + t.to_string());
}

std::string GrassmannianId::to_string() const { return type.to_string() + "/P" + std::to_string(node); }

namespace {

// Edges of the Dynkin diagram, 1-based.
std::vector<std::pair<int, int>> diagram_edges(const DynkinType& t) {
  std::vector<std::pair<int, int>> e;
  int n = t.rank;
  switch (t.family) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::F:
    case Family::G:
      for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(n - 2, n);
      break;
    case Family::E:
      e.emplace_back(1, 3);
      e.emplace_back(2, 4);
      for (int i = 3; i < n; ++i) e.emplace_back(i, i + 1);
      break;
  }
  return e;
}

}  // namespace

std::vector<int> simple_root_lengths(const DynkinType& t) {
  int n = t.rank;
  std::vector<int> len(n, 2);
  switch (t.family) {
    case Family::B:
      for (int i = 0; i < n - 1; ++i) len[i] = 4;
      break;
    case Family::C: len[n - 1] = 4; break;
    case Family::F: len[0] = len[1] = 4; break;
    case Family::G: len[1] = 6; break;
    default: break;
  }
  return len;
}

std::vector<std::vector<int>> invariant_form(const DynkinType& t) {
  auto len = simple_root_lengths(t);
  std::vector<std::vector<int>> b(t.rank, std::vector<int>(t.rank, 0));
  for (int i = 0; i < t.rank; ++i) b[i][i] = len[i];
  for (auto [i, j] : diagram_edges(t)) {
    int v = -std::max(len[i - 1], len[j - 1]) / 2;
    b[i - 1][j - 1] = b[j - 1][i - 1] = v;
  }
  return b;
}

std::vector<std::vector<int>> cartan_matrix(const DynkinType& t) {
  auto b = invariant_form(t);
  auto a = b;
  for (int i = 0; i < t.rank; ++i)
    for (int j = 0; j < t.rank; ++j) a[i][j] = 2 * b[i][j] / b[i][i];
  return a;
}

std::vector<RootVector> positive_roots(const DynkinType& t) {
  const int n = t.rank;
  auto a = cartan_matrix(t);
  std::set<RootVector> known;
  std::vector<RootVector> layer;
  for (int i = 0; i < n; ++i) {
    RootVector r(n, 0);
    r[i] = 1;
    layer.push_back(r);
    known.insert(r);
  }
  std::vector<RootVector> all;
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end(), std::greater<>());
    all.insert(all.end(), layer.begin(), layer.end());
    std::set<RootVector> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < n; ++i) {
        // alpha_i-string through beta: beta - p alpha_i, ..., beta + q alpha_i.
        int p = 0;
        RootVector down = beta;
        while (true) {
          --down[i];
          if (!known.count(down)) break;
          ++p;
        }
        int pairing = 0;
        for (int j = 0; j < n; ++j) pairing += beta[j] * a[i][j];
        if (p - pairing > 0) {
          RootVector up = beta;
          ++up[i];
          next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    known.insert(layer.begin(), layer.end());
  }
  return all;
}

std::vector<int> fundamental_degrees(const DynkinType& t) {
  int n = t.rank;
  std::vector<int> d;
  switch (t.family) {
    case Family::A:
      for (int i = 2; i <= n + 1; ++i) d.push_back(i);
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i <= n; ++i) d.push_back(2 * i);
      break;
    case Family::D:
      for (int i = 1; i < n; ++i) d.push_back(2 * i);
      d.push_back(n);
      break;
    case Family::E:
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (n == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case Family::F: d = {2, 6, 8, 12}; break;
    case Family::G: d = {2, 6}; break;
  }
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<int> subsystem_degrees(const DynkinType& t, const std::vector<int>& nodes) {
  std::vector<bool> in(t.rank, false);
  for (int v : nodes) {
    if (v < 1 || v > t.rank) throw InvalidInput("subsystem node out of range");
    in[v - 1] = true;
  }
  // Root heights determine the exponents: #{exponents >= h} = #{roots of height h}.
  std::vector<int> per_height;
  for (const auto& r : positive_roots(t)) {
    bool inside = true;
    int h = 0;
    for (int i = 0; i < t.rank; ++i) {
      if (r[i] != 0 && !in[i]) inside = false;
      h += r[i];
    }
    if (!inside) continue;
    if (static_cast<int>(per_height.size()) < h) per_height.resize(h, 0);
    ++per_height[h - 1];
  }
  std::vector<int> degrees;
  for (std::size_t h = 0; h < per_height.size(); ++h) {
    int next = h + 1 < per_height.size() ? per_height[h + 1] : 0;
    for (int c = 0; c < per_height[h] - next; ++c) degrees.push_back(static_cast<int>(h) + 2);
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

std::vector<std::vector<int>> diagram_components_without(const DynkinType& t, int removed) {
  std::vector<std::vector<int>> adj(t.rank + 1);
  for (auto [i, j] : diagram_edges(t)) {
    if (i == removed || j == removed) continue;
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  std::vector<bool> seen(t.rank + 1, false);
  std::vector<std::vector<int>> comps;
  for (int s = 1; s <= t.rank; ++s) {
    if (s == removed || seen[s]) continue;
    std::vector<int> comp, stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(comp);
  }
  return comps;
}

namespace {

RootVector unipotent_root_sum(const GrassmannianId& g, int* count) {
  RootVector s(g.type.rank, 0);
  *count = 0;
  for (const auto& r : positive_roots(g.type)) {
    if (r[g.node - 1] <= 0) continue;
    ++*count;
    for (int i = 0; i < g.type.rank; ++i) s[i] += r[i];
  }
  return s;
}

}  // namespace

int dimension(const GrassmannianId& g) {
  int count = 0;
  unipotent_root_sum(g, &count);
  return count;
}

int fano_index(const GrassmannianId& g) {
  int count = 0;
  RootVector s = unipotent_root_sum(g, &count);
  auto b = invariant_form(g.type);
  int k = g.node - 1;
  int pairing = 0;
  for (int j = 0; j < g.type.rank; ++j) pairing += s[j] * b[j][k];
  if ((2 * pairing) % b[k][k] != 0) throw ConsistencyError("non-integral coroot pairing");
  return 2 * pairing / b[k][k];
}

UniPoly poincare_polynomial(const GrassmannianId& g) {
  auto factor = [](int d) { return UniPoly::constant(Rational{1}) - UniPoly::monomial(Rational{1}, d); };
  UniPoly num = UniPoly::constant(Rational{1});
  for (int d : fundamental_degrees(g.type)) num *= factor(d);
  UniPoly den = factor(1);
  for (const auto& comp : diagram_components_without(g.type, g.node))
    for (int d : subsystem_degrees(g.type, comp)) den *= factor(d);
  return num.exact_div(den);
}

}  // namespace grassqh
