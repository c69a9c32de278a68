#include "grassqh/screen.hpp"

#include <numeric>

#include "grassqh/errors.hpp"
#include "grassqh/hodge.hpp"

namespace grassqh {

std::int64_t BettiProfile::euler_characteristic() const {
  return std::accumulate(even_betti.begin(), even_betti.end(), std::int64_t{0});
}

BettiProfile profile_of(const GrassmannianId& g) {
  BettiProfile p;
  UniPoly poly = poincare_polynomial(g);
  for (const auto& c : poly.coeffs()) p.even_betti.push_back(to_int64(c));
  p.index = fano_index(g);
  p.label = g.to_string();
  return p;
}

std::vector<std::int64_t> periodic_betti(const BettiProfile& p) {
  if (p.index < 1) throw InvalidInput("Fano index must be positive");
  std::vector<std::int64_t> t(p.index, 0);
  for (std::size_t j = 0; j < p.even_betti.size(); ++j) t[j % p.index] += p.even_betti[j];
  return t;
}

ScreenVerdict screen(const BettiProfile& p) {
  auto t = periodic_betti(p);
  const int r = p.index;
  for (int d = 1; d <= r; ++d) {
    for (int i = 0; i < r; ++i) {
      int di = static_cast<int>((static_cast<long>(d) * i) % r);
      if (t[i] > t[di]) return {ScreenVerdict::Outcome::Witness, ScreenWitness{i, d, t[i], t[di]}};
    }
  }
  return {};
}

std::optional<int> asymmetric_residue(const BettiProfile& p) {
  auto t = periodic_betti(p);
  const int r = p.index;
  for (int i = 0; i < r; ++i)
    if (t[i] != t[(r - i) % r]) return i;
  return std::nullopt;
}

std::pair<BettiProfile, BettiProfile> sg_betti(int n) {
  if (n < 3) throw InvalidInput("sg_betti requires n >= 3");
  BettiProfile x = profile_of(GrassmannianId(DynkinType(Family::C, n), 2));
  x.label = "SG(2," + std::to_string(2 * n) + ")";
  if (x.dimension() != 4 * n - 5 || x.index != 2 * n - 1)
    throw ConsistencyError("unexpected SG(2,2n) dimension or index");

  BettiProfile y;
  y.label = "hyperplane section of " + x.label;
  y.index = 2 * n - 2;
  const int dim_y = 4 * n - 6;
  y.even_betti.assign(dim_y + 1, 0);
  for (int i = 0; i <= 2 * n - 4; ++i) y.even_betti[i] = x.even_betti[i];
  y.even_betti[2 * n - 3] = x.even_betti[2 * n - 3] + x.even_betti[2 * n - 2];
  for (int i = 2 * n - 2; i <= dim_y; ++i) y.even_betti[i] = y.even_betti[dim_y - i];
  return {x, y};
}

BettiProfile section_profile(int k, int n) {
  HodgeDiamond d = diamond(k, n);
  BettiProfile p;
  p.index = n - 1;
  p.label = "hyperplane section of Gr(" + std::to_string(k) + "," + std::to_string(n) + ")";
  const int dim = d.dimension();
  p.even_betti.assign(dim + 1, 0);
  for (int i = 0; i <= dim; ++i)
    for (int a = 0; a <= 2 * i; ++a)
      if (a <= dim && 2 * i - a <= dim) p.even_betti[i] += d.at(a, 2 * i - a);
  return p;
}

namespace {

GrassmannianId gp(Family f, int rank, int node) { return GrassmannianId(DynkinType(f, rank), node); }

}  // namespace

std::vector<ExceptionalRow> exceptional_table() {
  const std::vector<GrassmannianId> ids = {
      gp(Family::E, 6, 2), gp(Family::E, 6, 4), gp(Family::E, 7, 1), gp(Family::E, 7, 3), gp(Family::E, 7, 6),
      gp(Family::E, 8, 1), gp(Family::E, 8, 2), gp(Family::E, 8, 3), gp(Family::E, 8, 5), gp(Family::E, 8, 7),
      gp(Family::E, 8, 8), gp(Family::F, 4, 3), gp(Family::F, 4, 4)};
  std::vector<ExceptionalRow> rows;
  for (const auto& id : ids) {
    BettiProfile p = profile_of(id);
    auto t = periodic_betti(p);
    int i = (id.type.family == Family::F && id.node == 4) ? 4 : 1;
    int r = p.index;
    rows.push_back({id, p.dimension(), r, i, t[i % r], t[(r - i % r) % r], screen(p)});
  }
  return rows;
}

std::vector<GrassmannianId> exceptional_unscreened() {
  return {gp(Family::E, 7, 2), gp(Family::E, 7, 4), gp(Family::E, 7, 5), gp(Family::E, 8, 6),
          gp(Family::E, 8, 4)};
}

}  // namespace grassqh
