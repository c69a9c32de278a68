#include <gtest/gtest.h>

#include "grassqh/errors.hpp"
#include "grassqh/hodge.hpp"
#include "grassqh/unipoly.hpp"
#include "oracles.hpp"

using namespace grassqh;

namespace {

struct DisplayedDiamond {
  int k, n;
  std::vector<std::int64_t> diagonal;
  int p, q;  // off-diagonal position, or -1
  std::int64_t off;
};

// Section diamonds as displayed: diagonal entries plus the one middle-row
// off-diagonal pair, where present.
const std::vector<DisplayedDiamond> kSections = {
    {3, 6, {1, 1, 2, 3, 4, 3, 2, 1, 1}, -1, -1, 0},
    {3, 7, {1, 1, 2, 3, 4, 4, 4, 4, 3, 2, 1, 1}, -1, -1, 0},
    {3, 8, {1, 1, 2, 3, 4, 5, 6, 7, 6, 5, 4, 3, 2, 1, 1}, -1, -1, 0},
    {3, 9, {1, 1, 2, 3, 4, 5, 7, 7, 8, 8, 7, 7, 5, 4, 3, 2, 1, 1}, 8, 9, 2},
    {4, 8, {1, 1, 2, 3, 5, 5, 7, 7, 7, 7, 5, 5, 3, 2, 1, 1}, 7, 8, 3},
};

// Ambient columns as displayed.
const std::vector<std::pair<std::pair<int, int>, std::vector<std::int64_t>>> kAmbient = {
    {{3, 6}, {1, 1, 2, 3, 3, 3, 3, 2, 1, 1}},
    {{3, 7}, {1, 1, 2, 3, 4, 4, 5, 4, 4, 3, 2, 1, 1}},
    {{3, 8}, {1, 1, 2, 3, 4, 5, 6, 6, 6, 6, 5, 4, 3, 2, 1, 1}},
    {{3, 9}, {1, 1, 2, 3, 4, 5, 7, 7, 8, 8, 8, 7, 7, 5, 4, 3, 2, 1, 1}},
    {{4, 8}, {1, 1, 2, 3, 5, 5, 7, 7, 8, 7, 7, 5, 5, 3, 2, 1, 1}},
};

std::int64_t signed_euler(const HodgeDiamond& d) {
  std::int64_t e = 0;
  for (int p = 0; p <= d.dimension(); ++p)
    for (int q = 0; q <= d.dimension(); ++q) e += ((p + q) % 2 ? -1 : 1) * d.at(p, q);
  return e;
}

}  // namespace

TEST(FixedPoints, CountAndWeights) {
  std::vector<std::int64_t> a{3, -7, 11, 2, 5, -1};
  auto fps = fixed_points(3, a);
  ASSERT_EQ(static_cast<std::int64_t>(fps.size()), oracle::binomial(6, 3));
  for (const auto& f : fps) {
    EXPECT_EQ(f.tangent_weights.size(), 9u);
    std::int64_t h = 0;
    for (int i : f.subset) h += a[static_cast<std::size_t>(i - 1)];
    EXPECT_EQ(f.line_weight, h);
  }
}

TEST(ChiY, SectionOfGr39MatchesTable) {
  UniPoly want = UniPoly::from_ints({1, -1, 2, -3, 4, -5, 7, -7, 6, -6, 7, -7, 5, -4, 3, -2, 1, -1});
  EXPECT_EQ(chi_y(3, 9, true), want);
}

TEST(ChiY, AmbientMatchesBoxCounts) {
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; k < n; ++k) {
      auto counts = box_counts(k, n);
      std::vector<std::int64_t> signed_counts;
      for (std::size_t p = 0; p < counts.size(); ++p) signed_counts.push_back(p % 2 ? -counts[p] : counts[p]);
      EXPECT_EQ(chi_y(k, n, false), UniPoly::from_ints(signed_counts)) << k << "," << n;
      EXPECT_EQ(UniPoly::from_ints(counts), gaussian_binomial(n, k));
    }
}

TEST(ChiY, IndependentOfTorusParameters) {
  for (int n = 2; n <= 9; ++n)
    for (int k = 1; 2 * k <= n; ++k)
      for (bool section : {false, true}) {
        if (section && n == 2) continue;
        EXPECT_EQ(chi_y(k, n, section, 1729), chi_y(k, n, section, 424242)) << k << "," << n << " " << section;
      }
}

TEST(ChiY, SectionPropertiesFromDuality) {
  for (int n = 3; n <= 9; ++n)
    for (int k = 1; 2 * k <= n; ++k) {
      const int dim = k * (n - k) - 1;
      UniPoly c = chi_y(k, n, true);
      EXPECT_EQ(c.coeff(0), 1);
      EXPECT_LE(c.degree(), dim);
      for (int p = 0; p <= dim; ++p) EXPECT_EQ(c.coeff(p), (dim % 2 ? -1 : 1) * c.coeff(dim - p)) << k << "," << n;
    }
  // A hyperplane in P^{n-1} is P^{n-2}.
  for (int n = 3; n <= 8; ++n) {
    std::vector<std::int64_t> alt;
    for (int p = 0; p <= n - 2; ++p) alt.push_back(p % 2 ? -1 : 1);
    EXPECT_EQ(chi_y(1, n, true), UniPoly::from_ints(alt));
  }
}

TEST(Diamond, SectionsMatchDisplayedColumns) {
  for (const auto& want : kSections) {
    HodgeDiamond d = diamond(want.k, want.n);
    EXPECT_EQ(d.dimension(), want.k * (want.n - want.k) - 1);
    EXPECT_EQ(d.diagonal(), want.diagonal) << want.k << "," << want.n;
    for (int p = 0; p <= d.dimension(); ++p)
      for (int q = 0; q <= d.dimension(); ++q) {
        if (p == q) continue;
        const bool listed = (p == want.p && q == want.q) || (p == want.q && q == want.p);
        EXPECT_EQ(d.at(p, q), listed ? want.off : 0) << want.k << "," << want.n << " " << p << "," << q;
      }
    // chi_y(-1) is the topological Euler characteristic.
    EXPECT_EQ(chi_y(want.k, want.n, true).evaluate(-1), Rational(static_cast<long>(signed_euler(d))));
  }
}

TEST(Diamond, AmbientMatchesDisplayedColumns) {
  for (const auto& [kn, want] : kAmbient) {
    HodgeDiamond d = ambient_diamond(kn.first, kn.second);
    EXPECT_EQ(d.diagonal(), want);
    EXPECT_TRUE(d.is_hodge_tate());
  }
}

TEST(Diamond, SymmetriesAndLefschetzAgreement) {
  for (int n = 4; n <= 9; ++n)
    for (int k = 2; 2 * k <= n; ++k) {
      HodgeDiamond y = diamond(k, n);
      HodgeDiamond x = ambient_diamond(k, n);
      const int m = y.dimension();
      for (int p = 0; p <= m; ++p)
        for (int q = 0; q <= m; ++q) {
          EXPECT_EQ(y.at(p, q), y.at(q, p));
          EXPECT_EQ(y.at(p, q), y.at(m - p, m - q));
          if (p + q < m) EXPECT_EQ(y.at(p, q), x.at(p, q));
          EXPECT_GE(y.at(p, q), 0);
        }
    }
}

TEST(HodgeTate, ClassificationUpToTwelve) {
  for (int n = 2; n <= 12; ++n)
    for (int k = 1; 2 * k <= n; ++k) {
      HodgeTateResult r = is_hodge_tate(k, n);
      const bool expected = k <= 2 || (k == 3 && n <= 8);
      EXPECT_EQ(r.hodge_tate, expected) << k << "," << n;
      EXPECT_EQ(r.used_localization, k * (n - k) <= 2 * n) << k << "," << n;
      EXPECT_FALSE(r.certificate.empty());
    }
  EXPECT_THROW(is_hodge_tate(4, 7), InvalidInput);
}

TEST(HodgeTate, DimensionThreshold) {
  for (int n = 4; n <= 30; ++n)
    for (int k = 1; 2 * k <= n; ++k) {
      const bool big = k * (n - k) > 2 * n;
      EXPECT_EQ(big, k >= 5 || (k == 4 && n >= 9) || (k == 3 && n >= 10)) << k << "," << n;
    }
}

TEST(HodgeTate, VanishingCheckOnLargeBoxes) {
  for (int n = 8; n <= 12; ++n)
    for (int k = 3; 2 * k <= n; ++k) {
      if (k * (n - k) > 2 * n) EXPECT_TRUE(vanishing_check(k, n)) << k << "," << n;
      else EXPECT_THROW(vanishing_check(k, n), PreconditionViolation);
    }
}
