#include <gtest/gtest.h>

#include <numeric>

#include "grassqh/errors.hpp"
#include "grassqh/root_data.hpp"
#include "grassqh/unipoly.hpp"
#include "oracles.hpp"

using namespace grassqh;

namespace {

std::vector<DynkinType> all_types(int max_classical_rank) {
  std::vector<DynkinType> out;
  for (int r = 1; r <= max_classical_rank; ++r) out.emplace_back(Family::A, r);
  for (int r = 2; r <= max_classical_rank; ++r) out.emplace_back(Family::B, r);
  for (int r = 3; r <= max_classical_rank; ++r) out.emplace_back(Family::C, r);
  for (int r = 4; r <= max_classical_rank; ++r) out.emplace_back(Family::D, r);
  for (int r = 6; r <= 8; ++r) out.emplace_back(Family::E, r);
  out.emplace_back(Family::F, 4);
  out.emplace_back(Family::G, 2);
  return out;
}

std::int64_t weyl_order(const std::vector<int>& degrees) {
  std::int64_t w = 1;
  for (int d : degrees) w *= d;
  return w;
}

}  // namespace

TEST(DynkinType, ParsingAndValidation) {
  EXPECT_EQ(DynkinType::parse("E7"), DynkinType(Family::E, 7));
  EXPECT_EQ(DynkinType::parse("c3").to_string(), "C3");
  EXPECT_THROW(DynkinType::parse("E9"), InvalidInput);
  EXPECT_THROW(DynkinType::parse("D3"), InvalidInput);
  EXPECT_THROW(DynkinType::parse("X2"), InvalidInput);
  EXPECT_THROW(DynkinType::parse("G3"), InvalidInput);
  EXPECT_THROW(GrassmannianId(DynkinType(Family::F, 4), 5), InvalidInput);
  EXPECT_EQ(GrassmannianId(DynkinType(Family::E, 7), 6).to_string(), "E7/P6");
}

TEST(RootData, CartanMatrixBourbakiLabels) {
  // B3: node 3 short; C3: node 3 long; G2: node 1 short.
  auto b3 = cartan_matrix(DynkinType(Family::B, 3));
  EXPECT_EQ(b3[1][2], -1);
  EXPECT_EQ(b3[2][1], -2);
  auto c3 = cartan_matrix(DynkinType(Family::C, 3));
  EXPECT_EQ(c3[1][2], -2);
  EXPECT_EQ(c3[2][1], -1);
  auto g2 = cartan_matrix(DynkinType(Family::G, 2));
  EXPECT_EQ(g2[0][1], -3);
  EXPECT_EQ(g2[1][0], -1);
  EXPECT_EQ(simple_root_lengths(DynkinType(Family::G, 2)), (std::vector<int>{2, 6}));
  EXPECT_EQ(simple_root_lengths(DynkinType(Family::F, 4)), (std::vector<int>{4, 4, 2, 2}));
  // E-series: node 2 attaches to node 4.
  auto e6 = cartan_matrix(DynkinType(Family::E, 6));
  EXPECT_EQ(e6[1][3], -1);
  EXPECT_EQ(e6[1][2], 0);
  EXPECT_EQ(e6[0][2], -1);
  for (const auto& t : all_types(7)) {
    auto c = cartan_matrix(t);
    for (int i = 0; i < t.rank; ++i) EXPECT_EQ(c[i][i], 2);
  }
}

TEST(RootData, RootCountsMatchDegreeTable) {
  for (const auto& t : all_types(8)) {
    auto deg = fundamental_degrees(t);
    int expected = 0;
    for (int d : deg) expected += d - 1;
    EXPECT_EQ(static_cast<int>(positive_roots(t).size()), expected) << t.to_string();
  }
}

TEST(RootData, HeightDualityReproducesDegreeTable) {
  for (const auto& t : all_types(8)) {
    std::vector<int> nodes(static_cast<std::size_t>(t.rank));
    std::iota(nodes.begin(), nodes.end(), 1);
    EXPECT_EQ(subsystem_degrees(t, nodes), fundamental_degrees(t)) << t.to_string();
  }
}

TEST(RootData, KnownFundamentalDegrees) {
  EXPECT_EQ(fundamental_degrees(DynkinType(Family::E, 8)), (std::vector<int>{2, 8, 12, 14, 18, 20, 24, 30}));
  EXPECT_EQ(fundamental_degrees(DynkinType(Family::F, 4)), (std::vector<int>{2, 6, 8, 12}));
  EXPECT_EQ(fundamental_degrees(DynkinType(Family::D, 4)), (std::vector<int>{2, 4, 4, 6}));
}

TEST(RootData, GrassmannianInvariantsTypeA) {
  for (int n = 2; n <= 9; ++n)
    for (int k = 1; k < n; ++k) {
      GrassmannianId g(DynkinType(Family::A, n - 1), k);
      EXPECT_EQ(dimension(g), k * (n - k));
      EXPECT_EQ(fano_index(g), n);
      EXPECT_EQ(poincare_polynomial(g), gaussian_binomial(n, k));
    }
}

TEST(RootData, KnownHomogeneousSpaces) {
  // Odd and even quadrics, projective space, the Cayley plane, spinor varieties.
  for (int n = 2; n <= 7; ++n) {
    GrassmannianId q(DynkinType(Family::B, n), 1);
    EXPECT_EQ(dimension(q), 2 * n - 1);
    EXPECT_EQ(fano_index(q), 2 * n - 1);
    EXPECT_EQ(poincare_polynomial(q), UniPoly::from_ints(std::vector<std::int64_t>(2 * n, 1)));
    GrassmannianId p(DynkinType(Family::C, n < 3 ? 3 : n), 1);
    const int m = 2 * (n < 3 ? 3 : n) - 1;
    EXPECT_EQ(dimension(p), m);
    EXPECT_EQ(fano_index(p), m + 1);
  }
  for (int n = 4; n <= 7; ++n) {
    GrassmannianId q(DynkinType(Family::D, n), 1);
    std::vector<std::int64_t> b(2 * n - 1, 1);
    b[n - 1] = 2;
    EXPECT_EQ(poincare_polynomial(q), UniPoly::from_ints(b));
    EXPECT_EQ(fano_index(q), 2 * n - 2);
    GrassmannianId s(DynkinType(Family::D, n), n);
    EXPECT_EQ(dimension(s), n * (n - 1) / 2);
    EXPECT_EQ(fano_index(s), 2 * n - 2);
  }
  GrassmannianId cayley(DynkinType(Family::E, 6), 1);
  EXPECT_EQ(dimension(cayley), 16);
  EXPECT_EQ(fano_index(cayley), 12);
  GrassmannianId freud(DynkinType(Family::E, 7), 7);
  EXPECT_EQ(dimension(freud), 27);
  EXPECT_EQ(fano_index(freud), 18);
  EXPECT_EQ(fano_index(GrassmannianId(DynkinType(Family::G, 2), 1)), 5);
  EXPECT_EQ(fano_index(GrassmannianId(DynkinType(Family::G, 2), 2)), 3);
}

TEST(RootData, PoincarePolynomialsAreConsistent) {
  for (const auto& t : all_types(7))
    for (int k = 1; k <= t.rank; ++k) {
      GrassmannianId g(t, k);
      UniPoly p = poincare_polynomial(g);
      EXPECT_EQ(p.degree(), dimension(g)) << g.to_string();
      EXPECT_TRUE(p.is_palindromic()) << g.to_string();
      EXPECT_TRUE(p.has_integer_coeffs());
      EXPECT_EQ(p.coeff(1), 1);
      // Euler characteristic |W| / |W_P|.
      std::vector<int> levi;
      for (int i = 1; i <= t.rank; ++i)
        if (i != k) levi.push_back(i);
      EXPECT_EQ(p.evaluate(1), Rational(static_cast<long>(weyl_order(fundamental_degrees(t)) /
                                                           weyl_order(subsystem_degrees(t, levi)))))
          << g.to_string();
    }
}
