#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <map>

#include "grassqh/errors.hpp"
#include "grassqh/qh_grassmannian.hpp"
#include "oracles.hpp"

using namespace grassqh;

namespace {

std::vector<std::pair<int, int>> small_grassmannians() {
  std::vector<std::pair<int, int>> out;
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; k <= 3 && k < n; ++k) out.emplace_back(k, n);
  return out;
}

// λ plus a vertical p-strip in every way: add at most one box per row among
// the first `rows` rows and keep the weakly decreasing results.
std::vector<std::vector<int>> vertical_strips(const Partition& lambda, int p, int rows) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << rows); ++mask) {
    if (std::popcount(mask) != p) continue;
    std::vector<int> nu(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) nu[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + ((mask >> i) & 1u);
    if (std::is_sorted(nu.rbegin(), nu.rend())) out.push_back(nu);
  }
  return out;
}

// Quantum Pieri by the rim-hook rule: classical product with unbounded
// columns, then strip n-rim hooks through beta numbers.
ClassVector rim_hook_pieri(int p, const Partition& lambda, const BoxConstraint& box) {
  const int k = box.k, n = box.n;
  ClassVector out(box);
  for (auto nu : vertical_strips(lambda, p, k)) {
    std::vector<int> beta(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) beta[static_cast<std::size_t>(i)] = nu[static_cast<std::size_t>(i)] + k - 1 - i;
    int sign = 1, d = 0;
    bool dead = false;
    while (!dead && beta[0] - (k - 1) > n - k) {
      const int moved = beta[0] - n;
      if (moved < 0 || std::find(beta.begin(), beta.end(), moved) != beta.end()) {
        dead = true;
        break;
      }
      const int jumped = static_cast<int>(std::count_if(beta.begin(), beta.end(), [&](int b) { return b > moved && b < beta[0]; }));
      if ((k - 1 - jumped) % 2) sign = -sign;
      beta[0] = moved;
      std::sort(beta.rbegin(), beta.rend());
      ++d;
    }
    if (dead) continue;
    std::vector<int> parts(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) parts[static_cast<std::size_t>(i)] = beta[static_cast<std::size_t>(i)] - (k - 1 - i);
    out.add(Partition(parts), d, Rational(sign));
  }
  return out;
}

RationalVector unit_vector(std::size_t dim, std::size_t i) {
  RationalVector v(dim);
  v[i] = 1;
  return v;
}

}  // namespace

TEST(Pieri, ClassicalMatchesVerticalStrips) {
  for (auto [k, n] : small_grassmannians()) {
    BoxConstraint box(k, n);
    for (const auto& lam : partitions_in_box(box))
      for (int p = 1; p <= k; ++p) {
        ClassVector want(box);
        for (auto nu : vertical_strips(lam, p, k))
          if (nu[0] <= n - k) want.add(Partition(nu), 0, 1);
        EXPECT_EQ(classical_pieri(p, lam, box), want) << lam.to_string() << " p=" << p;
      }
  }
}

TEST(Pieri, QuantumMatchesRimHookRule) {
  for (auto [k, n] : small_grassmannians()) {
    BoxConstraint box(k, n);
    for (const auto& lam : partitions_in_box(box))
      for (int p = 1; p <= k; ++p)
        EXPECT_EQ(quantum_pieri(p, lam, box), rim_hook_pieri(p, lam, box))
            << k << "," << n << " " << lam.to_string() << " p=" << p;
  }
}

TEST(Pieri, KnownProducts) {
  BoxConstraint box(3, 7);
  ClassVector a = quantum_pieri(1, Partition({4, 4, 1}), box);
  EXPECT_EQ(a.to_string(), "s(4,4,2) + q*s(3,0,0)");
  ClassVector b = quantum_pieri(1, Partition({4, 4, 2}), box);
  EXPECT_EQ(b.coeff(Partition({3, 1}), 1), 1);
  EXPECT_EQ(b.homogeneous_degree(), 11);
  // σ_1 times the point class on Gr(2,4) is q σ_1.
  EXPECT_EQ(quantum_pieri(1, Partition({2, 2}), BoxConstraint(2, 4)).to_string(), "q*s(1,0)");
  EXPECT_THROW(quantum_pieri(4, Partition({}), box), InvalidInput);
  EXPECT_THROW(quantum_pieri(1, Partition({5}), box), InvalidInput);
}

TEST(Giambelli, CompleteHomogeneousFromElementary) {
  // Evaluate at concrete variables x = (2, -3, 5, 1/2) and compare with a
  // direct sum over monomials.
  const std::vector<Rational> x{2, -3, 5, make_rational(1, 2)};
  for (int k = 1; k <= 4; ++k) {
    std::vector<Rational> e(static_cast<std::size_t>(k) + 1, 0);
    e[0] = 1;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j >= 1; --j) e[static_cast<std::size_t>(j)] += e[static_cast<std::size_t>(j - 1)] * x[static_cast<std::size_t>(i)];
    for (int m = 0; m <= 7; ++m) {
      // h_m by dynamic programming over variables.
      std::vector<Rational> h(static_cast<std::size_t>(m) + 1, 0);
      h[0] = 1;
      for (int i = 0; i < k; ++i)
        for (int d = 1; d <= m; ++d) h[static_cast<std::size_t>(d)] += h[static_cast<std::size_t>(d - 1)] * x[static_cast<std::size_t>(i)];
      MultiPoly poly = complete_homogeneous(m, k);
      Rational val = 0;
      for (const auto& [exps, c] : poly.terms()) {
        Rational t = c;
        for (int i = 0; i < k; ++i)
          for (int r = 0; r < exps[static_cast<std::size_t>(i)]; ++r) t *= e[static_cast<std::size_t>(i) + 1];
        val += t;
      }
      EXPECT_EQ(val, h[static_cast<std::size_t>(m)]) << "k=" << k << " m=" << m;
    }
  }
}

TEST(QuantumRing, PresentationHolds) {
  for (auto [k, n] : small_grassmannians()) {
    QuantumGrassmannian ring(BoxConstraint(k, n));
    EXPECT_TRUE(ring.presentation_check()) << k << "," << n;
  }
}

TEST(QuantumRing, GiambelliReturnsBareClass) {
  for (auto [k, n] : small_grassmannians()) {
    QuantumGrassmannian ring(BoxConstraint(k, n));
    RationalVector one = ring.to_coords(ClassVector::basis(ring.box(), Partition({})));
    for (std::size_t i = 0; i < ring.dim(); ++i)
      EXPECT_EQ(ring.evaluate(giambelli_expr(ring.basis()[i], ring.box())) * one, unit_vector(ring.dim(), i))
          << k << "," << n << " " << ring.basis()[i].to_string();
  }
}

TEST(QuantumRing, OperatorsCommute) {
  for (auto [k, n] : small_grassmannians()) {
    QuantumGrassmannian ring(BoxConstraint(k, n));
    for (int p = 1; p <= k; ++p)
      for (int r = p + 1; r <= k; ++r) EXPECT_TRUE(ring.pieri_matrix(p).commutes_with(ring.pieri_matrix(r)));
    const auto& ops = ring.regular_representation();
    for (std::size_t a = 0; a < ops.size(); ++a)
      for (std::size_t b = a + 1; b < ops.size(); ++b) ASSERT_TRUE(ops[a].commutes_with(ops[b])) << k << "," << n;
  }
}

TEST(QuantumRing, FrobeniusSymmetry) {
  for (auto [k, n] : small_grassmannians()) {
    QuantumGrassmannian ring(BoxConstraint(k, n));
    const ExactMatrix pm = ring.pairing_matrix();
    EXPECT_EQ(pm, pm.transpose());
    for (const auto& op : ring.regular_representation()) {
      ExactMatrix s = pm * op;
      EXPECT_EQ(s, s.transpose()) << k << "," << n;
    }
  }
}

TEST(QuantumRing, ProductsAreHomogeneous) {
  for (auto [k, n] : small_grassmannians()) {
    QuantumGrassmannian ring(BoxConstraint(k, n));
    for (const auto& a : ring.basis())
      for (const auto& b : ring.basis()) {
        ClassVector c = ring.product(ClassVector::basis(ring.box(), a), ClassVector::basis(ring.box(), b));
        auto deg = c.homogeneous_degree();
        ASSERT_TRUE(deg.has_value());
        if (!c.is_zero()) EXPECT_EQ(*deg, a.size() + b.size());
      }
  }
}

TEST(QuantumRing, CupProductAtQZero) {
  QuantumGrassmannian cup(BoxConstraint(2, 4), 0);
  ClassVector s1 = ClassVector::basis(cup.box(), Partition({1}));
  ClassVector pt = ClassVector::basis(cup.box(), Partition({2, 2}));
  EXPECT_TRUE(cup.product(s1, pt).is_zero());
  EXPECT_FALSE(semisimple_test(cup.regular_representation()));
}

TEST(QuantumRing, SemisimpleAtQOne) {
  for (auto [k, n] : small_grassmannians()) {
    QuantumGrassmannian ring(BoxConstraint(k, n));
    EXPECT_TRUE(semisimple_test(ring.regular_representation())) << k << "," << n;
  }
  QuantumGrassmannian ring(BoxConstraint(3, 7));
  EXPECT_TRUE(radical(ring).radical.empty());
}

TEST(QuantumRing, TraceFormDetectsNilpotents) {
  // C[x]/(x^2): regular representation in the basis 1, x.
  std::vector<ExactMatrix> ops{ExactMatrix::identity(2), ExactMatrix::from_ints({{0, 0}, {1, 0}})};
  EXPECT_FALSE(semisimple_test(ops));
  EXPECT_EQ(trace_form(ops), ExactMatrix::from_ints({{2, 0}, {0, 0}}));
  // C x C with idempotent basis.
  std::vector<ExactMatrix> split{ExactMatrix::from_ints({{1, 0}, {0, 0}}), ExactMatrix::from_ints({{0, 0}, {0, 1}})};
  EXPECT_TRUE(semisimple_test(split));
}

TEST(CharPoly, Gr37DegreeZeroPiece) {
  QuantumGrassmannian ring(BoxConstraint(3, 7));
  const auto pieces = ring.graded_pieces();
  std::vector<Partition> piece;
  for (auto i : pieces[0]) piece.push_back(ring.basis()[i]);
  std::sort(piece.begin(), piece.end());
  EXPECT_EQ(piece, (std::vector<Partition>{Partition({}), Partition({3, 2, 2}), Partition({3, 3, 1}),
                                           Partition({4, 2, 1}), Partition({4, 3})}));
  ExactMatrix op = ring.pieri_matrix(1).pow(7);
  UniPoly got = char_poly_on_piece(op, pieces[0]);
  EXPECT_EQ(got, oracle::product({{128, -13, 1}, {1, -57, -289, 1}}));
  EXPECT_EQ(got, oracle::faddeev_leverrier(op.submatrix(pieces[0], pieces[0])));
  EXPECT_THROW(char_poly_on_piece(ring.pieri_matrix(1), pieces[0]), InvalidInput);
}

TEST(CharPoly, Gr38DegreeZeroPiece) {
  QuantumGrassmannian ring(BoxConstraint(3, 8));
  const auto pieces = ring.graded_pieces();
  const ExactMatrix s1 = ring.pieri_matrix(1);
  EXPECT_EQ(char_poly_on_piece(s1.pow(8), pieces[0]),
            oracle::product({{1, -1}, {1, -1}, {1, -1}, {1, -1154, 1}, {6561, -34, 1}}));
  EXPECT_EQ(char_poly_on_piece(s1.pow(6) * ring.pieri_matrix(2), pieces[0]),
            oracle::product({{1, -1}, {1, 478, -1}, {1, 0, 1}, {2187, 6, 1}}));
}
