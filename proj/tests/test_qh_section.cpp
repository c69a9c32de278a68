#include <gtest/gtest.h>

#include "grassqh/errors.hpp"
#include "grassqh/qh_grassmannian.hpp"
#include "grassqh/qh_section.hpp"
#include "oracles.hpp"

using namespace grassqh;

namespace {

const SectionRing& ring(int n) {
  static const SectionRing r6(3, 6), r7(3, 7), r8(3, 8);
  return n == 6 ? r6 : n == 7 ? r7 : r8;
}

ClassVector schubert(int n, const Partition& lam) { return ClassVector::basis(BoxConstraint(3, n), lam); }

RationalVector ambient(const SectionRing& y, const Partition& lam) { return y.restrict_coords(schubert(y.n(), lam)); }

}  // namespace

TEST(SectionRing, DimensionsAndPrimitiveClasses) {
  EXPECT_EQ(ring(6).dim(), 18u);
  EXPECT_EQ(ring(7).dim(), 30u);
  EXPECT_EQ(ring(8).dim(), 51u);
  ASSERT_TRUE(ring(6).primitive_index().has_value());
  EXPECT_EQ(ring(6).basis()[*ring(6).primitive_index()].degree, 4);
  EXPECT_FALSE(ring(7).primitive_index().has_value());
  ASSERT_TRUE(ring(8).primitive_index().has_value());
  EXPECT_EQ(ring(8).basis()[*ring(8).primitive_index()].degree, 7);
  for (int n : {6, 7, 8}) {
    EXPECT_EQ(ring(n).index(), n - 1);
    EXPECT_EQ(ring(n).dimension(), 3 * (n - 3) - 1);
  }
  EXPECT_FALSE(SectionRing::supported(3, 9));
  EXPECT_THROW(SectionRing(3, 9), PreconditionViolation);
}

TEST(SectionRing, PieriRuleIsWellDefinedOnTheKernel) {
  for (int n : {6, 7, 8}) EXPECT_TRUE(ring(n).well_defined()) << n;
}

TEST(SectionRing, DisplayedRelationGr37) {
  const SectionRing& y = ring(7);
  RationalVector lhs = ambient(y, Partition({4, 2}));
  RationalVector rhs = ambient(y, Partition({4, 1, 1}));
  for (auto& c : rhs) c *= 2;
  const std::vector<std::pair<Partition, int>> rest{{Partition({3, 3}), 1}, {Partition({3, 2, 1}), -1}, {Partition({2, 2, 2}), 1}};
  for (const auto& [lam, c] : rest) {
    RationalVector v = ambient(y, lam);
    for (std::size_t i = 0; i < v.size(); ++i) rhs[i] += v[i] * c;
  }
  EXPECT_EQ(lhs, rhs);
}

TEST(SectionRing, QuantumTermOnSectionOfGr37) {
  const SectionRing& y = ring(7);
  SectionClass got = y.section_pieri(1, y.restrict(schubert(7, Partition({4, 4, 1}))));
  SectionClass want = y.restrict(schubert(7, Partition({4, 4, 2}))) + y.restrict(schubert(7, Partition({3, 1}))).shifted(1);
  EXPECT_EQ(got, want);
}

TEST(SectionRing, OperatorsCommuteAndRespectPairing) {
  for (int n : {6, 7, 8}) {
    const SectionRing& y = ring(n);
    const ExactMatrix& pm = y.pairing_matrix();
    EXPECT_EQ(pm, pm.transpose());
    for (int p = 1; p <= 3; ++p) {
      for (int r = p + 1; r <= 3; ++r) EXPECT_TRUE(y.e_operator(p).commutes_with(y.e_operator(r)));
      ExactMatrix s = pm * y.e_operator(p);
      EXPECT_EQ(s, s.transpose()) << n << " e" << p;
    }
    for (std::size_t i = 0; i < y.dim(); ++i) {
      if (y.basis()[i].primitive) continue;
      ExactMatrix s = pm * y.basis_operator(i);
      EXPECT_EQ(s, s.transpose()) << n << " " << y.basis()[i].to_string(3);
      EXPECT_TRUE(y.basis_operator(i).commutes_with(y.e_operator(1)));
    }
  }
}

TEST(SectionRing, OperatorsAreGraded) {
  for (int n : {6, 7, 8}) {
    const SectionRing& y = ring(n);
    const int r = y.index();
    for (int p = 1; p <= 3; ++p) {
      const ExactMatrix& e = y.e_operator(p);
      for (std::size_t c = 0; c < y.dim(); ++c)
        for (std::size_t row = 0; row < y.dim(); ++row)
          if (e(row, c) != 0) EXPECT_EQ((y.basis()[c].degree + p) % r, y.basis()[row].degree % r);
    }
  }
}

TEST(SectionRing, PrimitiveClassRules) {
  const SectionRing& y = ring(8);
  const std::size_t b = *y.primitive_index();
  RationalVector beta = y.basis_vector(b);
  EXPECT_EQ(y.pairing(beta, beta), 1);
  for (int p = 1; p <= 3; ++p) EXPECT_TRUE(is_zero_vector(y.e_operator(p) * beta));
  EXPECT_THROW(y.basis_operator(b), UndeterminedBySource);
  EXPECT_THROW(y.product(beta, beta), UndeterminedBySource);
  EXPECT_EQ(y.product(y.unit(), beta), beta);
}

TEST(SectionRing, GammaClass) {
  const SectionRing& y = ring(8);
  RationalVector g = y.restrict_coords(gamma_class());
  EXPECT_EQ(y.integral(g), 2);
  RationalVector gg = y.product(g, g);
  RationalVector three_g = g;
  for (auto& c : three_g) c *= 3;
  EXPECT_EQ(gg, three_g);
  EXPECT_EQ(y.integral(gg), 6);
  EXPECT_EQ(y.pairing(g, g), 6);
  EXPECT_EQ(y.mult_operator(g).trace(), 6);
}

TEST(SectionCharPoly, Gr37PowerSix) {
  EXPECT_EQ(section_charpoly(ring(7), 6, false), oracle::product({{128, -13, 1}, {1, -57, -289, 1}}));
}

TEST(SectionCharPoly, Gr38WithTheFactorXSquared) {
  UniPoly x2 = UniPoly::monomial(1, 2);
  UniPoly p8 = oracle::product({{1, -1}, {1, -1}, {1, -1}, {1, -1154, 1}, {6561, -34, 1}});
  UniPoly p62 = oracle::product({{1, -1}, {1, 478, -1}, {1, 0, 1}, {2187, 6, 1}});
  EXPECT_EQ(section_charpoly(ring(8), 7, false), x2 * p8);
  EXPECT_EQ(section_charpoly(ring(8), 5, true), x2 * p62);
  // Same polynomials on the ambient side.
  QuantumGrassmannian x(BoxConstraint(3, 8));
  const auto pieces = x.graded_pieces();
  EXPECT_EQ(char_poly_on_piece(x.pieri_matrix(1).pow(8), pieces[0]), p8);
}

TEST(SectionCharPoly, AgreesWithOracle) {
  const SectionRing& y = ring(7);
  const auto pieces = y.graded_pieces();
  ExactMatrix op = y.e_operator(1).pow(6);
  EXPECT_EQ(section_charpoly(y, 6, false), oracle::faddeev_leverrier(op.submatrix(pieces[0], pieces[0])));
}

TEST(Lefschetz, RelationsHold) {
  EXPECT_TRUE(lefschetz_relation_check(ring(7)));
  EXPECT_TRUE(lefschetz_relation_check(ring(8)));
  EXPECT_THROW(lefschetz_polynomials(9), InvalidInput);
}

TEST(Lefschetz, LiteralsAreCompleteHomogeneous) {
  for (int n : {7, 8}) {
    auto [below, top] = lefschetz_polynomials(n);
    EXPECT_EQ(below, complete_homogeneous(n - 1, 3));
    EXPECT_EQ(top, complete_homogeneous(n, 3));
  }
}

TEST(Radical, Gr37AndGr38) {
  EXPECT_TRUE(radical_and_perp(ring(7)).radical.empty());
  RadicalData r8 = radical_and_perp(ring(8));
  EXPECT_EQ(r8.radical.size(), 2u);
  EXPECT_EQ(r8.perp.size(), 7u);
}

TEST(PerpIso, MinimalPolynomialsAgree) {
  for (int n : {7, 8}) {
    PerpIsoReport rep = perp_iso_check(ring(n));
    EXPECT_TRUE(rep.ambient_spans) << n;
    EXPECT_TRUE(rep.section_spans) << n;
    EXPECT_EQ(rep.ambient_poly, rep.section_poly) << n;
    EXPECT_TRUE(rep.ok()) << n;
  }
  PerpIsoReport rep8 = perp_iso_check(ring(8));
  EXPECT_EQ(rep8.ambient_expansion, rep8.section_expansion);
}

TEST(SectionSemisimplicity, Verdicts) {
  SectionSemisimplicity s7 = section_semisimplicity(3, 7);
  EXPECT_TRUE(s7.semisimple_part_checked);
  EXPECT_TRUE(s7.semisimple);
  EXPECT_EQ(s7.algebra_dim, 30u);

  SectionSemisimplicity s8 = section_semisimplicity(3, 8);
  EXPECT_TRUE(s8.semisimple);
  EXPECT_EQ(s8.algebra_dim, 49u);
  EXPECT_EQ(s8.radical_dim, 2u);

  SectionSemisimplicity s6 = section_semisimplicity(3, 6);
  ASSERT_TRUE(s6.screen.has_value());
  EXPECT_TRUE(s6.screen->has_witness());
  EXPECT_FALSE(s6.semisimple);
}

TEST(SectionSemisimplicity, PerpSubalgebraIsCommutativeAndSemisimple) {
  auto ops = perp_subalgebra(ring(8));
  ASSERT_EQ(ops.size(), 49u);
  EXPECT_TRUE(semisimple_test(ops));
}
