#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grassqh/exact_matrix.hpp"
#include "grassqh/multipoly.hpp"
#include "grassqh/partitions.hpp"
#include "grassqh/qh_grassmannian.hpp"
#include "grassqh/screen.hpp"
#include "grassqh/unipoly.hpp"

namespace grassqh {

/// Basis element of H*(Y): either the restriction j*σ_λ of an ambient
/// Schubert class, or the primitive middle class β.
struct SectionBasisElement {
  bool primitive = false;
  Partition lambda;  // empty for β
  int degree = 0;    // complex cohomological degree
  std::string to_string(int k) const;
};

/// Linear combination of q^d b_i over the section basis.
class SectionClass {
 public:
  const std::map<std::pair<std::size_t, int>, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(std::size_t index, int q_power, const Rational& c);
  SectionClass& operator+=(const SectionClass& o);
  SectionClass& operator-=(const SectionClass& o);
  SectionClass& operator*=(const Rational& c);
  friend SectionClass operator+(SectionClass a, const SectionClass& b) { return a += b; }
  friend SectionClass operator-(SectionClass a, const SectionClass& b) { return a -= b; }
  friend SectionClass operator*(SectionClass a, const Rational& c) { return a *= c; }
  bool operator==(const SectionClass&) const = default;
  SectionClass shifted(int shift) const;

 private:
  std::map<std::pair<std::size_t, int>, Rational> terms_;
};

/// Relation expressing an excluded j*σ_μ through the chosen ambient basis.
struct AmbientRelation {
  Partition lambda;
  std::vector<std::pair<Partition, Rational>> combination;
};

/// Quantum cohomology of a smooth hyperplane section Y of Gr(k,n) for
/// (k,n) in {(3,6), (3,7), (3,8)}, built from the section Pieri rule. The
/// ambient part is H*(X)/ker(∪σ_1); for (3,8) a primitive class β of
/// degree 7 is added with e_p ⋆ β = 0 and ⟨β, β⟩ = 1. Operators are at q = 1.
class SectionRing {
 public:
  SectionRing(int k, int n);

  static bool supported(int k, int n);

  int k() const { return box_.k; }
  int n() const { return box_.n; }
  const BoxConstraint& box() const { return box_; }
  int dimension() const { return box_.area() - 1; }  // complex dimension of Y
  int index() const { return box_.n - 1; }             // Fano index r_Y
  std::size_t dim() const { return basis_.size(); }
  const std::vector<SectionBasisElement>& basis() const { return basis_; }
  std::optional<std::size_t> primitive_index() const { return primitive_; }
  std::size_t index_of(const Partition& lambda) const;  // ambient basis members only
  std::size_t ambient_dim() const { return primitive_ ? dim() - 1 : dim(); }

  // Classes of H*(X) left out of the basis, with their expressions.
  const std::vector<AmbientRelation>& relations() const { return relations_; }

  /// j* of an ambient class, with q_X mapped to q_Y.
  SectionClass restrict(const ClassVector& a) const;
  RationalVector restrict_coords(const ClassVector& a) const;

  /// e_p ⋆ x by the section Pieri rule, 1 <= p <= k.
  SectionClass section_pieri(int p, const SectionClass& x) const;
  // The same rule applied to j*σ_μ for any μ in the box.
  SectionClass pieri_on_partition(int p, const Partition& mu) const;

  // Multiplication by e_p at q = 1.
  const ExactMatrix& e_operator(int p) const;

  /// Polynomial in (e_1, ..., e_k, q) whose ⋆-evaluation on 1 gives the
  /// ambient basis class at `index`.
  const MultiPoly& lift(std::size_t index) const;

  // Multiplication by a basis element or an arbitrary class (q = 1).
  // A class with a β-component has an undetermined operator (β ⋆ β).
  const ExactMatrix& basis_operator(std::size_t index) const;
  ExactMatrix mult_operator(const RationalVector& x) const;
  RationalVector product(const RationalVector& x, const RationalVector& y) const;

  // Evaluates a polynomial in (e_1, ..., e_k, q) on the operators at q = 1.
  ExactMatrix evaluate(const MultiPoly& p) const;

  // Basis indices grouped by degree mod r_Y.
  std::vector<std::vector<std::size_t>> graded_pieces() const;

  // (j*a, j*b)_Y = ∫_X a ∪ b ∪ σ_1, ⟨β, ambient⟩ = 0, ⟨β, β⟩ = 1.
  const ExactMatrix& pairing_matrix() const { return pairing_; }
  Rational pairing(const RationalVector& a, const RationalVector& b) const;
  // Coefficient of the point class.
  Rational integral(const RationalVector& a) const;

  RationalVector unit() const;
  RationalVector basis_vector(std::size_t i) const;

  /// Applies the section Pieri rule to every element of ker(∪σ_1) in every
  /// degree and checks that the result vanishes.
  bool well_defined() const;

  std::string describe(const RationalVector& x) const;

 private:
  BoxConstraint box_;
  std::vector<SectionBasisElement> basis_;
  std::optional<std::size_t> primitive_;
  std::map<Partition, std::size_t> index_;
  // Restriction of every σ_μ as a combination of ambient basis indices.
  std::map<Partition, std::vector<std::pair<std::size_t, Rational>>> restriction_;
  std::vector<AmbientRelation> relations_;
  std::vector<ExactMatrix> e_ops_;
  std::vector<MultiPoly> lifts_;
  std::vector<ExactMatrix> basis_ops_;
  ExactMatrix pairing_;
};

/// Characteristic polynomial on the residue-0 piece of e_1^power, times e_2
/// when `with_e2` is set.
UniPoly section_charpoly(const SectionRing& ring, int power, bool with_e2);

/// Tabulated explicit h_{n-1} and h_n in (e_1, e_2, e_3), n in {7, 8}.
std::pair<MultiPoly, MultiPoly> lefschetz_polynomials(int n);

/// h_{n-1} = 0 and h_n = q e_1 as operators on the section ring.
bool lefschetz_relation_check(const SectionRing& ring);

/// Radical (kernel of e_1^N) and the residue-0 vectors orthogonal to it.
RadicalData radical_and_perp(const SectionRing& ring);

// The class 2σ(5,5,4) - σ(3,2,2) + σ(3,3,1) + σ(4,2,1) - 2σ(4,3,0) - 3σ(5,1,1) + 2σ(5,2,0) in H*(Gr(3,8)).
ClassVector gamma_class();

struct PerpIsoReport {
  bool ambient_spans = false;  // powers of the generator span A^0(X)
  bool section_spans = false;  // powers of the generator span A^0_⊥(Y)
  UniPoly ambient_poly;        // generator on A^0(X)
  UniPoly section_poly;        // generator on A^0_⊥(Y)
  std::vector<Rational> ambient_expansion;  // α_X in powers of the generator
  std::vector<Rational> section_expansion;  // (α_Y)_⊥ in powers of the generator
  UniPoly ambient_alpha_poly;  // α_X on A^0(X)
  UniPoly section_alpha_poly;  // α_Y on the full A^0(Y)
  bool nonzero_spectra_agree = false;
  bool ok() const;
};

/// Compares A^0(X) with A^0_⊥(Y) through a cyclic generator: σ_1^7 vs
/// e_1^6 for n = 7, σ_1^6 ⋆ σ_{1²} vs e_1^5 ⋆ e_2 for n = 8. Here α_X = σ_1^n
/// and α_Y = e_1^{n-1}.
PerpIsoReport perp_iso_check(const SectionRing& ring);

struct SectionSemisimplicity {
  bool semisimple_part_checked = false;
  bool semisimple = false;        // verdict on the checked algebra
  std::size_t algebra_dim = 0;    // dimension of the algebra given to the trace-form test
  std::size_t radical_dim = 0;
  std::optional<ScreenVerdict> screen;  // (3,6)
  std::string note;
};

SectionSemisimplicity section_semisimplicity(int k, int n);

/// The 49-dimensional algebra A^0_⊥(Y)[e_1] for (3,8) (or the whole ring
/// for (3,7)) as a regular representation in the basis e_1^j a_i.
std::vector<ExactMatrix> perp_subalgebra(const SectionRing& ring);

}  // namespace grassqh
