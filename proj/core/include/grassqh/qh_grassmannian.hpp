#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grassqh/exact_matrix.hpp"
#include "grassqh/multipoly.hpp"
#include "grassqh/partitions.hpp"
#include "grassqh/rational.hpp"
#include "grassqh/unipoly.hpp"

namespace grassqh {

struct ClassKey {
  Partition lambda;
  int q_power = 0;
  auto operator<=>(const ClassKey&) const = default;
};

/// Exact linear combination of q^d σ_λ over a fixed box.
class ClassVector {
 public:
  explicit ClassVector(BoxConstraint box) : box_(box) {}
  static ClassVector basis(BoxConstraint box, const Partition& lambda, int q_power = 0);

  const BoxConstraint& box() const { return box_; }
  const std::map<ClassKey, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Partition& lambda, int q_power = 0) const;

  void add(const Partition& lambda, int q_power, const Rational& c);
  ClassVector& operator+=(const ClassVector& o);
  ClassVector& operator-=(const ClassVector& o);
  ClassVector& operator*=(const Rational& c);
  friend ClassVector operator+(ClassVector a, const ClassVector& b) { return a += b; }
  friend ClassVector operator-(ClassVector a, const ClassVector& b) { return a -= b; }
  friend ClassVector operator*(ClassVector a, const Rational& c) { return a *= c; }
  bool operator==(const ClassVector& o) const { return box_ == o.box_ && terms_ == o.terms_; }

  // Multiplies every term by q^shift.
  ClassVector shifted(int shift) const;
  // Terms with the given q-power, with the q-power reset to 0.
  ClassVector q_part(int q_power) const;
  int max_q_power() const;

  // |λ| + n d when all terms agree, nullopt otherwise (zero vector: 0).
  std::optional<int> homogeneous_degree() const;

  // e.g. "s(4,4,2) + q*s(3,1,0)"; partitions padded to k parts.
  std::string to_string() const;

 private:
  BoxConstraint box_;
  std::map<ClassKey, Rational> terms_;
};

/// σ_{1^p} ⋆ σ_λ in QH*(Gr(k,n)) by the quantum Pieri rule. 1 <= p <= k.
ClassVector quantum_pieri(int p, const Partition& lambda, const BoxConstraint& box);

/// Classical part of the same product (vertical strips only).
ClassVector classical_pieri(int p, const Partition& lambda, const BoxConstraint& box);

/// det(E_{λ̃_i - i + j}) as a polynomial in E_1..E_k (variable i-1 is E_i).
MultiPoly giambelli_expr(const Partition& lambda, const BoxConstraint& box);

/// The row class σ_m as a polynomial in E_1..E_k via
/// h_m = sum_{i=1}^{min(m,k)} (-1)^{i+1} E_i h_{m-i}, h_0 = 1.
MultiPoly complete_homogeneous(int m, int k);

/// QH*(Gr(k,n)) with q specialized to an exact rational. Basis: Schubert
/// classes in lexicographically decreasing order. All operators are built at
/// construction; the object is immutable afterwards.
class QuantumGrassmannian {
 public:
  explicit QuantumGrassmannian(BoxConstraint box, Rational q_value = 1);

  const BoxConstraint& box() const { return box_; }
  const Rational& q_value() const { return q_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Partition>& basis() const { return basis_; }
  std::size_t index_of(const Partition& lambda) const;

  // Matrix of multiplication by σ_{1^p}, 1 <= p <= k.
  const ExactMatrix& pieri_matrix(int p) const;
  // Matrix of multiplication by σ_λ, obtained from its Giambelli polynomial.
  const ExactMatrix& schubert_operator(const Partition& lambda) const;
  // The regular representation: schubert_operator of each basis class.
  const std::vector<ExactMatrix>& regular_representation() const { return ops_; }

  // Evaluates a polynomial in E_1..E_k on the Pieri matrices.
  ExactMatrix evaluate(const MultiPoly& p) const;

  // Coordinates of a ClassVector with q set to q_value.
  RationalVector to_coords(const ClassVector& a) const;
  ExactMatrix mult_operator(const ClassVector& a) const;

  /// a ⋆ b with q-powers recovered from degrees (deg q = n). With
  /// q_value = 0 this is the cup product.
  ClassVector product(const ClassVector& a, const ClassVector& b) const;

  // Basis indices grouped by |λ| mod n.
  std::vector<std::vector<std::size_t>> graded_pieces() const;

  // ⟨σ_λ, σ_μ⟩ = 1 iff μ is the box dual of λ; q is ignored.
  Rational pairing(const RationalVector& a, const RationalVector& b) const;
  ExactMatrix pairing_matrix() const;

  /// Checks σ_{n-k+1} = ... = σ_{n-1} = 0 and σ_n + (-1)^k q = 0 as operators.
  bool presentation_check() const;

 private:
  BoxConstraint box_;
  Rational q_;
  std::vector<Partition> basis_;
  std::map<Partition, std::size_t> index_;
  std::vector<ExactMatrix> pieri_;
  std::vector<ExactMatrix> ops_;
};

/// Characteristic polynomial of `op` restricted to the span of the given
/// basis indices. Throws InvalidInput if the span is not invariant.
UniPoly char_poly_on_piece(const ExactMatrix& op, const std::vector<std::size_t>& piece);

struct RadicalData {
  std::vector<RationalVector> radical;
  // Vectors in the residue-0 piece orthogonal to the radical.
  std::vector<RationalVector> perp;
};

/// Kernel of (σ_1 ⋆)^N and the orthogonal complement of it inside the
/// residue-0 piece.
RadicalData radical(const QuantumGrassmannian& ring);

/// Semisimplicity of a commutative algebra given its regular representation
/// (ops[i] is multiplication by the i-th basis element). Commutativity and
/// associativity of the multiplication table are checked (InvalidInput on
/// failure); the verdict is nondegeneracy of the trace form tr(L_i L_j).
bool semisimple_test(const std::vector<ExactMatrix>& ops);

// Gram matrix of the trace form tr(L_i L_j).
ExactMatrix trace_form(const std::vector<ExactMatrix>& ops);

}  // namespace grassqh
