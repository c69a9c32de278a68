#pragma once

#include <string>
#include <vector>

#include "grassqh/unipoly.hpp"

namespace grassqh {

enum class Family { A, B, C, D, E, F, G };

/// Irreducible Dynkin type. Nodes are numbered 1..rank with Bourbaki labels
/// (see docs/conventions.md).
struct DynkinType {
  Family family;
  int rank;

  // Throws InvalidInput for impossible family/rank combinations.
  DynkinType(Family f, int r);
  // "E7", "A4", "c3" ...
  static DynkinType parse(const std::string& text);

  std::string to_string() const;
  bool operator==(const DynkinType&) const = default;
};

/// G/P_k for the maximal parabolic omitting simple root k.
struct GrassmannianId {
  DynkinType type;
  int node;

  GrassmannianId(DynkinType t, int k);
  // "E7/P6"
  std::string to_string() const;
};

using RootVector = std::vector<int>;  // coordinates in the simple-root basis

// Squared lengths of the simple roots, short roots normalized to 2.
std::vector<int> simple_root_lengths(const DynkinType& t);
// Symmetric matrix of (α_i, α_j) under the invariant form.
std::vector<std::vector<int>> invariant_form(const DynkinType& t);
// a_ij = <α_i^∨, α_j> = 2(α_i, α_j)/(α_i, α_i).
std::vector<std::vector<int>> cartan_matrix(const DynkinType& t);

// Positive roots ordered by height, then lexicographically decreasing.
std::vector<RootVector> positive_roots(const DynkinType& t);

// Degrees of the basic invariants, ascending, from the classical tables.
std::vector<int> fundamental_degrees(const DynkinType& t);
// Degrees of the basic invariants of the root subsystem spanned by the simple
// roots in `nodes` (1-based), computed from root heights. Works for any
// subset, connected or not.
std::vector<int> subsystem_degrees(const DynkinType& t, const std::vector<int>& nodes);
// Connected components of the diagram with `removed` deleted (1-based nodes).
std::vector<std::vector<int>> diagram_components_without(const DynkinType& t, int removed);

int dimension(const GrassmannianId& g);
int fano_index(const GrassmannianId& g);

// Coefficient of t^i is b_{2i}(G/P_k).
UniPoly poincare_polynomial(const GrassmannianId& g);

}  // namespace grassqh
