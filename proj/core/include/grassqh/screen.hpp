#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grassqh/root_data.hpp"

namespace grassqh {

/// Even Betti numbers b_0, b_2, ..., b_{2 dim} and the Fano index.
struct BettiProfile {
  std::vector<std::int64_t> even_betti;
  int index = 1;
  std::string label;

  int dimension() const { return static_cast<int>(even_betti.size()) - 1; }
  std::int64_t euler_characteristic() const;
};

BettiProfile profile_of(const GrassmannianId& g);

// tilde_b(i) = sum of b_{2j} over j = i mod r, for i = 0..r-1.
std::vector<std::int64_t> periodic_betti(const BettiProfile& p);

struct ScreenWitness {
  int i;
  int d;
  std::int64_t lhs;  // tilde_b(i)
  std::int64_t rhs;  // tilde_b(d i)
  bool operator==(const ScreenWitness&) const = default;
};

struct ScreenVerdict {
  enum class Outcome { NoObstruction, Witness };
  Outcome outcome = Outcome::NoObstruction;
  std::optional<ScreenWitness> witness;

  bool has_witness() const { return outcome == Outcome::Witness; }
};

/// Searches d = 1..r (outer) and i = 0..r-1 (inner) for tilde_b(i) > tilde_b(d i).
/// A witness rules out generic semisimplicity of the even quantum ring.
ScreenVerdict screen(const BettiProfile& p);

// Smallest residue i with tilde_b(i) != tilde_b(-i), if any.
std::optional<int> asymmetric_residue(const BettiProfile& p);

/// Profiles of the symplectic Grassmannian SG(2,2n) and of its smooth
/// hyperplane section. Requires n >= 3.
std::pair<BettiProfile, BettiProfile> sg_betti(int n);

/// Even Betti profile of a smooth hyperplane section of Gr(k,n), read off
/// from its Hodge diamond; index n - 1.
BettiProfile section_profile(int k, int n);

struct ExceptionalRow {
  GrassmannianId id;
  int dim;
  int index;
  int i;  // displayed residue
  std::int64_t tilde_i;
  std::int64_t tilde_minus_i;
  ScreenVerdict verdict;
};

// The thirteen exceptional G/P_k whose screen finds an obstruction, with
// residue i = 4 for F4/P4 and 1 otherwise.
std::vector<ExceptionalRow> exceptional_table();

// The exceptional G/P_k where the screen gives no obstruction.
std::vector<GrassmannianId> exceptional_unscreened();

}  // namespace grassqh
