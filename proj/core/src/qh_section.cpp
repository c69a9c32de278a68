#include "grassqh/qh_section.hpp"

#include <algorithm>
#include <sstream>

#include "grassqh/errors.hpp"
#include "grassqh/hodge.hpp"

namespace grassqh {

std::string SectionBasisElement::to_string(int k) const {
  return primitive ? std::string("beta") : "s" + lambda.to_string(k);
}

void SectionClass::add(std::size_t index, int q_power, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace({index, q_power}, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

SectionClass& SectionClass::operator+=(const SectionClass& o) {
  for (const auto& [key, c] : o.terms_) add(key.first, key.second, c);
  return *this;
}

SectionClass& SectionClass::operator-=(const SectionClass& o) {
  for (const auto& [key, c] : o.terms_) add(key.first, key.second, -c);
  return *this;
}

SectionClass& SectionClass::operator*=(const Rational& c) {
  if (sgn(c) == 0) terms_.clear();
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

SectionClass SectionClass::shifted(int shift) const {
  SectionClass out;
  for (const auto& [key, c] : terms_) out.add(key.first, key.second + shift, c);
  return out;
}

namespace {

// Coordinates of a q-free class in the basis of partitions of one size.
RationalVector coords_in(const ClassVector& v, const std::map<Partition, std::size_t>& index, std::size_t size) {
  RationalVector out(size);
  for (const auto& [key, c] : v.terms()) out[index.at(key.lambda)] += c;
  return out;
}

// Appends a q variable to a polynomial in k variables.
MultiPoly with_q(const MultiPoly& p) {
  MultiPoly out(p.nvars() + 1);
  for (const auto& [e, c] : p.terms()) {
    auto f = e;
    f.push_back(0);
    out.add_term(f, c);
  }
  return out;
}

}  // namespace

bool SectionRing::supported(int k, int n) { return k == 3 && n >= 6 && n <= 8; }

SectionRing::SectionRing(int k, int n) : box_(k, n) {
  if (!supported(k, n)) throw PreconditionViolation("section ring is available for (k,n) in {(3,6), (3,7), (3,8)}");
  const int top = box_.area();

  // Per degree, keep the lexicographically smallest classes whose images
  // under ∪σ_1 are independent; express the rest through them.
  std::vector<std::vector<Partition>> chosen(top + 1);
  std::vector<ExactMatrix> chosen_images(top + 1);
  for (int d = 0; d <= top; ++d) {
    auto parts = partitions_in_box(box_, d);
    std::reverse(parts.begin(), parts.end());
    auto targets = partitions_in_box(box_, d + 1);
    std::map<Partition, std::size_t> tindex;
    for (std::size_t i = 0; i < targets.size(); ++i) tindex.emplace(targets[i], i);
    std::vector<RationalVector> cols;
    std::size_t rank = 0;
    for (const auto& mu : parts) {
      if (targets.empty()) break;
      cols.push_back(coords_in(classical_pieri(1, mu, box_), tindex, targets.size()));
      std::size_t r = ExactMatrix::from_columns(targets.size(), cols).rank();
      if (r > rank) {
        rank = r;
        chosen[d].push_back(mu);
      } else {
        cols.pop_back();
      }
    }
    chosen_images[d] = ExactMatrix::from_columns(targets.size(), cols);
  }

  std::size_t ambient_total = 0;
  for (const auto& c : chosen) ambient_total += c.size();
  const std::int64_t expected = diamond(k, n).total();
  const std::int64_t primitive_count = expected - static_cast<std::int64_t>(ambient_total);
  if (primitive_count < 0 || primitive_count > 1 || (primitive_count == 1 && (top - 1) % 2 != 0))
    throw ConsistencyError("unexpected number of primitive classes");
  const int middle = (top - 1) / 2;

  for (int d = 0; d < top; ++d) {
    for (const auto& mu : chosen[d]) {
      index_.emplace(mu, basis_.size());
      basis_.push_back({false, mu, d});
    }
    if (primitive_count == 1 && d == middle) {
      primitive_ = basis_.size();
      basis_.push_back({true, Partition{}, d});
    }
  }

  for (int d = 0; d <= top; ++d) {
    auto targets = partitions_in_box(box_, d + 1);
    std::map<Partition, std::size_t> tindex;
    for (std::size_t i = 0; i < targets.size(); ++i) tindex.emplace(targets[i], i);
    auto parts = partitions_in_box(box_, d);
    std::reverse(parts.begin(), parts.end());
    for (const auto& mu : parts) {
      std::vector<std::pair<std::size_t, Rational>> comb;
      if (auto it = index_.find(mu); it != index_.end()) {
        comb.emplace_back(it->second, Rational{1});
      } else {
        AmbientRelation rel{mu, {}};
        if (!targets.empty() && !chosen[d].empty()) {
          auto x = chosen_images[d].solve(coords_in(classical_pieri(1, mu, box_), tindex, targets.size()));
          if (!x) throw ConsistencyError("ambient basis selection is not maximal");
          for (std::size_t i = 0; i < x->size(); ++i) {
            if (sgn((*x)[i]) == 0) continue;
            comb.emplace_back(index_.at(chosen[d][i]), (*x)[i]);
            rel.combination.emplace_back(chosen[d][i], (*x)[i]);
          }
        }
        relations_.push_back(std::move(rel));
      }
      restriction_.emplace(mu, std::move(comb));
    }
  }

  const std::size_t n_basis = basis_.size();
  for (int p = 1; p <= k; ++p) {
    ExactMatrix m(n_basis, n_basis);
    for (std::size_t c = 0; c < n_basis; ++c) {
      SectionClass x;
      x.add(c, 0, Rational{1});
      SectionClass image = section_pieri(p, x);
      for (const auto& [key, v] : image.terms()) m(key.first, c) += v;
    }
    e_ops_.push_back(std::move(m));
  }

  std::vector<ExactMatrix> gens = e_ops_;
  gens.push_back(ExactMatrix::identity(n_basis));
  CommutingEvaluator ev(gens);
  const RationalVector one = unit();
  lifts_.resize(n_basis, MultiPoly(static_cast<std::size_t>(k) + 1));
  for (std::size_t i = 0; i < n_basis; ++i) {
    if (basis_[i].primitive) continue;
    MultiPoly lift = with_q(giambelli_expr(basis_[i].lambda, box_));
    RationalVector residual = ev.apply(lift, one);
    residual[i] -= 1;
    for (std::size_t j = 0; j < n_basis; ++j) {
      if (sgn(residual[j]) == 0) continue;
      int gap = basis_[i].degree - basis_[j].degree;
      if (basis_[j].primitive || j >= i || gap <= 0 || gap % index() != 0)
        throw ConsistencyError("lifting produced a correction outside lower q-degrees");
      MultiPoly qpow = MultiPoly::constant(static_cast<std::size_t>(k) + 1, residual[j]);
      for (int t = 0; t < gap / index(); ++t)
        qpow = qpow * MultiPoly::variable(static_cast<std::size_t>(k) + 1, static_cast<std::size_t>(k));
      lift -= qpow * lifts_[j];
    }
    RationalVector check = ev.apply(lift, one);
    if (check != basis_vector(i)) throw ConsistencyError("lift does not reproduce its class");
    lifts_[i] = std::move(lift);
  }
  for (std::size_t i = 0; i < n_basis; ++i)
    basis_ops_.push_back(basis_[i].primitive ? ExactMatrix() : ev.evaluate(lifts_[i]));

  pairing_ = ExactMatrix(n_basis, n_basis);
  const int dim_y = dimension();
  for (std::size_t i = 0; i < n_basis; ++i) {
    for (std::size_t j = 0; j < n_basis; ++j) {
      if (basis_[i].primitive || basis_[j].primitive) {
        if (i == j) pairing_(i, j) = 1;
        continue;
      }
      if (basis_[i].degree + basis_[j].degree != dim_y) continue;
      pairing_(i, j) = classical_pieri(1, basis_[j].lambda, box_).coeff(dual_in_box(basis_[i].lambda, box_));
    }
  }
}

std::size_t SectionRing::index_of(const Partition& lambda) const {
  auto it = index_.find(lambda);
  if (it == index_.end()) throw InvalidInput("j*s" + lambda.to_string(box_.k) + " is not an ambient basis class");
  return it->second;
}

SectionClass SectionRing::restrict(const ClassVector& a) const {
  if (!(a.box() == box_)) throw InvalidInput("ClassVector box mismatch");
  SectionClass out;
  for (const auto& [key, c] : a.terms())
    for (const auto& [idx, v] : restriction_.at(key.lambda)) out.add(idx, key.q_power, c * v);
  return out;
}

RationalVector SectionRing::restrict_coords(const ClassVector& a) const {
  RationalVector v(dim());
  SectionClass r = restrict(a);
  for (const auto& [key, c] : r.terms()) v[key.first] += c;
  return v;
}

SectionClass SectionRing::pieri_on_partition(int p, const Partition& mu) const {
  SectionClass out = restrict(classical_pieri(p, mu, box_));
  ClassVector grown = classical_pieri(1, mu, box_);
  for (const auto& [key, c] : grown.terms())
    out += restrict(quantum_pieri(p, key.lambda, box_).q_part(1)).shifted(1) * c;
  return out;
}

SectionClass SectionRing::section_pieri(int p, const SectionClass& x) const {
  if (p < 1 || p > box_.k) throw InvalidInput("Pieri index p must lie in [1, k]");
  SectionClass out;
  for (const auto& [key, c] : x.terms()) {
    if (key.first >= dim()) throw InvalidInput("section basis index out of range");
    if (basis_[key.first].primitive) continue;
    out += pieri_on_partition(p, basis_[key.first].lambda).shifted(key.second) * c;
  }
  return out;
}

const ExactMatrix& SectionRing::e_operator(int p) const {
  if (p < 1 || p > box_.k) throw InvalidInput("Pieri index p must lie in [1, k]");
  return e_ops_[p - 1];
}

const MultiPoly& SectionRing::lift(std::size_t index) const {
  if (index >= dim() || basis_[index].primitive) throw InvalidInput("lift exists for ambient basis classes only");
  return lifts_[index];
}

const ExactMatrix& SectionRing::basis_operator(std::size_t index) const {
  if (index >= dim()) throw InvalidInput("section basis index out of range");
  if (basis_[index].primitive) throw UndeterminedBySource("multiplication by beta needs beta*beta, which the source leaves undetermined");
  return basis_ops_[index];
}

ExactMatrix SectionRing::mult_operator(const RationalVector& x) const {
  if (x.size() != dim()) throw InvalidInput("class vector length mismatch");
  ExactMatrix m(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (sgn(x[i]) != 0) m += basis_operator(i) * x[i];
  return m;
}

RationalVector SectionRing::product(const RationalVector& x, const RationalVector& y) const {
  if (primitive_ && sgn(x[*primitive_]) != 0) {
    if (sgn(y[*primitive_]) != 0)
      throw UndeterminedBySource("beta*beta is not determined by the source");
    return mult_operator(y) * x;
  }
  return mult_operator(x) * y;
}

ExactMatrix SectionRing::evaluate(const MultiPoly& p) const {
  std::vector<ExactMatrix> gens = e_ops_;
  gens.push_back(ExactMatrix::identity(dim()));
  if (p.nvars() == static_cast<std::size_t>(box_.k)) return CommutingEvaluator(e_ops_).evaluate(p);
  return CommutingEvaluator(gens).evaluate(p);
}

std::vector<std::vector<std::size_t>> SectionRing::graded_pieces() const {
  std::vector<std::vector<std::size_t>> pieces(index());
  for (std::size_t i = 0; i < dim(); ++i) pieces[basis_[i].degree % index()].push_back(i);
  return pieces;
}

Rational SectionRing::pairing(const RationalVector& a, const RationalVector& b) const {
  Rational s;
  RationalVector pb = pairing_ * b;
  for (std::size_t i = 0; i < dim(); ++i)
    if (sgn(a[i]) != 0) s += a[i] * pb[i];
  return s;
}

Rational SectionRing::integral(const RationalVector& a) const { return pairing(a, unit()); }

RationalVector SectionRing::unit() const { return basis_vector(index_of(Partition{})); }

RationalVector SectionRing::basis_vector(std::size_t i) const {
  RationalVector v(dim());
  v.at(i) = 1;
  return v;
}

bool SectionRing::well_defined() const {
  for (int d = 0; d <= box_.area(); ++d) {
    auto parts = partitions_in_box(box_, d);
    auto targets = partitions_in_box(box_, d + 1);
    std::map<Partition, std::size_t> tindex;
    for (std::size_t i = 0; i < targets.size(); ++i) tindex.emplace(targets[i], i);
    std::vector<RationalVector> cols;
    for (const auto& mu : parts) cols.push_back(coords_in(classical_pieri(1, mu, box_), tindex, targets.size()));
    std::vector<RationalVector> kernel;
    if (targets.empty()) {
      for (std::size_t i = 0; i < parts.size(); ++i) {
        RationalVector e(parts.size());
        e[i] = 1;
        kernel.push_back(e);
      }
    } else {
      kernel = ExactMatrix::from_columns(targets.size(), cols).kernel();
    }
    for (const auto& w : kernel) {
      SectionClass restricted;
      for (std::size_t i = 0; i < parts.size(); ++i)
        if (sgn(w[i]) != 0) restricted += restrict(ClassVector::basis(box_, parts[i])) * w[i];
      if (!restricted.is_zero()) return false;
      for (int p = 1; p <= box_.k; ++p) {
        SectionClass acc;
        for (std::size_t i = 0; i < parts.size(); ++i)
          if (sgn(w[i]) != 0) acc += pieri_on_partition(p, parts[i]) * w[i];
        if (!acc.is_zero()) return false;
      }
    }
  }
  return true;
}

std::string SectionRing::describe(const RationalVector& x) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    Rational mag = abs(x[i]);
    if (first) os << (sgn(x[i]) < 0 ? "-" : "");
    else os << (sgn(x[i]) < 0 ? " - " : " + ");
    first = false;
    if (mag != 1) os << mag.get_str() << "*";
    os << basis_[i].to_string(box_.k);
  }
  return first ? "0" : os.str();
}

UniPoly section_charpoly(const SectionRing& ring, int power, bool with_e2) {
  if (power < 0) throw InvalidInput("power must be nonnegative");
  ExactMatrix op = ring.e_operator(1).pow(static_cast<unsigned>(power));
  if (with_e2) op = op * ring.e_operator(2);
  return char_poly_on_piece(op, ring.graded_pieces()[0]);
}

std::pair<MultiPoly, MultiPoly> lefschetz_polynomials(int n) {
  using T = std::vector<std::pair<long, MultiPoly::Exponents>>;
  const T h6 = {{1, {6, 0, 0}}, {-5, {4, 1, 0}}, {6, {2, 2, 0}}, {4, {3, 0, 1}},
                {-1, {0, 3, 0}}, {-6, {1, 1, 1}}, {1, {0, 0, 2}}};
  const T h7 = {{1, {7, 0, 0}}, {-6, {5, 1, 0}}, {10, {3, 2, 0}}, {5, {4, 0, 1}},
                {-4, {1, 3, 0}}, {-12, {2, 1, 1}}, {3, {0, 2, 1}}, {3, {1, 0, 2}}};
  const T h8 = {{1, {8, 0, 0}}, {-7, {6, 1, 0}}, {15, {4, 2, 0}}, {6, {5, 0, 1}}, {-10, {2, 3, 0}},
                {-20, {3, 1, 1}}, {1, {0, 4, 0}}, {12, {1, 2, 1}}, {6, {2, 0, 2}}, {-3, {0, 1, 2}}};
  if (n == 7) return {MultiPoly::from_terms(3, h6), MultiPoly::from_terms(3, h7)};
  if (n == 8) return {MultiPoly::from_terms(3, h7), MultiPoly::from_terms(3, h8)};
  throw InvalidInput("Lefschetz polynomials are tabulated for n in {7, 8}");
}

bool lefschetz_relation_check(const SectionRing& ring) {
  if (ring.k() != 3) throw PreconditionViolation("Lefschetz check requires k = 3");
  auto [below, top] = lefschetz_polynomials(ring.n());
  if (!ring.evaluate(below).is_zero()) return false;
  return ring.evaluate(top) == ring.e_operator(1);
}

namespace {

RadicalData radical_in(const ExactMatrix& e1, const ExactMatrix& pairing, const std::vector<std::size_t>& piece) {
  RadicalData out;
  const std::size_t n = e1.rows();
  out.radical = e1.pow(static_cast<unsigned>(n)).kernel();
  ExactMatrix cons(out.radical.size(), piece.size());
  for (std::size_t a = 0; a < out.radical.size(); ++a) {
    RationalVector pr = pairing * out.radical[a];
    for (std::size_t j = 0; j < piece.size(); ++j) cons(a, j) = pr[piece[j]];
  }
  std::vector<RationalVector> sol;
  if (out.radical.empty()) {
    for (std::size_t j = 0; j < piece.size(); ++j) {
      RationalVector e(piece.size());
      e[j] = 1;
      sol.push_back(e);
    }
  } else {
    sol = cons.kernel();
  }
  for (const auto& s : sol) {
    RationalVector v(n);
    for (std::size_t j = 0; j < piece.size(); ++j) v[piece[j]] = s[j];
    out.perp.push_back(v);
  }
  return out;
}

// Coefficients c with sum c_i g^i u = target, i < count; nullopt if none.
std::optional<std::vector<Rational>> expand_in_powers(const ExactMatrix& g, const RationalVector& u,
                                                      const RationalVector& target, std::size_t count) {
  std::vector<RationalVector> cols;
  RationalVector v = u;
  for (std::size_t i = 0; i < count; ++i) {
    cols.push_back(v);
    v = g * v;
  }
  auto x = ExactMatrix::from_columns(u.size(), cols).solve(target);
  if (!x) return std::nullopt;
  return *x;
}

std::size_t power_span_rank(const ExactMatrix& g, const RationalVector& u, std::size_t count) {
  std::vector<RationalVector> cols;
  RationalVector v = u;
  for (std::size_t i = 0; i < count; ++i) {
    cols.push_back(v);
    v = g * v;
  }
  return ExactMatrix::from_columns(u.size(), cols).rank();
}

// Matrix of `op` on the span of `basis` (columns), or nullopt if not invariant.
std::optional<ExactMatrix> restrict_to_span(const ExactMatrix& op, const std::vector<RationalVector>& basis) {
  ExactMatrix b = ExactMatrix::from_columns(op.rows(), basis);
  auto r = b.solve(op * b);
  if (!r || b * *r != op * b) return std::nullopt;
  return r;
}

}  // namespace

RadicalData radical_and_perp(const SectionRing& ring) {
  return radical_in(ring.e_operator(1), ring.pairing_matrix(), ring.graded_pieces()[0]);
}

ClassVector gamma_class() {
  BoxConstraint box(3, 8);
  ClassVector g(box);
  g.add(Partition{5, 5, 4}, 0, Rational{2});
  g.add(Partition{3, 2, 2}, 0, Rational{-1});
  g.add(Partition{3, 3, 1}, 0, Rational{1});
  g.add(Partition{4, 2, 1}, 0, Rational{1});
  g.add(Partition{4, 3}, 0, Rational{-2});
  g.add(Partition{5, 1, 1}, 0, Rational{-3});
  g.add(Partition{5, 2}, 0, Rational{2});
  return g;
}

bool PerpIsoReport::ok() const {
  return ambient_spans && section_spans && ambient_poly == section_poly && ambient_expansion == section_expansion &&
         nonzero_spectra_agree;
}

PerpIsoReport perp_iso_check(const SectionRing& ring) {
  const int n = ring.n();
  if (ring.k() != 3 || (n != 7 && n != 8)) throw PreconditionViolation("perp_iso_check requires (3,7) or (3,8)");
  PerpIsoReport rep;
  QuantumGrassmannian x(ring.box());
  const auto piece_x = x.graded_pieces()[0];
  const ExactMatrix& s1 = x.pieri_matrix(1);
  ExactMatrix alpha_x = s1.pow(static_cast<unsigned>(n));
  ExactMatrix gen_x = n == 7 ? alpha_x : s1.pow(6) * x.pieri_matrix(2);
  const ExactMatrix& e1 = ring.e_operator(1);
  ExactMatrix alpha_y = e1.pow(static_cast<unsigned>(n - 1));
  ExactMatrix gen_y = n == 7 ? alpha_y : e1.pow(5) * ring.e_operator(2);

  RationalVector ux(x.dim());
  ux[x.index_of(Partition{})] = 1;
  rep.ambient_spans = power_span_rank(gen_x, ux, piece_x.size()) == piece_x.size();
  rep.ambient_poly = char_poly_on_piece(gen_x, piece_x);
  rep.ambient_alpha_poly = char_poly_on_piece(alpha_x, piece_x);
  if (auto c = expand_in_powers(gen_x, ux, alpha_x * ux, piece_x.size())) rep.ambient_expansion = *c;

  RadicalData rd = radical_and_perp(ring);
  const std::size_t m = rd.perp.size();
  auto restricted = restrict_to_span(gen_y, rd.perp);
  if (restricted) rep.section_poly = restricted->char_poly();
  // The unit splits as (radical part) + (perp part); powers act on the latter.
  std::vector<RationalVector> all = rd.radical;
  all.insert(all.end(), rd.perp.begin(), rd.perp.end());
  RationalVector u_perp(ring.dim());
  if (auto coeffs = ExactMatrix::from_columns(ring.dim(), all).solve(ring.unit())) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t r = 0; r < ring.dim(); ++r) u_perp[r] += (*coeffs)[rd.radical.size() + i] * rd.perp[i][r];
  }
  rep.section_spans = m == piece_x.size() && power_span_rank(gen_y, u_perp, m) == m;
  if (auto c = expand_in_powers(gen_y, u_perp, alpha_y * u_perp, m)) rep.section_expansion = *c;
  rep.section_alpha_poly = section_charpoly(ring, n - 1, false);
  const UniPoly& a = rep.ambient_alpha_poly;
  const UniPoly& b = rep.section_alpha_poly;
  rep.nonzero_spectra_agree = a.shift_down(a.x_adic_valuation()) == b.shift_down(b.x_adic_valuation());
  return rep;
}

std::vector<ExactMatrix> perp_subalgebra(const SectionRing& ring) {
  RadicalData rd = radical_and_perp(ring);
  const ExactMatrix& e1 = ring.e_operator(1);
  std::vector<RationalVector> basis;
  std::vector<ExactMatrix> ops;
  for (const auto& a : rd.perp) {
    ExactMatrix op = ring.mult_operator(a);
    RationalVector v = a;
    for (int j = 0; j < ring.index(); ++j) {
      basis.push_back(v);
      ops.push_back(op);
      v = e1 * v;
      op = e1 * op;
    }
  }
  ExactMatrix b = ExactMatrix::from_columns(ring.dim(), basis);
  if (b.rank() != basis.size()) throw ConsistencyError("e_1-powers of the perp piece are dependent");
  // Left inverse through a maximal set of independent rows.
  std::vector<std::size_t> all_cols(basis.size());
  for (std::size_t i = 0; i < all_cols.size(); ++i) all_cols[i] = i;
  ExactMatrix bt = b.transpose();
  auto rows = row_reduce(bt);
  auto inv = b.submatrix(rows, all_cols).inverse();
  if (!inv) throw ConsistencyError("row selection is singular");
  std::vector<ExactMatrix> out;
  for (const auto& op : ops) {
    ExactMatrix image = op * b;
    ExactMatrix r = *inv * image.submatrix(rows, all_cols);
    if (b * r != image) throw ConsistencyError("perp algebra is not closed under multiplication");
    out.push_back(std::move(r));
  }
  return out;
}

SectionSemisimplicity section_semisimplicity(int k, int n) {
  SectionSemisimplicity rep;
  if (k == 3 && n == 6) {
    rep.screen = screen(section_profile(3, 6));
    rep.semisimple = false;
    rep.note = "index-periodic Betti numbers obstruct semisimplicity";
    return rep;
  }
  SectionRing ring(k, n);
  RadicalData rd = radical_and_perp(ring);
  rep.radical_dim = rd.radical.size();
  std::vector<ExactMatrix> ops;
  if (rd.radical.empty()) {
    for (std::size_t i = 0; i < ring.dim(); ++i) ops.push_back(ring.basis_operator(i));
    rep.note = "trace form on the whole ring";
  } else {
    ops = perp_subalgebra(ring);
    rep.note = "trace form on A^0_perp[e_1]; semisimplicity of the radical part rests on a monodromy argument and is not computed";
  }
  rep.algebra_dim = ops.size();
  rep.semisimple_part_checked = true;
  rep.semisimple = semisimple_test(ops);
  return rep;
}

}  // namespace grassqh
