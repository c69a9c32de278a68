#include "grassqh/qh_grassmannian.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "grassqh/errors.hpp"

namespace grassqh {

ClassVector ClassVector::basis(BoxConstraint box, const Partition& lambda, int q_power) {
  ClassVector v(box);
  v.add(lambda, q_power, Rational{1});
  return v;
}

Rational ClassVector::coeff(const Partition& lambda, int q_power) const {
  auto it = terms_.find({lambda, q_power});
  return it == terms_.end() ? Rational{0} : it->second;
}

void ClassVector::add(const Partition& lambda, int q_power, const Rational& c) {
  if (!box_.fits(lambda)) throw InvalidInput("partition " + lambda.to_string() + " does not fit the box");
  if (q_power < 0) throw InvalidInput("negative q-power");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace({lambda, q_power}, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

ClassVector& ClassVector::operator+=(const ClassVector& o) {
  if (!(o.box_ == box_)) throw InvalidInput("ClassVector box mismatch");
  for (const auto& [key, c] : o.terms_) add(key.lambda, key.q_power, c);
  return *this;
}

ClassVector& ClassVector::operator-=(const ClassVector& o) {
  if (!(o.box_ == box_)) throw InvalidInput("ClassVector box mismatch");
  for (const auto& [key, c] : o.terms_) add(key.lambda, key.q_power, -c);
  return *this;
}

ClassVector& ClassVector::operator*=(const Rational& c) {
  if (sgn(c) == 0) terms_.clear();
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

ClassVector ClassVector::shifted(int shift) const {
  ClassVector out(box_);
  for (const auto& [key, c] : terms_) out.add(key.lambda, key.q_power + shift, c);
  return out;
}

ClassVector ClassVector::q_part(int q_power) const {
  ClassVector out(box_);
  for (const auto& [key, c] : terms_)
    if (key.q_power == q_power) out.add(key.lambda, 0, c);
  return out;
}

int ClassVector::max_q_power() const {
  int m = 0;
  for (const auto& [key, c] : terms_) m = std::max(m, key.q_power);
  return m;
}

std::optional<int> ClassVector::homogeneous_degree() const {
  std::optional<int> deg;
  for (const auto& [key, c] : terms_) {
    int d = key.lambda.size() + box_.n * key.q_power;
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg.value_or(0);
}

std::string ClassVector::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<ClassKey, Rational>> items(terms_.begin(), terms_.end());
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.first.q_power != b.first.q_power) return a.first.q_power < b.first.q_power;
    return a.first.lambda > b.first.lambda;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : items) {
    Rational mag = abs(c);
    if (first) os << (sgn(c) < 0 ? "-" : "");
    else os << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    if (mag != 1) os << mag.get_str() << "*";
    if (key.q_power == 1) os << "q*";
    if (key.q_power > 1) os << "q^" << key.q_power << "*";
    os << "s" << key.lambda.to_string(box_.k);
  }
  return os.str();
}

ClassVector classical_pieri(int p, const Partition& lambda, const BoxConstraint& box) {
  if (p < 1 || p > box.k) throw InvalidInput("Pieri index p must lie in [1, k]");
  if (!box.fits(lambda)) throw InvalidInput("partition " + lambda.to_string() + " does not fit the box");
  ClassVector out(box);
  std::vector<int> mu(box.k);
  for (int i = 0; i < box.k; ++i) mu[i] = lambda[static_cast<std::size_t>(i)];
  // Choose which rows receive a cell; no two cells share a row.
  std::function<void(int, int)> rec = [&](int row, int left) {
    if (row == box.k) {
      if (left == 0) out.add(Partition(mu), 0, Rational{1});
      return;
    }
    if (box.k - row < left) return;
    rec(row + 1, left);
    if (left > 0) {
      int grown = mu[row] + 1;
      bool ok = grown <= box.cols() && (row == 0 || grown <= mu[row - 1]);
      if (ok) {
        ++mu[row];
        rec(row + 1, left - 1);
        --mu[row];
      }
    }
  };
  rec(0, p);
  return out;
}

ClassVector quantum_pieri(int p, const Partition& lambda, const BoxConstraint& box) {
  ClassVector out = classical_pieri(p, lambda, box);
  const int m = box.cols();
  if (lambda[0] != m || m == 0) return out;
  const int target = lambda.size() + p - box.n;
  if (target < 0) return out;
  // ν̃ interlaces λ̃ - 1: λ̃_i - 1 >= ν̃_i >= λ̃_{i+1} - 1, last bound 0.
  const Partition lt = lambda.transpose();
  std::vector<int> nt(m);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == m) {
      if (left == 0) out.add(Partition(nt).transpose(), 1, Rational{1});
      return;
    }
    int hi = lt[static_cast<std::size_t>(i)] - 1;
    int lo = std::max(i + 1 < m ? lt[static_cast<std::size_t>(i + 1)] - 1 : 0, 0);
    for (int v = std::min(hi, left); v >= lo; --v) {
      nt[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, target);
  return out;
}

MultiPoly giambelli_expr(const Partition& lambda, const BoxConstraint& box) {
  if (!box.fits(lambda)) throw InvalidInput("partition " + lambda.to_string() + " does not fit the box");
  const std::size_t k = static_cast<std::size_t>(box.k);
  const Partition lt = lambda.transpose();
  const int size = lambda[0];
  auto entry = [&](int i, int j) {  // 0-based i, j
    int idx = lt[static_cast<std::size_t>(i)] - i + j;
    if (idx == 0) return MultiPoly::constant(k, Rational{1});
    if (idx < 0 || idx > box.k) return MultiPoly(k);
    return MultiPoly::variable(k, static_cast<std::size_t>(idx - 1));
  };
  std::map<unsigned, MultiPoly> memo;
  // Laplace expansion along the first remaining row; `cols` is the set of unused columns.
  std::function<MultiPoly(int, unsigned)> det = [&](int row, unsigned cols) -> MultiPoly {
    if (row == size) return MultiPoly::constant(k, Rational{1});
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    MultiPoly acc(k);
    int position = 0;
    for (int c = 0; c < size; ++c) {
      if (!(cols & (1u << c))) continue;
      MultiPoly e = entry(row, c);
      if (!e.is_zero()) {
        MultiPoly term = e * det(row + 1, cols & ~(1u << c));
        if (position % 2) acc -= term;
        else acc += term;
      }
      ++position;
    }
    memo.emplace(cols, acc);
    return acc;
  };
  return det(0, size == 0 ? 0u : ((1u << size) - 1));
}

MultiPoly complete_homogeneous(int m, int k) {
  if (k < 1) throw InvalidInput("complete_homogeneous requires k >= 1");
  if (m < 0) return MultiPoly(static_cast<std::size_t>(k));
  const std::size_t nv = static_cast<std::size_t>(k);
  std::vector<MultiPoly> h{MultiPoly::constant(nv, Rational{1})};
  for (int j = 1; j <= m; ++j) {
    MultiPoly acc(nv);
    for (int i = 1; i <= std::min(j, k); ++i) {
      MultiPoly term = MultiPoly::variable(nv, static_cast<std::size_t>(i - 1)) * h[j - i];
      if (i % 2) acc += term;
      else acc -= term;
    }
    h.push_back(acc);
  }
  return h[m];
}

QuantumGrassmannian::QuantumGrassmannian(BoxConstraint box, Rational q_value)
    : box_(box), q_(std::move(q_value)), basis_(partitions_in_box(box)) {
  if (box.k >= box.n) throw InvalidInput("quantum ring requires k < n");
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
  const std::size_t n = basis_.size();
  for (int p = 1; p <= box.k; ++p) {
    ExactMatrix m(n, n);
    for (std::size_t c = 0; c < n; ++c) {
      ClassVector image = quantum_pieri(p, basis_[c], box);
      for (const auto& [key, coeff] : image.terms()) {
        Rational v = coeff;
        for (int d = 0; d < key.q_power; ++d) v *= q_;
        m(index_.at(key.lambda), c) += v;
      }
    }
    pieri_.push_back(std::move(m));
  }
  CommutingEvaluator ev(pieri_);
  for (const auto& lam : basis_) ops_.push_back(ev.evaluate(giambelli_expr(lam, box)));
}

std::size_t QuantumGrassmannian::index_of(const Partition& lambda) const {
  auto it = index_.find(lambda);
  if (it == index_.end()) throw InvalidInput("partition " + lambda.to_string() + " does not fit the box");
  return it->second;
}

const ExactMatrix& QuantumGrassmannian::pieri_matrix(int p) const {
  if (p < 1 || p > box_.k) throw InvalidInput("Pieri index p must lie in [1, k]");
  return pieri_[p - 1];
}

const ExactMatrix& QuantumGrassmannian::schubert_operator(const Partition& lambda) const {
  return ops_[index_of(lambda)];
}

ExactMatrix QuantumGrassmannian::evaluate(const MultiPoly& p) const {
  CommutingEvaluator ev(pieri_);
  return ev.evaluate(p);
}

RationalVector QuantumGrassmannian::to_coords(const ClassVector& a) const {
  if (!(a.box() == box_)) throw InvalidInput("ClassVector box mismatch");
  RationalVector v(dim());
  for (const auto& [key, c] : a.terms()) {
    Rational x = c;
    for (int d = 0; d < key.q_power; ++d) x *= q_;
    v[index_of(key.lambda)] += x;
  }
  return v;
}

ExactMatrix QuantumGrassmannian::mult_operator(const ClassVector& a) const {
  if (!(a.box() == box_)) throw InvalidInput("ClassVector box mismatch");
  ExactMatrix m(dim(), dim());
  for (const auto& [key, c] : a.terms()) {
    Rational x = c;
    for (int d = 0; d < key.q_power; ++d) x *= q_;
    m += ops_[index_of(key.lambda)] * x;
  }
  return m;
}

ClassVector QuantumGrassmannian::product(const ClassVector& a, const ClassVector& b) const {
  if (!(a.box() == box_) || !(b.box() == box_)) throw InvalidInput("ClassVector box mismatch");
  ClassVector out(box_);
  for (const auto& [ka, ca] : a.terms()) {
    const ExactMatrix& op = ops_[index_of(ka.lambda)];
    for (const auto& [kb, cb] : b.terms()) {
      std::size_t col = index_of(kb.lambda);
      for (std::size_t r = 0; r < dim(); ++r) {
        const Rational& v = op(r, col);
        if (sgn(v) == 0) continue;
        int diff = ka.lambda.size() + kb.lambda.size() - basis_[r].size();
        if (diff < 0 || diff % box_.n != 0) throw ConsistencyError("quantum product is not homogeneous");
        int d = diff / box_.n;
        Rational x = ca * cb * v;
        for (int i = 0; i < d; ++i) x /= q_;
        out.add(basis_[r], ka.q_power + kb.q_power + d, x);
      }
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> QuantumGrassmannian::graded_pieces() const {
  std::vector<std::vector<std::size_t>> pieces(box_.n);
  for (std::size_t i = 0; i < dim(); ++i) pieces[basis_[i].size() % box_.n].push_back(i);
  return pieces;
}

Rational QuantumGrassmannian::pairing(const RationalVector& a, const RationalVector& b) const {
  Rational s;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(a[i]) == 0) continue;
    s += a[i] * b[index_of(dual_in_box(basis_[i], box_))];
  }
  return s;
}

ExactMatrix QuantumGrassmannian::pairing_matrix() const {
  ExactMatrix m(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) m(i, index_of(dual_in_box(basis_[i], box_))) = 1;
  return m;
}

bool QuantumGrassmannian::presentation_check() const {
  CommutingEvaluator ev(pieri_);
  const int n = box_.n, k = box_.k;
  for (int m = n - k + 1; m <= n - 1; ++m)
    if (!ev.evaluate(complete_homogeneous(m, k)).is_zero()) return false;
  ExactMatrix top = ev.evaluate(complete_homogeneous(n, k));
  top += ExactMatrix::identity(dim()) * (k % 2 ? -q_ : q_);
  return top.is_zero();
}

UniPoly char_poly_on_piece(const ExactMatrix& op, const std::vector<std::size_t>& piece) {
  if (!op.is_square()) throw InvalidInput("operator must be square");
  std::vector<bool> inside(op.rows(), false);
  for (auto i : piece) {
    if (i >= op.rows()) throw InvalidInput("piece index out of range");
    inside[i] = true;
  }
  for (auto c : piece)
    for (std::size_t r = 0; r < op.rows(); ++r)
      if (!inside[r] && sgn(op(r, c)) != 0) throw InvalidInput("piece is not invariant under the operator");
  return op.submatrix(piece, piece).char_poly();
}

RadicalData radical(const QuantumGrassmannian& ring) {
  RadicalData out;
  const std::size_t n = ring.dim();
  out.radical = ring.pieri_matrix(1).pow(static_cast<unsigned>(n)).kernel();
  const auto pieces = ring.graded_pieces();
  const auto& piece = pieces[0];
  ExactMatrix pm = ring.pairing_matrix();
  // Constraints: for each radical vector r, sum_i v_i <e_i, r> = 0 over i in the piece.
  ExactMatrix cons(out.radical.size(), piece.size());
  for (std::size_t a = 0; a < out.radical.size(); ++a) {
    RationalVector pr = pm * out.radical[a];
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

namespace {

// ops[i] applied to a sparse vector.
RationalVector apply_sparse(const ExactMatrix& m, const RationalVector& v) {
  RationalVector out(m.rows());
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (sgn(v[c]) == 0) continue;
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (sgn(m(r, c)) != 0) out[r] += m(r, c) * v[c];
  }
  return out;
}

}  // namespace

ExactMatrix trace_form(const std::vector<ExactMatrix>& ops) {
  const std::size_t n = ops.size();
  ExactMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Rational t;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          const Rational& x = ops[i](a, b);
          if (sgn(x) == 0) continue;
          const Rational& y = ops[j](b, a);
          if (sgn(y) != 0) t += x * y;
        }
      g(i, j) = t;
      g(j, i) = t;
    }
  }
  return g;
}

bool semisimple_test(const std::vector<ExactMatrix>& ops) {
  const std::size_t n = ops.size();
  for (const auto& m : ops)
    if (m.rows() != n || m.cols() != n) throw InvalidInput("regular representation must be n operators of size n");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (ops[i].column(j) != ops[j].column(i)) throw InvalidInput("multiplication is not commutative");
  // With commutativity, associativity reduces to e_i(e_j e_l) = e_j(e_i e_l) = e_l(e_i e_j).
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      RationalVector ij = ops[i].column(j);
      for (std::size_t l = j; l < n; ++l) {
        RationalVector a = apply_sparse(ops[i], ops[j].column(l));
        RationalVector b = apply_sparse(ops[j], ops[i].column(l));
        RationalVector c = apply_sparse(ops[l], ij);
        if (a != b || a != c) throw InvalidInput("multiplication is not associative");
      }
    }
  return sgn(trace_form(ops).determinant()) != 0;
}

}  // namespace grassqh
