#include "grassqh/multipoly.hpp"

#include <sstream>

#include "grassqh/errors.hpp"

namespace grassqh {

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t var) {
  if (var >= nvars) throw InvalidInput("MultiPoly::variable: index out of range");
  MultiPoly p(nvars);
  Exponents e(nvars, 0);
  e[var] = 1;
  p.add_term(e, Rational{1});
  return p;
}

MultiPoly MultiPoly::from_terms(std::size_t nvars, const std::vector<std::pair<long, Exponents>>& terms) {
  MultiPoly p(nvars);
  for (const auto& [c, e] : terms) p.add_term(e, Rational{c});
  return p;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != nvars_) throw InvalidInput("MultiPoly: exponent arity mismatch");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.nvars_ != nvars_) throw InvalidInput("MultiPoly: arity mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.nvars_ != nvars_) throw InvalidInput("MultiPoly: arity mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw InvalidInput("MultiPoly: arity mismatch");
  MultiPoly r(a.nvars_);
  MultiPoly::Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

int MultiPoly::homogeneous_degree(const std::vector<int>& weights) const {
  if (weights.size() != nvars_) throw InvalidInput("homogeneous_degree: weight arity mismatch");
  int degree = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (std::size_t i = 0; i < nvars_; ++i) d += weights[i] * e[i];
    if (degree == -1) degree = d;
    else if (degree != d) return -1;
  }
  return degree == -1 ? 0 : degree;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (names.size() != nvars_) throw InvalidInput("MultiPoly::to_string: name arity mismatch");
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest exponent vectors first reads closest to the usual convention.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = true;
    for (int x : e) constant = constant && x == 0;
    if (constant) {
      os << mag.get_str();
      continue;
    }
    bool need_star = false;
    if (mag != 1) {
      os << mag.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << names[i];
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

CommutingEvaluator::CommutingEvaluator(std::vector<ExactMatrix> generators) : gens_(std::move(generators)) {
  for (const auto& g : gens_) {
    if (!g.is_square() || g.rows() != gens_.front().rows())
      throw InvalidInput("CommutingEvaluator: generators must be square of equal size");
  }
}

const ExactMatrix& CommutingEvaluator::monomial(const MultiPoly::Exponents& e) {
  if (auto it = cache_.find(e); it != cache_.end()) return it->second;
  // Peel one factor off the first nonzero exponent and recurse.
  std::size_t var = 0;
  while (var < e.size() && e[var] == 0) ++var;
  ExactMatrix value;
  if (var == e.size()) {
    value = ExactMatrix::identity(dim());
  } else {
    MultiPoly::Exponents rest = e;
    --rest[var];
    value = gens_[var] * monomial(rest);
  }
  return cache_.emplace(e, std::move(value)).first->second;
}

ExactMatrix CommutingEvaluator::evaluate(const MultiPoly& p) {
  if (p.nvars() != gens_.size()) throw InvalidInput("CommutingEvaluator: arity mismatch");
  ExactMatrix acc(dim(), dim());
  for (const auto& [e, c] : p.terms()) acc += monomial(e) * c;
  return acc;
}

RationalVector CommutingEvaluator::apply(const MultiPoly& p, const RationalVector& v) const {
  if (p.nvars() != gens_.size()) throw InvalidInput("CommutingEvaluator: arity mismatch");
  RationalVector acc(v.size());
  for (const auto& [e, c] : p.terms()) {
    RationalVector w = v;
    for (std::size_t var = 0; var < e.size(); ++var)
      for (int k = 0; k < e[var]; ++k) w = gens_[var] * w;
    for (std::size_t i = 0; i < acc.size(); ++i)
      if (sgn(w[i]) != 0) acc[i] += c * w[i];
  }
  return acc;
}

}  // namespace grassqh
