#include "grassqh/rational.hpp"

#include <algorithm>

#include "grassqh/errors.hpp"

namespace grassqh {

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s{text};
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+') {
    throw InvalidInput("not a rational number: '" + s + "'");
  }
  if (num.front() == '+') num.erase(0, 1);
  Integer n{num}, d{den};
  if (d == 0) throw InvalidInput("zero denominator: '" + s + "'");
  Rational r{n, d};
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

std::int64_t to_int64(const Rational& r) {
  if (!is_integer(r) || !r.get_num().fits_slong_p()) {
    throw ConsistencyError("expected a machine integer, got " + r.get_str());
  }
  return r.get_num().get_si();
}

bool is_zero_vector(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

}  // namespace grassqh
