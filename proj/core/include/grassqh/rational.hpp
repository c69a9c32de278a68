#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace grassqh {

using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational r{Integer{static_cast<long>(num)}, Integer{static_cast<long>(den)}};
  r.canonicalize();
  return r;
}

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

// Accepts "p" or "p/q" with optional sign; throws InvalidInput.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& r);

// Throws ConsistencyError unless r is an integer fitting in int64.
std::int64_t to_int64(const Rational& r);

bool is_zero_vector(const RationalVector& v);

}  // namespace grassqh
