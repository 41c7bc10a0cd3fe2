#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mipl {

using Rational = mpq_class;

std::string to_string(const Rational& q);

// n! as an exact integer.
mpz_class factorial(long n);

// binom(n, k), zero outside 0 <= k <= n.
mpz_class binomial(long n, long k);

} // namespace mipl
