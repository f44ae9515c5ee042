#pragma once

#include <gmpxx.h>

namespace ehrgraph {

// All counting and coefficient arithmetic is exact. Int is an
// arbitrary-precision integer, Rat an arbitrary-precision rational.
using Int = mpz_class;
using Rat = mpq_class;

// C(n, k); zero for k < 0, k > n or n < 0.
Int binomial(long n, long k);

Int factorial(long n);

Int int_pow(long base, unsigned long exp);

} // namespace ehrgraph
