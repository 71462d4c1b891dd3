#pragma once

#include <gmpxx.h>

namespace ciax {

// Exact arithmetic everywhere: degrees, counts and coefficients never
// overflow.
using Int = mpz_class;
using Rat = mpq_class;

Int factorial(unsigned long n);
Int binomial_coeff(unsigned long n, unsigned long k);

/// Stirling number of the second kind S(n, k).
Int stirling2(unsigned long n, unsigned long k);

}  // namespace ciax
