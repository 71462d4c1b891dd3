#include "ciax/numeric.hpp"

#include <vector>

namespace ciax {

Int factorial(unsigned long n) {
    Int out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Int binomial_coeff(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Int stirling2(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    if (n == 0) return k == 0 ? 1 : 0;
    if (k == 0) return 0;
    // S(n,k) = S(n-1,k-1) + k*S(n-1,k), one triangle row at a time.
    std::vector<Int> row(n + 1, 0);
    row[0] = 1;  // S(0,0)
    for (unsigned long m = 1; m <= n; ++m) {
        for (unsigned long t = m; t >= 1; --t) {
            row[t] = row[t - 1] + Int(static_cast<unsigned long>(t)) * row[t];
        }
        row[0] = 0;
    }
    return row[k];
}

}  // namespace ciax
