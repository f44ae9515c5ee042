#include "ehrgraph/numbers.hpp"

namespace ehrgraph {

Int binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n)
        return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Int factorial(long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
    return r;
}

Int int_pow(long base, unsigned long exp) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), exp);
    if (base < 0 && exp % 2 == 1)
        r = -r;
    return r;
}

} // namespace ehrgraph
