#ifndef WORDREC_BIGCOUNT_HPP
#define WORDREC_BIGCOUNT_HPP

#include <cstdint>
#include <gmpxx.h>
#include <stdexcept>

namespace wordrec {

// Subword occurrence counts grow like C(n, n/2), so they need arbitrary precision.
using BigCount = mpz_class;

inline BigCount binomial(std::uint64_t n, std::uint64_t k) {
    BigCount out;
    if (k > n) return out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

inline std::uint64_t to_u64(const BigCount& v) {
    if (v < 0 || !v.fits_ulong_p()) throw std::overflow_error("BigCount does not fit in 64 bits");
    return mpz_get_ui(v.get_mpz_t());
}

}  // namespace wordrec

#endif
