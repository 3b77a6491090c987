#ifndef QIDENT_BIGINT_HPP
#define QIDENT_BIGINT_HPP

#include <gmpxx.h>

#include <cmath>
#include <string>

namespace qident {

/* Every coefficient in this library is an exact signed integer (or an exact
 * integer polynomial, see poly_a.hpp).  Signed sums over lattice enumerations
 * have no usable a-priori bound, so fixed-width integers are out. */
using Bigint = mpz_class;

inline bool bigint_is_zero(const Bigint& x) { return mpz_sgn(x.get_mpz_t()) == 0; }

inline std::string to_decimal(const Bigint& x) { return x.get_str(); }

inline long long isqrt_ll(long long v)
{
    if (v < 0) return -1;
    auto r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

}  // namespace qident

#endif
