#ifndef CHEB3_BIGINT_HPP
#define CHEB3_BIGINT_HPP

#include <gmpxx.h>

namespace cheb3 {

// Exact integer coefficients.  Table-scale data fits in a machine word, but
// series expansion and multiply-back checks at higher caps do not, so all
// polynomial arithmetic runs on mpz from the start.
using Int = mpz_class;

inline bool divides(const Int& d, const Int& a) {
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

}  // namespace cheb3

#endif
