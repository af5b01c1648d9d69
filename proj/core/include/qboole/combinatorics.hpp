#pragma once

#include <functional>
#include <span>
#include <vector>

#include "qboole/rational.hpp"

namespace qboole {

BigRational factorial(unsigned n);

/* Integer binomial coefficient C(n, k); 0 when k > n. */
BigRational binomial(unsigned n, unsigned k);

/* Generalized binomial coefficient for any rational upper argument:
 * C(alpha, n) = alpha(alpha-1)...(alpha-n+1)/n!. */
BigRational gen_binomial(const BigRational& alpha, unsigned n);

/* n!/(l_1! ... l_k!). The parts must sum to n. */
BigRational multinomial(unsigned n, std::span<const unsigned> parts);

/* Visits every k-tuple of naturals summing to n, in lexicographic order. */
void for_each_composition(unsigned n, unsigned k,
                          const std::function<void(std::span<const unsigned>)>& visit);

}  // namespace qboole
