#include "qboole/combinatorics.hpp"

#include <gmpxx.h>

#include <stdexcept>

namespace qboole {

BigRational factorial(unsigned n) {
  mpz_class z;
  mpz_fac_ui(z.get_mpz_t(), n);
  return BigRational(z);
}

BigRational binomial(unsigned n, unsigned k) {
  if (k > n) return BigRational::zero();
  mpz_class z;
  mpz_bin_uiui(z.get_mpz_t(), n, k);
  return BigRational(z);
}

BigRational gen_binomial(const BigRational& alpha, unsigned n) {
  BigRational p = BigRational::one();
  for (unsigned j = 0; j < n; ++j) p *= alpha - BigRational(static_cast<long>(j));
  return p / factorial(n);
}

BigRational multinomial(unsigned n, std::span<const unsigned> parts) {
  unsigned sum = 0;
  for (unsigned p : parts) sum += p;
  if (sum != n) throw std::invalid_argument("multinomial: parts do not sum to n");
  BigRational r = factorial(n);
  for (unsigned p : parts) r /= factorial(p);
  return r;
}

namespace {
void compositions_rec(unsigned remaining, unsigned slots, std::vector<unsigned>& acc,
                      const std::function<void(std::span<const unsigned>)>& visit) {
  if (slots == 1) {
    acc.push_back(remaining);
    visit(acc);
    acc.pop_back();
    return;
  }
  for (unsigned v = 0; v <= remaining; ++v) {
    acc.push_back(v);
    compositions_rec(remaining - v, slots - 1, acc, visit);
    acc.pop_back();
  }
}
}  // namespace

void for_each_composition(unsigned n, unsigned k,
                          const std::function<void(std::span<const unsigned>)>& visit) {
  if (k == 0) throw std::invalid_argument("for_each_composition: k must be positive");
  std::vector<unsigned> acc;
  acc.reserve(k);
  compositions_rec(n, k, acc, visit);
}

}  // namespace qboole
