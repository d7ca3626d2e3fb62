#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace siegel {

bool is_prime(const mpz_class& n);

int64_t euler_phi(int64_t m);

// divisors of m > 0 in increasing order
std::vector<int64_t> divisors(int64_t m);

int64_t mobius(int64_t m);

// multiplicative order of a modulo m; requires gcd(a, m) = 1
int64_t multiplicative_order(const mpz_class& a, int64_t m);

// representative of a mod m in [0, m), m > 0
int64_t mod_nonneg(int64_t a, int64_t m);

// floor(sqrt(n)) for n >= 0
int64_t isqrt64(int64_t n);

} // namespace siegel
