#include "siegel/numtheory.hpp"

#include <algorithm>

#include "siegel/error.hpp"

namespace siegel {

bool is_prime(const mpz_class& n) {
    if (n < 2)
        return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

std::vector<std::pair<int64_t, int>> factorize(int64_t m) {
    if (m <= 0)
        throw Error("InvalidArgument", "factorization requires a positive argument");
    std::vector<std::pair<int64_t, int>> out;
    for (int64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (m > 1)
        out.emplace_back(m, 1);
    return out;
}

} // namespace

int64_t euler_phi(int64_t m) {
    int64_t r = 1;
    for (auto [p, e] : factorize(m)) {
        r *= p - 1;
        for (int i = 1; i < e; ++i)
            r *= p;
    }
    return r;
}

std::vector<int64_t> divisors(int64_t m) {
    std::vector<int64_t> out{1};
    for (auto [p, e] : factorize(m)) {
        size_t n = out.size();
        int64_t q = 1;
        for (int i = 0; i < e; ++i) {
            q *= p;
            for (size_t j = 0; j < n; ++j)
                out.push_back(out[j] * q);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int64_t mobius(int64_t m) {
    int64_t r = 1;
    for (auto [p, e] : factorize(m)) {
        (void)p;
        if (e > 1)
            return 0;
        r = -r;
    }
    return r;
}

int64_t multiplicative_order(const mpz_class& a, int64_t m) {
    if (m <= 0)
        throw Error("InvalidArgument", "order requires a positive modulus");
    if (m == 1)
        return 1;
    mpz_class mm(static_cast<long>(m));
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), mm.get_mpz_t());
    if (g != 1)
        throw Error("InvalidArgument", "order requires an argument coprime to the modulus");
    mpz_class x = a % mm;
    if (x < 0)
        x += mm;
    mpz_class t = x;
    int64_t k = 1;
    while (t != 1) {
        t = (t * x) % mm;
        ++k;
    }
    return k;
}

int64_t mod_nonneg(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

int64_t isqrt64(int64_t n) {
    if (n < 0)
        throw Error("InvalidArgument", "isqrt of a negative number");
    mpz_class z(static_cast<long>(n));
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
    return r.get_si();
}

} // namespace siegel
