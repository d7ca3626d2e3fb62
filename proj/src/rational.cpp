#include "siegel/rational.hpp"

#include "siegel/error.hpp"
#include "siegel/numtheory.hpp"

namespace siegel {

Rational parse_rational(const std::string& s) {
    mpq_class q;
    if (s.empty() || mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw Error("ParseError", "not a rational number: '" + s + "'");
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
        throw Error("ParseError", "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string rational_str(const Rational& q) {
    return q.get_str();
}

bool is_p_integral(const Rational& q, const Integer& p) {
    if (!is_prime(p))
        throw Error("InvalidPrime", "p-integrality requires a prime, got " + p.get_str());
    return !mpz_divisible_p(q.get_den().get_mpz_t(), p.get_mpz_t());
}

Integer reduce_rational_mod_p(const Rational& q, const Integer& p) {
    if (!is_p_integral(q, p))
        throw Error("NotPIntegral",
                    "denominator of " + rational_str(q) + " is divisible by " + p.get_str());
    Integer dinv;
    if (!mpz_invert(dinv.get_mpz_t(), q.get_den().get_mpz_t(), p.get_mpz_t()))
        throw Error("NotPIntegral", "denominator not invertible mod " + p.get_str());
    Integer r = (q.get_num() % p) * dinv % p;
    if (r < 0)
        r += p;
    return r;
}

Integer floor_rational(const Rational& q) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return f;
}

} // namespace siegel
