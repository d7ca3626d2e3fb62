#include "siegel/residue.hpp"

#include <map>
#include <utility>

#include "siegel/error.hpp"
#include "siegel/numtheory.hpp"

namespace siegel {

namespace {

// advance a coefficient vector to its lexicographic successor over [0, p)^d;
// index 0 is the most significant position
bool next_candidate(ZPoly& c, const Integer& p) {
    for (size_t i = c.size(); i-- > 0;) {
        c[i] += 1;
        if (c[i] < p)
            return true;
        c[i] = 0;
    }
    return false;
}

ZPoly factor_uncached(int64_t order, const Integer& p) {
    if (!is_prime(p))
        throw Error("InvalidPrime", "residue fields require a prime, got " + p.get_str());
    if (order <= 0)
        throw Error("InvalidArgument", "cyclotomic order must be positive");
    Integer g;
    Integer m(static_cast<long>(order));
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), m.get_mpz_t());
    if (g != 1)
        throw Error("RamifiedPrime",
                    p.get_str() + " divides the cyclotomic order " + std::to_string(order));

    ZPoly phi = fppoly::normalize(cyclotomic_polynomial(order), p);
    int64_t d = multiplicative_order(p, order);
    if (d == euler_phi(order))
        return phi;

    // lexicographic scan over monic candidates of degree d: lower tuples are
    // tested first, and every irreducible factor has degree exactly d, so the
    // first divisor found is both lex-least and irreducible (a reducible
    // divisor would contain a smaller-degree factor of phi, which cannot
    // exist)
    ZPoly low(static_cast<size_t>(d), mpz_class(0));
    do {
        ZPoly cand = low;
        cand.push_back(1);
        if (fppoly::divides(cand, phi, p))
            return cand;
    } while (next_candidate(low, p));
    throw Error("InvalidArgument", "no factor found; inconsistent inputs");
}

} // namespace

ZPoly cyclotomic_factor_mod_p(int64_t order, const Integer& p) {
    static std::map<std::pair<int64_t, std::string>, ZPoly> cache;
    auto key = std::make_pair(order, p.get_str());
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, factor_uncached(order, p)).first;
    return it->second;
}

PrimeIdealResidue reduce_mod_ideal(const Cyclotomic& c, const Integer& p) {
    ZPoly f = cyclotomic_factor_mod_p(c.order(), p);
    ZPoly val;
    for (size_t i = 0; i < c.coeffs().size(); ++i) {
        const Rational& q = c.coeffs()[i];
        if (q == 0)
            continue;
        if (val.size() <= i)
            val.resize(i + 1, mpz_class(0));
        val[i] = reduce_rational_mod_p(q, p);
    }
    return {p, c.order(), f, fppoly::rem(val, f, p)};
}

PrimeIdealResidue residue_add(const PrimeIdealResidue& a, const PrimeIdealResidue& b) {
    if (a.p != b.p || a.order != b.order || a.modulus != b.modulus)
        throw Error("ScalarRingMismatch", "residues live in different fields");
    return {a.p, a.order, a.modulus, fppoly::add(a.value, b.value, a.p)};
}

PrimeIdealResidue residue_mul(const PrimeIdealResidue& a, const PrimeIdealResidue& b) {
    if (a.p != b.p || a.order != b.order || a.modulus != b.modulus)
        throw Error("ScalarRingMismatch", "residues live in different fields");
    return {a.p, a.order, a.modulus, fppoly::rem(fppoly::mul(a.value, b.value, a.p), a.modulus, a.p)};
}

} // namespace siegel
