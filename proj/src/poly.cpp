#include "siegel/poly.hpp"

#include "siegel/error.hpp"
#include "siegel/numtheory.hpp"

namespace siegel {

namespace zpoly {

ZPoly trim(ZPoly f) {
    while (!f.empty() && f.back() == 0)
        f.pop_back();
    return f;
}

int64_t degree(const ZPoly& f) {
    return static_cast<int64_t>(f.size()) - 1;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty())
        return {};
    ZPoly c(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    return trim(std::move(c));
}

void divmod_monic(const ZPoly& f, const ZPoly& g, ZPoly& quot, ZPoly& rem) {
    if (g.empty() || g.back() != 1)
        throw Error("InvalidArgument", "division requires a monic divisor");
    rem = f;
    quot.assign(f.size() >= g.size() ? f.size() - g.size() + 1 : 0, mpz_class(0));
    while (rem.size() >= g.size() && !rem.empty()) {
        size_t shift = rem.size() - g.size();
        mpz_class c = rem.back();
        quot[shift] = c;
        for (size_t i = 0; i < g.size(); ++i)
            rem[shift + i] -= c * g[i];
        rem = trim(std::move(rem));
        if (rem.size() > shift + g.size() - 1)
            throw Error("InvalidArgument", "division did not reduce");
    }
    quot = trim(std::move(quot));
}

} // namespace zpoly

ZPoly cyclotomic_polynomial(int64_t m) {
    if (m <= 0)
        throw Error("InvalidArgument", "cyclotomic polynomial requires a positive order");
    ZPoly num{1};
    ZPoly den{1};
    for (int64_t d : divisors(m)) {
        int64_t mu = mobius(m / d);
        if (mu == 0)
            continue;
        // x^d - 1
        ZPoly t(static_cast<size_t>(d) + 1, mpz_class(0));
        t[0] = -1;
        t.back() = 1;
        if (mu == 1)
            num = zpoly::mul(num, t);
        else
            den = zpoly::mul(den, t);
    }
    ZPoly q, r;
    zpoly::divmod_monic(num, den, q, r);
    if (!r.empty())
        throw Error("InvalidArgument", "cyclotomic product formula failed");
    return q;
}

namespace fppoly {

ZPoly normalize(ZPoly f, const mpz_class& p) {
    for (auto& c : f) {
        c %= p;
        if (c < 0)
            c += p;
    }
    return zpoly::trim(std::move(f));
}

ZPoly mul(const ZPoly& a, const ZPoly& b, const mpz_class& p) {
    return normalize(zpoly::mul(a, b), p);
}

ZPoly add(const ZPoly& a, const ZPoly& b, const mpz_class& p) {
    ZPoly c(std::max(a.size(), b.size()), mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        c[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i)
        c[i] += b[i];
    return normalize(std::move(c), p);
}

ZPoly rem(const ZPoly& f, const ZPoly& g, const mpz_class& p) {
    if (g.empty() || g.back() != 1)
        throw Error("InvalidArgument", "remainder requires a monic divisor");
    ZPoly r = normalize(f, p);
    while (r.size() >= g.size() && !r.empty()) {
        size_t shift = r.size() - g.size();
        mpz_class c = r.back();
        for (size_t i = 0; i < g.size(); ++i) {
            r[shift + i] -= c * g[i];
            r[shift + i] %= p;
            if (r[shift + i] < 0)
                r[shift + i] += p;
        }
        r = zpoly::trim(std::move(r));
    }
    return r;
}

bool divides(const ZPoly& g, const ZPoly& f, const mpz_class& p) {
    return rem(f, g, p).empty();
}

} // namespace fppoly

} // namespace siegel
