#include "siegel/cyclotomic.hpp"

#include <map>

#include "siegel/error.hpp"
#include "siegel/numtheory.hpp"
#include "siegel/poly.hpp"

namespace siegel {

namespace {

const ZPoly& minimal_polynomial(int64_t order) {
    static std::map<int64_t, ZPoly> cache;
    auto it = cache.find(order);
    if (it == cache.end())
        it = cache.emplace(order, cyclotomic_polynomial(order)).first;
    return it->second;
}

// reduce a rational polynomial modulo the (monic, integral) minimal polynomial
std::vector<Rational> reduce_power_basis(std::vector<Rational> f, int64_t order) {
    const ZPoly& phi = minimal_polynomial(order);
    size_t deg = phi.size() - 1;
    while (f.size() > deg) {
        size_t shift = f.size() - phi.size();
        Rational c = f.back();
        if (c != 0)
            for (size_t i = 0; i < phi.size(); ++i)
                f[shift + i] -= c * Rational(phi[i]);
        f.pop_back();
    }
    f.resize(deg, Rational(0));
    return f;
}

} // namespace

Cyclotomic::Cyclotomic(int64_t order) : order_(order) {
    if (order <= 0)
        throw Error("InvalidArgument", "cyclotomic order must be positive");
    coeffs_.assign(static_cast<size_t>(euler_phi(order)), Rational(0));
}

Cyclotomic Cyclotomic::one(int64_t order) {
    return from_rational(Rational(1), order);
}

Cyclotomic Cyclotomic::from_rational(const Rational& q, int64_t order) {
    Cyclotomic c(order);
    c.coeffs_[0] = q;
    return c;
}

Cyclotomic Cyclotomic::from_coeffs(std::vector<Rational> coeffs, int64_t order) {
    Cyclotomic c(order);
    if (coeffs.size() != c.coeffs_.size())
        throw Error("InvalidArgument", "cyclotomic coefficient vector has the wrong length");
    c.coeffs_ = std::move(coeffs);
    return c;
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            return false;
    return true;
}

Rational Cyclotomic::rational_part() const {
    if (!is_rational())
        throw Error("InvalidArgument", "value is not rational");
    return coeffs_[0];
}

bool Cyclotomic::is_integral() const {
    for (const auto& c : coeffs_)
        if (c.get_den() != 1)
            return false;
    return true;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r(order_);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        r.coeffs_[i] = -coeffs_[i];
    return r;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    if (order_ != o.order_)
        throw Error("ScalarRingMismatch", "cyclotomic orders differ");
    Cyclotomic r(order_);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
    return *this + (-o);
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    if (order_ != o.order_)
        throw Error("ScalarRingMismatch", "cyclotomic orders differ");
    size_t n = coeffs_.size();
    std::vector<Rational> prod(2 * n, Rational(0));
    for (size_t i = 0; i < n; ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (size_t j = 0; j < n; ++j)
            if (o.coeffs_[j] != 0)
                prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    Cyclotomic r(order_);
    r.coeffs_ = reduce_power_basis(std::move(prod), order_);
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    *this = *this + o;
    return *this;
}

Cyclotomic Cyclotomic::scaled(const Rational& c) const {
    Cyclotomic r(order_);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        r.coeffs_[i] = coeffs_[i] * c;
    return r;
}

Cyclotomic root_of_unity(int64_t a, int64_t order) {
    if (order <= 0)
        throw Error("InvalidArgument", "root of unity requires a positive order");
    int64_t e = mod_nonneg(a, order);
    Cyclotomic c(order);
    std::vector<Rational> f(static_cast<size_t>(e) + 1, Rational(0));
    f.back() = 1;
    return Cyclotomic::from_coeffs(reduce_power_basis(std::move(f), order), order);
}

} // namespace siegel
