#pragma once

#include <cstdint>
#include <vector>

#include "siegel/rational.hpp"

namespace siegel {

// element of Q(zeta_M) in the power basis 1, z, ..., z^{phi(M)-1} modulo
// the M-th cyclotomic polynomial; all arithmetic is exact
class Cyclotomic {
public:
    Cyclotomic() : Cyclotomic(1) {}
    explicit Cyclotomic(int64_t order);

    static Cyclotomic zero(int64_t order) { return Cyclotomic(order); }
    static Cyclotomic one(int64_t order);
    static Cyclotomic from_rational(const Rational& q, int64_t order);
    static Cyclotomic from_coeffs(std::vector<Rational> coeffs, int64_t order);

    int64_t order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const; // lies in Q
    Rational rational_part() const;
    bool is_integral() const; // all coordinates in Z

    Cyclotomic operator-() const;
    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic scaled(const Rational& c) const;

    bool operator==(const Cyclotomic& o) const = default;

private:
    int64_t order_;
    std::vector<Rational> coeffs_;
};

// zeta_M^a
Cyclotomic root_of_unity(int64_t a, int64_t order);

} // namespace siegel
