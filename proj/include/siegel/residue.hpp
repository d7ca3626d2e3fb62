#pragma once

#include <cstdint>

#include "siegel/cyclotomic.hpp"
#include "siegel/poly.hpp"
#include "siegel/rational.hpp"

namespace siegel {

// monic irreducible factor of the M-th cyclotomic polynomial over F_p with
// the lexicographically least coefficient vector (constant term first);
// its degree is the multiplicative order of p mod M. Requires p prime and
// coprime to M.
ZPoly cyclotomic_factor_mod_p(int64_t order, const Integer& p);

// residue of a cyclotomic value in F_p[x]/(modulus)
struct PrimeIdealResidue {
    Integer p;
    int64_t order = 1;
    ZPoly modulus;
    ZPoly value;

    bool is_zero() const { return value.empty(); }
    bool operator==(const PrimeIdealResidue& o) const = default;
};

// reduction along zeta_M -> x; requires every coordinate p-integral
PrimeIdealResidue reduce_mod_ideal(const Cyclotomic& c, const Integer& p);

PrimeIdealResidue residue_add(const PrimeIdealResidue& a, const PrimeIdealResidue& b);
PrimeIdealResidue residue_mul(const PrimeIdealResidue& a, const PrimeIdealResidue& b);

} // namespace siegel
