#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace siegel {

// dense univariate polynomial over Z; index = degree, no trailing zeros
using ZPoly = std::vector<mpz_class>;

namespace zpoly {

ZPoly trim(ZPoly f);
int64_t degree(const ZPoly& f); // -1 for the zero polynomial
ZPoly mul(const ZPoly& a, const ZPoly& b);

// long division by a monic divisor; exact over Z
void divmod_monic(const ZPoly& f, const ZPoly& g, ZPoly& quot, ZPoly& rem);

} // namespace zpoly

// M-th cyclotomic polynomial via the Moebius product formula
ZPoly cyclotomic_polynomial(int64_t m);

// polynomials over F_p share the ZPoly layout with coefficients in [0, p)
namespace fppoly {

ZPoly normalize(ZPoly f, const mpz_class& p);
ZPoly mul(const ZPoly& a, const ZPoly& b, const mpz_class& p);
ZPoly add(const ZPoly& a, const ZPoly& b, const mpz_class& p);

// remainder mod a monic divisor
ZPoly rem(const ZPoly& f, const ZPoly& g, const mpz_class& p);

bool divides(const ZPoly& g, const ZPoly& f, const mpz_class& p);

} // namespace fppoly

} // namespace siegel
