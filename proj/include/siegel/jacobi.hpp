#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "siegel/expansion.hpp"
#include "siegel/order_result.hpp"
#include "siegel/rational.hpp"
#include "siegel/symmat.hpp"

namespace siegel {

// index pair of a Jacobi form coefficient c(T, R); t stores S = 2T
struct JacobiKey {
    SymMat t;
    std::vector<int64_t> r;

    bool operator==(const JacobiKey& o) const = default;
    auto operator<=>(const JacobiKey& o) const = default;
};

// truncated Fourier expansion of a Jacobi form of the given weight and index;
// pairs are stored lambda-reduced (|r_i| <= index) with 4 index T - R^t R
// positive semidefinite
struct JacobiExpansion {
    int degree = 1;
    int64_t weight = 0;
    int64_t index = 0;
    int64_t truncation = 0;
    bool complete = false;
    std::map<JacobiKey, Rational> coefficients;

    void insert(JacobiKey key, Rational value);
    Rational coefficient(const JacobiKey& key) const;

    bool operator==(const JacobiExpansion& o) const = default;
};

// torsion point (alpha, beta) = (a/N, b/N); numerators are reduced mod N^2,
// which leaves every restriction value unchanged
struct TorsionPoint {
    int64_t denominator = 1;
    std::vector<int64_t> alpha;
    std::vector<int64_t> beta;

    TorsionPoint(int64_t n, std::vector<int64_t> a, std::vector<int64_t> b);
};

struct LambdaShift {
    SymMat t;
    std::vector<int64_t> r;
    std::vector<int64_t> lambda;
};

// slice of a complete degree-(g+1) expansion at lower-right entry m
JacobiExpansion fourier_jacobi(const RationalSiegel& f, int64_t index);

// in-place index shift T -> T + (R l^t + l R^t)/2 + m l l^t, R -> R + 2 m l
// (written on S = 2T this is integral); coefficients are invariant under it
void lambda_shift_apply(SymMat& t, std::vector<int64_t>& r,
                        const std::vector<int64_t>& lambda, int64_t m);

// shift moving every r_i into [-m, m]: entries already inside stay fixed,
// out-of-range entries round to the nearest representative with ties to +m
LambdaShift lambda_reduce(const SymMat& t, const std::vector<int64_t>& r, int64_t m);

// evaluation of the elliptic variable at the torsion point; the result has
// denominator N^2 and cyclotomic coefficients of order N^2
CyclotomicSiegel restrict_torsion(const JacobiExpansion& phi, const TorsionPoint& pt);

OrderResult jacobi_vanishing_order(const JacobiExpansion& phi, const Integer& p);

// true when the vanishing order mod p already exceeds index/4 + weight/slope,
// which forces the whole slice to vanish mod p
bool jacobi_zero_prediction(const JacobiExpansion& phi, const Integer& p,
                            const Rational& slope);

} // namespace siegel
