#include "siegel/jacobi.hpp"

#include <algorithm>
#include <string>

#include "siegel/error.hpp"
#include "siegel/numtheory.hpp"

namespace siegel {

namespace {

// Gram matrix of the theta-like constraint: 2 m S - R R^t, whose positive
// semidefiniteness is equivalent to 4 m T - R^t R >= 0
std::vector<int64_t> jacobi_gram(const SymMat& t, const std::vector<int64_t>& r, int64_t m) {
    int n = t.degree;
    std::vector<int64_t> g(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            g[static_cast<size_t>(i) * n + j] = 2 * m * t.at(i, j) - r[i] * r[j];
    return g;
}

} // namespace

void JacobiExpansion::insert(JacobiKey key, Rational value) {
    if (key.t.degree != degree || static_cast<int>(key.r.size()) != degree)
        throw Error("DegreeMismatch", "index pair does not match the expansion degree");
    if (!key.t.is_symmetric())
        throw Error("InvalidIndex", "index matrix is not symmetric");
    for (int i = 0; i < degree; ++i) {
        if (key.t.at(i, i) < 0 || key.t.at(i, i) > 2 * truncation)
            throw Error("InvalidIndex", "diagonal leaves the truncation box");
        if (key.t.at(i, i) % 2 != 0)
            throw Error("InvalidIndex", "index is not half-integral (odd diagonal)");
        if (std::abs(key.r[i]) > index)
            throw Error("InvalidIndex", "stored pairs must be lambda-reduced (|r_i| <= index)");
    }
    if (!psd_check_int(degree, jacobi_gram(key.t, key.r, index)))
        throw Error("InvalidIndex", "4 m T - R^t R is not positive semidefinite");
    if (value == 0)
        return;
    auto [it, inserted] = coefficients.emplace(std::move(key), std::move(value));
    if (!inserted) {
        (void)it;
        throw Error("InvalidIndex", "duplicate index pair");
    }
}

Rational JacobiExpansion::coefficient(const JacobiKey& key) const {
    bool reduced = true;
    for (int64_t ri : key.r)
        reduced = reduced && std::abs(ri) <= index;
    if (!reduced) {
        // c(T, R) = c(T', R') for the reduced representative; with m = 0 an
        // out-of-range R violates the PSD constraint, so the value is zero
        if (index == 0)
            return Rational(0);
        LambdaShift shifted = lambda_reduce(key.t, key.r, index);
        auto it = coefficients.find({shifted.t, shifted.r});
        return it == coefficients.end() ? Rational(0) : it->second;
    }
    auto it = coefficients.find(key);
    return it == coefficients.end() ? Rational(0) : it->second;
}

TorsionPoint::TorsionPoint(int64_t n, std::vector<int64_t> a, std::vector<int64_t> b)
    : denominator(n), alpha(std::move(a)), beta(std::move(b)) {
    if (n < 1)
        throw Error("InvalidArgument", "torsion denominator must be positive");
    if (alpha.size() != beta.size())
        throw Error("InvalidArgument", "alpha and beta have different lengths");
    for (auto& v : alpha)
        v = mod_nonneg(v, n * n);
    for (auto& v : beta)
        v = mod_nonneg(v, n * n);
}

JacobiExpansion fourier_jacobi(const RationalSiegel& f, int64_t index) {
    if (f.degree < 2)
        throw Error("DegreeMismatch", "slicing requires degree at least 2");
    if (f.denominator != 1)
        throw Error("DenominatorMismatch", "slicing requires half-integral indices");
    if (!f.complete)
        throw Error("IncompleteData", "slicing requires a complete expansion");
    if (index < 0 || index > f.truncation)
        throw Error("TruncationInsufficient",
                    "slice index " + std::to_string(index) + " leaves the truncation box");

    int g = f.degree - 1;
    JacobiExpansion out;
    out.degree = g;
    out.weight = f.weight;
    out.index = index;
    out.truncation = f.truncation;
    out.complete = true;

    for (const auto& [t, v] : f.coefficients) {
        if (t.at(g, g) != 2 * index)
            continue;
        std::vector<int64_t> r(g);
        bool reduced = true;
        for (int i = 0; i < g; ++i) {
            r[i] = t.at(i, g);
            reduced = reduced && std::abs(r[i]) <= index;
        }
        // with a complete source every coefficient outside the closed box
        // [-m, m]^g is a shift image of a stored reduced pair, so only the
        // reduced representatives are copied
        if (!reduced)
            continue;
        SymMat block = SymMat::zero(g);
        for (int i = 0; i < g; ++i)
            for (int j = 0; j < g; ++j)
                block.at(i, j) = t.at(i, j);
        out.insert({std::move(block), std::move(r)}, v);
    }
    return out;
}

void lambda_shift_apply(SymMat& t, std::vector<int64_t>& r,
                        const std::vector<int64_t>& lambda, int64_t m) {
    int n = t.degree;
    if (static_cast<int>(r.size()) != n || static_cast<int>(lambda.size()) != n)
        throw Error("DegreeMismatch", "shift vector does not match the index degree");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            t.at(i, j) += r[i] * lambda[j] + lambda[i] * r[j] + 2 * m * lambda[i] * lambda[j];
    for (int i = 0; i < n; ++i)
        r[i] += 2 * m * lambda[i];
}

LambdaShift lambda_reduce(const SymMat& t, const std::vector<int64_t>& r, int64_t m) {
    if (static_cast<int>(r.size()) != t.degree)
        throw Error("DegreeMismatch", "index pair has mismatched shapes");
    if (m < 0)
        throw Error("InvalidArgument", "index must be nonnegative");
    std::vector<int64_t> lambda(r.size(), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        if (std::abs(r[i]) <= m)
            continue; // both endpoints are kept as stored representatives
        if (m == 0)
            throw Error("InvalidArgument", "no shift can reduce r != 0 at index 0");
        // unique lambda with r + 2 m lambda in [-m, m], except r = m (2k+1)
        // where both endpoints work and the tie goes to +m
        int64_t num = m - r[i];
        int64_t den = 2 * m;
        int64_t q = num / den;
        if (num % den != 0 && num < 0)
            --q;
        lambda[i] = q;
    }
    LambdaShift out{t, r, lambda};
    lambda_shift_apply(out.t, out.r, lambda, m);
    return out;
}

CyclotomicSiegel restrict_torsion(const JacobiExpansion& phi, const TorsionPoint& pt) {
    int g = phi.degree;
    if (static_cast<int>(pt.alpha.size()) != g)
        throw Error("DegreeMismatch", "torsion point does not match the expansion degree");
    int64_t n = pt.denominator;
    int64_t m2 = n * n;
    int64_t md = phi.index;

    CyclotomicSiegel out;
    out.degree = g;
    out.weight = phi.weight;
    out.denominator = m2;
    out.cyclotomic_order = m2;
    // floor(D - m/4): reduced pairs move each diagonal entry by at most m/4
    out.truncation = phi.truncation - (md + 3) / 4;
    if (out.truncation < 0)
        throw Error("TruncationExhausted",
                    "restriction needs truncation at least index/4");
    out.complete = phi.complete;

    int64_t cap = 2 * out.denominator * out.truncation;
    std::map<SymMat, Cyclotomic> acc;
    for (const auto& [key, v] : phi.coefficients) {
        // S' = N^2 S + N (R a^t + a R^t) + 2 m a a^t encodes
        // T' = T + (R alpha^t + alpha R^t)/2 + m alpha^t alpha over 2 N^2
        SymMat img = SymMat::zero(g);
        for (int i = 0; i < g; ++i)
            for (int j = 0; j < g; ++j)
                img.at(i, j) = m2 * key.t.at(i, j) +
                               n * (key.r[i] * pt.alpha[j] + pt.alpha[i] * key.r[j]) +
                               2 * md * pt.alpha[i] * pt.alpha[j];
        if (img.max_diagonal() > cap)
            continue;
        // phase e(m beta^t alpha + beta R) as a power of zeta_{N^2}
        int64_t e = 0;
        for (int i = 0; i < g; ++i)
            e = mod_nonneg(e + md * pt.beta[i] * pt.alpha[i] + n * pt.beta[i] * key.r[i], m2);
        Cyclotomic term = root_of_unity(e, m2).scaled(v);
        auto it = acc.find(img);
        if (it == acc.end())
            acc.emplace(std::move(img), std::move(term));
        else
            it->second = it->second + term;
    }
    for (auto& [t, v] : acc)
        out.insert(t, std::move(v));
    return out;
}

OrderResult jacobi_vanishing_order(const JacobiExpansion& phi, const Integer& p) {
    if (!is_prime(p))
        throw Error("InvalidPrime", "vanishing order requires a prime, got " + p.get_str());
    if (!phi.complete)
        throw Error("IncompleteData", "vanishing order needs a complete expansion");
    bool found = false;
    int64_t best = 0;
    JacobiKey witness;
    for (const auto& [key, v] : phi.coefficients) {
        if (reduce_rational_mod_p(v, p) == 0)
            continue;
        int64_t w = key.t.max_diagonal();
        if (!found || w < best) {
            found = true;
            best = w;
            witness = key;
        }
    }
    if (!found)
        return OrderResult::at_least(phi.truncation);
    OrderResult res = best == 0 ? OrderResult::not_vanishing(witness.t)
                                : OrderResult::exact(best / 2 - 1, witness.t);
    res.witness_r = witness.r;
    return res;
}

bool jacobi_zero_prediction(const JacobiExpansion& phi, const Integer& p,
                            const Rational& slope) {
    if (slope <= 0)
        throw Error("InvalidArgument", "slope must be positive");
    OrderResult ord = jacobi_vanishing_order(phi, p);
    if (ord.kind == OrderResult::Kind::not_vanishing)
        return false;
    Rational threshold = Rational(phi.index) / 4 + Rational(phi.weight) / slope;
    return Rational(ord.value) > threshold;
}

} // namespace siegel
