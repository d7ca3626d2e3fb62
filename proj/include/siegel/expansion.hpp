#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "siegel/cyclotomic.hpp"
#include "siegel/rational.hpp"
#include "siegel/symmat.hpp"

namespace siegel {

template <class K>
struct scalar_ops;

template <>
struct scalar_ops<Rational> {
    static bool is_zero(const Rational& v) { return v == 0; }
    static Rational scale(const Rational& v, const Rational& c) { return v * c; }
    static constexpr int64_t cyclotomic_order = 0;
    static int64_t order_of(const Rational&) { return 0; }
};

template <>
struct scalar_ops<Cyclotomic> {
    static bool is_zero(const Cyclotomic& v) { return v.is_zero(); }
    static Cyclotomic scale(const Cyclotomic& v, const Rational& c) { return v.scaled(c); }
    static int64_t order_of(const Cyclotomic& v) { return v.order(); }
};

// truncated Fourier expansion indexed by positive semidefinite S = 2 d T;
// stored coefficients are nonzero, lie inside the truncation box
// (max_i t_ii <= truncation), and when denominator = 1 have even diagonal
template <class K>
struct SiegelExpansion {
    int degree = 1;
    int64_t weight = 0;
    int64_t truncation = 0;
    bool complete = false;
    int64_t denominator = 1;
    int64_t cyclotomic_order = 0; // 0 for rational scalars
    std::map<SymMat, K> coefficients;

    // validates the index against the header and drops exact zeros
    void insert(SymMat t, K value);

    const K* find(const SymMat& t) const {
        auto it = coefficients.find(t);
        return it == coefficients.end() ? nullptr : &it->second;
    }
    K coefficient(const SymMat& t) const;

    bool operator==(const SiegelExpansion& o) const = default;
};

using RationalSiegel = SiegelExpansion<Rational>;
using CyclotomicSiegel = SiegelExpansion<Cyclotomic>;

template <class K>
SiegelExpansion<K> linear_combine(
    const std::vector<std::pair<Rational, SiegelExpansion<K>>>& terms);

template <class K>
SiegelExpansion<K> pointwise_multiply(const SiegelExpansion<K>& a, const SiegelExpansion<K>& b);

// substitution T -> U^t T U for a unimodular integer matrix U (row-major);
// signed permutations preserve the truncation box exactly, anything else
// clears the complete flag and drops indices that leave the box
template <class K>
SiegelExpansion<K> unimodular_transform(const SiegelExpansion<K>& f,
                                        const std::vector<int64_t>& u);

bool is_signed_permutation(int n, const std::vector<int64_t>& u);

} // namespace siegel
