#include "siegel/expansion.hpp"

#include <string>

#include "siegel/error.hpp"

namespace siegel {

namespace {

std::string index_str(const SymMat& t) {
    std::string s = "[";
    for (int i = 0; i < t.degree; ++i) {
        s += i ? ";" : "";
        for (int j = 0; j < t.degree; ++j)
            s += (j ? "," : "") + std::to_string(t.at(i, j));
    }
    return s + "]";
}

} // namespace

template <class K>
void SiegelExpansion<K>::insert(SymMat t, K value) {
    if (t.degree != degree)
        throw Error("DegreeMismatch", "index degree " + std::to_string(t.degree) +
                                          " does not match expansion degree " +
                                          std::to_string(degree));
    if (!t.is_symmetric())
        throw Error("InvalidIndex", "index " + index_str(t) + " is not symmetric");
    for (int i = 0; i < degree; ++i) {
        if (t.at(i, i) < 0 || t.at(i, i) > 2 * denominator * truncation)
            throw Error("InvalidIndex", "diagonal of " + index_str(t) +
                                            " leaves the truncation box");
        if (denominator == 1 && t.at(i, i) % 2 != 0)
            throw Error("InvalidIndex",
                        "index " + index_str(t) + " is not half-integral (odd diagonal)");
    }
    if (!psd_check(t))
        throw Error("InvalidIndex", "index " + index_str(t) + " is not positive semidefinite");
    if constexpr (!std::is_same_v<K, Rational>) {
        if (scalar_ops<K>::order_of(value) != cyclotomic_order)
            throw Error("ScalarRingMismatch", "coefficient order does not match the expansion");
    }
    if (scalar_ops<K>::is_zero(value))
        return;
    auto [it, inserted] = coefficients.emplace(std::move(t), std::move(value));
    if (!inserted)
        throw Error("InvalidIndex", "duplicate index " + index_str(it->first));
}

template <class K>
K SiegelExpansion<K>::coefficient(const SymMat& t) const {
    if (const K* v = find(t))
        return *v;
    if constexpr (std::is_same_v<K, Rational>)
        return Rational(0);
    else
        return Cyclotomic::zero(cyclotomic_order);
}

namespace {

template <class K>
void require_same_shape(const SiegelExpansion<K>& a, const SiegelExpansion<K>& b,
                        bool match_weight) {
    if (a.degree != b.degree)
        throw Error("DegreeMismatch", "expansion degrees differ");
    if (match_weight && a.weight != b.weight)
        throw Error("WeightMismatch", "expansion weights differ");
    if (a.denominator != b.denominator)
        throw Error("DenominatorMismatch", "expansion denominators differ");
    if (a.cyclotomic_order != b.cyclotomic_order)
        throw Error("ScalarRingMismatch", "scalar rings differ");
}

} // namespace

template <class K>
SiegelExpansion<K> linear_combine(
    const std::vector<std::pair<Rational, SiegelExpansion<K>>>& terms) {
    if (terms.empty())
        throw Error("InvalidArgument", "linear combination of no terms");
    SiegelExpansion<K> out;
    const auto& first = terms.front().second;
    out.degree = first.degree;
    out.weight = first.weight;
    out.denominator = first.denominator;
    out.cyclotomic_order = first.cyclotomic_order;
    out.truncation = first.truncation;
    out.complete = true;
    for (const auto& [c, f] : terms) {
        (void)c;
        require_same_shape(first, f, true);
        out.truncation = std::min(out.truncation, f.truncation);
        out.complete = out.complete && f.complete;
    }
    std::map<SymMat, K> acc;
    for (const auto& [c, f] : terms) {
        if (c == 0)
            continue;
        for (const auto& [t, v] : f.coefficients) {
            if (t.max_diagonal() > 2 * out.denominator * out.truncation)
                continue;
            K scaled = scalar_ops<K>::scale(v, c);
            auto it = acc.find(t);
            if (it == acc.end())
                acc.emplace(t, std::move(scaled));
            else
                it->second = it->second + scaled;
        }
    }
    for (auto& [t, v] : acc)
        out.insert(t, std::move(v));
    return out;
}

template <class K>
SiegelExpansion<K> pointwise_multiply(const SiegelExpansion<K>& a, const SiegelExpansion<K>& b) {
    require_same_shape(a, b, false);
    if (!a.complete || !b.complete)
        throw Error("IncompleteData", "products need complete factors");
    SiegelExpansion<K> out;
    out.degree = a.degree;
    out.weight = a.weight + b.weight;
    out.denominator = a.denominator;
    out.cyclotomic_order = a.cyclotomic_order;
    out.truncation = std::min(a.truncation, b.truncation);
    out.complete = true;
    int64_t cap = 2 * out.denominator * out.truncation;
    std::map<SymMat, K> acc;
    for (const auto& [t1, v1] : a.coefficients) {
        if (t1.max_diagonal() > cap)
            continue;
        for (const auto& [t2, v2] : b.coefficients) {
            SymMat t = t1;
            bool fits = true;
            for (size_t i = 0; i < t.s.size(); ++i)
                t.s[i] += t2.s[i];
            for (int i = 0; i < t.degree && fits; ++i)
                fits = t.at(i, i) <= cap;
            if (!fits)
                continue;
            K prod = v1 * v2;
            auto it = acc.find(t);
            if (it == acc.end())
                acc.emplace(std::move(t), std::move(prod));
            else
                it->second = it->second + prod;
        }
    }
    for (auto& [t, v] : acc)
        out.insert(t, std::move(v));
    return out;
}

bool is_signed_permutation(int n, const std::vector<int64_t>& u) {
    std::vector<int> colhits(n, 0);
    for (int i = 0; i < n; ++i) {
        int rowhits = 0;
        for (int j = 0; j < n; ++j) {
            int64_t v = u[static_cast<size_t>(i) * n + j];
            if (v == 0)
                continue;
            if (v != 1 && v != -1)
                return false;
            ++rowhits;
            ++colhits[j];
        }
        if (rowhits != 1)
            return false;
    }
    for (int j = 0; j < n; ++j)
        if (colhits[j] != 1)
            return false;
    return true;
}

template <class K>
SiegelExpansion<K> unimodular_transform(const SiegelExpansion<K>& f,
                                        const std::vector<int64_t>& u) {
    int n = f.degree;
    if (static_cast<int>(u.size()) != n * n)
        throw Error("InvalidArgument", "transform matrix has the wrong shape");
    Integer det = int_matrix_det64(n, u);
    if (det != 1 && det != -1)
        throw Error("NonUnimodular", "transform determinant is " + det.get_str());
    bool sp = is_signed_permutation(n, u);

    SiegelExpansion<K> out;
    out.degree = f.degree;
    out.weight = f.weight;
    out.denominator = f.denominator;
    out.cyclotomic_order = f.cyclotomic_order;
    out.truncation = f.truncation;
    out.complete = sp ? f.complete : false;
    int64_t cap = 2 * out.denominator * out.truncation;

    auto uat = [&](int i, int j) { return u[static_cast<size_t>(i) * n + j]; };
    for (const auto& [t, v] : f.coefficients) {
        SymMat img = SymMat::zero(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int64_t acc = 0;
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        acc += uat(a, i) * t.at(a, b) * uat(b, j);
                img.at(i, j) = acc;
            }
        if (!sp && img.max_diagonal() > cap)
            continue;
        out.insert(std::move(img), v);
    }
    return out;
}

template struct SiegelExpansion<Rational>;
template struct SiegelExpansion<Cyclotomic>;

template RationalSiegel linear_combine(const std::vector<std::pair<Rational, RationalSiegel>>&);
template CyclotomicSiegel linear_combine(const std::vector<std::pair<Rational, CyclotomicSiegel>>&);
template RationalSiegel pointwise_multiply(const RationalSiegel&, const RationalSiegel&);
template CyclotomicSiegel pointwise_multiply(const CyclotomicSiegel&, const CyclotomicSiegel&);
template RationalSiegel unimodular_transform(const RationalSiegel&, const std::vector<int64_t>&);
template CyclotomicSiegel unimodular_transform(const CyclotomicSiegel&, const std::vector<int64_t>&);

} // namespace siegel
