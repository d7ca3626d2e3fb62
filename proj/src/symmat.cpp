#include "siegel/symmat.hpp"

#include <algorithm>

#include "siegel/error.hpp"
#include "siegel/numtheory.hpp"

namespace siegel {

SymMat SymMat::zero(int degree) {
    SymMat t;
    t.degree = degree;
    t.s.assign(static_cast<size_t>(degree) * degree, 0);
    return t;
}

SymMat SymMat::from_rows(const std::vector<std::vector<int64_t>>& rows) {
    int n = static_cast<int>(rows.size());
    SymMat t = zero(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw Error("InvalidIndex", "index matrix is not square");
        for (int j = 0; j < n; ++j)
            t.at(i, j) = rows[i][j];
    }
    if (!t.is_symmetric())
        throw Error("InvalidIndex", "index matrix is not symmetric");
    return t;
}

int64_t SymMat::max_diagonal() const {
    int64_t m = 0;
    for (int i = 0; i < degree; ++i)
        m = std::max(m, at(i, i));
    return m;
}

bool SymMat::is_symmetric() const {
    for (int i = 0; i < degree; ++i)
        for (int j = i + 1; j < degree; ++j)
            if (at(i, j) != at(j, i))
                return false;
    return true;
}

std::vector<std::vector<int64_t>> SymMat::rows() const {
    std::vector<std::vector<int64_t>> r(degree, std::vector<int64_t>(degree));
    for (int i = 0; i < degree; ++i)
        for (int j = 0; j < degree; ++j)
            r[i][j] = at(i, j);
    return r;
}

Integer int_matrix_det(int n, const std::vector<Integer>& m) {
    if (n == 0)
        return 1;
    std::vector<Integer> a = m;
    auto at = [&](int i, int j) -> Integer& { return a[static_cast<size_t>(i) * n + j]; };
    Integer sign = 1;
    Integer prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (at(k, k) == 0) {
            int swap = -1;
            for (int i = k + 1; i < n; ++i)
                if (at(i, k) != 0) {
                    swap = i;
                    break;
                }
            if (swap < 0)
                return 0;
            for (int j = 0; j < n; ++j)
                std::swap(at(k, j), at(swap, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Integer v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                at(i, j) = v;
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    return sign * at(n - 1, n - 1);
}

Integer int_matrix_det64(int n, const std::vector<int64_t>& m) {
    std::vector<Integer> a;
    a.reserve(m.size());
    for (int64_t v : m)
        a.emplace_back(static_cast<long>(v));
    return int_matrix_det(n, a);
}

bool psd_check_int(int n, const std::vector<int64_t>& m) {
    if (n >= 31)
        throw Error("InvalidArgument", "matrix too large for the minor-based test");
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i))
                idx.push_back(i);
        int k = static_cast<int>(idx.size());
        std::vector<Integer> sub;
        sub.reserve(static_cast<size_t>(k) * k);
        for (int i : idx)
            for (int j : idx)
                sub.emplace_back(static_cast<long>(m[static_cast<size_t>(i) * n + j]));
        if (int_matrix_det(k, sub) < 0)
            return false;
    }
    return true;
}

bool psd_check(const SymMat& t) {
    if (!t.is_symmetric())
        throw Error("InvalidIndex", "matrix is not symmetric");
    return psd_check_int(t.degree, t.s);
}

namespace {

void fill_offdiag(SymMat& t, const std::vector<std::pair<int, int>>& pos,
                  const std::vector<int64_t>& bounds, size_t level,
                  std::vector<SymMat>& out) {
    if (level == pos.size()) {
        if (psd_check_int(t.degree, t.s))
            out.push_back(t);
        return;
    }
    auto [i, j] = pos[level];
    for (int64_t v = -bounds[level]; v <= bounds[level]; ++v) {
        t.at(i, j) = v;
        t.at(j, i) = v;
        fill_offdiag(t, pos, bounds, level + 1, out);
    }
}

} // namespace

std::vector<SymMat> enumerate_indices(int degree, int64_t bound) {
    if (degree < 1)
        throw Error("InvalidArgument", "degree must be at least 1");
    if (bound < 0)
        throw Error("InvalidArgument", "diagonal bound must be nonnegative");
    std::vector<SymMat> out;
    std::vector<int64_t> diag(degree, 0);
    for (;;) {
        SymMat t = SymMat::zero(degree);
        for (int i = 0; i < degree; ++i)
            t.at(i, i) = 2 * diag[i];
        std::vector<std::pair<int, int>> pos;
        std::vector<int64_t> bounds;
        for (int i = 0; i < degree; ++i)
            for (int j = i + 1; j < degree; ++j) {
                pos.emplace_back(i, j);
                bounds.push_back(isqrt64(t.at(i, i) * t.at(j, j)));
            }
        fill_offdiag(t, pos, bounds, 0, out);

        int k = degree - 1;
        while (k >= 0 && diag[k] == bound)
            diag[k--] = 0;
        if (k < 0)
            break;
        ++diag[k];
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace siegel
