#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "siegel/rational.hpp"

namespace siegel {

// symmetric integer matrix used as an expansion index: the exponent matrix
// it encodes is T = S / (2 d), where d is the owning expansion's denominator
struct SymMat {
    int degree = 0;
    std::vector<int64_t> s; // row-major, degree * degree entries

    static SymMat zero(int degree);
    static SymMat from_rows(const std::vector<std::vector<int64_t>>& rows);

    int64_t at(int i, int j) const { return s[static_cast<size_t>(i) * degree + j]; }
    int64_t& at(int i, int j) { return s[static_cast<size_t>(i) * degree + j]; }
    int64_t max_diagonal() const;
    bool is_symmetric() const;
    std::vector<std::vector<int64_t>> rows() const;

    bool operator==(const SymMat& o) const = default;
    auto operator<=>(const SymMat& o) const = default;
};

// exact determinant of a square integer matrix (row-major), Bareiss elimination
Integer int_matrix_det(int n, const std::vector<Integer>& m);
Integer int_matrix_det64(int n, const std::vector<int64_t>& m);

// every principal minor nonnegative
bool psd_check(const SymMat& t);
bool psd_check_int(int n, const std::vector<int64_t>& m);

// all positive semidefinite symmetric S with even diagonal entries bounded by
// 2 * bound (denominator-1 indices with t_ii <= bound), in lexicographic order
std::vector<SymMat> enumerate_indices(int degree, int64_t bound);

} // namespace siegel
