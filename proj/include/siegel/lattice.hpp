#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "siegel/cyclotomic.hpp"
#include "siegel/expansion.hpp"

namespace siegel {

// positive definite integral lattice with even norms, given by a Gram matrix
struct EvenLattice {
    std::string name;
    int rank = 0;
    std::vector<int64_t> gram; // row-major

    int64_t at(int i, int j) const { return gram[static_cast<size_t>(i) * rank + j]; }
    bool is_unimodular() const;
};

// validates symmetry, positive definiteness and even diagonal
EvenLattice make_even_lattice(std::string name, int rank, std::vector<int64_t> gram);

struct ShortVector {
    std::vector<int64_t> x;
    int64_t norm = 0;

    bool operator==(const ShortVector& o) const = default;
};

// all integer coordinate vectors with x^t G x <= max_norm, zero included,
// ordered by coordinates (x_{n-1}, ..., x_0) ascending; the serial kernel is
// the reference, the default kernel parallelizes the outermost coordinate
// and produces identical output
std::vector<ShortVector> short_vectors_serial(const EvenLattice& l, int64_t max_norm);
std::vector<ShortVector> short_vectors(const EvenLattice& l, int64_t max_norm);

// degree-g theta series: c(T) = #{(x_1..x_g) : (x_i . x_j) = 2T}, weight rank/2;
// only even unimodular lattices yield level-1 expansions, others are refused
RationalSiegel theta_series_serial(const EvenLattice& l, int degree, int64_t bound);
RationalSiegel theta_series(const EvenLattice& l, int degree, int64_t bound);

enum class ClassicalForm { e4, e6, delta };

// degree-1 corpus: E4, E6 (divisor sums) and Delta (24th power of the Euler
// product), exact integer coefficients up to the bound
RationalSiegel classical_degree1(ClassicalForm which, int64_t bound);

// determinant of the (N-1)x(N-1) matrix (zeta_N^{b r}) with
// (1-N)/2 < r <= (N-1)/2 and 0 <= b <= N-2, for an odd prime N
Cyclotomic torsion_matrix_det(int64_t n);

} // namespace siegel
