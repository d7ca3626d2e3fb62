#include "siegel/lattice.hpp"

#include <algorithm>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "siegel/error.hpp"
#include "siegel/numtheory.hpp"
#include "siegel/symmat.hpp"

namespace siegel {

bool EvenLattice::is_unimodular() const {
    Integer det = int_matrix_det64(rank, gram);
    return det == 1 || det == -1;
}

EvenLattice make_even_lattice(std::string name, int rank, std::vector<int64_t> gram) {
    if (rank < 1 || gram.size() != static_cast<size_t>(rank) * rank)
        throw Error("InvalidArgument", "gram matrix shape does not match the rank");
    EvenLattice l{std::move(name), rank, std::move(gram)};
    for (int i = 0; i < rank; ++i) {
        if (l.at(i, i) % 2 != 0)
            throw Error("NotEvenLattice",
                        "odd diagonal entry at position " + std::to_string(i));
        for (int j = 0; j < rank; ++j)
            if (l.at(i, j) != l.at(j, i))
                throw Error("InvalidArgument", "gram matrix is not symmetric");
    }
    // Sylvester: positive definite iff all leading principal minors are positive
    for (int k = 1; k <= rank; ++k) {
        std::vector<Integer> sub;
        sub.reserve(static_cast<size_t>(k) * k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                sub.emplace_back(static_cast<long>(l.at(i, j)));
        if (int_matrix_det(k, sub) <= 0)
            throw Error("NotPositiveDefinite", "gram matrix is not positive definite");
    }
    return l;
}

namespace {

// rational LDL data for the quadratic form: Q(x) = sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2
struct Ldl {
    int n;
    std::vector<Rational> d;
    std::vector<Rational> u; // row-major, upper part used
};

Ldl ldl_decompose(const EvenLattice& l) {
    int n = l.rank;
    Ldl out{n, std::vector<Rational>(n), std::vector<Rational>(static_cast<size_t>(n) * n)};
    std::vector<Rational> a(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[static_cast<size_t>(i) * n + j] = Rational(l.at(i, j));
    auto at = [&](int i, int j) -> Rational& { return a[static_cast<size_t>(i) * n + j]; };
    auto uat = [&](int i, int j) -> Rational& { return out.u[static_cast<size_t>(i) * n + j]; };
    for (int i = 0; i < n; ++i) {
        out.d[i] = at(i, i);
        for (int j = i + 1; j < n; ++j)
            uat(i, j) = at(i, j) / out.d[i];
        for (int k = i + 1; k < n; ++k)
            for (int j = i + 1; j < n; ++j)
                at(k, j) -= out.d[i] * uat(i, k) * uat(i, j);
    }
    return out;
}

int64_t int_ceil(const Rational& q) {
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return c.get_si();
}

int64_t int_floor(const Rational& q) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return f.get_si();
}

// integer K >= sqrt(q) for q >= 0
int64_t sqrt_upper(const Rational& q) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    fl += 1;
    Integer r;
    mpz_sqrt(r.get_mpz_t(), fl.get_mpz_t());
    return r.get_si() + 1;
}

int64_t lattice_norm(const EvenLattice& l, const std::vector<int64_t>& x) {
    int64_t s = 0;
    for (int i = 0; i < l.rank; ++i)
        for (int j = 0; j < l.rank; ++j)
            s += x[i] * l.at(i, j) * x[j];
    return s;
}

// descend from `level` with coordinates above it fixed and `budget` left
void enumerate_level(const EvenLattice& l, const Ldl& ldl, int level, Rational budget,
                     std::vector<int64_t>& x, std::vector<ShortVector>& out) {
    if (level < 0) {
        out.push_back({x, lattice_norm(l, x)});
        return;
    }
    Rational center(0);
    for (int j = level + 1; j < ldl.n; ++j)
        center += ldl.u[static_cast<size_t>(level) * ldl.n + j] * Rational(x[j]);
    Rational limit = budget / ldl.d[level];
    int64_t w = sqrt_upper(limit);
    int64_t lo = int_ceil(-center - Rational(w));
    int64_t hi = int_floor(-center + Rational(w));
    for (int64_t v = lo; v <= hi; ++v) {
        Rational offset = Rational(v) + center;
        Rational used = ldl.d[level] * offset * offset;
        if (used > budget)
            continue;
        x[level] = v;
        enumerate_level(l, ldl, level - 1, budget - used, x, out);
    }
    x[level] = 0;
}

} // namespace

std::vector<ShortVector> short_vectors_serial(const EvenLattice& l, int64_t max_norm) {
    if (max_norm < 0)
        throw Error("InvalidArgument", "norm bound must be nonnegative");
    Ldl ldl = ldl_decompose(l);
    std::vector<int64_t> x(l.rank, 0);
    std::vector<ShortVector> out;
    enumerate_level(l, ldl, l.rank - 1, Rational(max_norm), x, out);
    return out;
}

std::vector<ShortVector> short_vectors(const EvenLattice& l, int64_t max_norm) {
    if (max_norm < 0)
        throw Error("InvalidArgument", "norm bound must be nonnegative");
    Ldl ldl = ldl_decompose(l);
    int top = l.rank - 1;
    // top-level window: d_top x^2 <= max_norm (the top center is empty)
    Rational limit = Rational(max_norm) / ldl.d[top];
    int64_t w = sqrt_upper(limit);
    std::vector<int64_t> tops;
    for (int64_t v = -w; v <= w; ++v)
        if (ldl.d[top] * Rational(v) * Rational(v) <= Rational(max_norm))
            tops.push_back(v);

    std::vector<std::vector<ShortVector>> buckets(tops.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (size_t i = 0; i < tops.size(); ++i) {
        std::vector<int64_t> x(l.rank, 0);
        x[top] = tops[i];
        Rational used = ldl.d[top] * Rational(tops[i]) * Rational(tops[i]);
        enumerate_level(l, ldl, top - 1, Rational(max_norm) - used, x, buckets[i]);
    }

    std::vector<ShortVector> out;
    for (auto& b : buckets)
        out.insert(out.end(), std::make_move_iterator(b.begin()),
                   std::make_move_iterator(b.end()));
    return out;
}

namespace {

using CountMap = std::map<SymMat, int64_t>;

// extend a tuple of vector indices one column at a time, accumulating the
// Gram matrix of the chosen vectors
void count_tuples(const std::vector<ShortVector>& vecs,
                  const std::vector<std::vector<int64_t>>& gx, int degree, int level,
                  std::vector<int>& pick, SymMat& s, CountMap& counts) {
    if (level == degree) {
        ++counts[s];
        return;
    }
    for (size_t i = 0; i < vecs.size(); ++i) {
        pick[level] = static_cast<int>(i);
        s.at(level, level) = vecs[i].norm;
        for (int j = 0; j < level; ++j) {
            const auto& xj = vecs[pick[j]].x;
            const auto& gxi = gx[i];
            int64_t dot = 0;
            for (size_t a = 0; a < xj.size(); ++a)
                dot += xj[a] * gxi[a];
            s.at(level, j) = dot;
            s.at(j, level) = dot;
        }
        count_tuples(vecs, gx, degree, level + 1, pick, s, counts);
    }
}

RationalSiegel theta_from_counts(const EvenLattice& l, int degree, int64_t bound,
                                 const CountMap& counts) {
    RationalSiegel out;
    out.degree = degree;
    out.weight = l.rank / 2;
    out.truncation = bound;
    out.complete = true;
    out.denominator = 1;
    for (const auto& [s, c] : counts)
        out.insert(s, Rational(c));
    return out;
}

void theta_validate(const EvenLattice& l, int degree, int64_t bound) {
    if (degree < 1)
        throw Error("InvalidArgument", "degree must be at least 1");
    if (bound < 0)
        throw Error("InvalidArgument", "diagonal bound must be nonnegative");
    if (l.rank % 2 != 0)
        throw Error("InvalidArgument", "theta series weight is rank/2; rank must be even");
    if (!l.is_unimodular())
        throw Error("NotUnimodularLattice",
                    "theta series of non-unimodular lattices are not level 1; refusing");
}

std::vector<std::vector<int64_t>> gram_images(const EvenLattice& l,
                                              const std::vector<ShortVector>& vecs) {
    std::vector<std::vector<int64_t>> gx(vecs.size(), std::vector<int64_t>(l.rank, 0));
    for (size_t i = 0; i < vecs.size(); ++i)
        for (int a = 0; a < l.rank; ++a) {
            int64_t s = 0;
            for (int b = 0; b < l.rank; ++b)
                s += l.at(a, b) * vecs[i].x[b];
            gx[i][a] = s;
        }
    return gx;
}

} // namespace

RationalSiegel theta_series_serial(const EvenLattice& l, int degree, int64_t bound) {
    theta_validate(l, degree, bound);
    std::vector<ShortVector> vecs = short_vectors_serial(l, 2 * bound);
    auto gx = gram_images(l, vecs);
    CountMap counts;
    std::vector<int> pick(degree, 0);
    SymMat s = SymMat::zero(degree);
    count_tuples(vecs, gx, degree, 0, pick, s, counts);
    return theta_from_counts(l, degree, bound, counts);
}

RationalSiegel theta_series(const EvenLattice& l, int degree, int64_t bound) {
    theta_validate(l, degree, bound);
    std::vector<ShortVector> vecs = short_vectors(l, 2 * bound);
    auto gx = gram_images(l, vecs);

    std::vector<CountMap> partial;
#ifdef _OPENMP
    int threads = omp_get_max_threads();
#else
    int threads = 1;
#endif
    partial.resize(static_cast<size_t>(threads));
#ifdef _OPENMP
#pragma omp parallel num_threads(threads)
#endif
    {
#ifdef _OPENMP
        int tid = omp_get_thread_num();
#else
        int tid = 0;
#endif
        CountMap& mine = partial[static_cast<size_t>(tid)];
        std::vector<int> pick(degree, 0);
        SymMat s = SymMat::zero(degree);
#ifdef _OPENMP
#pragma omp for schedule(dynamic)
#endif
        for (size_t i = 0; i < vecs.size(); ++i) {
            pick[0] = static_cast<int>(i);
            s.at(0, 0) = vecs[i].norm;
            if (degree == 1)
                ++mine[s];
            else
                count_tuples(vecs, gx, degree, 1, pick, s, mine);
        }
    }
    // integer counts merge by addition, so the result is schedule-independent
    CountMap counts;
    for (const auto& m : partial)
        for (const auto& [k, v] : m)
            counts[k] += v;
    return theta_from_counts(l, degree, bound, counts);
}

RationalSiegel classical_degree1(ClassicalForm which, int64_t bound) {
    if (bound < 0)
        throw Error("InvalidArgument", "truncation must be nonnegative");
    RationalSiegel out;
    out.degree = 1;
    out.truncation = bound;
    out.complete = true;

    auto idx = [](int64_t n) {
        SymMat t = SymMat::zero(1);
        t.at(0, 0) = 2 * n;
        return t;
    };

    if (which == ClassicalForm::e4 || which == ClassicalForm::e6) {
        int64_t power = which == ClassicalForm::e4 ? 3 : 5;
        Integer scale = which == ClassicalForm::e4 ? 240 : -504;
        out.weight = which == ClassicalForm::e4 ? 4 : 6;
        out.insert(idx(0), Rational(1));
        for (int64_t n = 1; n <= bound; ++n) {
            Integer sigma = 0;
            for (int64_t d : divisors(n)) {
                Integer dp;
                mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(d),
                              static_cast<unsigned long>(power));
                sigma += dp;
            }
            out.insert(idx(n), Rational(scale * sigma));
        }
        return out;
    }

    out.weight = 12;
    if (bound == 0)
        return out;
    // tau(n) via q prod (1 - q^j)^24: accumulate the product truncated at q^{bound-1}
    std::vector<Integer> prod(static_cast<size_t>(bound), 0);
    prod[0] = 1;
    for (int64_t j = 1; j < bound; ++j) {
        // factor (1 - q^j)^24 truncated
        std::vector<Integer> factor(static_cast<size_t>(bound), 0);
        Integer binom = 1;
        for (int64_t i = 0; i <= 24 && i * j < bound; ++i) {
            factor[static_cast<size_t>(i * j)] = (i % 2 == 0) ? binom : -binom;
            binom = binom * (24 - i) / (i + 1);
        }
        std::vector<Integer> next(static_cast<size_t>(bound), 0);
        for (int64_t a = 0; a < bound; ++a) {
            if (prod[static_cast<size_t>(a)] == 0)
                continue;
            for (int64_t b = 0; a + b < bound; b += j)
                if (factor[static_cast<size_t>(b)] != 0)
                    next[static_cast<size_t>(a + b)] +=
                        prod[static_cast<size_t>(a)] * factor[static_cast<size_t>(b)];
        }
        prod = std::move(next);
    }
    for (int64_t n = 1; n <= bound; ++n)
        out.insert(idx(n), Rational(prod[static_cast<size_t>(n - 1)]));
    return out;
}

Cyclotomic torsion_matrix_det(int64_t n) {
    Integer nz(static_cast<long>(n));
    if (n < 3 || n % 2 == 0 || !is_prime(nz))
        throw Error("InvalidArgument",
                    "the root-of-unity matrix is defined for odd primes only");
    int size = static_cast<int>(n) - 1;
    std::vector<Cyclotomic> a;
    a.reserve(static_cast<size_t>(size) * size);
    for (int64_t r = (3 - n) / 2; r <= (n - 1) / 2; ++r)
        for (int64_t b = 0; b <= n - 2; ++b)
            a.push_back(root_of_unity(mod_nonneg(b * r, n), n));

    // Laplace expansion over column subsets; no division needed
    size_t full = size_t(1) << size;
    std::vector<Cyclotomic> dp(full, Cyclotomic::zero(n));
    dp[0] = Cyclotomic::one(n);
    for (size_t mask = 1; mask < full; ++mask) {
        int row = 0;
        for (size_t t = mask; t; t &= t - 1)
            ++row;
        --row; // rows 0..row used by this subset
        int pos = 0;
        Cyclotomic acc = Cyclotomic::zero(n);
        for (int col = 0; col < size; ++col) {
            if (!(mask & (size_t(1) << col)))
                continue;
            const Cyclotomic& entry = a[static_cast<size_t>(row) * size + col];
            Cyclotomic term = entry * dp[mask ^ (size_t(1) << col)];
            acc = ((row + pos) % 2 == 0) ? acc + term : acc - term;
            ++pos;
        }
        dp[mask] = acc;
    }
    return dp[full - 1];
}

} // namespace siegel
