#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "siegel/expansion.hpp"
#include "siegel/order_result.hpp"
#include "siegel/rational.hpp"

namespace siegel {

enum class PrimeClass { generic, p_ge_5 };

struct SlopeBound {
    int degree = 1;
    PrimeClass prime_class = PrimeClass::generic;
    Rational value;

    bool operator==(const SlopeBound& o) const = default;
};

// diagonal slope: 12 for degree 1, 16 (3/4)^g for p in {2,3},
// 160/9 (3/4)^g for p >= 5 and g >= 2
SlopeBound slope_bound(int degree, const Integer& p);

// one degree step: value shrinks by exactly 3/4
SlopeBound relative_bound_step(const SlopeBound& prev);

// k / slope; coefficients with all t_ii above its floor vanish automatically
Rational sturm_diagonal_bound(int degree, int64_t weight, const Integer& p);
int64_t sturm_cutoff(int degree, int64_t weight, const Integer& p);

OrderResult diagonal_vanishing_order(const RationalSiegel& f, const Integer& p);
OrderResult diagonal_vanishing_order(const CyclotomicSiegel& f, const Integer& p);

enum class Verdict { congruent, not_congruent, integral, not_integral, inconclusive };

std::string verdict_str(Verdict v);

struct Certificate {
    Verdict verdict = Verdict::inconclusive;
    std::string theorem;
    Rational bound;
    int64_t cutoff = 0;
    int64_t indices_checked = 0;
    std::optional<SymMat> witness;
    std::vector<std::pair<std::string, std::string>> inputs; // label -> digest

    bool operator==(const Certificate& o) const = default;
};

// verifies c_F(T) = c_G(T) mod p for every index inside the Sturm box and
// certifies the congruence of the full expansions from that
Certificate check_congruence(const RationalSiegel& lhs, const RationalSiegel& rhs,
                             const Integer& p, const std::string& lhs_digest = "",
                             const std::string& rhs_digest = "");

// verifies integrality (or p-integrality when a prime is given) inside the
// generic Sturm box and certifies it everywhere; stored tail coefficients
// violating the conclusion expose inconsistent input data
Certificate certify_integrality(const RationalSiegel& f,
                                const std::optional<Integer>& p_integral = std::nullopt,
                                const std::string& digest = "");

} // namespace siegel
