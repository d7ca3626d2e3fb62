#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "siegel/symmat.hpp"

namespace siegel {

// vanishing order of an expansion modulo a prime (or prime ideal):
//   not_vanishing  some coefficient with t_ii = 0 for all i survives reduction
//   exact          every surviving index has max_i t_ii > value, and some
//                  surviving index has max_i t_ii <= value + 1
//   at_least       everything up to the truncation dies; value = truncation
struct OrderResult {
    enum class Kind { not_vanishing, exact, at_least };

    Kind kind = Kind::not_vanishing;
    int64_t value = 0;
    std::optional<SymMat> witness;                   // minimal surviving index
    std::optional<std::vector<int64_t>> witness_r;   // set for Jacobi expansions

    static OrderResult not_vanishing(SymMat w) {
        return {Kind::not_vanishing, 0, std::move(w), std::nullopt};
    }
    static OrderResult exact(int64_t l, SymMat w) {
        return {Kind::exact, l, std::move(w), std::nullopt};
    }
    static OrderResult at_least(int64_t d) { return {Kind::at_least, d, std::nullopt, std::nullopt}; }
};

} // namespace siegel
