#pragma once
// All modules up to isomorphism below a dimension-vector cap, over a finite field.

#include "tilt/module.hpp"

#include <cstdint>
#include <stdexcept>

namespace tilt {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Inventory {
    AlgPtr alg;
    std::vector<std::size_t> bound;
    std::vector<Rep> reps;  // one per isomorphism class, ordered by dimension vector
    std::uint64_t candidates = 0;
};

// 10^7 unless TILT_BUDGET is set.
std::uint64_t default_budget();
// Dimension vector of the regular module.
std::vector<std::size_t> default_bound(const AlgPtr& a);
std::vector<std::size_t> parse_bound(const std::string& text, int vertices);

// Orbits of the base-change group are swept with a bitmap over all arrow-matrix tuples,
// so the first valid tuple of each orbit is its representative.
Inventory enumerate(const AlgPtr& a, const std::vector<std::size_t>& bound, std::uint64_t budget = default_budget());

}  // namespace tilt
