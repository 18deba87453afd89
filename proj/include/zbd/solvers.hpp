#ifndef ZBD_SOLVERS_HPP
#define ZBD_SOLVERS_HPP

#include <cstdint>
#include <optional>

#include "zbd/graph.hpp"

namespace zbd {

// Exact solvers return nullopt ("Unknown") when the node budget runs out,
// never a possibly-wrong value.

inline constexpr long long kDefaultSolverBudget = 10'000'000;

// true/false: g has a proper coloring with at most c colors; nullopt on budget.
std::optional<bool> is_colorable(const Graph& g, int c, long long budget = kDefaultSolverBudget);

std::optional<int> exact_chromatic_number(const Graph& g, long long budget = kDefaultSolverBudget);

struct MisResult {
    int size;
    VertexSet witness;
};

std::optional<MisResult> exact_max_independent_set(const Graph& g,
                                                   long long budget = kDefaultSolverBudget);

}  // namespace zbd

#endif
