#ifndef ZBD_SPLITTING_HPP
#define ZBD_SPLITTING_HPP

#include <functional>

#include "zbd/graph.hpp"

namespace zbd {

// Weak: every vertex of A has at most one neighbor in each component of G\A.
// Strong: additionally every vertex outside A has at most one neighbor in A.
enum class SplitMode { Weak, Strong };

inline const char* mode_name(SplitMode m) { return m == SplitMode::Weak ? "weak" : "strong"; }

bool is_stable_set(const Graph& g, const VertexSet& a);

bool is_splitting(const Graph& g, const VertexSet& a, SplitMode mode);

// a is stable, g\a is a forest, and each a-vertex has at most one neighbor
// in each component of the forest
bool verify_stable_forest_partition(const Graph& g, const VertexSet& a);

struct SearchOutcome {
    enum class Status { Found, NoneExists, BudgetExceeded };
    Status status;
    VertexSet witness;  // valid iff status == Found
    long long nodes_explored = 0;
    long long budget = 0;
};

inline constexpr long long kDefaultSearchBudget = 10'000'000;

// Complete branch search for a (mode) splitting stable set, component-local.
// NoneExists is only reported after exhausting the branch tree.
SearchOutcome find_splitting(const Graph& g, SplitMode mode, bool require_nonempty,
                             long long budget = kDefaultSearchBudget);

// Visits every non-empty (mode) splitting stable set of g in increasing
// lexicographic order of the membership bitmask (vertex 0 most significant).
// The callback returns false to stop early. Returns false iff the budget ran
// out before the enumeration was complete (budget is decremented in place).
bool enumerate_splitting_sets(const Graph& g, SplitMode mode, long long& budget,
                              const std::function<bool(const VertexSet&)>& visit);

struct Propagation {
    bool conflict = false;
    VertexSet forced_in;
    VertexSet forced_out;
};

// Sound closure of a partial decision: every (mode) splitting stable set
// extending (in, out) also extends the result; conflict means none exists.
Propagation propagate(const Graph& g, const VertexSet& forced_in, const VertexSet& forced_out,
                      SplitMode mode);

}  // namespace zbd

#endif
