#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "zbd/generators.hpp"
#include "zbd/splitting.hpp"

using namespace zbd;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p = 0.5) {
    std::vector<std::pair<int, int>> es;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) es.push_back({u, v});
    return Graph(n, es);
}

// Straight-from-the-definition re-implementation used as the oracle: stable,
// and every set vertex has at most one neighbor per component of the rest
// (Strong additionally bounds outside vertices' neighbors in the set).
bool oracle_is_splitting(const Graph& g, const VertexSet& a, SplitMode mode) {
    int n = g.vertex_count();
    for (int v = a.first(); v != -1; v = a.next(v))
        for (int u : g.neighbors(v))
            if (a.test(u)) return false;
    // label components of g \ a by DFS
    std::vector<int> comp(n, -1);
    int labels = 0;
    for (int s = 0; s < n; ++s) {
        if (a.test(s) || comp[s] != -1) continue;
        std::vector<int> stack{s};
        comp[s] = labels;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v))
                if (!a.test(u) && comp[u] == -1) {
                    comp[u] = labels;
                    stack.push_back(u);
                }
        }
        ++labels;
    }
    for (int v = a.first(); v != -1; v = a.next(v)) {
        std::vector<int> hits(labels, 0);
        for (int u : g.neighbors(v))
            if (!a.test(u) && ++hits[comp[u]] > 1) return false;
    }
    if (mode == SplitMode::Strong)
        for (int v = 0; v < n; ++v) {
            if (a.test(v)) continue;
            int hits = 0;
            for (int u : g.neighbors(v))
                if (a.test(u) && ++hits > 1) return false;
        }
    return true;
}

std::vector<VertexSet> brute_enumerate(const Graph& g, SplitMode mode) {
    int n = g.vertex_count();
    std::vector<VertexSet> out;
    // lexicographic by bitmask with vertex 0 most significant
    for (long long rank = 1; rank < (1LL << n); ++rank) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if (rank >> (n - 1 - v) & 1) s.set(v);
        if (oracle_is_splitting(g, s, mode)) out.push_back(s);
    }
    return out;
}

}  // namespace

TEST_CASE("is_splitting matches the definitional oracle") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 400; ++trial) {
        int n = 1 + rng() % 7;
        Graph g = random_graph(rng, n);
        VertexSet a(n);
        for (int v = 0; v < n; ++v)
            if (rng() % 2) a.set(v);
        for (SplitMode m : {SplitMode::Weak, SplitMode::Strong})
            CHECK(is_splitting(g, a, m) == oracle_is_splitting(g, a, m));
    }
}

TEST_CASE("the empty set always splits, strong implies weak") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + rng() % 7;
        Graph g = random_graph(rng, n);
        CHECK(is_splitting(g, VertexSet(n), SplitMode::Weak));
        CHECK(is_splitting(g, VertexSet(n), SplitMode::Strong));
        VertexSet a(n);
        for (int v = 0; v < n; ++v)
            if (rng() % 2) a.set(v);
        if (is_splitting(g, a, SplitMode::Strong)) CHECK(is_splitting(g, a, SplitMode::Weak));
    }
}

TEST_CASE("find_splitting agrees with subset enumeration") {
    std::mt19937 rng(59);
    int found = 0, none = 0;
    for (int trial = 0; trial < 500; ++trial) {
        int n = 1 + rng() % 6;
        Graph g = random_graph(rng, n, 0.3 + 0.5 * (rng() % 2));
        for (SplitMode m : {SplitMode::Weak, SplitMode::Strong}) {
            auto brute = brute_enumerate(g, m);
            auto out = find_splitting(g, m, /*require_nonempty=*/true);
            if (brute.empty()) {
                CHECK(out.status == SearchOutcome::Status::NoneExists);
                ++none;
            } else {
                REQUIRE(out.status == SearchOutcome::Status::Found);
                CHECK(is_splitting(g, out.witness, m));
                CHECK_FALSE(out.witness.empty());
                ++found;
            }
        }
    }
    CHECK(found > 100);
    CHECK(none > 100);
}

TEST_CASE("find_splitting with require_nonempty=false returns the empty set") {
    std::mt19937 rng(61);
    Graph g = random_graph(rng, 5);
    auto out = find_splitting(g, SplitMode::Weak, false);
    CHECK(out.status == SearchOutcome::Status::Found);
}

TEST_CASE("enumerate_splitting_sets lists every set once in lex bitmask order") {
    std::mt19937 rng(67);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + rng() % 6;
        Graph g = random_graph(rng, n);
        for (SplitMode m : {SplitMode::Weak, SplitMode::Strong}) {
            std::vector<VertexSet> got;
            long long budget = kDefaultSearchBudget;
            bool complete = enumerate_splitting_sets(g, m, budget, [&](const VertexSet& s) {
                got.push_back(s);
                return true;
            });
            CHECK(complete);
            auto want = brute_enumerate(g, m);
            REQUIRE(got.size() == want.size());
            for (size_t i = 0; i < got.size(); ++i) CHECK(got[i] == want[i]);
        }
    }
}

TEST_CASE("enumeration stops when the callback declines") {
    Graph g(4, {});
    int calls = 0;
    long long budget = kDefaultSearchBudget;
    enumerate_splitting_sets(g, SplitMode::Weak, budget, [&](const VertexSet&) {
        return ++calls < 3;
    });
    CHECK(calls == 3);
}

TEST_CASE("budget exhaustion is reported, never a wrong answer") {
    std::mt19937 rng(71);
    Graph g = random_graph(rng, 6);
    auto out = find_splitting(g, SplitMode::Weak, true, 1);
    CHECK(out.status == SearchOutcome::Status::BudgetExceeded);
    CHECK(out.nodes_explored <= 2);  // stops as soon as the budget trips
}

TEST_CASE("verify_stable_forest_partition") {
    // C_5: removing two non-adjacent vertices leaves P_1 + P_2
    Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(verify_stable_forest_partition(c5, VertexSet::of(5, {0, 2})));
    CHECK_FALSE(verify_stable_forest_partition(c5, VertexSet::of(5, {0, 1})));  // not stable
    // C_5 minus one vertex is P_4 (a forest), but that vertex keeps two
    // neighbors in the one remaining component
    CHECK_FALSE(verify_stable_forest_partition(c5, VertexSet::of(5, {0})));
}

TEST_CASE("propagate reproduces the forcing behavior of H") {
    GalleryGraph h = gallery("H");
    int n = h.graph.vertex_count();
    auto by_role = [&](const std::string& r) {
        for (const auto& [v, role] : h.role_of)
            if (role == r) return v;
        REQUIRE(false);
        return -1;
    };
    VertexSet in(n), out(n);
    in.set(by_role("a"));
    Propagation p = propagate(h.graph, in, out, SplitMode::Weak);
    CHECK_FALSE(p.conflict);
    for (const char* r : {"a", "a'", "a''", "a'''"}) CHECK(p.forced_in.test(by_role(r)));
    for (const char* r : {"v", "v'", "v''"}) CHECK(p.forced_out.test(by_role(r)));
    // and red vertices can never join a non-empty splitting set
    VertexSet in2(n), out2(n);
    in2.set(by_role("v'"));
    CHECK(propagate(h.graph, in2, out2, SplitMode::Weak).conflict);
}

TEST_CASE("propagate never removes valid extensions") {
    std::mt19937 rng(73);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + rng() % 6;
        Graph g = random_graph(rng, n);
        SplitMode m = rng() % 2 ? SplitMode::Weak : SplitMode::Strong;
        VertexSet in(n), out(n);
        for (int v = 0; v < n; ++v) {
            int roll = rng() % 4;
            if (roll == 0) in.set(v);
            if (roll == 1) out.set(v);
        }
        // the splitting sets extending (in, out)
        std::vector<VertexSet> extensions;
        for (const auto& s : brute_enumerate(g, m))
            if (s.contains(in) && !s.intersects(out)) extensions.push_back(s);
        Propagation p = propagate(g, in, out, m);
        if (p.conflict) {
            CHECK(extensions.empty());
        } else {
            for (const auto& s : extensions) {
                CHECK(s.contains(p.forced_in));
                CHECK_FALSE(s.intersects(p.forced_out));
            }
            CHECK(p.forced_in.contains(in));
            CHECK(p.forced_out.contains(out));
        }
    }
}
