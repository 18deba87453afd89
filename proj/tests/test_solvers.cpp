#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "zbd/solvers.hpp"

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

Graph cycle(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
    return Graph(n, es);
}

Graph complete(int n) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.push_back({u, v});
    return Graph(n, es);
}

// try every assignment of c colors to n vertices
bool brute_colorable(const Graph& g, int c) {
    int n = g.vertex_count();
    std::vector<int> color(n, 0);
    while (true) {
        bool proper = true;
        for (auto [u, v] : g.edges())
            if (color[u] == color[v]) {
                proper = false;
                break;
            }
        if (proper) return true;
        int i = 0;
        while (i < n && ++color[i] == c) color[i++] = 0;
        if (i == n) return false;
    }
}

int brute_mis(const Graph& g) {
    int n = g.vertex_count(), best = 0;
    for (int mask = 0; mask < (1 << n); ++mask) {
        bool stable = true;
        for (auto [u, v] : g.edges())
            if ((mask >> u & 1) && (mask >> v & 1)) {
                stable = false;
                break;
            }
        if (stable) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

}  // namespace

TEST_CASE("chromatic number closed forms") {
    CHECK(exact_chromatic_number(Graph(3, {})) == 1);
    CHECK(exact_chromatic_number(Graph(0, {})) == 0);
    for (int n = 2; n <= 8; ++n) CHECK(exact_chromatic_number(complete(n)) == n);
    for (int n = 4; n <= 10; n += 2) CHECK(exact_chromatic_number(cycle(n)) == 2);
    for (int n = 3; n <= 9; n += 2) CHECK(exact_chromatic_number(cycle(n)) == 3);
}

TEST_CASE("is_colorable agrees with exhaustive assignment search") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 1 + rng() % 6;
        Graph g = random_graph(rng, n);
        for (int c = 1; c <= 4; ++c) {
            auto got = is_colorable(g, c);
            REQUIRE(got.has_value());
            CHECK(*got == brute_colorable(g, c));
        }
    }
}

TEST_CASE("chromatic number is consistent with is_colorable") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_graph(rng, 1 + rng() % 7);
        auto chi = exact_chromatic_number(g);
        REQUIRE(chi.has_value());
        CHECK(*is_colorable(g, *chi));
        if (*chi > 1) CHECK_FALSE(*is_colorable(g, *chi - 1));
    }
}

TEST_CASE("max independent set agrees with subset enumeration") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + rng() % 10;
        Graph g = random_graph(rng, n, 0.4);
        auto got = exact_max_independent_set(g);
        REQUIRE(got.has_value());
        CHECK(got->size == brute_mis(g));
        CHECK(got->witness.count() == got->size);
        for (auto [u, v] : g.edges()) CHECK_FALSE((got->witness.test(u) && got->witness.test(v)));
    }
}

TEST_CASE("independent set closed forms") {
    CHECK(exact_max_independent_set(complete(7))->size == 1);
    CHECK(exact_max_independent_set(cycle(9))->size == 4);
    CHECK(exact_max_independent_set(Graph(5, {}))->size == 5);
}

TEST_CASE("solvers report Unknown when the budget is too small") {
    // odd cycle: clique bound 2 < greedy bound 3, so a real search runs
    CHECK_FALSE(exact_chromatic_number(cycle(7), 1).has_value());
    CHECK_FALSE(exact_max_independent_set(complete(30), 1).has_value());
}
