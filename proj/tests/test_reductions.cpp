#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "zbd/graph_io.hpp"
#include "zbd/reductions.hpp"
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

// all triples over the literals of `vars` variables, up to within-clause order
std::vector<std::array<Literal, 3>> all_clauses(int vars) {
    std::vector<Literal> lits;
    for (int i = 0; i < vars; ++i) {
        lits.push_back({i, true});
        lits.push_back({i, false});
    }
    std::vector<std::array<Literal, 3>> out;
    for (size_t a = 0; a < lits.size(); ++a)
        for (size_t b = a; b < lits.size(); ++b)
            for (size_t c = b; c < lits.size(); ++c)
                out.push_back({lits[a], lits[b], lits[c]});
    return out;
}

std::optional<std::vector<bool>> first_satisfying(const CnfInstance& inst) {
    for (int mask = 0; mask < (1 << inst.num_vars); ++mask) {
        std::vector<bool> a(inst.num_vars);
        for (int i = 0; i < inst.num_vars; ++i) a[i] = mask >> i & 1;
        if (satisfies(inst, a)) return a;
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("parse_dimacs_cnf") {
    CnfInstance inst = parse_dimacs_cnf("c comment\np cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n");
    CHECK(inst.num_vars == 3);
    REQUIRE(inst.clauses.size() == 2);
    CHECK(inst.clauses[0][1].var == 1);
    CHECK_FALSE(inst.clauses[0][1].positive);
    CHECK_THROWS_AS(parse_dimacs_cnf("p cnf 2 1\n1 2 0\n"), FormatError);     // 2 literals
    CHECK_THROWS_AS(parse_dimacs_cnf("p cnf 2 1\n1 2 1 2 0\n"), FormatError); // 4 literals
    CHECK_THROWS_AS(parse_dimacs_cnf("p cnf 1 1\n1 2 1 0\n"), FormatError);   // var range
    CHECK_THROWS_AS(parse_dimacs_cnf("1 1 1 0\n"), FormatError);              // no header
    CHECK_THROWS_AS(parse_dimacs_cnf("p cnf 1 2\n1 1 1 0\n"), FormatError);   // count wrong
}

TEST_CASE("satisfies") {
    CnfInstance inst = parse_dimacs_cnf("p cnf 2 2\n1 -2 1 0\n-1 2 2 0\n");
    CHECK(satisfies(inst, {true, true}));
    CHECK_FALSE(satisfies(inst, {false, true}));
    CHECK(satisfies(inst, {false, false}));
}

TEST_CASE("sat_to_zykov shape") {
    for (int n = 1; n <= 2; ++n) {
        CnfInstance inst;
        inst.num_vars = n;
        inst.clauses.push_back({Literal{0, true}, Literal{0, false}, Literal{n - 1, true}});
        for (int m = 1; m <= 2; ++m) {
            if (m == 2) inst.clauses.push_back(inst.clauses[0]);
            SatGadget g = sat_to_zykov(inst);
            CHECK(g.gadget.graph.vertex_count() == 7 + 5 * n + 21 * static_cast<int>(inst.clauses.size()));
            CHECK(structure_flags(g.gadget.graph).is_triangle_free);
            // 4 greens per clause, 2 per variable gadget... 1 per variable (b2) plus H's 4
            CHECK(g.greens.count() == 4 + n + 4 * static_cast<int>(inst.clauses.size()));
        }
    }
}

TEST_CASE("zykov canonical splitting set is valid for every small satisfiable instance") {
    for (int vars = 1; vars <= 2; ++vars) {
        auto clauses = all_clauses(vars);
        for (const auto& c : clauses) {
            CnfInstance inst;
            inst.num_vars = vars;
            inst.clauses = {c};
            auto assignment = first_satisfying(inst);
            REQUIRE(assignment.has_value());  // single clauses are always satisfiable
            SatGadget g = sat_to_zykov(inst);
            VertexSet a = assignment_to_splitting_set(inst, *assignment, g);
            CHECK(is_splitting(g.gadget.graph, a, SplitMode::Weak));
            CHECK(verify_stable_forest_partition(g.gadget.graph, a));
            CHECK(splitting_set_to_assignment(inst, g, a) == *assignment);
        }
    }
}

TEST_CASE("assignment_to_splitting_set rejects non-models") {
    CnfInstance inst = parse_dimacs_cnf("p cnf 1 1\n1 1 1 0\n");
    SatGadget g = sat_to_zykov(inst);
    CHECK_THROWS_AS(assignment_to_splitting_set(inst, {false}, g), std::invalid_argument);
}

TEST_CASE("splitting_set_to_assignment validates its input") {
    CnfInstance inst = parse_dimacs_cnf("p cnf 1 1\n1 1 1 0\n");
    SatGadget g = sat_to_zykov(inst);
    CHECK_THROWS(splitting_set_to_assignment(inst, g, VertexSet(g.gadget.graph.vertex_count())));
    VertexSet junk(g.gadget.graph.vertex_count());
    junk.set(0);
    junk.set(1);  // adjacent H vertices: not even stable
    CHECK_THROWS(splitting_set_to_assignment(inst, g, junk));
}

TEST_CASE("sat_to_bd shape and canonical strong splitting set") {
    CnfInstance inst = parse_dimacs_cnf("p cnf 1 1\n1 -1 1 0\n");
    SatGadget g = sat_to_bd(inst);
    CHECK(g.gadget.graph.vertex_count() == 281);
    CHECK(structure_flags(g.gadget.graph).is_triangle_free);
    VertexSet s = assignment_to_splitting_set(inst, {true}, g);
    CHECK(is_splitting(g.gadget.graph, s, SplitMode::Strong));
    CHECK(verify_stable_forest_partition(g.gadget.graph, s));
    CHECK(splitting_set_to_assignment(inst, g, s) == std::vector<bool>{true});
}

TEST_CASE("sat_to_bd text wiring differs only in the negative-literal edges") {
    CnfInstance inst = parse_dimacs_cnf("p cnf 1 1\n-1 -1 -1 0\n");
    Graph sym = sat_to_bd(inst, LiteralWiring::Symmetric).gadget.graph;
    Graph text = sat_to_bd(inst, LiteralWiring::Text).gadget.graph;
    CHECK(sym.vertex_count() == text.vertex_count());
    CHECK(sym.edge_count() == text.edge_count());
    CHECK_FALSE(sym == text);
    CnfInstance pos = parse_dimacs_cnf("p cnf 1 1\n1 1 1 0\n");
    CHECK(sat_to_bd(pos, LiteralWiring::Symmetric).gadget.graph ==
          sat_to_bd(pos, LiteralWiring::Text).gadget.graph);
}

TEST_CASE("gadget sidecar JSON is deterministic and complete") {
    CnfInstance inst = parse_dimacs_cnf("p cnf 1 1\n1 1 1 0\n");
    SatGadget g = sat_to_zykov(inst);
    std::string j = gadget_sidecar_json(g.gadget);
    CHECK(j == gadget_sidecar_json(g.gadget));
    CHECK(j.find("\"colors\"") != std::string::npos);
    CHECK(j.find("\"roles\"") != std::string::npos);
    CHECK(j.find("a'''") != std::string::npos);
}

TEST_CASE("mis_reduction transfers the independence number") {
    std::mt19937 rng(89);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + rng() % 6;
        Graph g = random_graph(rng, n);
        auto [h, bound] = mis_reduction(g, 0);
        CHECK(h.vertex_count() == g.vertex_count() + 4 * g.edge_count());
        int alpha_g = exact_max_independent_set(g)->size;
        int alpha_h = exact_max_independent_set(h)->size;
        CHECK(alpha_h == alpha_g + 2 * g.edge_count());
        CHECK(bound == 2 * g.edge_count());
    }
}

TEST_CASE("unequality gadget for two colors") {
    UnequalityGadget ug = unequality_gadget(2);
    CHECK(ug.graph.vertex_count() == 9);
    CHECK(ug.graph.edge_count() == 8);
    CHECK(*is_colorable(ug.graph, 2));
    // every proper 2-coloring puts the ports in different classes
    int n = ug.graph.vertex_count();
    int proper = 0;
    for (int mask = 0; mask < (1 << n); ++mask) {
        bool ok = true;
        for (auto [u, v] : ug.graph.edges())
            if ((mask >> u & 1) == (mask >> v & 1)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        ++proper;
        CHECK((mask >> ug.port_a & 1) != (mask >> ug.port_b & 1));
    }
    CHECK(proper > 0);
}

TEST_CASE("coloring_reduction preserves 2-colorability") {
    std::mt19937 rng(97);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + rng() % 4;
        Graph g = random_graph(rng, n, 0.5);
        Graph h = coloring_reduction(g, 2);
        CHECK(h.vertex_count() == g.vertex_count() + 7 * g.edge_count());
        CHECK(*is_colorable(g, 2) == *is_colorable(h, 2));
    }
}
