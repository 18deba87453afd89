#ifndef ZBD_REDUCTIONS_HPP
#define ZBD_REDUCTIONS_HPP

#include <array>
#include <string>
#include <vector>

#include "zbd/graph.hpp"
#include "zbd/splitting.hpp"

namespace zbd {

struct Literal {
    int var = 0;  // 0-based
    bool positive = true;
};

// 3-CNF; repeated literals inside a clause are allowed
struct CnfInstance {
    int num_vars = 0;
    std::vector<std::array<Literal, 3>> clauses;
};

// "p cnf n m" header, clauses terminated by 0; every clause must have
// exactly 3 literals. Throws FormatError (from graph_io) on violations.
CnfInstance parse_dimacs_cnf(const std::string& input);

bool satisfies(const CnfInstance& instance, const std::vector<bool>& assignment);

enum class VertexColor { Uncolored, Red, Green };

struct GadgetGraph {
    Graph graph;
    std::vector<VertexColor> color_of;   // per vertex
    std::vector<std::string> role_of;    // per vertex, unique labels
};

// sidecar JSON {"colors": {...}, "roles": {...}}
std::string gadget_sidecar_json(const GadgetGraph& g);

enum class ReductionTarget { Zykov, BD };
enum class LiteralWiring { Text, Symmetric };

// Compiled 3-SAT instance with index tables for the named gadget vertices.
struct SatGadget {
    GadgetGraph gadget;
    ReductionTarget target;
    std::vector<int> t, f;                        // per variable
    std::vector<std::vector<int>> b;              // per variable: b_{i,1..3} or b_{i,1..5}
    std::vector<std::vector<int>> c;              // per clause: c_{j,1..6} or c_{j,1..8}
    std::vector<std::array<std::vector<int>, 3>> d;  // per clause, per position
    std::vector<std::array<int, 3>> e;            // BD only: e_{j,k}
    VertexSet greens;                             // all green vertices
};

SatGadget sat_to_zykov(const CnfInstance& instance);
SatGadget sat_to_bd(const CnfInstance& instance, LiteralWiring wiring = LiteralWiring::Symmetric);

// the proof's splitting set for a satisfying assignment; throws if the
// assignment leaves a clause unsatisfied
VertexSet assignment_to_splitting_set(const CnfInstance& instance,
                                      const std::vector<bool>& assignment, const SatGadget& gadget);

// reads the truth assignment off a non-empty splitting set; throws if s is
// not a valid set for the gadget's mode
std::vector<bool> splitting_set_to_assignment(const CnfInstance& instance, const SatGadget& gadget,
                                              const VertexSet& s);

// (subdivide(g,4), k + 2|E|)
std::pair<Graph, long long> mis_reduction(const Graph& g, long long k);

struct UnequalityGadget {
    Graph graph;
    int port_a = 0;
    int port_b = 0;
};

// c-chromatic gadget whose ports get distinct colors in every proper
// c-coloring; supported for c in {2, 3}
UnequalityGadget unequality_gadget(int c);

// every edge replaced by a fresh unequality gadget with the ports identified
// to the endpoints; preserves c-colorability
Graph coloring_reduction(const Graph& g, int c);

}  // namespace zbd

#endif
