#ifndef ZBD_RECOGNIZER_HPP
#define ZBD_RECOGNIZER_HPP

#include <optional>
#include <string>
#include <vector>

#include "zbd/graph.hpp"
#include "zbd/splitting.hpp"

namespace zbd {

// Ordered partition A_1..A_t of V(G); layer A_i is a (mode) splitting stable
// set of the graph induced by A_i u ... u A_t.
struct PeelCertificate {
    SplitMode mode = SplitMode::Weak;
    std::vector<VertexSet> layers;
};

// Vertex subset whose induced subgraph has no non-empty (mode) splitting
// stable set; refutes membership for the whole graph.
struct NonMembershipWitness {
    SplitMode mode = SplitMode::Weak;
    VertexSet witness;
};

struct Verdict {
    enum class Kind { Member, NonMember, Unknown };
    Kind kind = Kind::Unknown;
    PeelCertificate certificate;     // valid iff Member
    NonMembershipWitness witness;    // valid iff NonMember
    long long nodes_explored = 0;
    long long budget = 0;
};

Verdict recognize(const Graph& g, SplitMode mode, long long budget = kDefaultSearchBudget);

// diagnostic (when non-null) receives the first violated clause on failure
bool verify_peel(const Graph& g, const PeelCertificate& cert, std::string* diagnostic = nullptr);

// nullopt when the exhaustive re-check runs out of budget
std::optional<bool> verify_non_membership(const Graph& g, const NonMembershipWitness& w,
                                          long long budget = kDefaultSearchBudget);

struct ConsistencyReport {
    Verdict weak;
    Verdict strong;
    bool inconsistent = false;  // Strong Member with Weak NonMember: impossible
};

ConsistencyReport class_consistency(const Graph& g, long long budget = kDefaultSearchBudget);

// Certificate JSON:
//   {"mode": "weak"|"strong", "kind": "peel", "layers": [[int,...],...]}
//   {"mode": "weak"|"strong", "kind": "non_membership", "witness": [int,...]}
std::string certificate_to_json(const PeelCertificate& cert);
std::string certificate_to_json(const NonMembershipWitness& w);

struct ParsedCertificate {
    std::optional<PeelCertificate> peel;
    std::optional<NonMembershipWitness> non_membership;
};

// n is the vertex count of the graph the certificate refers to
ParsedCertificate parse_certificate_json(const std::string& text, int n);

}  // namespace zbd

#endif
