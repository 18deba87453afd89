#include "zbd/recognizer.hpp"

#include <cstdint>
#include <unordered_set>

#include <json.hpp>

namespace zbd {

namespace {

uint64_t low_mask(const VertexSet& s) {
    uint64_t m = 0;
    for (int v = s.first(); v != -1; v = s.next(v)) m |= uint64_t(1) << v;
    return m;
}

// Peeling search inside one connected component of the input graph,
// working on the component's induced subgraph (local indices).
struct PeelSearch {
    const Graph& g;  // component subgraph
    SplitMode mode;
    long long& budget;
    bool exhausted = false;
    std::optional<VertexSet> witness;  // first subset found with no non-empty splitting set
    bool memoize;
    std::unordered_set<uint64_t> failed;

    PeelSearch(const Graph& g, SplitMode mode, long long& budget)
        : g(g), mode(mode), budget(budget), memoize(g.vertex_count() <= 63) {}

    // peel layers of G[state], or nullopt on failure/budget
    std::optional<std::vector<VertexSet>> solve(const VertexSet& state) {
        std::vector<VertexSet> layers;
        for (const auto& comp : connected_components(g, state)) {
            auto sub = solve_component(comp);
            if (!sub) return std::nullopt;
            for (auto& layer : *sub) layers.push_back(std::move(layer));
        }
        return layers;
    }

    std::optional<std::vector<VertexSet>> solve_component(const VertexSet& comp) {
        uint64_t key = memoize ? low_mask(comp) : 0;
        if (memoize && failed.count(key)) return std::nullopt;
        auto sub = induced_subgraph(g, comp);
        std::optional<std::vector<VertexSet>> result;
        bool any_set = false;
        bool complete = enumerate_splitting_sets(
            sub.graph, mode, budget, [&](const VertexSet& a_local) {
                any_set = true;
                VertexSet a(g.vertex_count());
                for (int v = a_local.first(); v != -1; v = a_local.next(v))
                    a.set(sub.new_to_old[v]);
                VertexSet rest = comp;
                rest.subtract(a);
                auto tail = solve(rest);
                if (tail) {
                    tail->insert(tail->begin(), a);
                    result = std::move(tail);
                    return false;  // stop: first peel in enumeration order wins
                }
                return !exhausted;
            });
        if (!complete) exhausted = true;
        if (result) return result;
        if (exhausted) return std::nullopt;
        if (!any_set && !witness) witness = comp;  // G[comp] has no non-empty splitting set
        if (memoize) failed.insert(key);
        return std::nullopt;
    }
};

// forests peel one low-degree vertex at a time; valid in both modes
std::vector<VertexSet> forest_peel(const Graph& g, const VertexSet& comp) {
    std::vector<VertexSet> layers;
    VertexSet rest = comp;
    while (!rest.empty()) {
        int leaf = -1;
        for (int v = rest.first(); v != -1; v = rest.next(v)) {
            int d = 0;
            for (int u : g.neighbors(v))
                if (rest.test(u)) ++d;
            if (d <= 1) {
                leaf = v;
                break;
            }
        }
        VertexSet layer(g.vertex_count());
        layer.set(leaf);
        layers.push_back(layer);
        rest.reset(leaf);
    }
    return layers;
}

}  // namespace

Verdict recognize(const Graph& g, SplitMode mode, long long budget) {
    Verdict verdict;
    verdict.budget = budget;
    verdict.certificate.mode = mode;
    verdict.witness.mode = mode;
    long long remaining = budget;

    for (const auto& comp : connected_components(g)) {
        auto sub = induced_subgraph(g, comp);
        StructureFlags flags = structure_flags(sub.graph);
        if (flags.is_forest) {
            for (auto& layer : forest_peel(g, comp)) verdict.certificate.layers.push_back(layer);
            continue;
        }
        if (mode == SplitMode::Weak && flags.is_bipartite) {
            auto side = bipartition_side(sub.graph);
            VertexSet first(g.vertex_count()), second(g.vertex_count());
            for (int v = 0; v < sub.graph.vertex_count(); ++v)
                (side->test(v) ? first : second).set(sub.new_to_old[v]);
            verdict.certificate.layers.push_back(first);
            verdict.certificate.layers.push_back(second);
            continue;
        }
        PeelSearch search(sub.graph, mode, remaining);
        auto layers = search.solve(VertexSet::full(sub.graph.vertex_count()));
        verdict.nodes_explored = budget - remaining;
        if (search.exhausted) {
            verdict.kind = Verdict::Kind::Unknown;
            return verdict;
        }
        if (!layers) {
            verdict.kind = Verdict::Kind::NonMember;
            VertexSet w(g.vertex_count());
            for (int v = search.witness->first(); v != -1; v = search.witness->next(v))
                w.set(sub.new_to_old[v]);
            verdict.witness.witness = w;
            return verdict;
        }
        for (const auto& layer_local : *layers) {
            VertexSet layer(g.vertex_count());
            for (int v = layer_local.first(); v != -1; v = layer_local.next(v))
                layer.set(sub.new_to_old[v]);
            verdict.certificate.layers.push_back(layer);
        }
    }
    verdict.nodes_explored = budget - remaining;
    verdict.kind = Verdict::Kind::Member;
    return verdict;
}

bool verify_peel(const Graph& g, const PeelCertificate& cert, std::string* diagnostic) {
    auto fail = [&](const std::string& why) {
        if (diagnostic) *diagnostic = why;
        return false;
    };
    int n = g.vertex_count();
    VertexSet seen(n);
    for (size_t i = 0; i < cert.layers.size(); ++i) {
        if (cert.layers[i].empty()) return fail("layer " + std::to_string(i) + " is empty");
        if (seen.intersects(cert.layers[i]))
            return fail("layer " + std::to_string(i) + " overlaps an earlier layer");
        seen |= cert.layers[i];
    }
    if (!(seen == VertexSet::full(n))) return fail("layers do not cover all vertices");
    VertexSet rest = VertexSet::full(n);
    for (size_t i = 0; i < cert.layers.size(); ++i) {
        auto sub = induced_subgraph(g, rest);
        VertexSet layer_local(sub.graph.vertex_count());
        for (int v = cert.layers[i].first(); v != -1; v = cert.layers[i].next(v))
            layer_local.set(sub.old_to_new[v]);
        if (!is_splitting(sub.graph, layer_local, cert.mode))
            return fail("layer " + std::to_string(i) +
                        " is not a splitting stable set of the remaining graph");
        rest.subtract(cert.layers[i]);
    }
    return true;
}

std::optional<bool> verify_non_membership(const Graph& g, const NonMembershipWitness& w,
                                          long long budget) {
    auto sub = induced_subgraph(g, w.witness);
    auto outcome = find_splitting(sub.graph, w.mode, /*require_nonempty=*/true, budget);
    switch (outcome.status) {
        case SearchOutcome::Status::NoneExists: return true;
        case SearchOutcome::Status::Found: return false;
        case SearchOutcome::Status::BudgetExceeded: return std::nullopt;
    }
    return std::nullopt;
}

ConsistencyReport class_consistency(const Graph& g, long long budget) {
    ConsistencyReport report;
    report.weak = recognize(g, SplitMode::Weak, budget);
    report.strong = recognize(g, SplitMode::Strong, budget);
    report.inconsistent = report.strong.kind == Verdict::Kind::Member &&
                          report.weak.kind == Verdict::Kind::NonMember;
    return report;
}

std::string certificate_to_json(const PeelCertificate& cert) {
    nlohmann::ordered_json j;
    j["mode"] = mode_name(cert.mode);
    j["kind"] = "peel";
    auto layers = nlohmann::ordered_json::array();
    for (const auto& layer : cert.layers) layers.push_back(layer.to_vector());
    j["layers"] = std::move(layers);
    return j.dump();
}

std::string certificate_to_json(const NonMembershipWitness& w) {
    nlohmann::ordered_json j;
    j["mode"] = mode_name(w.mode);
    j["kind"] = "non_membership";
    j["witness"] = w.witness.to_vector();
    return j.dump();
}

ParsedCertificate parse_certificate_json(const std::string& text, int n) {
    auto j = nlohmann::json::parse(text);
    SplitMode mode;
    std::string m = j.at("mode").get<std::string>();
    if (m == "weak")
        mode = SplitMode::Weak;
    else if (m == "strong")
        mode = SplitMode::Strong;
    else
        throw std::invalid_argument("certificate: unknown mode \"" + m + "\"");
    auto read_set = [&](const nlohmann::json& arr) {
        VertexSet s(n);
        for (const auto& e : arr) {
            int v = e.get<int>();
            if (v < 0 || v >= n) throw std::invalid_argument("certificate: vertex index out of range");
            s.set(v);
        }
        return s;
    };
    ParsedCertificate out;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "peel") {
        PeelCertificate cert;
        cert.mode = mode;
        for (const auto& layer : j.at("layers")) cert.layers.push_back(read_set(layer));
        out.peel = std::move(cert);
    } else if (kind == "non_membership") {
        NonMembershipWitness w;
        w.mode = mode;
        w.witness = read_set(j.at("witness"));
        out.non_membership = std::move(w);
    } else {
        throw std::invalid_argument("certificate: unknown kind \"" + kind + "\"");
    }
    return out;
}

}  // namespace zbd
