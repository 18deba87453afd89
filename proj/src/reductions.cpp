#include "zbd/reductions.hpp"

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "zbd/graph_io.hpp"

namespace zbd {

namespace {

struct GadgetBuilder {
    std::vector<std::pair<int, int>> edges;
    std::vector<VertexColor> colors;
    std::vector<std::string> roles;

    int add(VertexColor color, std::string role) {
        colors.push_back(color);
        roles.push_back(std::move(role));
        return static_cast<int>(colors.size()) - 1;
    }
    void edge(int u, int v) { edges.emplace_back(u, v); }

    GadgetGraph finish() {
        GadgetGraph g;
        g.graph = Graph(static_cast<int>(colors.size()), edges);
        g.color_of = std::move(colors);
        g.role_of = std::move(roles);
        return g;
    }
};

std::string tag(const char* base, int j) { return std::string(base) + std::to_string(j + 1); }
std::string tag(const char* base, int j, int k) {
    return std::string(base) + std::to_string(j + 1) + "," + std::to_string(k + 1);
}
std::string tag(const char* base, int j, int k, int l) {
    return std::string(base) + std::to_string(j + 1) + "," + std::to_string(k + 1) + "," +
           std::to_string(l + 1);
}

void finish_gadget(SatGadget& out, GadgetBuilder& b) {
    out.gadget = b.finish();
    int n = out.gadget.graph.vertex_count();
    out.greens = VertexSet(n);
    for (int v = 0; v < n; ++v)
        if (out.gadget.color_of[v] == VertexColor::Green) out.greens.set(v);
}

}  // namespace

CnfInstance parse_dimacs_cnf(const std::string& input) {
    std::istringstream in(input);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& what) -> void {
        throw FormatError(what + " (line " + std::to_string(lineno) + ")");
    };
    CnfInstance instance;
    long long num_clauses = -1;
    std::vector<int> pending;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "c") continue;
        if (first == "p") {
            std::string kind;
            long long n;
            if (!(ls >> kind >> n >> num_clauses) || kind != "cnf" || n < 0 || num_clauses < 0)
                fail("malformed problem line \"" + line + "\"");
            instance.num_vars = static_cast<int>(n);
            continue;
        }
        if (num_clauses < 0) fail("clause data before the problem line");
        std::istringstream rest(line);
        long long lit;
        while (rest >> lit) {
            if (lit == 0) {
                if (pending.size() != 3)
                    fail("clause has " + std::to_string(pending.size()) + " literals, expected 3");
                std::array<Literal, 3> clause;
                for (int i = 0; i < 3; ++i)
                    clause[i] = Literal{std::abs(pending[i]) - 1, pending[i] > 0};
                instance.clauses.push_back(clause);
                pending.clear();
            } else {
                if (std::abs(lit) > instance.num_vars) fail("literal out of range");
                pending.push_back(static_cast<int>(lit));
            }
        }
    }
    if (num_clauses < 0) throw FormatError("missing \"p cnf\" line");
    if (!pending.empty()) throw FormatError("unterminated clause at end of input");
    if (static_cast<long long>(instance.clauses.size()) != num_clauses)
        throw FormatError("clause count does not match the problem line");
    return instance;
}

bool satisfies(const CnfInstance& instance, const std::vector<bool>& assignment) {
    for (const auto& clause : instance.clauses) {
        bool ok = false;
        for (const auto& lit : clause)
            if (assignment[lit.var] == lit.positive) {
                ok = true;
                break;
            }
        if (!ok) return false;
    }
    return true;
}

std::string gadget_sidecar_json(const GadgetGraph& g) {
    nlohmann::ordered_json colors = nlohmann::ordered_json::object();
    nlohmann::ordered_json roles = nlohmann::ordered_json::object();
    for (int v = 0; v < g.graph.vertex_count(); ++v) {
        if (g.color_of[v] == VertexColor::Red) colors[std::to_string(v)] = "red";
        if (g.color_of[v] == VertexColor::Green) colors[std::to_string(v)] = "green";
        if (!g.role_of[v].empty()) roles[std::to_string(v)] = g.role_of[v];
    }
    nlohmann::ordered_json j;
    j["colors"] = std::move(colors);
    j["roles"] = std::move(roles);
    return j.dump();
}

SatGadget sat_to_zykov(const CnfInstance& instance) {
    int n = instance.num_vars, m = static_cast<int>(instance.clauses.size());
    SatGadget out;
    out.target = ReductionTarget::Zykov;
    GadgetBuilder b;

    // gadget H: v v' v'' red, a a' a'' a''' green
    int hv[3], ha[4];
    const char* hv_names[] = {"v", "v'", "v''"};
    const char* ha_names[] = {"a", "a'", "a''", "a'''"};
    for (int i = 0; i < 3; ++i) hv[i] = b.add(VertexColor::Red, hv_names[i]);
    for (int i = 0; i < 4; ++i) ha[i] = b.add(VertexColor::Green, ha_names[i]);
    b.edge(hv[0], ha[0]);
    b.edge(hv[0], ha[1]);
    b.edge(ha[0], hv[1]);
    b.edge(ha[1], hv[1]);
    b.edge(hv[1], ha[2]);
    b.edge(hv[1], ha[3]);
    b.edge(ha[2], hv[2]);
    b.edge(ha[3], hv[2]);
    b.edge(hv[0], hv[2]);

    // variable gadgets: 5-cycle t b1 b2 b3 f, green b2, red b1 b3
    for (int i = 0; i < n; ++i) {
        out.t.push_back(b.add(VertexColor::Uncolored, tag("t", i)));
        out.f.push_back(b.add(VertexColor::Uncolored, tag("f", i)));
        std::vector<int> bs;
        VertexColor bc[3] = {VertexColor::Red, VertexColor::Green, VertexColor::Red};
        for (int l = 0; l < 3; ++l) bs.push_back(b.add(bc[l], tag("b", i, l)));
        b.edge(out.t[i], bs[0]);
        b.edge(bs[0], bs[1]);
        b.edge(bs[1], bs[2]);
        b.edge(bs[2], out.f[i]);
        b.edge(out.f[i], out.t[i]);
        out.b.push_back(std::move(bs));
    }

    // clause gadgets: 6-cycle plus three pendant 5-cycles
    for (int j = 0; j < m; ++j) {
        std::vector<int> cs;
        VertexColor cc[6] = {VertexColor::Uncolored, VertexColor::Uncolored, VertexColor::Uncolored,
                             VertexColor::Red,       VertexColor::Green,     VertexColor::Red};
        for (int l = 0; l < 6; ++l) cs.push_back(b.add(cc[l], tag("c", j, l)));
        for (int l = 0; l < 6; ++l) b.edge(cs[l], cs[(l + 1) % 6]);
        std::array<std::vector<int>, 3> ds;
        // d4 is deliberately left uncolored: stability against the green d3
        // already keeps it out of any splitting set, and making it red (hence
        // adjacent to all of H's greens) would break the satisfiable
        // direction whenever a clause is satisfied at two adjacent positions
        VertexColor dc[5] = {VertexColor::Uncolored, VertexColor::Red, VertexColor::Green,
                             VertexColor::Uncolored, VertexColor::Uncolored};
        for (int k = 0; k < 3; ++k) {
            for (int l = 0; l < 5; ++l) ds[k].push_back(b.add(dc[l], tag("d", j, k, l)));
            for (int l = 0; l < 5; ++l) b.edge(ds[k][l], ds[k][(l + 1) % 5]);
            b.edge(cs[k], ds[k][0]);  // c_{j,k} -- d_{j,k,1}
        }
        out.c.push_back(std::move(cs));
        out.d.push_back(std::move(ds));
    }

    // wiring: non-H reds to all of {a,a',a'',a'''}, non-H greens to {v,v'}
    for (int v = 7; v < static_cast<int>(b.colors.size()); ++v) {
        if (b.colors[v] == VertexColor::Red)
            for (int i = 0; i < 4; ++i) b.edge(v, ha[i]);
        if (b.colors[v] == VertexColor::Green) {
            b.edge(v, hv[0]);
            b.edge(v, hv[1]);
        }
    }

    // literal edges: positive occurrence f_i d_{j,k,5}, negative t_i d_{j,k,5}
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < 3; ++k) {
            const Literal& lit = instance.clauses[j][k];
            b.edge(lit.positive ? out.f[lit.var] : out.t[lit.var], out.d[j][k][4]);
        }

    finish_gadget(out, b);
    return out;
}

SatGadget sat_to_bd(const CnfInstance& instance, LiteralWiring wiring) {
    int n = instance.num_vars, m = static_cast<int>(instance.clauses.size());
    SatGadget out;
    out.target = ReductionTarget::BD;
    GadgetBuilder b;

    // variable gadgets: 7-cycle t b1..b5 f, green b3, red b1 b2 b4 b5
    for (int i = 0; i < n; ++i) {
        out.t.push_back(b.add(VertexColor::Uncolored, tag("t", i)));
        out.f.push_back(b.add(VertexColor::Uncolored, tag("f", i)));
        std::vector<int> bs;
        for (int l = 0; l < 5; ++l)
            bs.push_back(b.add(l == 2 ? VertexColor::Green : VertexColor::Red, tag("b", i, l)));
        b.edge(out.t[i], bs[0]);
        for (int l = 0; l + 1 < 5; ++l) b.edge(bs[l], bs[l + 1]);
        b.edge(bs[4], out.f[i]);
        b.edge(out.f[i], out.t[i]);
        out.b.push_back(std::move(bs));
    }

    // clause gadgets: 8-cycle, three 7-cycles, red connectors a_{j,k}, red pendants e_{j,k}
    for (int j = 0; j < m; ++j) {
        std::vector<int> cs;
        VertexColor cc[8] = {VertexColor::Uncolored, VertexColor::Uncolored, VertexColor::Uncolored,
                             VertexColor::Red,       VertexColor::Red,       VertexColor::Green,
                             VertexColor::Red,       VertexColor::Red};
        for (int l = 0; l < 8; ++l) cs.push_back(b.add(cc[l], tag("c", j, l)));
        for (int l = 0; l < 8; ++l) b.edge(cs[l], cs[(l + 1) % 8]);
        std::array<std::vector<int>, 3> ds;
        std::array<int, 3> es;
        VertexColor dc[7] = {VertexColor::Uncolored, VertexColor::Red,  VertexColor::Red,
                             VertexColor::Green,     VertexColor::Red,  VertexColor::Red,
                             VertexColor::Uncolored};
        for (int k = 0; k < 3; ++k) {
            for (int l = 0; l < 7; ++l) ds[k].push_back(b.add(dc[l], tag("d", j, k, l)));
            for (int l = 0; l < 7; ++l) b.edge(ds[k][l], ds[k][(l + 1) % 7]);
            int conn = b.add(VertexColor::Red, tag("a", j, k));
            b.edge(cs[k], conn);
            b.edge(conn, ds[k][0]);
            es[k] = b.add(VertexColor::Red, tag("e", j, k));
            b.edge(ds[k][6], es[k]);
        }
        out.c.push_back(std::move(cs));
        out.d.push_back(std::move(ds));
        out.e.push_back(es);
    }

    // literal edges
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < 3; ++k) {
            const Literal& lit = instance.clauses[j][k];
            if (lit.positive)
                b.edge(out.f[lit.var], out.e[j][k]);
            else if (wiring == LiteralWiring::Symmetric)
                b.edge(out.t[lit.var], out.e[j][k]);
            else
                b.edge(out.t[lit.var], out.d[j][k][6]);
        }

    // gadget L_{k,l}: the ports are identified with the external colored
    // vertices, so only alpha and the per-arm private vertices are fresh
    std::vector<int> ext_green, ext_red;
    for (int v = 0; v < static_cast<int>(b.colors.size()); ++v) {
        if (b.colors[v] == VertexColor::Green) ext_green.push_back(v);
        if (b.colors[v] == VertexColor::Red) ext_red.push_back(v);
    }
    int alpha = b.add(VertexColor::Green, "alpha");
    for (size_t i = 0; i < ext_green.size(); ++i) {
        for (int path = 0; path < 3; ++path) {
            int x = b.add(VertexColor::Red, "Lg" + std::to_string(i + 1) + "p" + std::to_string(path * 2 + 1));
            int y = b.add(VertexColor::Red, "Lg" + std::to_string(i + 1) + "p" + std::to_string(path * 2 + 2));
            b.edge(alpha, x);
            b.edge(x, y);
            b.edge(y, ext_green[i]);
        }
    }
    for (size_t i = 0; i < ext_red.size(); ++i) {
        int gamma = b.add(VertexColor::Green, tag("gamma", static_cast<int>(i)));
        for (int path = 0; path < 3; ++path) {
            int x = b.add(VertexColor::Red, "Lr" + std::to_string(i + 1) + "p" + std::to_string(path * 2 + 1));
            int y = b.add(VertexColor::Red, "Lr" + std::to_string(i + 1) + "p" + std::to_string(path * 2 + 2));
            b.edge(alpha, x);
            b.edge(x, y);
            b.edge(y, gamma);
        }
        int conn = b.add(VertexColor::Red, "Lr" + std::to_string(i + 1) + "c");
        b.edge(gamma, conn);
        b.edge(conn, ext_red[i]);
    }

    finish_gadget(out, b);
    return out;
}

VertexSet assignment_to_splitting_set(const CnfInstance& instance,
                                      const std::vector<bool>& assignment, const SatGadget& gadget) {
    if (!satisfies(instance, assignment))
        throw std::invalid_argument("assignment does not satisfy the instance");
    VertexSet s = gadget.greens;
    int n = instance.num_vars;
    for (int i = 0; i < n; ++i) s.set(assignment[i] ? gadget.t[i] : gadget.f[i]);
    bool bd = gadget.target == ReductionTarget::BD;
    for (size_t j = 0; j < instance.clauses.size(); ++j) {
        int kj = -1;
        for (int k = 0; k < 3; ++k) {
            const Literal& lit = instance.clauses[j][k];
            if (assignment[lit.var] == lit.positive) {
                kj = k;
                break;
            }
        }
        s.set(gadget.c[j][kj]);                       // c_{j,k_j}
        s.set(gadget.d[j][kj][bd ? 6 : 4]);           // d_{j,k_j,7} resp. d_{j,k_j,5}
        for (int k = 0; k < 3; ++k)
            if (k != kj) s.set(gadget.d[j][k][0]);    // d_{j,k',1}
    }
    return s;
}

std::vector<bool> splitting_set_to_assignment(const CnfInstance& instance, const SatGadget& gadget,
                                              const VertexSet& s) {
    SplitMode mode = gadget.target == ReductionTarget::Zykov ? SplitMode::Weak : SplitMode::Strong;
    if (s.empty()) throw std::invalid_argument("splitting set is empty");
    if (!is_splitting(gadget.gadget.graph, s, mode))
        throw std::invalid_argument("not a valid splitting stable set for this gadget");
    std::vector<bool> assignment(instance.num_vars);
    for (int i = 0; i < instance.num_vars; ++i) assignment[i] = s.test(gadget.t[i]);
    if (!satisfies(instance, assignment))
        throw std::runtime_error("internal error: extracted assignment does not satisfy the instance");
    return assignment;
}

std::pair<Graph, long long> mis_reduction(const Graph& g, long long k) {
    return {subdivide(g, 4), k + 2 * g.edge_count()};
}

UnequalityGadget unequality_gadget(int c) {
    if (c != 2 && c != 3) throw std::invalid_argument("unequality_gadget: c must be 2 or 3");
    int p = c == 2 ? 2 : 7;  // K_2 resp. C_7 core
    int s_size = c * (p - 1) + 1;
    std::vector<std::pair<int, int>> edges;
    int next = s_size;
    std::vector<int> subset(p);
    for (int i = 0; i < p; ++i) subset[i] = i;
    bool first_subset = true;
    while (true) {
        int base = next;
        next += p;
        if (p == 2)
            edges.emplace_back(base, base + 1);
        else
            for (int l = 0; l < p; ++l) edges.emplace_back(base + l, base + (l + 1) % p);
        for (int i = 0; i < p; ++i) {
            if (first_subset && i == 0) continue;  // the removed s_1 matching edge
            edges.emplace_back(subset[i], base + i);
        }
        first_subset = false;
        int pos = p - 1;
        while (pos >= 0 && subset[pos] == s_size - p + pos) --pos;
        if (pos < 0) break;
        ++subset[pos];
        for (int i = pos + 1; i < p; ++i) subset[i] = subset[i - 1] + 1;
    }
    UnequalityGadget out;
    out.graph = Graph(next, edges);
    out.port_a = 0;
    out.port_b = p;  // s_{p+1}
    return out;
}

Graph coloring_reduction(const Graph& g, int c) {
    UnequalityGadget ug = unequality_gadget(c);
    int gn = ug.graph.vertex_count();
    auto gadget_edges = ug.graph.edges();
    std::vector<std::pair<int, int>> edges;
    int next = g.vertex_count();
    std::vector<int> map(gn);
    for (auto [u, v] : g.edges()) {
        int fresh = next;
        for (int w = 0; w < gn; ++w) {
            if (w == ug.port_a)
                map[w] = u;
            else if (w == ug.port_b)
                map[w] = v;
            else
                map[w] = fresh++;
        }
        next = fresh;
        for (auto [x, y] : gadget_edges) edges.emplace_back(map[x], map[y]);
    }
    return Graph(next, edges);
}

}  // namespace zbd
