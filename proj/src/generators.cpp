#include "zbd/generators.hpp"

#include <algorithm>
#include <climits>

namespace zbd {

namespace {

// saturating; -1 means "overflows long long"
long long checked_add(long long a, long long b) {
    if (a < 0 || b < 0 || a > LLONG_MAX - b) return -1;
    return a + b;
}
long long checked_mul(long long a, long long b) {
    if (a < 0 || b < 0) return -1;
    if (a != 0 && b > LLONG_MAX / a) return -1;
    return a * b;
}

struct Building {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> stage;
};

// append a disjoint copy of `part`, return its vertex offset
int append_copy(Building& b, const Building& part) {
    int off = b.n;
    for (auto [u, v] : part.edges) b.edges.emplace_back(u + off, v + off);
    b.stage.insert(b.stage.end(), part.stage.begin(), part.stage.end());
    b.n += part.n;
    return off;
}

std::string size_message(const char* what, int k, long long order) {
    std::string size = order < 0 ? std::string("more than 9.2e18") : std::to_string(order);
    return std::string("refusing ") + what + " k=" + std::to_string(k) + ": the graph would have " +
           size + " vertices";
}

}  // namespace

std::vector<VertexSet> LayeredGraph::stage_layers() const {
    int top = 0;
    for (int s : stage_of) top = std::max(top, s);
    std::vector<VertexSet> layers;
    for (int s = top; s >= 1; --s) {
        VertexSet layer(graph.vertex_count());
        for (int v = 0; v < graph.vertex_count(); ++v)
            if (stage_of[v] == s) layer.set(v);
        if (!layer.empty()) layers.push_back(std::move(layer));
    }
    return layers;
}

long long zykov_order(int k) {
    std::vector<long long> n{0, 1};
    long long sum = 1, prod = 1;
    for (int i = 2; i <= k; ++i) {
        long long ni = checked_add(sum, prod);
        n.push_back(ni);
        if (ni < 0) return -1;
        sum = checked_add(sum, ni);
        prod = checked_mul(prod, ni);
        if ((sum < 0 || prod < 0) && i < k) return -1;
    }
    return n[k];
}

long long descartes_order(int k) {
    long long n = 1;
    for (int i = 1; i < k; ++i) {
        // S has i(n-1)+1 vertices, one copy of D_i per n-subset of S
        long long s = checked_add(checked_mul(i, n - 1), 1);
        if (s < 0) return -1;
        // C(s, n)
        long long copies = 1;
        for (long long j = 1; j <= n; ++j) {
            copies = checked_mul(copies, s - n + j);
            if (copies < 0) return -1;
            copies /= j;
        }
        n = checked_add(s, checked_mul(copies, n));
        if (n < 0) return -1;
    }
    return n;
}

LayeredGraph zykov(int k) {
    if (k < 1) throw std::invalid_argument("zykov: k must be >= 1");
    if (k > 6) throw SizeGuardError(size_message("zykov", k, zykov_order(k)));
    std::vector<Building> z(k + 1);
    z[1] = Building{1, {}, {1}};
    for (int step = 2; step <= k; ++step) {
        Building& cur = z[step];
        std::vector<int> offsets;
        for (int i = 1; i < step; ++i) offsets.push_back(append_copy(cur, z[i]));
        // one apex per tuple (v_1..v_{step-1}), v_1 most significant
        std::vector<int> tuple(step - 1, 0);
        bool done = false;
        while (!done) {
            int apex = cur.n++;
            cur.stage.push_back(step);
            for (int i = 0; i < step - 1; ++i)
                cur.edges.emplace_back(offsets[i] + tuple[i], apex);
            int pos = step - 2;
            while (pos >= 0) {
                if (++tuple[pos] < z[pos + 1].n) break;
                tuple[pos--] = 0;
            }
            done = pos < 0;
        }
    }
    LayeredGraph out;
    out.graph = Graph(z[k].n, z[k].edges);
    out.stage_of = std::move(z[k].stage);
    return out;
}

LayeredGraph descartes(int k) {
    if (k < 1) throw std::invalid_argument("descartes: k must be >= 1");
    if (k > 3) throw SizeGuardError(size_message("descartes", k, descartes_order(k)));
    Building cur{1, {}, {1}};
    for (int step = 2; step <= k; ++step) {
        Building prev = std::move(cur);
        cur = Building{};
        int n = prev.n;
        int s_size = (step - 1) * (n - 1) + 1;
        cur.n = s_size;
        cur.stage.assign(s_size, step);
        // n-subsets of S in lexicographic order
        std::vector<int> subset(n);
        for (int i = 0; i < n; ++i) subset[i] = i;
        while (true) {
            int off = append_copy(cur, prev);
            for (int i = 0; i < n; ++i) cur.edges.emplace_back(subset[i], off + i);
            int pos = n - 1;
            while (pos >= 0 && subset[pos] == s_size - n + pos) --pos;
            if (pos < 0) break;
            ++subset[pos];
            for (int i = pos + 1; i < n; ++i) subset[i] = subset[i - 1] + 1;
        }
    }
    LayeredGraph out;
    out.graph = Graph(cur.n, cur.edges);
    out.stage_of = std::move(cur.stage);
    return out;
}

namespace {

GalleryGraph make_f() {
    // 5-prism: w_1..w_5 = 0..4, u_1..u_5 = 5..9, matching w_i u_i
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 1) % 5);
        edges.emplace_back(i, 5 + i);
    }
    GalleryGraph g;
    g.graph = Graph(10, edges);
    for (int i = 0; i < 5; ++i) {
        g.role_of[i] = "w" + std::to_string(i + 1);
        g.role_of[5 + i] = "u" + std::to_string(i + 1);
    }
    return g;
}

GalleryGraph make_fprime() {
    // C_5 on u_1..u_5 = 0..4 plus w_1,w_2,w_3 = 5,6,7
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(0, 5);  // u1 w1
    edges.emplace_back(0, 6);  // u1 w2
    edges.emplace_back(6, 7);  // w2 w3
    edges.emplace_back(5, 3);  // w1 u4
    edges.emplace_back(7, 3);  // w3 u4
    edges.emplace_back(6, 2);  // w2 u3
    GalleryGraph g;
    g.graph = Graph(8, edges);
    for (int i = 0; i < 5; ++i) g.role_of[i] = "u" + std::to_string(i + 1);
    for (int i = 0; i < 3; ++i) g.role_of[5 + i] = "w" + std::to_string(i + 1);
    return g;
}

// vertex order: v, v', v'', a, a', a'', a'''
std::vector<std::pair<int, int>> h_edges(int v0, int v1, int v2, int a0, int a1, int a2, int a3) {
    return {{v0, a0}, {v0, a1}, {a0, v1}, {a1, v1}, {v1, a2}, {v1, a3}, {a2, v2}, {a3, v2}, {v0, v2}};
}

GalleryGraph make_h() {
    GalleryGraph g;
    g.graph = Graph(7, h_edges(0, 1, 2, 3, 4, 5, 6));
    const char* roles[] = {"v", "v'", "v''", "a", "a'", "a''", "a'''"};
    for (int i = 0; i < 7; ++i) {
        g.role_of[i] = roles[i];
        g.color_of[i] = i < 3 ? "red" : "green";
    }
    return g;
}

GalleryGraph make_l() {
    // a = 0, a' = 1, three internally disjoint paths of length 3
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 3; ++i) {
        int x = 2 + 2 * i, y = 3 + 2 * i;
        edges.emplace_back(0, x);
        edges.emplace_back(x, y);
        edges.emplace_back(y, 1);
    }
    GalleryGraph g;
    g.graph = Graph(8, edges);
    g.role_of[0] = "a";
    g.role_of[1] = "a'";
    g.color_of[0] = g.color_of[1] = "green";
    for (int v = 2; v < 8; ++v) g.color_of[v] = "red";
    return g;
}

GalleryGraph make_tw2() {
    // two copies of H glued along one edge with the forced-in/forced-out roles
    // of its endpoints swapped between the copies
    GalleryGraph g;
    auto edges = h_edges(0, 3, 6, 1, 2, 4, 5);      // first copy
    auto more = h_edges(4, 8, 11, 7, 6, 9, 10);     // second copy; shares edge 4-6
    edges.insert(edges.end(), more.begin(), more.end());
    g.graph = Graph(12, edges);
    g.role_of[4] = "a''/v";   // in for copy 1, out for copy 2
    g.role_of[6] = "v''/a'";  // out for copy 1, in for copy 2
    return g;
}

GalleryGraph make_petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        edges.emplace_back(i, 5 + i);
    }
    GalleryGraph g;
    g.graph = Graph(10, edges);
    return g;
}

bool parse_family(const std::string& name, const std::string& prefix, std::vector<int>& args) {
    if (name.size() < prefix.size() + 2 || name.compare(0, prefix.size(), prefix) != 0 ||
        name[prefix.size()] != '(' || name.back() != ')')
        return false;
    std::string inner = name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
    args.clear();
    size_t pos = 0;
    while (pos <= inner.size()) {
        size_t comma = inner.find(',', pos);
        std::string tok = inner.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            args.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw std::invalid_argument("gallery: bad parameter \"" + tok + "\" in " + name);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return true;
}

}  // namespace

GalleryGraph gallery(const std::string& name) {
    if (name == "F") return make_f();
    if (name == "Fprime" || name == "F'") return make_fprime();
    if (name == "H") return make_h();
    if (name == "L") return make_l();
    if (name == "tw2") return make_tw2();
    if (name == "petersen") return make_petersen();
    std::vector<int> args;
    if (parse_family(name, "cycle", args) && args.size() == 1) {
        int n = args[0];
        if (n < 3) throw std::invalid_argument("cycle(n) needs n >= 3");
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
        return GalleryGraph{Graph(n, edges), {}, {}};
    }
    if (parse_family(name, "path", args) && args.size() == 1) {
        int n = args[0];
        if (n < 1) throw std::invalid_argument("path(n) needs n >= 1");
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
        return GalleryGraph{Graph(n, edges), {}, {}};
    }
    if (parse_family(name, "complete_bipartite", args) && args.size() == 2) {
        int a = args[0], b = args[1];
        if (a < 0 || b < 0) throw std::invalid_argument("complete_bipartite needs a,b >= 0");
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
        return GalleryGraph{Graph(a + b, edges), {}, {}};
    }
    if (parse_family(name, "complete", args) && args.size() == 1) {
        int n = args[0];
        if (n < 0) throw std::invalid_argument("complete(n) needs n >= 0");
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
        return GalleryGraph{Graph(n, edges), {}, {}};
    }
    if (parse_family(name, "edgeless", args) && args.size() == 1) {
        if (args[0] < 0) throw std::invalid_argument("edgeless(n) needs n >= 0");
        return GalleryGraph{Graph(args[0], {}), {}, {}};
    }
    throw std::invalid_argument("gallery: unknown graph \"" + name + "\"");
}

std::vector<std::string> gallery_names() {
    return {"F",        "Fprime",  "H",      "L",
            "tw2",      "petersen", "cycle(n)", "path(n)",
            "complete(n)", "complete_bipartite(a,b)", "edgeless(n)"};
}

}  // namespace zbd
