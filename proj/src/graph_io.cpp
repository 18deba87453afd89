#include "zbd/graph_io.hpp"

#include <sstream>

namespace zbd {

namespace {

[[noreturn]] void fail(const std::string& what, int line) {
    throw FormatError(what + " (line " + std::to_string(line) + ")");
}

struct EdgeReader {
    std::istringstream in;
    int line = 0;
    std::string cur;

    explicit EdgeReader(const std::string& text) : in(text) {}

    bool next_line() {
        while (std::getline(in, cur)) {
            ++line;
            // skip blanks
            if (cur.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    }
};

std::pair<long long, long long> parse_int_pair(const std::string& s, int line) {
    std::istringstream ls(s);
    long long a, b;
    if (!(ls >> a >> b)) fail("expected two integers, got \"" + s + "\"", line);
    std::string rest;
    if (ls >> rest) fail("trailing content \"" + rest + "\"", line);
    return {a, b};
}

Graph parse_edge_list(const std::string& input) {
    EdgeReader r(input);
    if (!r.next_line()) fail("missing \"n m\" header", 1);
    auto [n, m] = parse_int_pair(r.cur, r.line);
    if (n < 0 || m < 0) fail("negative count in header", r.line);
    std::vector<std::pair<int, int>> edges;
    for (long long i = 0; i < m; ++i) {
        if (!r.next_line()) fail("expected " + std::to_string(m) + " edges, got " + std::to_string(i), r.line);
        auto [u, v] = parse_int_pair(r.cur, r.line);
        if (u < 0 || v < 0 || u >= n || v >= n) fail("vertex index out of range", r.line);
        if (u == v) fail("self-loop at vertex " + std::to_string(u), r.line);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (r.next_line()) fail("unexpected content after edge list", r.line);
    return Graph(static_cast<int>(n), edges);
}

Graph parse_dimacs(const std::string& input) {
    EdgeReader r(input);
    long long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    while (r.next_line()) {
        std::istringstream ls(r.cur);
        std::string tag;
        ls >> tag;
        if (tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            if (!(ls >> kind >> n >> m) || (kind != "edge" && kind != "col"))
                fail("malformed problem line \"" + r.cur + "\"", r.line);
            if (n < 0 || m < 0) fail("negative count in problem line", r.line);
        } else if (tag == "e") {
            if (n < 0) fail("edge line before problem line", r.line);
            long long u, v;
            if (!(ls >> u >> v)) fail("malformed edge line \"" + r.cur + "\"", r.line);
            if (u < 1 || v < 1 || u > n || v > n) fail("vertex index out of range", r.line);
            if (u == v) fail("self-loop at vertex " + std::to_string(u), r.line);
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
        } else {
            fail("unknown line tag \"" + tag + "\"", r.line);
        }
    }
    if (n < 0) fail("missing problem line", r.line);
    return Graph(static_cast<int>(n), edges);
}

Graph parse_graph6(const std::string& input) {
    // strip trailing whitespace/newline
    std::string s = input;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    size_t pos = 0;
    auto byte_fail = [&](const std::string& what) {
        throw FormatError(what + " (byte " + std::to_string(pos) + ")");
    };
    auto take = [&]() -> int {
        if (pos >= s.size()) byte_fail("truncated graph6 data");
        int c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126) byte_fail("invalid graph6 byte");
        return c - 63;
    };
    if (s.empty()) byte_fail("empty graph6 input");
    long long n;
    int c0 = take();
    if (c0 < 63) {
        n = c0;
    } else {
        int c1 = take();
        if (c1 < 63) {
            int c2 = take();
            n = (static_cast<long long>(c1) << 12) | (static_cast<long long>(c2) << 6);
            n |= take();
        } else {
            n = 0;
            for (int i = 0; i < 6; ++i) n = (n << 6) | take();
        }
    }
    if (n > 5'000'000) byte_fail("graph6 vertex count too large");
    int bits = 0, acc = 0;
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (bits == 0) {
                acc = take();
                bits = 6;
            }
            --bits;
            if ((acc >> bits) & 1) edges.emplace_back(u, v);
        }
    }
    if (pos != s.size()) byte_fail("trailing graph6 data");
    return Graph(static_cast<int>(n), edges);
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::string emit_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

std::string emit_graph6(const Graph& g) {
    long long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int bits = 0, acc = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, static_cast<int>(v)) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                bits = acc = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    return out;
}

}  // namespace

GraphFormat parse_format_name(const std::string& name) {
    if (name == "graph6") return GraphFormat::Graph6;
    if (name == "edge_list") return GraphFormat::EdgeList;
    if (name == "dimacs_graph") return GraphFormat::DimacsGraph;
    throw std::invalid_argument("unknown graph format: " + name);
}

Graph parse_graph(const std::string& input, GraphFormat format) {
    switch (format) {
        case GraphFormat::Graph6: return parse_graph6(input);
        case GraphFormat::EdgeList: return parse_edge_list(input);
        case GraphFormat::DimacsGraph: return parse_dimacs(input);
    }
    throw std::logic_error("unreachable");
}

std::string emit_graph(const Graph& g, GraphFormat format) {
    switch (format) {
        case GraphFormat::Graph6: return emit_graph6(g);
        case GraphFormat::EdgeList: return emit_edge_list(g);
        case GraphFormat::DimacsGraph: return emit_dimacs(g);
    }
    throw std::logic_error("unreachable");
}

}  // namespace zbd
