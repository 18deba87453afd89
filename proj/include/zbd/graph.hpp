#ifndef ZBD_GRAPH_HPP
#define ZBD_GRAPH_HPP

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zbd {

// Subset of {0..n-1} for a fixed universe size n, stored as a bitmask.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : n_(n), w_((n + 63) / 64, 0) {}

    static VertexSet full(int n) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v) s.set(v);
        return s;
    }
    static VertexSet of(int n, std::initializer_list<int> vs) {
        VertexSet s(n);
        for (int v : vs) s.set(v);
        return s;
    }
    static VertexSet of(int n, const std::vector<int>& vs) {
        VertexSet s(n);
        for (int v : vs) s.set(v);
        return s;
    }

    int universe() const { return n_; }
    bool test(int v) const { return (w_[v >> 6] >> (v & 63)) & 1; }
    void set(int v) { w_[v >> 6] |= uint64_t(1) << (v & 63); }
    void reset(int v) { w_[v >> 6] &= ~(uint64_t(1) << (v & 63)); }

    int count() const;
    bool empty() const;

    VertexSet& operator|=(const VertexSet& o);
    VertexSet& operator&=(const VertexSet& o);
    VertexSet& subtract(const VertexSet& o);
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool intersects(const VertexSet& o) const;
    bool contains(const VertexSet& o) const;  // superset test

    // iteration: first() / next(v) return -1 when exhausted
    int first() const { return next(-1); }
    int next(int v) const;

    std::vector<int> to_vector() const;

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

// Simple undirected graph on dense vertex indices 0..n-1.
// Adjacency lists are kept sorted; parallel edges collapse, self-loops throw.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;

    VertexSet neighbor_set(int v) const;

    // all edges as (u,v) with u<v, lexicographic
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<std::vector<int>> adj_;
};

struct StructureFlags {
    bool is_forest = false;
    bool is_bipartite = false;
    bool is_triangle_free = false;
};

// maximal connected vertex sets, ordered by smallest contained index
std::vector<VertexSet> connected_components(const Graph& g);

// components of g restricted to `within`
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within);

// induced subgraph plus the old->new index map (-1 for vertices outside s)
struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_to_new;
    std::vector<int> new_to_old;
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// shortest cycle length; nullopt for forests
std::optional<int> girth(const Graph& g);

StructureFlags structure_flags(const Graph& g);

// side of a proper 2-coloring (union over components), or nullopt if not bipartite
std::optional<VertexSet> bipartition_side(const Graph& g);

// every edge replaced by a path with `times` internal vertices, new vertices
// appended after the originals in lexicographic edge order
Graph subdivide(const Graph& g, int times);

}  // namespace zbd

#endif
