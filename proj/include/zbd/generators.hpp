#ifndef ZBD_GENERATORS_HPP
#define ZBD_GENERATORS_HPP

#include <map>
#include <string>
#include <vector>

#include "zbd/graph.hpp"

namespace zbd {

// Graph plus construction-stage labels. Stage s > 1 marks vertices added as
// the apex/stable layer of step s (inside whatever nested copy); stage 1 is
// the base. Emitting the stages in decreasing order gives a peel certificate.
struct LayeredGraph {
    Graph graph;
    std::vector<int> stage_of;  // per vertex

    // stage sets, highest stage first, empty stages dropped
    std::vector<VertexSet> stage_layers() const;
};

struct SizeGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Iterated-apex construction; refuses k > 6.
LayeredGraph zykov(int k);

// Stable-set-plus-matching construction with the canonical index-order
// matching; refuses k > 3.
LayeredGraph descartes(int k);

// |V(Z_k)| and |V(D_k)|, computed without building the graph
long long zykov_order(int k);
long long descartes_order(int k);

struct GalleryGraph {
    Graph graph;
    std::map<int, std::string> role_of;    // named vertices only
    std::map<int, std::string> color_of;   // "red"/"green" where the figure colors them
};

// Named graphs: F, Fprime, H, L, tw2, petersen, and parameterized families
// cycle(n), path(n), complete(n), complete_bipartite(a,b), edgeless(n).
GalleryGraph gallery(const std::string& name);

std::vector<std::string> gallery_names();

}  // namespace zbd

#endif
