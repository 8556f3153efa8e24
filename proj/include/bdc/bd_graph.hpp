#pragma once

#include "bdc/bd_data.hpp"

#include <string>
#include <vector>

namespace bdc {

struct Vertex {
    bool upper = true;
    int index = 0;  // in [1, n-1]
    auto operator<=>(const Vertex&) const = default;
};

enum class EdgeKind { Horizontal, Loop, InclinedDown, InclinedUp };

struct Edge {
    EdgeKind kind;
    Vertex src, dst;
    bool horizontal() const { return kind == EdgeKind::Horizontal || kind == EdgeKind::Loop; }
    auto operator<=>(const Edge&) const = default;
};

struct BDGraph {
    int n = 0;
    std::vector<Edge> edges;
};

using AlternatingPath = std::vector<Edge>;

struct PathDecomposition {
    std::vector<AlternatingPath> paths;
    std::vector<AlternatingPath> cycles;
    bool aperiodic() const { return cycles.empty(); }
};

// Horizontal edges i -> n-i in both rows (a single loop at n/2 for even n),
// inclined edges upper i -> lower gamma_r(i) and lower gamma_c(k) -> upper k.
BDGraph build_graph(const BDPair& p);
// Paths start at horizontal edges without an admissible predecessor and are
// listed in the order (upper before lower, then by source index).
PathDecomposition decompose(const BDGraph& g, const BDPair& p);
bool is_aperiodic(const BDPair& p);

std::string vertex_name(const Vertex& v);       // "5" or "5'" for the lower row
std::string path_string(const AlternatingPath& path);  // "5 2 3' 4'"
std::string to_dot(const BDGraph& g);

}  // namespace bdc
