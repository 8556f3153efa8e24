#include "bdc/bd_graph.hpp"

#include <optional>
#include <set>
#include <sstream>

namespace bdc {

BDGraph build_graph(const BDPair& p) {
    BDGraph g{p.n(), {}};
    const int n = p.n();
    for (bool upper : {true, false})
        for (int i = 1; i <= n - 1; ++i)
            g.edges.push_back({2 * i == n ? EdgeKind::Loop : EdgeKind::Horizontal, {upper, i}, {upper, n - i}});
    for (const auto& [a, b] : p.rows.map()) g.edges.push_back({EdgeKind::InclinedDown, {true, a}, {false, b}});
    for (const auto& [k, b] : p.cols.map()) g.edges.push_back({EdgeKind::InclinedUp, {false, b}, {true, k}});
    return g;
}

namespace {

std::optional<Edge> successor(const Edge& e, const BDPair& p) {
    const int n = p.n();
    const Vertex& v = e.dst;
    if (e.horizontal()) {
        if (v.upper && p.rows.in_gamma1(v.index))
            return Edge{EdgeKind::InclinedDown, v, {false, p.rows.gamma(v.index)}};
        if (!v.upper && p.cols.in_gamma2(v.index))
            return Edge{EdgeKind::InclinedUp, v, {true, p.cols.gamma_inverse(v.index)}};
        return std::nullopt;
    }
    return Edge{2 * v.index == n ? EdgeKind::Loop : EdgeKind::Horizontal, v, {v.upper, n - v.index}};
}

bool has_predecessor(const Edge& e, const BDPair& p) {
    const Vertex& v = e.src;
    return v.upper ? p.cols.in_gamma1(v.index) : p.rows.in_gamma2(v.index);
}

}  // namespace

PathDecomposition decompose(const BDGraph& g, const BDPair& p) {
    PathDecomposition out;
    std::set<Edge> covered;
    for (const Edge& e : g.edges) {
        if (!e.horizontal() || has_predecessor(e, p)) continue;
        AlternatingPath path{e};
        while (auto s = successor(path.back(), p)) path.push_back(*s);
        covered.insert(path.begin(), path.end());
        out.paths.push_back(std::move(path));
    }
    for (const Edge& e : g.edges) {
        if (!e.horizontal() || covered.count(e)) continue;
        AlternatingPath cycle{e};
        covered.insert(e);
        for (auto s = successor(e, p); s && *s != e; s = successor(*s, p)) {
            cycle.push_back(*s);
            covered.insert(*s);
        }
        out.cycles.push_back(std::move(cycle));
    }
    return out;
}

bool is_aperiodic(const BDPair& p) { return decompose(build_graph(p), p).aperiodic(); }

std::string vertex_name(const Vertex& v) { return std::to_string(v.index) + (v.upper ? "" : "'"); }

std::string path_string(const AlternatingPath& path) {
    if (path.empty()) return "";
    std::string s = vertex_name(path.front().src);
    for (const Edge& e : path) s += " " + vertex_name(e.dst);
    return s;
}

std::string to_dot(const BDGraph& g) {
    std::ostringstream os;
    auto name = [](const Vertex& v) { return (v.upper ? "u" : "l") + std::to_string(v.index); };
    os << "digraph bd {\n";
    for (bool upper : {true, false})
        for (int i = 1; i < g.n; ++i) os << "  " << name({upper, i}) << ";\n";
    for (const Edge& e : g.edges) {
        const char* type = e.kind == EdgeKind::Loop ? "loop" : e.horizontal() ? "horizontal" : "inclined";
        os << "  " << name(e.src) << " -> " << name(e.dst) << " [type=" << type << "];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace bdc
