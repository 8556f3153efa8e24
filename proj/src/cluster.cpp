#include "bdc/cluster.hpp"

#include <json.hpp>

#include <sstream>

namespace bdc {

Quiver::Quiver(int n) : n_(n), frozen_(n * n, false), b_(Eigen::MatrixXi::Zero(n * n, n * n)) {
    if (n < 2) throw InvalidInput("quiver: n must be at least 2");
}

int Quiver::index(Point v) const {
    if (v.first < 1 || v.first > n_ || v.second < 1 || v.second > n_)
        throw OutOfRange("quiver vertex (" + std::to_string(v.first) + "," + std::to_string(v.second) + ")");
    return (v.first - 1) * n_ + (v.second - 1);
}

std::vector<Point> Quiver::mutable_vertices() const {
    std::vector<Point> out;
    for (int k = 0; k < size(); ++k)
        if (!frozen_[k]) out.push_back(vertex(k));
    return out;
}

std::vector<Point> Quiver::frozen_vertices() const {
    std::vector<Point> out;
    for (int k = 0; k < size(); ++k)
        if (frozen_[k]) out.push_back(vertex(k));
    return out;
}

void Quiver::add_arrow(Point u, Point v, int mult) {
    const int a = index(u), c = index(v);
    if (a == c) throw InvalidInput("quiver: loop");
    b_(a, c) += mult;
    b_(c, a) -= mult;
}

void Quiver::add_path(const std::vector<Point>& path) {
    for (std::size_t k = 0; k + 1 < path.size(); ++k) add_arrow(path[k], path[k + 1]);
}

void Quiver::drop_frozen_arrows() {
    for (int a = 0; a < size(); ++a)
        for (int c = 0; c < size(); ++c)
            if (frozen_[a] && frozen_[c]) b_(a, c) = 0;
}

std::vector<Quiver::Arrow> Quiver::arrow_list() const {
    std::vector<Arrow> out;
    for (int a = 0; a < size(); ++a)
        for (int c = 0; c < size(); ++c)
            if (b_(a, c) > 0) out.push_back({vertex(a), vertex(c), b_(a, c)});
    return out;
}

std::vector<Point> Quiver::out_neighbors(Point v) const {
    std::vector<Point> out;
    const int a = index(v);
    for (int c = 0; c < size(); ++c)
        if (b_(a, c) > 0) out.push_back(vertex(c));
    return out;
}

std::vector<Point> Quiver::in_neighbors(Point v) const {
    std::vector<Point> out;
    const int a = index(v);
    for (int c = 0; c < size(); ++c)
        if (b_(a, c) < 0) out.push_back(vertex(c));
    return out;
}

Eigen::MatrixXi Quiver::exchange_matrix() const {
    auto mut = mutable_vertices();
    Eigen::MatrixXi m(size(), mut.size());
    for (std::size_t c = 0; c < mut.size(); ++c) m.col(c) = b_.col(index(mut[c]));
    return m;
}

Quiver Quiver::mutate(Point v) const {
    const int k = index(v);
    if (frozen_[k]) throw InvalidInput("mutation at a frozen vertex");
    Quiver q = *this;
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j) {
            if (i == k || j == k) {
                q.b_(i, j) = -b_(i, j);
                continue;
            }
            const int bik = b_(i, k), bkj = b_(k, j);
            q.b_(i, j) = b_(i, j) + (std::abs(bik) * bkj + bik * std::abs(bkj)) / 2;
        }
    return q;
}

Quiver standard_quiver(int n) {
    Quiver q(n);
    for (int i = 1; i <= n; ++i) {
        q.set_frozen({1, i}, true);
        q.set_frozen({i, 1}, true);
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (j > 1) q.add_arrow({i, j}, {i, j - 1});
            if (i > 1) q.add_arrow({i, j}, {i - 1, j});
            if (i < n && j < n) q.add_arrow({i, j}, {i + 1, j + 1});
        }
    q.drop_frozen_arrows();
    return q;
}

std::vector<std::vector<Point>> added_paths(const BDPair& p) {
    const int n = p.n();
    std::vector<std::vector<Point>> out;
    for (const Interval& c : p.rows.components()) {
        const int k = c.lo, m = c.hi + 1;
        auto g = [&](int i) { return p.rows.gamma(i); };
        std::vector<Point> chain, zig;
        if (p.rows.orientation_of(k) == Orientation::Preserved) {
            for (int i = m; i >= k; --i) chain.push_back({i, 1});
            for (int i = k; i <= m - 1; ++i) {
                zig.push_back({g(i), n});
                zig.push_back({i + 1, 1});
            }
            zig.push_back({g(m - 1) + 1, n});
        } else {
            chain = {{k + 1, 1}, {k, 1}};
            for (int i = m - 1; i >= k; --i) {
                zig.push_back({g(i), n});
                zig.push_back({i + 1, 1});
            }
            zig.push_back({g(k) + 1, n});
        }
        out.push_back(chain);
        out.push_back(zig);
    }
    // Columns: components of gamma2 of the column triple under the inverse map.
    const BDTriple inv = p.cols.inverse();
    for (const Interval& c : inv.components()) {
        const int pp = c.lo, q = c.hi + 1;
        auto g = [&](int i) { return inv.gamma(i); };
        std::vector<Point> chain, zig;
        if (inv.orientation_of(pp) == Orientation::Preserved) {
            for (int i = q; i >= pp; --i) chain.push_back({1, i});
            for (int i = pp; i <= q - 1; ++i) {
                zig.push_back({n, g(i)});
                zig.push_back({1, i + 1});
            }
            zig.push_back({n, g(q - 1) + 1});
        } else {
            chain = {{1, pp + 1}, {1, pp}};
            for (int i = q - 1; i >= pp; --i) {
                zig.push_back({n, g(i)});
                zig.push_back({1, i + 1});
            }
            zig.push_back({n, g(pp) + 1});
        }
        out.push_back(chain);
        out.push_back(zig);
    }
    return out;
}

Quiver exotic_quiver(const BDPair& p) {
    if (!is_aperiodic(p)) throw NotAperiodic("exotic_quiver: pair is not aperiodic");
    Quiver q = standard_quiver(p.n());
    for (int i : p.rows.gamma1()) q.set_frozen({i + 1, 1}, false);
    for (int i : p.cols.gamma2()) q.set_frozen({1, i + 1}, false);
    for (const auto& path : added_paths(p)) q.add_path(path);
    q.drop_frozen_arrows();
    return q;
}

namespace {

std::string vname(Point v) { return "v" + std::to_string(v.first) + "_" + std::to_string(v.second); }

}  // namespace

std::string quiver_to_dot(const Quiver& q) {
    std::ostringstream os;
    os << "// vertices (i,j) in row-major order; frozen vertices drawn as boxes\n";
    os << "digraph quiver {\n";
    for (int k = 0; k < q.size(); ++k) {
        Point v = q.vertex(k);
        os << "  " << vname(v) << " [label=\"" << v.first << "," << v.second << "\""
           << (q.frozen(v) ? ", shape=box" : "") << "];\n";
    }
    for (const auto& a : q.arrow_list())
        for (int m = 0; m < a.mult; ++m) os << "  " << vname(a.from) << " -> " << vname(a.to) << ";\n";
    os << "}\n";
    return os.str();
}

std::string quiver_to_json(const Quiver& q) {
    nlohmann::json j;
    j["n"] = q.n();
    j["ordering"] = "row-major (i,j); exchange matrix rows are all vertices, columns are mutable vertices";
    nlohmann::json verts = nlohmann::json::array();
    for (int k = 0; k < q.size(); ++k) {
        Point v = q.vertex(k);
        verts.push_back({{"vertex", {v.first, v.second}}, {"frozen", q.frozen(v)}});
    }
    j["vertices"] = verts;
    nlohmann::json arrows = nlohmann::json::array();
    for (const auto& a : q.arrow_list())
        arrows.push_back({{"from", {a.from.first, a.from.second}}, {"to", {a.to.first, a.to.second}}, {"mult", a.mult}});
    j["arrows"] = arrows;
    Eigen::MatrixXi b = q.exchange_matrix();
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < b.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < b.cols(); ++c) row.push_back(b(r, c));
        rows.push_back(row);
    }
    j["exchange_matrix"] = rows;
    return j.dump(2);
}

ClusterSeed cluster_seed(const BDPair& p) {
    auto seed = std::make_shared<Seed>(p);
    ClusterSeed out{exotic_quiver(p), {}};
    for (int k = 0; k < out.quiver.size(); ++k) {
        Point v = out.quiver.vertex(k);
        out.f.push_back([seed, v](const MatD& z) { return seed->eval<Dual2>(v.first, v.second, z); });
    }
    return out;
}

ClusterSeed standard_cluster_seed(int n) {
    ClusterSeed out{standard_quiver(n), {}};
    for (int k = 0; k < out.quiver.size(); ++k) {
        Point v = out.quiver.vertex(k);
        out.f.push_back([v](const MatD& z) { return trailing_minor<Dual2>(z, v.first, v.second); });
    }
    return out;
}

Rat evaluate(const ClusterSeed& s, Point v, const MatQ& z) { return s.f[s.quiver.index(v)](lift<Dual2>(z)).v; }

Rat y_variable(const Quiver& q, Point v, const std::vector<Rat>& values) {
    if (q.frozen(v)) throw InvalidInput("y-variable of a frozen vertex");
    Rat num(1), den(1);
    const int a = q.index(v);
    for (int c = 0; c < q.size(); ++c) {
        const int m = q.skew_matrix()(a, c);
        for (int r = 0; r < std::abs(m); ++r) (m > 0 ? num : den) *= values[c];
    }
    if (den.is_zero()) throw std::domain_error("y-variable: vanishing denominator");
    return num / den;
}

Rat y_variable(const ClusterSeed& s, Point v, const MatQ& z) {
    MatD zd = lift<Dual2>(z);
    std::vector<Rat> values(s.quiver.size());
    const int a = s.quiver.index(v);
    for (int c = 0; c < s.quiver.size(); ++c)
        if (c == a || s.quiver.skew_matrix()(a, c) != 0) values[c] = s.f[c](zd).v;
    return y_variable(s.quiver, v, values);
}

ClusterSeed mutate(const ClusterSeed& s, Point v) {
    ClusterSeed out{s.quiver.mutate(v), s.f};
    const int k = s.quiver.index(v);
    std::vector<std::pair<int, int>> ins, outs;
    for (int c = 0; c < s.quiver.size(); ++c) {
        const int m = s.quiver.skew_matrix()(k, c);
        if (m > 0) outs.push_back({c, m});
        if (m < 0) ins.push_back({c, -m});
    }
    auto old = s.f;
    out.f[k] = [old, ins, outs, k](const MatD& z) {
        Dual2 a(1), b(1);
        for (auto [c, m] : outs)
            for (int r = 0; r < m; ++r) a *= old[c](z);
        for (auto [c, m] : ins)
            for (int r = 0; r < m; ++r) b *= old[c](z);
        return (a + b) / old[k](z);
    };
    return out;
}

std::map<Point, Poly> symbolic_seed(const BDPair& p) {
    const int n = p.n();
    if (n > 3) throw ResourceLimit("symbolic seed is limited to n <= 3");
    Seed seed(p);
    MatP z(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) z(a, b) = Poly::var(a * n + b);
    MatP zd = dual_matrix<Poly>(z);
    std::map<Point, Poly> out;
    for (const auto& [ij, f] : seed.functions()) out.emplace(ij, f.eval<Poly>(z, z, zd, zd));
    out[{1, 1}] = det<Poly>(z);
    return out;
}

RegularityVerdict regularity_check(const BDPair& p, Point v) {
    Quiver q = exotic_quiver(p);
    if (q.frozen(v)) throw InvalidInput("regularity check at a frozen vertex");
    auto polys = symbolic_seed(p);
    Poly a(1), b(1);
    const int k = q.index(v);
    for (int c = 0; c < q.size(); ++c) {
        const int m = q.skew_matrix()(k, c);
        for (int r = 0; r < std::abs(m); ++r) (m > 0 ? a : b) *= polys.at(q.vertex(c));
    }
    RegularityVerdict out;
    out.vertex = v;
    out.numerator = a + b;
    out.quotient = exact_divide(out.numerator, polys.at(v));
    out.divisible = out.quotient.has_value();
    return out;
}

}  // namespace bdc
