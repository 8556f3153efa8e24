#include "bdc/bd_data.hpp"

#include "bdc/errors.hpp"

#include <algorithm>
#include <set>

namespace bdc {

namespace {

std::vector<Interval> maximal_intervals(const std::vector<int>& sorted) {
    std::vector<Interval> out;
    for (int g : sorted) {
        if (!out.empty() && out.back().hi == g - 1) out.back().hi = g;
        else out.push_back({g, g});
    }
    return out;
}

}  // namespace

std::string to_string(const Interval& iv) {
    return "[" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) + "]";
}

BDTriple validate(int n, std::vector<int> gamma1, std::vector<int> gamma2, std::map<int, int> map) {
    if (n < 2) throw InvalidInput("BD triple: n must be at least 2");
    std::sort(gamma1.begin(), gamma1.end());
    std::sort(gamma2.begin(), gamma2.end());
    auto check_set = [n](const std::vector<int>& g, const char* name) {
        for (std::size_t k = 0; k < g.size(); ++k) {
            if (g[k] < 1 || g[k] > n - 1)
                throw InvalidInput(std::string("BD triple: ") + name + " not inside [1,n-1]");
            if (k && g[k] == g[k - 1]) throw InvalidInput(std::string("BD triple: repeated root in ") + name);
        }
    };
    check_set(gamma1, "gamma1");
    check_set(gamma2, "gamma2");

    std::set<int> g1(gamma1.begin(), gamma1.end()), image;
    for (const auto& [a, b] : map) {
        if (!g1.count(a)) throw NotBijective("map defined outside gamma1 at " + std::to_string(a));
        if (!image.insert(b).second) throw NotBijective("map not injective at " + std::to_string(b));
    }
    if (map.size() != gamma1.size()) throw NotBijective("map not defined on all of gamma1");
    if (std::vector<int>(image.begin(), image.end()) != gamma2) throw NotBijective("map image differs from gamma2");

    BDTriple t;
    t.n_ = n;
    t.gamma1_ = gamma1;
    t.gamma2_ = gamma2;
    t.map_ = map;
    for (const auto& [a, b] : map) t.inverse_[b] = a;
    t.components_ = maximal_intervals(gamma1);

    // Each component maps onto a consecutive interval, monotonically, and the
    // images of distinct components are themselves maximal in gamma2.
    std::vector<Interval> images;
    for (const Interval& c : t.components_) {
        int step = c.size() > 1 ? map.at(c.lo + 1) - map.at(c.lo) : 1;
        if (step != 1 && step != -1) throw NotIsometry("component " + to_string(c) + " image not consecutive");
        for (int i = c.lo; i < c.hi; ++i)
            if (map.at(i + 1) - map.at(i) != step)
                throw NotIsometry("component " + to_string(c) + " has mixed orientation");
        images.push_back({std::min(map.at(c.lo), map.at(c.hi)), std::max(map.at(c.lo), map.at(c.hi))});
    }
    std::sort(images.begin(), images.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    if (images != maximal_intervals(gamma2))
        throw NotIsometry("images of distinct components are adjacent in gamma2");

    for (int a : gamma1) {
        int x = a;
        std::size_t steps = 0;
        while (t.in_gamma1(x)) {
            x = map.at(x);
            if (++steps > gamma1.size()) throw NotNilpotent("orbit of " + std::to_string(a) + " stays in gamma1");
        }
    }
    return t;
}

BDTriple empty_triple(int n) { return validate(n, {}, {}, {}); }

std::optional<Interval> BDTriple::component_of(int root) const {
    for (const Interval& c : components_)
        if (c.contains(root)) return c;
    return std::nullopt;
}

Orientation BDTriple::orientation_of(int root) const {
    auto c = component_of(root);
    if (!c) throw InvalidInput("orientation: " + std::to_string(root) + " is not in gamma1");
    return bdc::orientation(*this, *c).orientation;
}

BDTriple BDTriple::inverse() const {
    std::map<int, int> inv(inverse_.begin(), inverse_.end());
    return validate(n_, gamma2_, gamma1_, inv);
}

ComponentOrientation orientation(const BDTriple& t, Interval component) {
    if (std::find(t.components().begin(), t.components().end(), component) == t.components().end())
        throw InvalidInput("orientation: " + to_string(component) + " is not a component of gamma1");
    bool reversed = component.size() > 1 && t.gamma(component.lo + 1) < t.gamma(component.lo);
    return {component, reversed ? Orientation::Reversed : Orientation::Preserved};
}

BDPair make_pair(BDTriple rows, BDTriple cols) {
    if (rows.n() != cols.n()) throw InvalidInput("BD pair: triples have different n");
    return {std::move(rows), std::move(cols)};
}

BDPair empty_pair(int n) { return {empty_triple(n), empty_triple(n)}; }

const Interval& RunPartition::run_of(int i) const { return runs.at(number_of(i) - 1); }

int RunPartition::number_of(int i) const {
    for (std::size_t k = 0; k < runs.size(); ++k)
        if (runs[k].contains(i)) return static_cast<int>(k) + 1;
    throw OutOfRange("run_of: index " + std::to_string(i) + " outside [1,n]");
}

RunPartition runs_of_roots(int n, const std::vector<int>& roots) {
    std::set<int> g(roots.begin(), roots.end());
    RunPartition p{n, {}, false};
    int start = 1;
    for (int i = 1; i <= n; ++i)
        if (!g.count(i)) {
            p.runs.push_back({start, i});
            start = i + 1;
        }
    return p;
}

RunPartition runs(const BDTriple& t, Side side) {
    bool x = side == Side::RowsOfX || side == Side::ColsOfX;
    return runs_of_roots(t.n(), x ? t.gamma1() : t.gamma2());
}

RunPartition runs(const BDPair& p, Side side) {
    bool rows = side == Side::RowsOfX || side == Side::RowsOfY;
    return runs(rows ? p.rows : p.cols, side);
}

RunPartition dual_runs(const RunPartition& p) {
    RunPartition d{p.n, {}, !p.dual};
    for (const Interval& r : p.runs) d.runs.push_back({p.n - r.hi + 1, p.n - r.lo + 1});
    return d;
}

BDPair remove_root(const BDPair& p, Which which, int alpha) {
    const BDTriple& t = which == Which::Rows ? p.rows : p.cols;
    auto c = t.component_of(alpha);
    if (!c) throw NotEndpoint(std::to_string(alpha) + " is not in gamma1");
    if (alpha != c->lo && alpha != c->hi) throw NotEndpoint(std::to_string(alpha) + " is interior to " + to_string(*c));
    std::vector<int> g1, g2;
    std::map<int, int> m;
    for (const auto& [a, b] : t.map())
        if (a != alpha) {
            g1.push_back(a);
            g2.push_back(b);
            m[a] = b;
        }
    BDTriple reduced = validate(t.n(), g1, g2, m);
    return which == Which::Rows ? BDPair{reduced, p.cols} : BDPair{p.rows, reduced};
}

}  // namespace bdc
