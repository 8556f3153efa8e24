#include "bdc/blocks.hpp"

#include <algorithm>
#include <set>

namespace bdc {

std::string to_string(Source s) {
    switch (s) {
        case Source::X: return "X";
        case Source::Xdag: return "Xdag";
        case Source::Y: return "Y";
        case Source::Ydag: return "Ydag";
    }
    return "?";
}

BlockSpec block_for_edge(const BDPair& p, const Edge& e, Source source) {
    if (!e.horizontal()) throw InvalidInput("block_for_edge: edge is not horizontal");
    if (e.src.upper != is_x_type(source)) throw InvalidInput("block_for_edge: source does not match the row of the edge");
    const int n = p.n();
    const int i = e.src.index;
    switch (source) {
        case Source::X: {
            auto r = runs(p, Side::RowsOfX), c = runs(p, Side::ColsOfX);
            return {source, {r.run_of(n - i + 1).lo, n}, {1, c.run_of(i).hi}, {n - i + 1, 1}, {n, i}};
        }
        case Source::Xdag: {
            auto r = dual_runs(runs(p, Side::RowsOfX)), c = dual_runs(runs(p, Side::ColsOfX));
            return {source, {r.run_of(i + 1).lo, n}, {1, c.run_of(n - i).hi}, {i + 1, 1}, {n, n - i}};
        }
        case Source::Y: {
            auto r = runs(p, Side::RowsOfY), c = runs(p, Side::ColsOfY);
            return {source, {1, r.run_of(i).hi}, {c.run_of(n - i + 1).lo, n}, {1, n - i + 1}, {i, n}};
        }
        case Source::Ydag: {
            auto r = dual_runs(runs(p, Side::RowsOfY)), c = dual_runs(runs(p, Side::ColsOfY));
            return {source, {1, r.run_of(n - i).hi}, {c.run_of(i + 1).lo, n}, {1, i + 1}, {n - i, n}};
        }
    }
    throw InvalidInput("block_for_edge: bad source");
}

Point GluedMatrix::template_position(std::size_t block, Point s) const {
    return {s.first + offsets_.at(block).first, s.second + offsets_.at(block).second};
}

std::vector<std::vector<std::string>> GluedMatrix::symbolic() const {
    std::vector<std::vector<std::string>> out(size_, std::vector<std::string>(size_, "0"));
    for (int r = 1; r <= size_; ++r)
        for (int c = 1; c <= size_; ++c) {
            const auto& e = at(r, c);
            if (!e) continue;
            std::string s = is_x_type(e->source) ? "x" : "y";
            if (is_dual(e->source)) s += "+";
            out[r - 1][c - 1] = s + std::to_string(e->row) + std::to_string(e->col);
        }
    return out;
}

namespace {

const RunPartition& pick(bool dual, const RunPartition& primal, const RunPartition& dualp) {
    return dual ? dualp : primal;
}

}  // namespace

std::pair<GluedMatrix, GluedMatrix> glued_matrices(const BDPair& p, const AlternatingPath& path) {
    const RunPartition xr = runs(p, Side::RowsOfX), xc = runs(p, Side::ColsOfX);
    const RunPartition yr = runs(p, Side::RowsOfY), yc = runs(p, Side::ColsOfY);
    const RunPartition xrd = dual_runs(xr), xcd = dual_runs(xc), yrd = dual_runs(yr), ycd = dual_runs(yc);

    std::vector<std::pair<BlockSpec, BlockSpec>> blocks;  // (primal, dual) per horizontal edge
    std::vector<bool> preserved;                           // per inclined edge
    for (const Edge& e : path) {
        if (e.horizontal()) {
            Source a = e.src.upper ? Source::X : Source::Y;
            Source b = e.src.upper ? Source::Xdag : Source::Ydag;
            blocks.emplace_back(block_for_edge(p, e, a), block_for_edge(p, e, b));
        } else if (e.kind == EdgeKind::InclinedDown) {
            preserved.push_back(p.rows.orientation_of(e.src.index) == Orientation::Preserved);
        } else {
            preserved.push_back(p.cols.orientation_of(e.dst.index) == Orientation::Preserved);
        }
    }
    if (blocks.empty()) throw InvalidInput("glued_matrices: path has no horizontal edge");

    auto build = [&](bool start_dual) {
        GluedMatrix g;
        bool dual = start_dual;
        for (std::size_t t = 0; t < blocks.size(); ++t) {
            if (t > 0) {
                bool keep = preserved.at(t - 1);
                g.gluings_.push_back({is_x_type(g.blocks_.back().source), !keep});
                if (!keep) dual = !dual;
            }
            g.blocks_.push_back(dual ? blocks[t].second : blocks[t].first);
        }
        // Offsets: template = source + offset.
        std::vector<Point> off{{0, 0}};
        for (std::size_t t = 1; t < g.blocks_.size(); ++t) {
            const BlockSpec& prev = g.blocks_[t - 1];
            const BlockSpec& cur = g.blocks_[t];
            const auto [pro, pco] = off.back();
            int ro, co;
            if (is_x_type(prev.source)) {
                Interval rp = pick(is_dual(prev.source), xr, xrd).run_of(prev.exit.first);
                Interval rc = pick(is_dual(cur.source), yr, yrd).run_of(cur.entrance.first);
                if (rp.size() != rc.size()) throw Error("glued_matrices: glued row runs differ in size");
                ro = rp.lo + pro - rc.lo;
                co = (prev.cols.lo + pco - 1) - cur.cols.hi;
            } else {
                Interval cp = pick(is_dual(prev.source), yc, ycd).run_of(prev.exit.second);
                Interval cc = pick(is_dual(cur.source), xc, xcd).run_of(cur.entrance.second);
                if (cp.size() != cc.size()) throw Error("glued_matrices: glued column runs differ in size");
                co = cp.lo + pco - cc.lo;
                ro = (prev.rows.lo + pro - 1) - cur.rows.hi;
            }
            off.push_back({ro, co});
        }
        int minr = 1 << 30, minc = 1 << 30, maxr = -(1 << 30), maxc = -(1 << 30);
        for (std::size_t t = 0; t < g.blocks_.size(); ++t) {
            minr = std::min(minr, g.blocks_[t].rows.lo + off[t].first);
            maxr = std::max(maxr, g.blocks_[t].rows.hi + off[t].first);
            minc = std::min(minc, g.blocks_[t].cols.lo + off[t].second);
            maxc = std::max(maxc, g.blocks_[t].cols.hi + off[t].second);
        }
        if (maxr - minr != maxc - minc) throw Error("glued_matrices: glued matrix is not square");
        g.size_ = maxr - minr + 1;
        for (auto& o : off) o = {o.first - minr + 1, o.second - minc + 1};
        g.offsets_ = off;
        g.cells_.assign(static_cast<std::size_t>(g.size_) * g.size_, std::nullopt);
        for (std::size_t t = 0; t < g.blocks_.size(); ++t) {
            const BlockSpec& b = g.blocks_[t];
            for (int r = b.rows.lo; r <= b.rows.hi; ++r)
                for (int c = b.cols.lo; c <= b.cols.hi; ++c) {
                    auto& cell = g.cells_[(r + off[t].first - 1) * g.size_ + (c + off[t].second - 1)];
                    if (cell) throw Error("glued_matrices: blocks overlap");
                    cell = TemplateEntry{b.source, r, c};
                }
        }
        return g;
    };
    return {build(false), build(true)};
}

std::vector<Point> SubordinateSet::points() const {
    std::vector<Point> out;
    for (int k : x_rows) out.push_back({k, 1});
    for (int m : y_cols) out.push_back({1, m});
    return out;
}

int SeedFunction::degree() const {
    if (!host) return n - i + 1;
    return host->size() - anchor + 1;
}

Seed::Seed(const BDPair& p) : pair_(p) {
    const int n = p.n();
    dec_ = decompose(build_graph(p), p);
    if (!dec_.aperiodic()) throw NotAperiodic("seed: the BD pair has alternating cycles");

    const RunPartition xr = runs(p, Side::RowsOfX), yc = runs(p, Side::ColsOfY);
    std::set<Point> frozen{{1, 1}};
    for (const Interval& r : xr.runs) frozen.insert({r.lo, 1});
    for (const Interval& r : yc.runs) frozen.insert({1, r.lo});

    for (const AlternatingPath& path : dec_.paths) {
        auto [l, ld] = glued_matrices(p, path);
        auto lp = std::make_shared<const GluedMatrix>(std::move(l));
        auto ldp = std::make_shared<const GluedMatrix>(std::move(ld));
        std::vector<Edge> hs;
        for (const Edge& e : path)
            if (e.horizontal()) hs.push_back(e);
        for (auto [g, sib] : {std::pair{lp, ldp}, std::pair{ldp, lp}}) {
            for (std::size_t t = 0; t < hs.size(); ++t) {
                const BlockSpec& b = g->blocks()[t];
                if (is_dual(b.source)) continue;
                const int d = n - hs[t].src.index;
                SubordinateSet subs;
                for (std::size_t s = 0; s < t; ++s) {
                    const BlockSpec& bs = g->blocks()[s];
                    Point ex = g->template_position(s, bs.exit);
                    if (ex.first != ex.second) continue;
                    switch (bs.source) {
                        case Source::X: subs.x_rows.push_back(bs.exit.first); break;
                        case Source::Xdag: subs.x_rows.push_back(n + 2 - bs.exit.first); break;
                        case Source::Y: subs.y_cols.push_back(bs.exit.second); break;
                        case Source::Ydag: subs.y_cols.push_back(n + 2 - bs.exit.second); break;
                    }
                }
                for (int r = 1; r <= n; ++r) {
                    Point ij = b.source == Source::X ? Point{r, r - d} : Point{r, r + d};
                    if (ij.second < 1 || ij.second > n) continue;
                    Point pos = g->template_position(t, ij);
                    if (pos.first != pos.second) throw Error("seed: anchor is off the diagonal");
                    SeedFunction f;
                    f.i = ij.first;
                    f.j = ij.second;
                    f.n = n;
                    f.host = g;
                    f.sibling = sib;
                    f.block = t;
                    f.anchor = pos.first;
                    f.subordinates = subs;
                    f.frozen = frozen.count(ij) != 0;
                    if (!fns_.emplace(ij, std::move(f)).second) throw Error("seed: function defined twice");
                }
            }
        }
    }
    for (int i = 1; i <= n; ++i) {
        SeedFunction f;
        f.i = f.j = i;
        f.n = n;
        f.frozen = i == 1;
        fns_.emplace(Point{i, i}, std::move(f));
    }
    if (static_cast<int>(fns_.size()) != n * n) throw Error("seed: missing functions");
}

Rat Seed::t_factor(int d, const MatQ& u) const {
    if (d == 0) return Rat(1);
    const int n = this->n();
    int i = d > 0 ? n : n + d;
    int j = i - d;
    Rat t(1);
    for (const Point& q : at(i, j).subordinates.points()) t *= trailing_minor<Rat>(u, q.first, q.second);
    return t;
}

std::pair<Rat, Rat> Seed::perturbed_minors(int i, int j, int k, const MatQ& z, bool check_range) const {
    const int n = this->n();
    if (i < 2 || i > n) throw OutOfRange("perturbed_minors: i out of range");
    auto comp = pair_.rows.component_of(i - 1);
    if (!comp || pair_.rows.orientation_of(i - 1) != Orientation::Reversed)
        throw OutOfRange("perturbed_minors: i-1 is not in a reversed component of gamma1");
    const int s = (i - 1) - comp->lo, t = comp->hi - (i - 1);
    bool ok = (j == 0 && k == 0) || (1 <= j && j <= s && 0 <= k && k <= t - 1);
    if (check_range && !ok) throw OutOfRange("perturbed_minors: (j,k) outside the admissible range");

    const SeedFunction& f = at(i, 1);
    const GluedMatrix& l = *f.host;
    const GluedMatrix& ld = *f.sibling;
    const BlockSpec& bx = l.blocks()[f.block];
    const BlockSpec& bxd = ld.blocks()[f.block];
    if (bx.source != Source::X || bxd.source != Source::Xdag) throw Error("perturbed_minors: unexpected block kinds");
    const int idag = n + 2 - i;

    std::set<int> rows_m, rows_md;
    for (int r = i; r <= n; ++r)
        if (r != i + k) rows_m.insert(r);
    rows_m.insert(i - j);
    for (int r = idag; r <= n; ++r) rows_md.insert(r);
    rows_md.insert(idag - k - 1);
    rows_md.erase(idag + j - 1);

    auto minor = [&](const GluedMatrix& g, const BlockSpec& b, const std::set<int>& src_rows, int anchor_row,
                     const MatQ& zd) {
        const int ro = g.offsets()[f.block].first;
        Point a = g.template_position(f.block, {anchor_row, 1});
        if (a.first != a.second) throw Error("perturbed_minors: anchor is off the diagonal");
        std::vector<int> rows;
        for (int r : src_rows) {
            if (!b.rows.contains(r)) throw OutOfRange("perturbed_minors: row outside the block");
            rows.push_back(r + ro);
        }
        for (int r = n + ro + 1; r <= g.size(); ++r) rows.push_back(r);
        auto cols = range(a.second, g.size());
        if (rows.size() != cols.size()) throw Error("perturbed_minors: minor is not square");
        return det<Rat>(g.materialize<Rat>(rows, cols, z, z, zd, zd));
    };
    MatQ zd = dual_matrix<Rat>(z);
    return {minor(l, bx, rows_m, i, zd), minor(ld, bxd, rows_md, idag, zd)};
}

SeedFunction locate(const Seed& s, int i, int j) { return s.at(i, j); }

SubordinateSet subordinate_exits(const Seed& s, int i, int j) { return s.at(i, j).subordinates; }

}  // namespace bdc
