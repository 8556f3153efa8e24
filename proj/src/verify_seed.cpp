#include "bdc/poissonmap.hpp"
#include "bdc/verify.hpp"

#include <chrono>

namespace bdc {

namespace {

struct Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); }
};

nlohmann::json point_json(Point v) { return nlohmann::json::array({v.first, v.second}); }

std::string order_name(SlotOrder o) { return o == SlotOrder::RowsCols ? "rows-cols" : "cols-rows"; }

}  // namespace

MatQ omega_matrix(const Seed& seed, const BracketSpec& spec, const MatQ& z) {
    const int n = seed.n(), N = n * n;
    auto idx = [n](Point v) { return (v.first - 1) * n + (v.second - 1); };
    auto vals = seed.eval_all<Rat>(z);
    std::vector<MatQ> g(N, zeros<Rat>(n, n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            MatD x = lift<Dual2>(z);
            x(a, b).b = Rat(1);
            for (const auto& [ij, d] : seed.eval_all<Dual2>(x)) g[idx(ij)](b, a) = d.b;
        }
    std::vector<MatQ> l(N), r(N), lr(N), rr(N);
    for (const auto& [ij, v] : vals) {
        if (v.is_zero()) throw std::domain_error("omega_matrix: seed function vanishes at the point");
        const int k = idx(ij);
        MatQ gk = g[k] / v;
        l[k] = traceless<Rat>(MatQ(gk * z));
        r[k] = traceless<Rat>(MatQ(z * gk));
        lr[k] = spec.left.apply<Rat>(l[k]);
        rr[k] = spec.right.apply<Rat>(r[k]);
    }
    MatQ om = zeros<Rat>(N, N);
    for (int u = 0; u < N; ++u)
        for (int w = u + 1; w < N; ++w) {
            om(u, w) = pairing<Rat>(lr[u], l[w]) - pairing<Rat>(rr[u], r[w]);
            om(w, u) = -om(u, w);
        }
    return om;
}

CheckReport check_bts(const BDPair& p, const SamplePlan& plan) {
    Stopwatch sw;
    CheckReport rep{"bts"};
    rep.params = {{"pair", pair_to_json(p)}, {"trials", plan.trials}, {"seed", plan.master_seed}};
    Seed seed(p);
    const int n = p.n();
    for (int t = 0; t < plan.trials; ++t) {
        MatQ u = sample_generic(p, plan, t);
        MatQ z = apply_h<Rat>(p, u);
        auto f = seed.eval_all<Rat>(z);
        auto F = [&](int i, int j) { return trailing_minor<Rat>(u, i, j); };
        for (const auto& [ij, v] : f) {
            Rat rhs = F(ij.first, ij.second) * seed.t_factor(ij.first - ij.second, u);
            if (v != rhs)
                rep.fail({{"identity", "bts"}, {"trial", t}, {"ij", point_json(ij)}, {"lhs", v.str()},
                          {"rhs", rhs.str()}, {"U", matrix_json(u)}});
        }
        for (int i = 1; i < n; ++i)
            for (int j = 1; j < n; ++j)
                if (f.at({i + 1, j + 1}) * F(i, j) != f.at({i, j}) * F(i + 1, j + 1))
                    rep.fail({{"identity", "sameratio"}, {"trial", t}, {"ij", {i, j}}, {"U", matrix_json(u)}});
        for (int i = 1; i <= n; ++i) {
            Rat tail = f.at({i, n}) / F(i, n);
            Rat want = i < n && p.rows.in_gamma2(i) ? f.at({p.rows.gamma_inverse(i) + 1, 1}) : Rat(1);
            if (tail != want)
                rep.fail({{"identity", "tails-rows"}, {"trial", t}, {"i", i}, {"U", matrix_json(u)}});
        }
        for (int j = 1; j <= n; ++j) {
            Rat tail = f.at({n, j}) / F(n, j);
            Rat want = j < n && p.cols.in_gamma1(j) ? f.at({1, p.cols.gamma(j) + 1}) : Rat(1);
            if (tail != want)
                rep.fail({{"identity", "tails-cols"}, {"trial", t}, {"j", j}, {"U", matrix_json(u)}});
        }
    }
    rep.seconds = sw.seconds();
    return rep;
}

CheckReport check_log_canonical(const BDPair& p, const SamplePlan& plan, SlotOrder order) {
    Stopwatch sw;
    CheckReport rep{"log_canonical"};
    rep.params = {{"pair", pair_to_json(p)}, {"order", order_name(order)}, {"trials", plan.trials}};
    Seed seed(p);
    auto spec = build_bracket(p, BracketKind::Exotic, order);
    MatQ first;
    for (int t = 0; t < plan.trials; ++t) {
        MatQ u = sample_generic(p, plan, t, 1);
        MatQ om = omega_matrix(seed, spec, u);
        if (t == 0) {
            first = om;
            continue;
        }
        int mismatches = 0;
        for (Eigen::Index a = 0; a < om.rows(); ++a)
            for (Eigen::Index b = 0; b < om.cols(); ++b)
                if (om(a, b) != first(a, b)) ++mismatches;
        if (mismatches) rep.fail({{"trial", t}, {"mismatched_entries", mismatches}, {"U", matrix_json(u)}});
    }
    if (rep.pass) rep.constants["omega"] = matrix_json(first);
    rep.seconds = sw.seconds();
    return rep;
}

CheckReport resolve_order(const BDPair& p, const SamplePlan& plan) {
    Stopwatch sw;
    CheckReport rep{"slot_order"};
    rep.params = {{"pair", pair_to_json(p)}, {"trials", plan.trials}};
    const bool same = p.rows == p.cols;
    CheckReport rc = check_log_canonical(p, plan, SlotOrder::RowsCols);
    rep.constants["rows-cols"] = rc.pass;
    if (same) {
        rep.constants["cols-rows"] = rc.pass;
        rep.constants["orders_coincide"] = true;
        rep.pass = rc.pass;
        if (rc.pass) rep.constants["order"] = "rows-cols";
    } else {
        CheckReport cr = check_log_canonical(p, plan, SlotOrder::ColsRows);
        rep.constants["cols-rows"] = cr.pass;
        rep.constants["orders_coincide"] = false;
        rep.pass = rc.pass != cr.pass;
        if (rep.pass) rep.constants["order"] = rc.pass ? "rows-cols" : "cols-rows";
    }
    rep.seconds = sw.seconds();
    return rep;
}

CheckReport check_compatibility(const BDPair& p, const SamplePlan& plan, SlotOrder order) {
    Stopwatch sw;
    CheckReport rep{"compatibility"};
    rep.params = {{"pair", pair_to_json(p)}, {"order", order_name(order)}, {"trials", plan.trials}};
    Seed seed(p);
    Quiver q = exotic_quiver(p);
    auto spec = build_bracket(p, BracketKind::Exotic, order);
    std::optional<Rat> lambda;
    for (int t = 0; t < plan.trials; ++t) {
        MatQ u = sample_generic(p, plan, t, 1);
        MatQ om = omega_matrix(seed, spec, u);
        for (Point v : q.mutable_vertices()) {
            const int a = q.index(v);
            for (int w = 0; w < q.size(); ++w) {
                Rat acc(0);
                for (int c = 0; c < q.size(); ++c) {
                    const int m = q.skew_matrix()(a, c);
                    if (m) acc += Rat(m) * om(c, w);
                }
                if (w != a) {
                    if (!acc.is_zero())
                        rep.fail({{"trial", t}, {"v", point_json(v)}, {"w", point_json(q.vertex(w))},
                                  {"value", acc.str()}});
                } else if (!lambda) {
                    lambda = acc;
                } else if (*lambda != acc) {
                    rep.fail({{"trial", t}, {"v", point_json(v)}, {"lambda", acc.str()}, {"expected", lambda->str()}});
                }
            }
        }
    }
    if (lambda && lambda->is_zero()) rep.fail({{"reason", "lambda is zero"}});
    if (lambda) rep.constants["lambda"] = lambda->str();
    rep.seconds = sw.seconds();
    return rep;
}

CheckReport check_y_variables(const BDPair& p, const SamplePlan& plan) {
    Stopwatch sw;
    CheckReport rep{"y_variables"};
    rep.params = {{"pair", pair_to_json(p)}, {"trials", plan.trials}};
    const int n = p.n();
    Seed seed(p);
    Quiver q = exotic_quiver(p), q0 = standard_quiver(n);
    for (int t = 0; t < plan.trials; ++t) {
        MatQ u = sample_generic(p, plan, t, 2);
        auto f = seed.eval_all<Rat>(apply_h<Rat>(p, u));
        std::vector<Rat> vf(n * n), vF(n * n);
        for (const auto& [ij, v] : f) {
            vf[q.index(ij)] = v;
            vF[q.index(ij)] = trailing_minor<Rat>(u, ij.first, ij.second);
        }
        for (int i = 2; i <= n; ++i)
            for (int j = 2; j <= n; ++j) {
                Rat y = y_variable(q, {i, j}, vf), Y = y_variable(q0, {i, j}, vF);
                if (y != Y)
                    rep.fail({{"trial", t}, {"v", {i, j}}, {"y", y.str()}, {"Y", Y.str()}, {"U", matrix_json(u)}});
            }
    }
    rep.seconds = sw.seconds();
    return rep;
}

CheckReport check_minor_correspondence(const BDPair& p, const SamplePlan& plan) {
    Stopwatch sw;
    CheckReport rep{"minor_correspondence"};
    rep.params = {{"pair", pair_to_json(p)}, {"trials", plan.trials}};
    const int n = p.n();
    Seed seed(p);
    int cases = 0;
    for (int t = 0; t < plan.trials; ++t) {
        MatQ z = sample_sl(n, plan, t, {}, 3);
        for (int i = 2; i <= n; ++i) {
            auto c = p.rows.component_of(i - 1);
            if (!c || p.rows.orientation_of(i - 1) != Orientation::Reversed) continue;
            const int s = i - 1 - c->lo, tt = c->hi - (i - 1);
            std::vector<std::pair<int, int>> jk{{0, 0}};
            for (int j = 1; j <= s; ++j)
                for (int k = 0; k < tt; ++k) jk.push_back({j, k});
            for (auto [j, k] : jk) {
                auto [m, md] = seed.perturbed_minors(i, j, k, z);
                ++cases;
                if (m != md)
                    rep.fail({{"trial", t}, {"i", i}, {"j", j}, {"k", k}, {"det_M", m.str()}, {"det_Mdag", md.str()}});
            }
        }
    }
    rep.constants["cases"] = cases;
    rep.seconds = sw.seconds();
    return rep;
}

CheckReport check_induction_step(const BDPair& p, Which which, int alpha, const SamplePlan& plan) {
    Stopwatch sw;
    CheckReport rep{"induction_step"};
    rep.params = {{"pair", pair_to_json(p)}, {"which", which == Which::Rows ? "rows" : "cols"}, {"alpha", alpha}};
    const BDPair r = remove_root(p, which, alpha);
    Seed seed(p), small(r);
    const int n = p.n();
    const Point extra = which == Which::Rows ? Point{alpha + 1, 1} : Point{1, p.cols.gamma(alpha) + 1};
    const RunPartition reduced_runs = which == Which::Rows ? runs_of_roots(n, r.rows.gamma1())
                                                           : runs_of_roots(n, r.cols.gamma2());
    for (int t = 0; t < plan.trials; ++t) {
        MatQ u = sample_sl(n, plan, t,
                           [&](const MatQ& x) {
                               for (const Seed* q : {&seed, &small}) {
                                   MatQ z = apply_h<Rat>(q->pair(), x);
                                   for (const auto& [ij, v] : q->eval_all<Rat>(z))
                                       if (v.is_zero()) return false;
                               }
                               return true;
                           },
                           4);
        auto hp = h_maps<Rat>(p, u), hr = h_maps<Rat>(r, u);
        auto f = seed.eval_all<Rat>(hp.h), ft = small.eval_all<Rat>(hr.h);
        for (const auto& [ij, v] : f) {
            const auto pts = seed.at(ij.first, ij.second).subordinates.points();
            const bool sub = std::find(pts.begin(), pts.end(), extra) != pts.end();
            Rat want = sub ? ft.at(ij) * ft.at(extra) : ft.at(ij);
            if (v != want)
                rep.fail({{"identity", sub ? "fbefore" : "fafter"}, {"trial", t}, {"ij", point_json(ij)},
                          {"lhs", v.str()}, {"rhs", want.str()}, {"U", matrix_json(u)}});
        }
        if (which == Which::Rows) {
            MatQ c = hp.hr * inverse<Rat>(hr.hr);
            if (!is_upper_unitriangular<Rat>(c)) rep.fail({{"identity", "C upper unipotent"}, {"trial", t}});
            MatQ vt = block_diagonal<Rat>(bar_v_rows<Rat>(u, p.rows), reduced_runs);
            if (vt != bar_v_rows<Rat>(u, r.rows)) rep.fail({{"identity", "VtV rows"}, {"trial", t}});
        } else {
            MatQ c = inverse<Rat>(hr.hc) * hp.hc;
            if (!is_lower_unitriangular<Rat>(c)) rep.fail({{"identity", "C lower unipotent"}, {"trial", t}});
            MatQ vt = block_diagonal<Rat>(bar_v_cols<Rat>(u, p.cols), reduced_runs);
            if (vt != bar_v_cols<Rat>(u, r.cols)) rep.fail({{"identity", "VtV cols"}, {"trial", t}});
        }
    }
    rep.seconds = sw.seconds();
    return rep;
}

CheckReport check_induction_all(const BDPair& p, const SamplePlan& plan) {
    Stopwatch sw;
    CheckReport rep{"induction_step"};
    rep.params = {{"pair", pair_to_json(p)}, {"trials", plan.trials}};
    int removals = 0;
    for (Which w : {Which::Rows, Which::Cols}) {
        const BDTriple& t = w == Which::Rows ? p.rows : p.cols;
        for (const Interval& c : t.components())
            for (int alpha : {c.lo, c.hi}) {
                CheckReport one = check_induction_step(p, w, alpha, plan);
                ++removals;
                if (!one.pass)
                    rep.fail({{"which", w == Which::Rows ? "rows" : "cols"}, {"alpha", alpha}, {"detail", one.witnesses}});
                if (c.lo == c.hi) break;
            }
    }
    rep.constants["removals"] = removals;
    rep.seconds = sw.seconds();
    return rep;
}

CheckReport check_regularity(const BDPair& p) {
    Stopwatch sw;
    CheckReport rep{"regularity"};
    rep.params = {{"pair", pair_to_json(p)}};
    Quiver q = exotic_quiver(p);
    nlohmann::json verdicts = nlohmann::json::array();
    for (Point v : q.mutable_vertices()) {
        RegularityVerdict r = regularity_check(p, v);
        verdicts.push_back({{"v", point_json(v)}, {"divisible", r.divisible}, {"numerator_terms", r.numerator.size()}});
        if (!r.divisible) rep.fail({{"v", point_json(v)}});
    }
    rep.constants["verdicts"] = verdicts;
    rep.seconds = sw.seconds();
    return rep;
}

}  // namespace bdc
