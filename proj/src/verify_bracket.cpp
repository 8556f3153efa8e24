#include "bdc/poissonmap.hpp"
#include "bdc/verify.hpp"

#include <algorithm>
#include <chrono>

namespace bdc {

namespace {

struct Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); }
};

std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != k) continue;
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) s.push_back(i + 1);
        out.push_back(s);
    }
    return out;
}

std::vector<int> complement(int n, const std::vector<int>& s) {
    std::vector<int> out;
    for (int i = 1; i <= n; ++i)
        if (std::find(s.begin(), s.end(), i) == s.end()) out.push_back(i);
    return out;
}

std::vector<int> mirror(int n, std::vector<int> s) {
    for (int& i : s) i = n + 1 - i;
    std::sort(s.begin(), s.end());
    return s;
}

bool all_minors_nonzero(const MatQ& u) {
    const int n = static_cast<int>(u.rows());
    for (int k = 1; k <= n; ++k)
        for (const auto& r : subsets(n, k))
            for (const auto& c : subsets(n, k))
                if (minor_det<Rat>(u, r, c).is_zero()) return false;
    return true;
}

// Gradient of a minor at u: entry (b,a) is the derivative in u_ab.
MatQ minor_gradient(const MatQ& u, const std::vector<int>& rows, const std::vector<int>& cols) {
    return grad([rows, cols](const MatD& x) { return minor_det<Dual2>(x, rows, cols); }, u);
}

std::string sets_str(const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k]);
    return out + "}";
}

}  // namespace

std::vector<BDTriple> enumerate_triples(int n) {
    if (n < 2 || n > 6) throw ResourceLimit("enumerate_triples: n must lie in [2,6]");
    std::vector<BDTriple> out;
    for (int k = 0; k < n - 1; ++k)
        for (const auto& g1 : subsets(n - 1, k))
            for (const auto& g2 : subsets(n - 1, k)) {
                std::vector<int> perm = g2;
                do {
                    std::map<int, int> m;
                    for (int a = 0; a < k; ++a) m[g1[a]] = perm[a];
                    try {
                        out.push_back(validate(n, g1, g2, m));
                    } catch (const InvalidInput&) {
                    }
                } while (std::next_permutation(perm.begin(), perm.end()));
            }
    return out;
}

std::vector<BDPair> random_aperiodic_pairs(int n, int count, std::uint64_t seed) {
    auto triples = enumerate_triples(n);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, triples.size() - 1);
    std::vector<BDPair> out;
    for (int attempt = 0; attempt < 10000 && static_cast<int>(out.size()) < count; ++attempt) {
        BDPair p{triples[pick(rng)], triples[pick(rng)]};
        if (p.rows.empty() && p.cols.empty()) continue;
        if (!is_aperiodic(p)) continue;
        if (std::find(out.begin(), out.end(), p) != out.end()) continue;
        out.push_back(p);
    }
    return out;
}

CheckReport check_poisson_map(const BDPair& p, const SamplePlan& plan, SlotOrder order) {
    Stopwatch sw;
    CheckReport rep{"poisson_map"};
    rep.params = {{"pair", pair_to_json(p)}, {"order", order == SlotOrder::RowsCols ? "rows-cols" : "cols-rows"}};
    const int n = p.n();
    const CartanOp cr = solve_cartan(p.rows), cc = solve_cartan(p.cols);
    auto exotic = build_bracket(p, cr, cc, BracketKind::Exotic, order);
    auto standard = build_bracket(p, cr, cc, BracketKind::StandardCompanion, order);
    for (int t = 0; t < plan.trials; ++t) {
        MatQ u = sample_sl(n, plan, t, [&](const MatQ& x) {
            apply_h<Rat>(p, x);
            return true;
        }, 5);
        MatQ z = apply_h<Rat>(p, u);
        std::vector<MatQ> g(n * n, zeros<Rat>(n, n));
        for (int c = 0; c < n; ++c)
            for (int d = 0; d < n; ++d) {
                MatD x = lift<Dual2>(u);
                x(c, d).b = Rat(1);
                MatD hx = apply_h<Dual2>(p, x);
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b) g[a * n + b](d, c) = hx(a, b).b;
            }
        for (int k = 0; k < n * n; ++k)
            for (int l = k + 1; l < n * n; ++l) {
                Rat lhs = bracket_from_gradients<Rat>(standard, g[k], g[l], u);
                Rat rhs = bracket_from_gradients<Rat>(exotic, unit_matrix<Rat>(n, k % n + 1, k / n + 1),
                                                      unit_matrix<Rat>(n, l % n + 1, l / n + 1), z);
                if (lhs != rhs)
                    rep.fail({{"trial", t}, {"f", {k / n + 1, k % n + 1}}, {"g", {l / n + 1, l % n + 1}},
                              {"pulled_back", lhs.str()}, {"at_image", rhs.str()}, {"U", matrix_json(u)}});
            }
    }
    rep.seconds = sw.seconds();
    return rep;
}

CheckReport check_multiplicativity(int n, const SamplePlan& plan) {
    Stopwatch sw;
    CheckReport rep{"multiplicativity"};
    rep.params = {{"n", n}, {"trials", plan.trials}};
    auto triples = enumerate_triples(n);
    nlohmann::json used = nlohmann::json::array();
    for (int t = 0; t < plan.trials; ++t) {
        auto rng = trial_rng(plan, t, 0, 6);
        std::uniform_int_distribution<std::size_t> pick(0, triples.size() - 1);
        std::uniform_int_distribution<int> coin(0, 1);
        std::vector<ROp> ops;
        nlohmann::json choice = nlohmann::json::array();
        for (int k = 0; k < 3; ++k) {
            const BDTriple& tr = triples[pick(rng)];
            const bool exotic = coin(rng);
            ops.emplace_back(tr, solve_cartan(tr).s, exotic);
            choice.push_back({{"gamma1", tr.gamma1()}, {"exotic", exotic}});
        }
        used.push_back(choice);
        // {.,.}_{a,b}: a acts on the right gradients, b on the left ones.
        BracketSpec sx{ops[0], ops[1]}, sy{ops[1], ops[2]}, sz{ops[0], ops[2]};
        MatQ x = sample_sl(n, plan, t, {}, 7), y = sample_sl(n, plan, t, {}, 8), z = x * y;
        MatD xd = lift<Dual2>(x), yd = lift<Dual2>(y);
        std::vector<MatQ> gx, gy, gz;
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                gx.push_back(grad([=](const MatD& m) { return Dual2((m * yd)(a - 1, b - 1)); }, x));
                gy.push_back(grad([=](const MatD& m) { return Dual2((xd * m)(a - 1, b - 1)); }, y));
                gz.push_back(unit_matrix<Rat>(n, b, a));
            }
        for (int k = 0; k < n * n; ++k)
            for (int l = k + 1; l < n * n; ++l) {
                Rat lhs = bracket_from_gradients<Rat>(sx, gx[k], gx[l], x) + bracket_from_gradients<Rat>(sy, gy[k], gy[l], y);
                Rat rhs = bracket_from_gradients<Rat>(sz, gz[k], gz[l], z);
                if (lhs != rhs) rep.fail({{"trial", t}, {"k", k}, {"l", l}, {"lhs", lhs.str()}, {"rhs", rhs.str()}});
            }
    }
    rep.constants["specs"] = used;
    rep.seconds = sw.seconds();
    return rep;
}

CheckReport check_jacobi(const BDPair& p, const SamplePlan& plan, BracketKind kind) {
    Stopwatch sw;
    CheckReport rep{"jacobi"};
    rep.params = {{"pair", pair_to_json(p)}, {"kind", kind == BracketKind::Exotic ? "exotic" : "standard"}};
    const int n = p.n(), N = n * n;
    if (n > 3) throw ResourceLimit("check_jacobi: n <= 3");
    auto spec = build_bracket(p, kind, SlotOrder::RowsCols);
    std::vector<MatFn> coord;
    std::vector<MatQ> e;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            coord.push_back(coordinate(a, b));
            e.push_back(unit_matrix<Rat>(n, b, a));
        }
    for (int t = 0; t < plan.trials; ++t) {
        MatQ x = sample_sl(n, plan, t, {}, 9);
        // k[g][h] = grad {g,h}
        std::vector<std::vector<MatQ>> k(N, std::vector<MatQ>(N));
        for (int g = 0; g < N; ++g)
            for (int h = g + 1; h < N; ++h) {
                MatFn inner = [&, g, h](const MatD& xd) {
                    return bracket_from_gradients<Dual2>(spec, grad_ea(coord[g], xd), grad_ea(coord[h], xd), xd);
                };
                k[g][h] = grad(inner, x);
                k[h][g] = -k[g][h];
            }
        for (int f = 0; f < N; ++f)
            for (int g = f + 1; g < N; ++g)
                for (int h = g + 1; h < N; ++h) {
                    Rat j = bracket_from_gradients<Rat>(spec, e[f], k[g][h], x) +
                            bracket_from_gradients<Rat>(spec, e[g], k[h][f], x) +
                            bracket_from_gradients<Rat>(spec, e[h], k[f][g], x);
                    if (!j.is_zero()) rep.fail({{"trial", t}, {"triple", {f, g, h}}, {"cyclic_sum", j.str()}});
                }
    }
    rep.seconds = sw.seconds();
    return rep;
}

CheckReport check_r_operator(const BDTriple& t) {
    Stopwatch sw;
    CheckReport rep{"r_operator"};
    rep.params = {{"gamma1", t.gamma1()}, {"n", t.n()}};
    const int n = t.n();
    CartanOp c = solve_cartan(t);
    std::vector<MatQ> choices{c.s};
    for (const MatQ& v : c.nullspace) choices.push_back(c.s + v);
    const MatQ id = identity<Rat>(n * n);
    for (std::size_t k = 0; k < choices.size(); ++k)
        for (bool exotic : {true, false}) {
            ROp r(t, choices[k], exotic);
            if (r.matrix() + r.adjoint_matrix() != id) rep.fail({{"choice", k}, {"exotic", exotic}});
        }
    // Defining equations of S.
    const MatQ& s = c.s;
    if (s.transpose() != -s) rep.fail({{"reason", "S not skew"}});
    for (int i = 0; i < n; ++i) {
        Rat sum(0);
        for (int j = 0; j < n; ++j) sum += s(i, j);
        if (!sum.is_zero()) rep.fail({{"reason", "nonzero row sum"}, {"row", i + 1}});
    }
    auto h = [n](int a) {
        MatQ v = zeros<Rat>(n, 1);
        v(a - 1, 0) = Rat(1);
        v(a, 0) = Rat(-1);
        return v;
    };
    for (int a : t.gamma1()) {
        MatQ lhs = s * (h(a) - h(t.gamma(a))), rhs = (h(a) + h(t.gamma(a))) / Rat(2);
        if (lhs != rhs) rep.fail({{"reason", "Cartan equation"}, {"root", a}});
    }
    rep.constants["S"] = matrix_json(s);
    rep.constants["nullspace_dim"] = c.nullspace.size();
    rep.seconds = sw.seconds();
    return rep;
}

CheckReport check_zero_bracket(int n, const SamplePlan& plan) {
    Stopwatch sw;
    CheckReport rep{"zero_bracket"};
    rep.params = {{"n", n}, {"trials", plan.trials}};
    BDTriple e = empty_triple(n);
    const MatQ zero = zeros<Rat>(n, n);
    BracketSpec spec{ROp(e, zero, false), ROp(e, zero, false)};
    // sign(p - I): the common sign of p - i over i in I, if there is one.
    auto sign = [](int p, const std::vector<int>& s) -> std::optional<int> {
        std::optional<int> out;
        for (int i : s) {
            const int v = (p > i) - (p < i);
            if (out && *out != v) return std::nullopt;
            out = v;
        }
        return out;
    };
    std::optional<int> global;
    int cases = 0;
    for (int t = 0; t < plan.trials; ++t) {
        MatQ u = sample_sl(n, plan, t, all_minors_nonzero, 10);
        for (int k = 1; k <= n; ++k)
            for (const auto& rows : subsets(n, k))
                for (const auto& cols : subsets(n, k)) {
                    MatQ gm = minor_gradient(u, rows, cols) / minor_det<Rat>(u, rows, cols);
                    for (int a = 1; a <= n; ++a)
                        for (int b = 1; b <= n; ++b) {
                            auto si = sign(a, rows), sj = sign(b, cols);
                            if (!si || !sj || std::abs(*si + *sj) > 1) continue;
                            MatQ gu = unit_matrix<Rat>(n, b, a) / u(a - 1, b - 1);
                            Rat val = bracket_from_gradients<Rat>(spec, gu, gm, u);
                            Rat want = Rat(*si + *sj) / Rat(2);
                            ++cases;
                            if (want.is_zero()) {
                                if (!val.is_zero()) rep.fail({{"u", {a, b}}, {"I", rows}, {"J", cols}, {"value", val.str()}});
                                continue;
                            }
                            const int sigma = val == want ? 1 : (val == -want ? -1 : 0);
                            if (!sigma || (global && *global != sigma))
                                rep.fail({{"u", {a, b}}, {"I", rows}, {"J", cols}, {"value", val.str()}, {"table", want.str()}});
                            else
                                global = sigma;
                        }
                }
    }
    rep.constants["cases"] = cases;
    if (global) rep.constants["global_sign"] = *global;
    rep.seconds = sw.seconds();
    return rep;
}

CheckReport check_detdif(const BDPair& p, const SamplePlan& plan) {
    Stopwatch sw;
    CheckReport rep{"detdif"};
    rep.params = {{"pair", pair_to_json(p)}, {"trials", plan.trials}};
    const int n = p.n();
    const CartanOp cr = solve_cartan(p.rows), cc = solve_cartan(p.cols);
    auto spec = build_bracket(p, cr, cc, BracketKind::StandardCompanion, SlotOrder::RowsCols);
    const MatQ zero = zeros<Rat>(n, n);
    BracketSpec spec0{ROp(p.rows, zero, false), ROp(p.cols, zero, false)};
    const MatQ& sr = cr.s;
    const MatQ& sc = cc.s;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> minors;
    for (int k = 1; k <= n; ++k)
        for (const auto& r : subsets(n, k))
            for (const auto& c : subsets(n, k)) minors.push_back({r, c});
    int literal_mismatch = 0, cases = 0;
    for (int t = 0; t < plan.trials; ++t) {
        MatQ u = sample_sl(n, plan, t, all_minors_nonzero, 11);
        std::vector<MatQ> g;
        for (const auto& [r, c] : minors) g.push_back(minor_gradient(u, r, c) / minor_det<Rat>(u, r, c));
        for (std::size_t a = 0; a < minors.size(); ++a)
            for (std::size_t b = 0; b < minors.size(); ++b) {
                const auto& [I, J] = minors[a];
                const auto& [I2, J2] = minors[b];
                Rat delta = bracket_from_gradients<Rat>(spec, g[a], g[b], u) - bracket_from_gradients<Rat>(spec0, g[a], g[b], u);
                Rat consistent(0), literal(0);
                for (int i : J2)
                    for (int j : J) consistent += sc(i - 1, j - 1);
                for (int i : I2)
                    for (int j : I) consistent -= sr(i - 1, j - 1);
                for (int i : J)
                    for (int j : J2) literal += sc(i - 1, j - 1);
                for (int i : I)
                    for (int j : I2) literal -= sr(i - 1, j - 1);
                ++cases;
                if (delta != literal) ++literal_mismatch;
                if (delta != consistent)
                    rep.fail({{"trial", t}, {"first", sets_str(I) + sets_str(J)}, {"second", sets_str(I2) + sets_str(J2)},
                              {"delta", delta.str()}, {"formula", consistent.str()}});
            }
    }
    rep.constants["cases"] = cases;
    rep.constants["literal_display_mismatches"] = literal_mismatch;
    rep.seconds = sw.seconds();
    return rep;
}

CheckReport check_jacobi_minors(int n, const SamplePlan& plan) {
    Stopwatch sw;
    CheckReport rep{"jacobi_minors"};
    rep.params = {{"n", n}, {"trials", plan.trials}};
    int cases = 0;
    for (int t = 0; t < plan.trials; ++t) {
        MatQ x = sample_sl(n, plan, t, {}, 12);
        MatQ xd = dual_matrix<Rat>(x);
        for (int k = 1; k < n; ++k)
            for (const auto& rows : subsets(n, k))
                for (const auto& cols : subsets(n, k)) {
                    Rat lhs = minor_det<Rat>(x, rows, cols);
                    Rat rhs = minor_det<Rat>(xd, complement(n, mirror(n, rows)), complement(n, mirror(n, cols)));
                    ++cases;
                    if (lhs != rhs)
                        rep.fail({{"trial", t}, {"I", rows}, {"J", cols}, {"minor", lhs.str()}, {"dual_minor", rhs.str()}});
                }
    }
    rep.constants["cases"] = cases;
    rep.seconds = sw.seconds();
    return rep;
}

CheckReport check_seaweed(const BDTriple& rows, const SamplePlan& plan) {
    Stopwatch sw;
    CheckReport rep{"seaweed"};
    rep.params = {{"n", rows.n()}, {"gamma1", rows.gamma1()}, {"trials", plan.trials}};
    const int n = rows.n();
    const RunPartition r1 = runs_of_roots(n, rows.gamma1()), r2 = runs_of_roots(n, rows.gamma2());
    for (int t = 0; t < plan.trials; ++t) {
        bool done = false;
        for (int attempt = 0; attempt < plan.resample_limit && !done; ++attempt) {
            auto rng = trial_rng(plan, t, attempt, 13);
            std::uniform_int_distribution<int> entry(-plan.bound, plan.bound), mag(1, plan.bound), coin(0, 1);
            MatQ l = identity<Rat>(n), v = identity<Rat>(n), d = zeros<Rat>(n, n);
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j < i; ++j) {
                    if (r1.number_of(i) == r1.number_of(j)) l(i - 1, j - 1) = Rat(entry(rng));
                    if (r2.number_of(i) == r2.number_of(j)) v(j - 1, i - 1) = Rat(entry(rng));
                }
            Rat prod(1);
            for (int i = 0; i + 1 < n; ++i) {
                d(i, i) = Rat(mag(rng) * (coin(rng) ? 1 : -1));
                prod *= d(i, i);
            }
            d(n - 1, n - 1) = Rat(1) / prod;
            MatQ u = l * d * v;
            try {
                MatQ z = h_rows<Rat>(u, rows) * u;
                MatQ back = invert_hr_seaweed(rows, z);
                done = true;
                if (back != u) rep.fail({{"trial", t}, {"U", matrix_json(u)}, {"recovered", matrix_json(back)}});
            } catch (const NonGeneric&) {
            } catch (const std::domain_error&) {
            }
        }
        if (!done) throw ResourceLimit("check_seaweed: resample limit exceeded");
    }
    rep.seconds = sw.seconds();
    return rep;
}

}  // namespace bdc
