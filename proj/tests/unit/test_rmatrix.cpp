#include "bdc/rmatrix.hpp"
#include "fixtures.hpp"

using namespace bdc;
using bdc::test::mq;

namespace {

MatQ vec_transpose(int n) {
    MatQ t = zeros<Rat>(n * n, n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t(a * n + b, b * n + a) = Rat(1);
    return t;
}

std::vector<Rat> h(int n, int a) {
    std::vector<Rat> v(n, Rat(0));
    v[a - 1] = Rat(1);
    v[a] = Rat(-1);
    return v;
}

MatQ column(const std::vector<Rat>& v) {
    MatQ m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

bool cartan_relation_holds(const BDTriple& t, const MatQ& s) {
    GammaOp g(t);
    for (int a : t.gamma1()) {
        MatQ x = column(h(t.n(), a));
        MatQ gx = g.cartan() * x;
        MatQ lhs = s * (x - gx);
        MatQ rhs = (x + gx) * Rat(1, 2);
        if (lhs != rhs) return false;
    }
    return true;
}

std::vector<BDTriple> sample_triples() {
    auto p = test::running_example();
    return {empty_triple(3), test::single_root3().rows, test::reversed5(), p.rows, p.cols,
            validate(5, {1, 3}, {2, 4}, {{1, 2}, {3, 4}})};
}

MatFn minor_fn(int i, int j) {
    return [i, j](const MatD& m) { return trailing_minor<Dual2>(m, i, j); };
}

}  // namespace

TEST(SolveCartan, EmptyTriple) {
    auto c = solve_cartan(empty_triple(4));
    EXPECT_EQ(c.s, zeros<Rat>(4, 4));
}

TEST(SolveCartan, SingleRoot) {
    auto c = solve_cartan(test::single_root3().rows);
    Rat a(1, 6);
    EXPECT_EQ(c.s, mq({{0, -a, a}, {a, 0, -a}, {-a, a, 0}}));
    EXPECT_TRUE(c.nullspace.empty());
}

TEST(SolveCartan, RelationSkewnessAndNullspace) {
    for (const auto& t : sample_triples()) {
        auto c = solve_cartan(t);
        const int n = t.n();
        EXPECT_EQ(c.s, MatQ(-c.s.transpose()));
        for (int i = 0; i < n; ++i) EXPECT_EQ(c.s.row(i).sum(), Rat(0));
        EXPECT_TRUE(cartan_relation_holds(t, c.s));
        for (const auto& z : c.nullspace) {
            EXPECT_EQ(z, MatQ(-z.transpose()));
            MatQ shifted = c.s + z;
            EXPECT_TRUE(cartan_relation_holds(t, shifted));
        }
    }
}

TEST(GammaOp, StarIsAdjoint) {
    for (const auto& t : sample_triples()) {
        GammaOp g(t);
        const int n = t.n();
        MatQ tt = vec_transpose(n);
        for (bool cartan : {false, true}) {
            MatQ adj = tt * g.matrix(cartan).transpose() * tt;
            EXPECT_EQ(g.star_matrix(cartan), adj);
        }
    }
}

// Off the diagonal only: on the Cartan part the projection onto span{h_a}
// composed with h_a -> h_gamma(a) need not be nilpotent.
TEST(GammaOp, NilpotentOnRootVectors) {
    for (const auto& t : sample_triples()) {
        GammaOp g(t);
        MatQ m = g.matrix(false), p = m;
        for (int k = 0; k < t.n(); ++k) p = p * m;
        EXPECT_EQ(p, zeros<Rat>(m.rows(), m.cols()));
    }
}

TEST(GammaOp, PreservedShift) {
    GammaOp g(test::single_root3().rows);
    ASSERT_TRUE(g.image(1, 2).has_value());
    EXPECT_EQ(g.image(1, 2)->row, 2);
    EXPECT_EQ(g.image(1, 2)->col, 3);
    EXPECT_EQ(g.image(1, 2)->coeff, 1);
    EXPECT_FALSE(g.image(2, 3).has_value());
    EXPECT_FALSE(g.image(1, 3).has_value());
    ASSERT_TRUE(g.star_image(3, 2).has_value());
    EXPECT_EQ(g.star_image(3, 2)->row, 2);
    EXPECT_EQ(g.star_image(3, 2)->col, 1);
}

TEST(GammaOp, ReversedTwist) {
    // component [1,2] -> [3,4]: the 3x3 block on [1,3] goes to [3,5] by
    // E -> -P E^T P^{-1}, P = w0 J
    GammaOp g(test::reversed5());
    auto p = SignedPerm::w0J(3);
    MatQ pm = p.matrix<Rat>(), pinv = p.inverse().matrix<Rat>();
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            if (a == b) continue;
            MatQ local = -(pm * unit_matrix<Rat>(3, a, b).transpose() * pinv);
            const auto& img = g.image(a, b);
            ASSERT_TRUE(img.has_value());
            MatQ got = zeros<Rat>(3, 3);
            got(img->row - 3, img->col - 3) = Rat(img->coeff);
            EXPECT_EQ(got, local) << a << "," << b;
        }
}

TEST(GammaOp, CartanMapsSimpleCoroots) {
    GammaOp g(test::reversed5());
    EXPECT_EQ(MatQ(g.cartan() * column(h(5, 1))), column(h(5, 4)));
    EXPECT_EQ(MatQ(g.cartan() * column(h(5, 2))), column(h(5, 3)));
    // orthogonal complement of span{h1,h2} is killed
    std::vector<Rat> v{Rat(1), Rat(1), Rat(1), Rat(-3), Rat(0)};
    EXPECT_EQ(MatQ(g.cartan() * column(v)), zeros<Rat>(5, 1));
}

TEST(ROp, SumWithAdjointIsIdentity) {
    for (const auto& t : sample_triples()) {
        auto c = solve_cartan(t);
        std::vector<MatQ> choices{c.s};
        for (const auto& z : c.nullspace) choices.push_back(c.s + z);
        for (const auto& s : choices)
            for (bool exotic : {true, false}) {
                ROp r(t, s, exotic);
                MatQ sum = r.matrix() + r.adjoint_matrix();
                EXPECT_EQ(sum, identity<Rat>(t.n() * t.n()));
            }
    }
}

TEST(ROp, StandardProjections) {
    ROp r(empty_triple(3), zeros<Rat>(3, 3), false);
    MatQ a = test::random_matrix(3, 3, 2);
    for (int i = 0; i < 3; ++i) a(i, i) = Rat(i + 1) - Rat(2);  // traceless
    MatQ out = r.apply<Rat>(a);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) EXPECT_EQ(out(i, j), a(i, j) / Rat(2));
            if (i < j) EXPECT_EQ(out(i, j), a(i, j));
            if (i > j) EXPECT_EQ(out(i, j), Rat(0));
        }
}

TEST(ROp, ExoticSums) {
    auto t = test::single_root3().rows;
    ROp r(t, solve_cartan(t).s, true);
    MatQ e12 = r.apply<Rat>(unit_matrix<Rat>(3, 1, 2));
    EXPECT_EQ(e12, MatQ(unit_matrix<Rat>(3, 1, 2) + unit_matrix<Rat>(3, 2, 3)));
    MatQ e32 = r.apply<Rat>(unit_matrix<Rat>(3, 3, 2));
    EXPECT_EQ(e32, MatQ(-unit_matrix<Rat>(3, 2, 1)));
    MatQ e31 = r.apply<Rat>(unit_matrix<Rat>(3, 3, 1));
    EXPECT_EQ(e31, zeros<Rat>(3, 3));
    ROp st(t, solve_cartan(t).s, false);
    EXPECT_EQ(st.apply<Rat>(unit_matrix<Rat>(3, 1, 2)), unit_matrix<Rat>(3, 1, 2));
}

TEST(ROp, MatrixAgreesWithApply) {
    auto t = test::reversed5();
    ROp r(t, solve_cartan(t).s, true);
    MatQ a = test::random_matrix(5, 5, 17);
    Rat tr = a.trace() / Rat(5);
    for (int i = 0; i < 5; ++i) a(i, i) -= tr;
    MatQ out = r.apply<Rat>(a);
    MatQ v(25, 1);
    for (int i = 0; i < 25; ++i) v(i, 0) = a(i / 5, i % 5);
    MatQ w = r.matrix() * v;
    for (int i = 0; i < 25; ++i) EXPECT_EQ(w(i, 0), out(i / 5, i % 5));
}

TEST(Bracket, AntisymmetryAndLeibniz) {
    for (const auto& p : {test::single_root3(), make_pair(test::reversed5(), empty_triple(5))}) {
        const int n = p.n();
        SamplePlan plan;
        MatQ x = sample_sl(n, plan, 0);
        for (auto kind : {BracketKind::Exotic, BracketKind::StandardCompanion}) {
            auto spec = build_bracket(p, kind, SlotOrder::RowsCols);
            MatFn f = minor_fn(2, 1), g = coordinate(1, n), k = minor_fn(n - 1, n - 1);
            MatFn gk = [&](const MatD& m) { return g(m) * k(m); };
            EXPECT_EQ(bracket(spec, f, f, x), Rat(0));
            EXPECT_EQ(bracket(spec, f, g, x), -bracket(spec, g, f, x));
            Rat gv = g(lift<Dual2>(x)).v, kv = k(lift<Dual2>(x)).v;
            EXPECT_EQ(bracket(spec, f, gk, x), bracket(spec, f, g, x) * kv + gv * bracket(spec, f, k, x));
            EXPECT_EQ(bracket_of_logs(spec, f, g, x), bracket(spec, f, g, x) / (f(lift<Dual2>(x)).v * gv));
        }
    }
}

TEST(Bracket, SlotOrderSwapsOperators) {
    auto p = test::running_example();
    auto a = build_bracket(p, BracketKind::Exotic, SlotOrder::RowsCols);
    auto b = build_bracket(p, BracketKind::Exotic, SlotOrder::ColsRows);
    EXPECT_EQ(a.right.matrix(), b.left.matrix());
    EXPECT_EQ(a.left.matrix(), b.right.matrix());
    EXPECT_NE(a.right.matrix(), a.left.matrix());
}

TEST(Bracket, StandardCompanionSharesCartan) {
    auto p = test::single_root3();
    auto ex = build_bracket(p, BracketKind::Exotic, SlotOrder::RowsCols);
    auto st = build_bracket(p, BracketKind::StandardCompanion, SlotOrder::RowsCols);
    EXPECT_EQ(ex.right.cartan_s(), st.right.cartan_s());
    EXPECT_EQ(ex.left.cartan_s(), st.left.cartan_s());
    EXPECT_FALSE(st.right.exotic());
    // standard companion = exotic bracket of the empty triple with the same S
    ROp manual(empty_triple(3), st.right.cartan_s(), true);
    EXPECT_EQ(st.right.matrix(), manual.matrix());
}

TEST(Bracket, ZeroBracketEntry) {
    // {log u21, log u11} for the S = 0 standard bracket
    const MatQ zero = zeros<Rat>(3, 3);
    BracketSpec spec{ROp(empty_triple(3), zero, false), ROp(empty_triple(3), zero, false)};
    SamplePlan plan;
    for (int t = 0; t < 3; ++t) {
        MatQ u = sample_sl(3, plan, t, [](const MatQ& m) { return !m(1, 0).is_zero(); });
        EXPECT_EQ(bracket_of_logs(spec, coordinate(2, 1), coordinate(1, 1), u), Rat(-1, 2));
    }
}

TEST(Bracket, ZeroBracketTableAndDetDif) {
    SamplePlan plan;
    plan.trials = 1;
    auto z = check_zero_bracket(3, plan);
    EXPECT_TRUE(z.pass);
    EXPECT_EQ(z.constants["global_sign"], -1);
    auto d = check_detdif(make_pair(test::single_root3().rows, test::single_root3().rows), plan);
    EXPECT_TRUE(d.pass);
}

TEST(Bracket, OperatorReports) {
    for (const auto& t : sample_triples()) EXPECT_TRUE(check_r_operator(t).pass);
}
