#include "bdc/poissonmap.hpp"
#include "bdc/rmatrix.hpp"
#include "fixtures.hpp"

#include <optional>
#include <tuple>

using namespace bdc;
using bdc::test::mq;

namespace {

MatQ lower3(Rat u, Rat v, Rat w) { return mq({{1, 0, 0}, {u, 1, 0}, {w, v, 1}}); }

// Applies gamma (off the diagonal) entrywise to a nilpotent matrix.
MatQ gamma_of(const GammaOp& g, const MatQ& x) {
    const int n = g.n();
    MatQ out = zeros<Rat>(n, n);
    for (int p = 1; p <= n; ++p)
        for (int q = 1; q <= n; ++q) {
            if (p == q || x(p - 1, q - 1).is_zero()) continue;
            if (const auto& img = g.image(p, q)) out(img->row - 1, img->col - 1) += x(p - 1, q - 1) * Rat(img->coeff);
        }
    return out;
}

MatQ log_unipotent(const MatQ& m) {
    const int n = static_cast<int>(m.rows());
    MatQ x = m - identity<Rat>(n), pw = x, out = zeros<Rat>(n, n);
    for (int k = 1; k < n; ++k) {
        out += pw * Rat(k % 2 ? 1 : -1, k);
        pw = pw * x;
    }
    return out;
}

MatQ exp_nilpotent(const MatQ& x) {
    const int n = static_cast<int>(x.rows());
    MatQ out = identity<Rat>(n), pw = identity<Rat>(n);
    Rat fact(1);
    for (int k = 1; k < n; ++k) {
        pw = pw * x;
        fact *= Rat(k);
        out += pw / fact;
    }
    return out;
}

bool supported_in_runs(const MatQ& m, const RunPartition& r) {
    for (int i = 1; i <= m.rows(); ++i)
        for (int j = 1; j <= m.cols(); ++j)
            if (i != j && !m(i - 1, j - 1).is_zero() && r.number_of(i) != r.number_of(j)) return false;
    return true;
}

std::vector<BDTriple> triples() {
    auto p = test::running_example();
    return {test::single_root3().rows, test::reversed5(), p.rows, p.cols, validate(5, {1, 3}, {2, 4}, {{1, 2}, {3, 4}})};
}

}  // namespace

TEST(WeylRep, ConjugatesLowerToUpper) {
    for (const auto& t : triples()) {
        const RunPartition r = runs(t, Side::RowsOfX);
        MatQ w = weyl_representative(r);
        MatQ winv = inverse<Rat>(w);
        for (Eigen::Index i = 0; i < w.rows(); ++i)
            for (Eigen::Index j = 0; j < w.cols(); ++j) {
                const Rat& x = w(i, j);
                EXPECT_TRUE(x.is_zero() || x == Rat(1) || x == Rat(-1));
            }
        MatQ b = block_diagonal<Rat>(test::random_unitriangular(t.n(), false, 3), r);
        for (int i = 0; i < t.n(); ++i) b(i, i) = Rat(i + 2);
        MatQ c = w * b * winv;
        for (int i = 0; i < t.n(); ++i)
            for (int j = 0; j < i; ++j) EXPECT_TRUE(c(i, j).is_zero());
    }
}

// Oracle: the reduced word (1,2,1) of w0 with the J = {1} letter first,
// U_- = y1(a) y2(b) y1(c), splits as V = y1(a).
TEST(LeadingFactor, ReducedWordSplit) {
    const RunPartition r = runs_of_roots(3, {1});
    for (auto [a, b, c] : {std::tuple{2, -3, 5}, std::tuple{-1, 4, 1}, std::tuple{3, 1, -2}}) {
        MatQ ya = lower3(a, 0, 0), yb = lower3(0, b, 0), yc = lower3(c, 0, 0);
        MatQ um = ya * yb * yc;
        auto s = leading_unipotent_factor<Rat>(um, r);
        EXPECT_EQ(s.v, ya);
        EXPECT_EQ(s.rest, MatQ(yb * yc));
    }
    // in entries: V = I + (u - w/v) E21, not the block of U_-
    auto s = leading_unipotent_factor<Rat>(lower3(2, -3, 5), r);
    EXPECT_EQ(s.v, lower3(Rat(11, 3), 0, 0));
}

TEST(LeadingFactor, TrivialAndFullRuns) {
    MatQ um = test::random_unitriangular(4, false, 8);
    auto triv = leading_unipotent_factor<Rat>(um, runs_of_roots(4, {}));
    EXPECT_EQ(triv.v, identity<Rat>(4));
    EXPECT_EQ(triv.rest, um);
    auto full = leading_unipotent_factor<Rat>(um, runs_of_roots(4, {1, 2, 3}));
    EXPECT_EQ(full.v, um);
    EXPECT_EQ(full.rest, identity<Rat>(4));
}

TEST(LeadingFactor, Factorization) {
    SamplePlan plan;
    for (const auto& t : triples()) {
        const RunPartition r = runs(t, Side::RowsOfX);
        MatQ u = sample_sl(t.n(), plan, 0);
        MatQ um = gauss<Rat>(u).lower;
        auto s = leading_unipotent_factor<Rat>(um, r);
        EXPECT_TRUE(is_lower_unitriangular<Rat>(s.v));
        EXPECT_TRUE(supported_in_runs(s.v, r));
        MatQ back = s.v * s.rest;
        EXPECT_EQ(back, um);
        // the closed form for barV agrees with (V W)_+
        EXPECT_EQ(bar_v<Rat>(s.v, weyl_representative(r), BarSide::Plus), bar_v_rows<Rat>(u, t));
    }
}

TEST(TrailingFactor, Mirror) {
    const RunPartition r = runs_of_roots(3, {1});
    MatQ xa = lower3(2, 0, 0).transpose(), xb = lower3(0, -1, 0).transpose(), xc = lower3(4, 0, 0).transpose();
    MatQ up = xc * xb * xa;
    auto s = trailing_unipotent_factor<Rat>(up, r);
    EXPECT_EQ(s.v, xa);
    EXPECT_EQ(s.rest, MatQ(xc * xb));
    auto triv = trailing_unipotent_factor<Rat>(up, runs_of_roots(3, {}));
    EXPECT_EQ(triv.v, identity<Rat>(3));
    EXPECT_THROW(trailing_unipotent_factor<Rat>(MatQ(up.transpose()), r), InvalidInput);
}

TEST(BarV, Examples) {
    const RunPartition r = runs_of_roots(2, {1});
    MatQ w = weyl_representative(r);
    EXPECT_EQ(w, mq({{0, -1}, {1, 0}}));
    for (int u : {1, -2, 3}) {
        // [[1,0],[u,1]] [[0,-1],[1,0]] = [[0,-1],[1,-u]]
        EXPECT_EQ(bar_v<Rat>(mq({{1, 0}, {u, 1}}), w, BarSide::Plus), mq({{1, Rat(1, u)}, {0, 1}}));
    }
    // V = I: the trailing minor of W vanishes
    EXPECT_THROW(bar_v<Rat>(identity<Rat>(2), w, BarSide::Plus), NonGeneric);
    for (int x : {1, 4, -3}) {
        // [[0,-1],[1,x]] = [[1/x,-1],[0,x]] [[1,0],[1/x,1]]
        // with W^T: [[0,1],[-1,-x]] = [[-1/x,1],[0,-x]] [[1,0],[1/x,1]]
        MatQ wc = w.transpose();
        EXPECT_EQ(bar_v<Rat>(mq({{1, x}, {0, 1}}), w, BarSide::Minus), mq({{1, 0}, {Rat(1, x), 1}}));
        EXPECT_EQ(bar_v<Rat>(mq({{1, x}, {0, 1}}), wc, BarSide::Minus), mq({{1, 0}, {Rat(1, x), 1}}));
    }
}

TEST(BarV, ColumnsClosedForm) {
    SamplePlan plan;
    for (const auto& t : triples()) {
        SCOPED_TRACE(t.n());
        const RunPartition r = runs(t, Side::ColsOfY);
        // small integer samples can land on the non-generic locus
        MatQ u;
        std::optional<UnipotentSplit<Rat>> s;
        for (int seed = 2; !s && seed < 12; ++seed) {
            u = sample_sl(t.n(), plan, seed);
            try {
                s = trailing_unipotent_factor<Rat>(gauss<Rat>(u).upper, r);
            } catch (const NonGeneric&) {
            }
        }
        ASSERT_TRUE(s.has_value());
        EXPECT_TRUE(supported_in_runs(s->v, r));
        MatQ wc = weyl_representative(r).transpose();
        EXPECT_EQ(bar_v<Rat>(s->v, wc, BarSide::Minus), bar_v_cols<Rat>(u, t));
    }
}

TEST(BarV, TorusChangeOfRepresentative) {
    SamplePlan plan;
    auto t = test::reversed5();
    const RunPartition r = runs(t, Side::RowsOfX);
    MatQ u = sample_sl(5, plan, 1);
    auto s = leading_unipotent_factor<Rat>(gauss<Rat>(u).lower, r);
    MatQ w = weyl_representative(r), d = identity<Rat>(5);
    d(0, 0) = Rat(-1);
    d(1, 1) = Rat(-1);
    MatQ w2 = w * d;
    EXPECT_EQ(bar_v<Rat>(s.v, w, BarSide::Plus), bar_v<Rat>(s.v, w2, BarSide::Plus));
}

TEST(BGamma, IdentityAndShift) {
    auto t = test::single_root3().rows;
    EXPECT_EQ(bgamma<Rat>(t, identity<Rat>(3)), identity<Rat>(3));
    for (int a : {1, -2, 7}) {
        MatQ n = identity<Rat>(3);
        n(0, 1) = Rat(a);
        MatQ expected = identity<Rat>(3);
        expected(1, 2) = Rat(a);
        EXPECT_EQ(bgamma<Rat>(t, n), expected);
    }
}

TEST(BGamma, ExpGammaLogOracle) {
    for (const auto& t : triples()) {
        GammaOp g(t);
        for (bool upper : {true, false}) {
            for (int seed = 0; seed < 3; ++seed) {
                MatQ n = test::random_unitriangular(t.n(), upper, 50 + seed);
                n = block_diagonal<Rat>(n, runs(t, Side::RowsOfX));
                MatQ expected = exp_nilpotent(gamma_of(g, log_unipotent(n)));
                EXPECT_EQ(bgamma<Rat>(t, n), expected);
            }
        }
    }
}

TEST(BGamma, Homomorphism) {
    for (const auto& t : triples()) {
        const RunPartition r = runs(t, Side::RowsOfX);
        MatQ a = block_diagonal<Rat>(test::random_unitriangular(t.n(), true, 1), r);
        MatQ b = block_diagonal<Rat>(test::random_unitriangular(t.n(), true, 2), r);
        MatQ ab = a * b;
        MatQ prod = bgamma<Rat>(t, a) * bgamma<Rat>(t, b);
        EXPECT_EQ(bgamma<Rat>(t, ab), prod);
    }
}

TEST(HMaps, EmptyPairIsIdentity) {
    SamplePlan plan;
    MatQ u = sample_sl(4, plan, 0);
    auto h = h_maps<Rat>(empty_pair(4), u);
    EXPECT_EQ(h.hr, identity<Rat>(4));
    EXPECT_EQ(h.hc, identity<Rat>(4));
    EXPECT_EQ(h.h, u);
}

TEST(HMaps, SingleRootDepthOne) {
    SamplePlan plan;
    auto p = test::single_root3();
    MatQ u = sample_generic(p, plan, 0);
    auto h = h_maps<Rat>(p, u);
    EXPECT_EQ(h.hr, bgamma<Rat>(p.rows, bar_v_rows<Rat>(u, p.rows)));
    EXPECT_EQ(h.hc, identity<Rat>(3));
    EXPECT_TRUE(is_upper_unitriangular<Rat>(h.hr));
}

TEST(HMaps, Structure) {
    SamplePlan plan;
    auto p = test::running_example();
    MatQ u = sample_generic(p, plan, 0);
    auto h = h_maps<Rat>(p, u);
    EXPECT_EQ(det<Rat>(h.h), Rat(1));
    EXPECT_TRUE(is_upper_unitriangular<Rat>(h.hr));
    EXPECT_TRUE(is_lower_unitriangular<Rat>(h.hc));
    EXPECT_TRUE(supported_in_runs(h.hr, runs(p.rows, Side::RowsOfY)));
    EXPECT_TRUE(supported_in_runs(h.hc, runs(p.cols, Side::ColsOfX)));
}

TEST(HMaps, FactorDependence) {
    SamplePlan plan;
    auto p = test::running_example();
    MatQ u = sample_generic(p, plan, 1);
    auto f = gauss<Rat>(u);
    MatQ d2 = f.diag;
    d2(0, 0) *= Rat(-2);
    d2(1, 1) /= Rat(-2);
    MatQ up2 = test::random_unitriangular(7, true, 77), lo2 = test::random_unitriangular(7, false, 78);
    MatQ u_rows = f.lower * d2 * up2;  // same U_-
    MatQ u_cols = lo2 * d2 * f.upper;  // same U_+
    EXPECT_EQ(h_rows<Rat>(u_rows, p.rows), h_rows<Rat>(u, p.rows));
    EXPECT_EQ(h_cols<Rat>(u_cols, p.cols), h_cols<Rat>(u, p.cols));
}

TEST(HMaps, BarVFromH) {
    // barV = g* g(H^{-1}) g*(H), g = bgamma
    SamplePlan plan;
    for (const auto& t : triples()) {
        BDPair p = make_pair(t, empty_triple(t.n()));
        MatQ u = sample_generic(p, plan, 0);
        MatQ hr = h_rows<Rat>(u, t);
        MatQ hinv = inverse<Rat>(hr);
        MatQ rhs = bgamma_star<Rat>(t, bgamma<Rat>(t, hinv)) * bgamma_star<Rat>(t, hr);
        EXPECT_EQ(bar_v_rows<Rat>(u, t), rhs);
    }
}

TEST(HMaps, NonGenericStage) {
    MatQ u = mq({{0, 1, 0}, {1, 0, 0}, {0, 0, -1}});
    try {
        h_maps<Rat>(test::single_root3(), u);
        FAIL();
    } catch (const NonGeneric& e) {
        EXPECT_EQ(e.stage, "gauss of U");
        EXPECT_EQ(e.index, 1);
    }
}

TEST(Seaweed, EmptyTriple) {
    MatQ z = test::random_matrix(3, 3, 2);
    EXPECT_EQ(invert_hr_seaweed(empty_triple(3), z), z);
}

TEST(Seaweed, RoundTrip) {
    SamplePlan plan;
    for (const auto& t : triples()) EXPECT_TRUE(check_seaweed(t, plan).pass);
}
