#include "bdc/grad.hpp"
#include "bdc/matrix.hpp"
#include "fixtures.hpp"

using namespace bdc;
using bdc::test::mq;

TEST(Rat, CanonicalForm) {
    Rat r(6, -4);
    EXPECT_EQ(r.num(), -3);
    EXPECT_EQ(r.den(), 2);
    EXPECT_EQ(Rat::parse("-6/4"), r);
    EXPECT_EQ(Rat::parse("7"), Rat(7));
    EXPECT_EQ(r.str(), "-3/2");
}

TEST(Rat, ParseRejectsGarbage) {
    EXPECT_THROW(Rat::parse("1/0"), std::invalid_argument);
    EXPECT_THROW(Rat::parse("x"), std::invalid_argument);
    EXPECT_THROW(Rat::parse(""), std::invalid_argument);
}

TEST(Rat, DivisionByZeroThrows) { EXPECT_THROW(Rat(1) / Rat(0), std::domain_error); }

TEST(Rat, Arithmetic) {
    EXPECT_EQ(Rat(1, 3) + Rat(1, 6), Rat(1, 2));
    EXPECT_EQ(Rat(2, 3) * Rat(3, 4), Rat(1, 2));
    EXPECT_EQ(pow(Rat(-2, 3), 3), Rat(-8, 27));
    EXPECT_EQ(pow(Rat(2), -2), Rat(1, 4));
}

TEST(Dual2, TruncatesAtSecondOrder) {
    Dual2 a(Rat(2), Rat(1), Rat(0)), b(Rat(3), Rat(0), Rat(1));
    Dual2 p = a * b;  // (2+ea)(3+eb) = 6 + 3ea + 2eb + eaeb
    EXPECT_EQ(p, Dual2(Rat(6), Rat(3), Rat(2), Rat(1)));
    Dual2 sq = a * a;  // ea^2 = 0
    EXPECT_EQ(sq, Dual2(Rat(4), Rat(4), Rat(0), Rat(0)));
    EXPECT_EQ(p / b, a);
}

TEST(Poly, RingAndDivision) {
    Poly x = Poly::var(0), y = Poly::var(1);
    Poly f = (x + y) * (x - y);
    EXPECT_EQ(f, x * x - y * y);
    EXPECT_EQ(f / (x + y), x - y);
    EXPECT_FALSE(exact_divide(f, x + Poly(1)).has_value());
    EXPECT_THROW(f / (x + Poly(1)), InexactDivision);
    EXPECT_TRUE((f - f).is_zero());
    EXPECT_EQ(f.eval({Rat(3), Rat(1)}), Rat(8));
}

TEST(Det, Basics) {
    EXPECT_EQ(det<Rat>(identity<Rat>(3)), Rat(1));
    EXPECT_EQ(det<Rat>(mq({{1, 2}, {3, 4}})), Rat(-2));
    EXPECT_THROW(det<Rat>(MatQ(zeros<Rat>(2, 3))), InvalidInput);
}

TEST(Det, AlgorithmsAgreeWithLeibniz) {
    for (int seed = 0; seed < 20; ++seed) {
        MatQ m = test::random_matrix(5, 5, seed);
        m(0, 0) = Rat(1, 3);
        Rat expected = test::leibniz_det(m);
        EXPECT_EQ(det_bareiss(m), expected);
        EXPECT_EQ(det_berkowitz<Rat>(m), expected);
        EXPECT_EQ(det_cofactor<Rat>(m), expected);
        EXPECT_EQ(det<Rat>(m), expected);
    }
}

TEST(Det, Multiplicative) {
    for (int seed = 0; seed < 10; ++seed) {
        MatQ a = test::random_matrix(4, 4, seed), b = test::random_matrix(4, 4, 100 + seed);
        MatQ ab = a * b;
        EXPECT_EQ(det<Rat>(ab), det<Rat>(a) * det<Rat>(b));
    }
}

TEST(Det, OverPolynomials) {
    MatP m(2, 2);
    m << Poly::var(0), Poly::var(1), Poly::var(2), Poly::var(3);
    EXPECT_EQ(det<Poly>(m), Poly::var(0) * Poly::var(3) - Poly::var(1) * Poly::var(2));
}

TEST(Gauss, TwoByTwo) {
    auto f = gauss<Rat>(mq({{2, 1}, {4, 3}}));
    EXPECT_EQ(f.lower, mq({{1, 0}, {2, 1}}));
    EXPECT_EQ(f.diag, mq({{2, 0}, {0, 1}}));
    EXPECT_EQ(f.upper, mq({{1, Rat(1, 2)}, {0, 1}}));
}

TEST(Gauss, RoundTrip) {
    SamplePlan plan;
    for (int t = 0; t < 5; ++t) {
        MatQ u = sample_sl(4, plan, t);
        auto f = gauss<Rat>(u);
        EXPECT_TRUE(is_lower_unitriangular<Rat>(f.lower));
        EXPECT_TRUE(is_upper_unitriangular<Rat>(f.upper));
        MatQ back = f.lower * f.diag * f.upper;
        EXPECT_EQ(back, u);
    }
}

TEST(Gauss, NonGenericReportsMinor) {
    try {
        gauss<Rat>(mq({{1, 1, 0}, {1, 1, 0}, {0, 0, 1}}));
        FAIL();
    } catch (const NonGeneric& e) {
        EXPECT_EQ(e.index, 2);
    }
}

TEST(OppositeGauss, RoundTrip) {
    MatQ m = test::mq({{2, 1}, {3, 2}});
    auto f = opposite_gauss<Rat>(m);
    EXPECT_EQ(f.plus, test::mq({{1, Rat(1, 2)}, {0, 1}}));
    EXPECT_EQ(f.zero_minus, test::mq({{Rat(1, 2), 0}, {3, 2}}));
    SamplePlan plan;
    for (int t = 0; t < 3; ++t) {
        MatQ u = sample_sl(4, plan, t);
        auto g = opposite_gauss<Rat>(u);
        EXPECT_TRUE(is_upper_unitriangular<Rat>(g.plus));
        MatQ back = g.plus * g.zero_minus;
        EXPECT_EQ(back, u);
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) EXPECT_TRUE(g.zero_minus(i, j).is_zero());
    }
}

// The antidiagonal matrix has a vanishing trailing 1x1 minor, so no
// factorization with a lower triangular right factor exists.
TEST(OppositeGauss, AntidiagonalIsNonGeneric) {
    EXPECT_THROW(opposite_gauss<Rat>(test::mq({{0, -1}, {1, 0}})), NonGeneric);
}

TEST(OppositeGauss, UpperInputIsAlreadyFactored) {
    MatQ m = test::random_unitriangular(4, true, 7);
    auto f = opposite_gauss<Rat>(m);
    EXPECT_EQ(f.plus, m);
    EXPECT_EQ(f.zero_minus, identity<Rat>(4));
}

TEST(OppositeGauss, VanishingTrailingMinor) {
    EXPECT_THROW(opposite_gauss<Rat>(mq({{1, 0}, {0, 0}})), NonGeneric);
}

TEST(SignedPerm, GroupLaws) {
    auto p = SignedPerm::w0J(4);
    EXPECT_EQ(p * p.inverse(), SignedPerm::identity(4));
    MatQ pm = p.matrix<Rat>();
    MatQ prod = SignedPerm::w0(4).matrix<Rat>() * SignedPerm::J(4).matrix<Rat>();
    EXPECT_EQ(pm, prod);
    MatQ x = test::random_matrix(4, 4, 3);
    MatQ conj = pm * x * p.inverse().matrix<Rat>();
    EXPECT_EQ(p.conjugate<Rat>(x), conj);
}

TEST(DualMatrix, Identity) { EXPECT_EQ(dual_matrix<Rat>(identity<Rat>(3)), identity<Rat>(3)); }

TEST(DualMatrix, Diagonal) {
    MatQ d = zeros<Rat>(3, 3);
    d(0, 0) = Rat(2);
    d(1, 1) = Rat(-3);
    d(2, 2) = Rat(-1, 6);
    MatQ expected = zeros<Rat>(3, 3);
    expected(0, 0) = Rat(-6);
    expected(1, 1) = Rat(-1, 3);
    expected(2, 2) = Rat(1, 2);
    EXPECT_EQ(dual_matrix<Rat>(d), expected);
}

TEST(DualMatrix, ConjugatedCofactorOracle) {
    const int n = 4;
    MatQ x = test::random_matrix(n, n, 11);
    // cofactor by explicit minors, then conjugation by w0 J
    MatQ cof(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            std::vector<int> r, c;
            for (int k = 1; k <= n; ++k) {
                if (k != i) r.push_back(k);
                if (k != j) c.push_back(k);
            }
            Rat m = test::leibniz_det(submatrix<Rat>(x, r, c));
            cof(i - 1, j - 1) = (i + j) % 2 ? -m : m;
        }
    auto p = SignedPerm::w0J(n);
    MatQ expected = p.matrix<Rat>() * cof * p.inverse().matrix<Rat>();
    EXPECT_EQ(dual_matrix<Rat>(x), expected);
}

TEST(Grad, Coordinate) {
    MatQ x = test::random_matrix(3, 3, 5);
    MatQ g = grad(coordinate(1, 2), x);
    EXPECT_EQ(g, unit_matrix<Rat>(3, 2, 1));
}

TEST(Grad, DeterminantIsAdjugate) {
    MatQ x = test::random_matrix(3, 3, 9);
    MatFn f = [](const MatD& m) { return det<Dual2>(m); };
    MatQ adj = cofactor_matrix<Rat>(x).transpose();
    EXPECT_EQ(grad(f, x), adj);
}

TEST(Grad, TrailingMinorMatchesCofactors) {
    MatQ x = test::random_matrix(3, 3, 13);
    MatFn f = [](const MatD& m) { return trailing_minor<Dual2>(m, 2, 2); };
    MatQ g = grad(f, x);
    // F_22 = x22 x33 - x23 x32
    MatQ expected = zeros<Rat>(3, 3);
    expected(1, 1) = x(2, 2);
    expected(2, 2) = x(1, 1);
    expected(2, 1) = -x(2, 1);  // d/dx23 sits at (3,2)
    expected(1, 2) = -x(1, 2);
    EXPECT_EQ(g, expected);
}

TEST(Grad, Leibniz) {
    MatQ x = test::random_matrix(3, 3, 21);
    MatFn f = [](const MatD& m) { return trailing_minor<Dual2>(m, 2, 1); };
    MatFn g = [](const MatD& m) { return m(0, 2) * m(1, 0) + m(2, 2); };
    MatFn fg = [&](const MatD& m) { return f(m) * g(m); };
    Rat fv = f(lift<Dual2>(x)).v, gv = g(lift<Dual2>(x)).v;
    MatQ expected = grad(f, x) * gv + grad(g, x) * fv;
    EXPECT_EQ(grad(fg, x), expected);
}

TEST(MatrixJson, RoundTrip) {
    MatQ m = mq({{1, Rat(-2, 3)}, {0, 5}});
    EXPECT_EQ(parse_matrix_json(matrix_to_json(m)), m);
    EXPECT_THROW(parse_matrix_json("[[1,2],[3]]"), InvalidInput);
}
