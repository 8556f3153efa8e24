#include "bdc/rmatrix.hpp"

namespace bdc {

GammaOp::GammaOp(const BDTriple& t) : n_(t.n()), fwd_(n_ * n_), bwd_(n_ * n_), cartan_(zeros<Rat>(n_, n_)) {
    for (int p = 1; p <= n_; ++p)
        for (int q = 1; q <= n_; ++q) {
            if (p == q) continue;
            const int lo = std::min(p, q), hi = std::max(p, q);
            auto c = t.component_of(lo);
            if (!c || hi - 1 > c->hi) continue;
            Image im;
            if (t.orientation_of(c->lo) == Orientation::Preserved) {
                const int shift = t.gamma(c->lo) - c->lo;
                im = {p + shift, q + shift, 1};
            } else {
                const int size = c->size() + 1, off = t.gamma(c->hi);
                const int r = p - c->lo + 1, s = q - c->lo + 1;
                im = {off + size - s, off + size - r, (r + s + 1) % 2 ? -1 : 1};
            }
            fwd_[idx(p, q)] = im;
            bwd_[idx(im.col, im.row)] = Image{q, p, im.coeff};
        }

    const auto& g1 = t.gamma1();
    if (g1.empty()) return;
    auto h = [this](int a) {
        MatQ v = zeros<Rat>(n_, 1);
        v(a - 1, 0) = Rat(1);
        v(a, 0) = Rat(-1);
        return v;
    };
    const int m = static_cast<int>(g1.size());
    MatQ basis(n_, m), image(n_, m);
    for (int k = 0; k < m; ++k) {
        basis.col(k) = h(g1[k]);
        image.col(k) = h(t.gamma(g1[k]));
    }
    MatQ gram = basis.transpose() * basis;
    cartan_ = image * inverse<Rat>(gram) * basis.transpose();
}

MatQ GammaOp::matrix(bool include_cartan) const {
    const int N = n_ * n_;
    MatQ m = zeros<Rat>(N, N);
    for (int p = 1; p <= n_; ++p)
        for (int q = 1; q <= n_; ++q)
            if (p != q && fwd_[idx(p, q)]) {
                const Image& im = *fwd_[idx(p, q)];
                m(idx(im.row, im.col), idx(p, q)) = Rat(im.coeff);
            }
    if (include_cartan)
        for (int a = 1; a <= n_; ++a)
            for (int b = 1; b <= n_; ++b) m(idx(a, a), idx(b, b)) = cartan_(a - 1, b - 1);
    return m;
}

MatQ GammaOp::star_matrix(bool include_cartan) const {
    const int N = n_ * n_;
    MatQ m = zeros<Rat>(N, N);
    for (int p = 1; p <= n_; ++p)
        for (int q = 1; q <= n_; ++q)
            if (p != q && bwd_[idx(p, q)]) {
                const Image& im = *bwd_[idx(p, q)];
                m(idx(im.row, im.col), idx(p, q)) = Rat(im.coeff);
            }
    if (include_cartan)
        for (int a = 1; a <= n_; ++a)
            for (int b = 1; b <= n_; ++b) m(idx(a, a), idx(b, b)) = cartan_(b - 1, a - 1);
    return m;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(MatQ& a, int ncols) {
    std::vector<int> piv;
    int row = 0;
    for (int c = 0; c < ncols && row < a.rows(); ++c) {
        int p = row;
        while (p < a.rows() && a(p, c).is_zero()) ++p;
        if (p == a.rows()) continue;
        a.row(row).swap(a.row(p));
        Rat inv = Rat(1) / a(row, c);
        for (Eigen::Index j = 0; j < a.cols(); ++j) a(row, j) *= inv;
        for (Eigen::Index r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, c).is_zero()) continue;
            Rat f = a(r, c);
            for (Eigen::Index j = 0; j < a.cols(); ++j)
                if (!a(row, j).is_zero()) a(r, j) -= f * a(row, j);
        }
        piv.push_back(c);
        ++row;
    }
    return piv;
}

}  // namespace

CartanOp solve_cartan(const BDTriple& t) {
    const int n = t.n();
    std::vector<std::pair<int, int>> unknowns;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) unknowns.push_back({i, j});
    const int m = static_cast<int>(unknowns.size());
    auto skew = [&](const std::vector<Rat>& x) {
        MatQ s = zeros<Rat>(n, n);
        for (int k = 0; k < m; ++k) {
            s(unknowns[k].first, unknowns[k].second) = x[k];
            s(unknowns[k].second, unknowns[k].first) = -x[k];
        }
        return s;
    };
    // Row i of S d, as coefficients in the unknowns.
    auto row_of = [&](int i, const std::vector<Rat>& d) {
        std::vector<Rat> r(m, Rat(0));
        for (int k = 0; k < m; ++k) {
            auto [a, b] = unknowns[k];
            if (a == i) r[k] += d[b];
            if (b == i) r[k] -= d[a];
        }
        return r;
    };
    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> rhs;
    for (int i = 0; i < n; ++i) {
        rows.push_back(row_of(i, std::vector<Rat>(n, Rat(1))));
        rhs.push_back(Rat(0));
    }
    auto h = [n](int a) {
        std::vector<Rat> v(n, Rat(0));
        v[a - 1] = Rat(1);
        v[a] = Rat(-1);
        return v;
    };
    for (int a : t.gamma1()) {
        auto ha = h(a), hg = h(t.gamma(a));
        std::vector<Rat> x(n), y(n);
        for (int i = 0; i < n; ++i) {
            x[i] = ha[i] - hg[i];
            y[i] = (ha[i] + hg[i]) / Rat(2);
        }
        for (int i = 0; i < n; ++i) {
            rows.push_back(row_of(i, x));
            rhs.push_back(y[i]);
        }
    }
    MatQ a(rows.size(), m + 1);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (int k = 0; k < m; ++k) a(r, k) = rows[r][k];
        a(r, m) = rhs[r];
    }
    std::vector<int> piv = rref(a, m);
    for (Eigen::Index r = static_cast<Eigen::Index>(piv.size()); r < a.rows(); ++r)
        if (!a(r, m).is_zero()) throw Inconsistent("solve_cartan: inconsistent linear system");
    std::vector<Rat> x(m, Rat(0));
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = a(r, m);
    CartanOp out{skew(x), {}};
    std::vector<bool> is_pivot(m, false);
    for (int c : piv) is_pivot[c] = true;
    for (int f = 0; f < m; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> z(m, Rat(0));
        z[f] = Rat(1);
        for (std::size_t r = 0; r < piv.size(); ++r) z[piv[r]] = -a(r, f);
        out.nullspace.push_back(skew(z));
    }
    return out;
}

ROp::ROp(const BDTriple& t, MatQ s, bool exotic) : gamma_(t), s_(std::move(s)), exotic_(exotic) {
    if (s_.rows() != t.n() || s_.cols() != t.n()) throw InvalidInput("ROp: Cartan matrix has the wrong size");
}

template <class S>
Mat<S> ROp::apply(const Mat<S>& eta) const {
    const int n = this->n();
    Mat<S> out = zeros<S>(n, n);
    for (int i = 0; i < n; ++i) {
        S acc = eta(i, i) / S(2);
        for (int j = 0; j < n; ++j)
            if (!s_(i, j).is_zero() && !eta(j, j).is_zero()) acc += S(s_(i, j)) * eta(j, j);
        out(i, i) = acc;
    }
    for (int p = 1; p <= n; ++p)
        for (int q = 1; q <= n; ++q) {
            if (p == q) continue;
            const S& v = eta(p - 1, q - 1);
            if (v.is_zero()) continue;
            if (p < q) out(p - 1, q - 1) += v;
            if (!exotic_) continue;
            int r = p, c = q, sign = 1;
            while (true) {
                const auto& im = p < q ? gamma_.image(r, c) : gamma_.star_image(r, c);
                if (!im) break;
                r = im->row;
                c = im->col;
                sign *= im->coeff;
                if ((p < q) == (sign > 0)) out(r - 1, c - 1) += v;
                else out(r - 1, c - 1) -= v;
            }
        }
    return out;
}

MatQ ROp::matrix() const {
    const int n = this->n();
    MatQ m(n * n, n * n);
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            MatQ img = apply<Rat>(unit_matrix<Rat>(n, a, b));
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) m(r * n + c, (a - 1) * n + (b - 1)) = img(r, c);
        }
    return m;
}

MatQ ROp::adjoint_matrix() const {
    const int n = this->n();
    MatQ t = zeros<Rat>(n * n, n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t(a * n + b, b * n + a) = Rat(1);
    return t * matrix().transpose() * t;
}

BracketSpec build_bracket(const BDPair& p, const CartanOp& rows, const CartanOp& cols, BracketKind kind,
                          SlotOrder order) {
    const bool exotic = kind == BracketKind::Exotic;
    ROp r(p.rows, rows.s, exotic), c(p.cols, cols.s, exotic);
    if (order == SlotOrder::RowsCols) return {r, c};
    return {c, r};
}

BracketSpec build_bracket(const BDPair& p, BracketKind kind, SlotOrder order) {
    return build_bracket(p, solve_cartan(p.rows), solve_cartan(p.cols), kind, order);
}

template <class S>
S pairing(const Mat<S>& a, const Mat<S>& b) {
    S out(0);
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (!a(i, j).is_zero() && !b(j, i).is_zero()) out += a(i, j) * b(j, i);
    return out;
}

template <class S>
Mat<S> traceless(const Mat<S>& a) {
    const Eigen::Index n = a.rows();
    S tr(0);
    for (Eigen::Index i = 0; i < n; ++i) tr += a(i, i);
    Mat<S> out = a;
    S shift = tr / S(static_cast<int>(n));
    for (Eigen::Index i = 0; i < n; ++i) out(i, i) -= shift;
    return out;
}

template <class S>
S bracket_from_gradients(const BracketSpec& spec, const Mat<S>& g1, const Mat<S>& g2, const Mat<S>& x) {
    Mat<S> l1 = traceless<S>(Mat<S>(g1 * x)), l2 = traceless<S>(Mat<S>(g2 * x));
    Mat<S> r1 = traceless<S>(Mat<S>(x * g1)), r2 = traceless<S>(Mat<S>(x * g2));
    return pairing<S>(spec.left.apply<S>(l1), l2) - pairing<S>(spec.right.apply<S>(r1), r2);
}

Rat bracket(const BracketSpec& spec, const MatFn& f, const MatFn& g, const MatQ& x) {
    return bracket_from_gradients<Rat>(spec, grad(f, x), grad(g, x), x);
}

Dual2 bracket(const BracketSpec& spec, const MatFn& f, const MatFn& g, const MatD& x) {
    return bracket_from_gradients<Dual2>(spec, grad(f, x), grad(g, x), x);
}

Rat bracket_of_logs(const BracketSpec& spec, const MatFn& f, const MatFn& g, const MatQ& x) {
    MatD xd = lift<Dual2>(x);
    Rat fv = f(xd).v, gv = g(xd).v;
    if (fv.is_zero() || gv.is_zero()) throw std::domain_error("bracket_of_logs: function vanishes at the point");
    return bracket(spec, f, g, x) / (fv * gv);
}

template MatQ ROp::apply<Rat>(const MatQ&) const;
template MatD ROp::apply<Dual2>(const MatD&) const;
template Rat pairing<Rat>(const MatQ&, const MatQ&);
template Dual2 pairing<Dual2>(const MatD&, const MatD&);
template MatQ traceless<Rat>(const MatQ&);
template MatD traceless<Dual2>(const MatD&);
template Rat bracket_from_gradients<Rat>(const BracketSpec&, const MatQ&, const MatQ&, const MatQ&);
template Dual2 bracket_from_gradients<Dual2>(const BracketSpec&, const MatD&, const MatD&, const MatD&);

}  // namespace bdc
