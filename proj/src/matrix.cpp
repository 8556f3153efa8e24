#include "bdc/matrix.hpp"

#include <numeric>

namespace bdc {

std::vector<int> range(int a, int b) {
    std::vector<int> v;
    for (int i = a; i <= b; ++i) v.push_back(i);
    return v;
}

MatQ value_part(const MatD& m) {
    MatQ out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).v;
    return out;
}

Rat det_bareiss(const MatQ& m0) {
    if (m0.rows() != m0.cols()) throw InvalidInput("det: non-square matrix");
    const int n = static_cast<int>(m0.rows());
    if (n == 0) return Rat(1);
    MatQ m = m0;
    Rat prev(1);
    int sgn = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k).is_zero()) {
            int p = k + 1;
            while (p < n && m(p, k).is_zero()) ++p;
            if (p == n) return Rat(0);
            m.row(k).swap(m.row(p));
            sgn = -sgn;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Rat t = m(i, j) * m(k, k);
                if (!m(i, k).is_zero() && !m(k, j).is_zero()) t -= m(i, k) * m(k, j);
                m(i, j) = t / prev;
            }
            m(i, k) = Rat(0);
        }
        prev = m(k, k);
    }
    return sgn > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

template <class S>
S det_berkowitz(const Mat<S>& a) {
    if (a.rows() != a.cols()) throw InvalidInput("det: non-square matrix");
    const int n = static_cast<int>(a.rows());
    if (n == 0) return S(1);
    // c holds det(t I - A_r) coefficients, highest degree first.
    std::vector<S> c{S(1), S(-a(0, 0))};
    for (int r = 1; r < n; ++r) {
        // Toeplitz column: 1, -a_rr, -R C, -R M C, ..., -R M^{r-1} C
        std::vector<S> col{S(1), S(-a(r, r))};
        std::vector<S> v(r);  // M^k C
        for (int i = 0; i < r; ++i) v[i] = a(i, r);
        for (int k = 0; k < r; ++k) {
            S rc(0);
            for (int i = 0; i < r; ++i)
                if (!a(r, i).is_zero() && !v[i].is_zero()) rc += a(r, i) * v[i];
            col.push_back(S(-rc));
            if (k + 1 < r) {
                std::vector<S> w(r, S(0));
                for (int i = 0; i < r; ++i)
                    for (int j = 0; j < r; ++j)
                        if (!a(i, j).is_zero() && !v[j].is_zero()) w[i] += a(i, j) * v[j];
                v = std::move(w);
            }
        }
        std::vector<S> nc(r + 2, S(0));
        for (int i = 0; i < r + 2; ++i)
            for (int j = 0; j <= std::min(i, r); ++j)
                if (!col[i - j].is_zero() && !c[j].is_zero()) nc[i] += col[i - j] * c[j];
        c = std::move(nc);
    }
    return n % 2 == 0 ? c[n] : S(-c[n]);
}

template <class S>
S det_cofactor(const Mat<S>& a) {
    if (a.rows() != a.cols()) throw InvalidInput("det: non-square matrix");
    const int n = static_cast<int>(a.rows());
    if (n == 0) return S(1);
    if (n == 1) return a(0, 0);
    S out(0);
    for (int j = 0; j < n; ++j) {
        if (a(0, j).is_zero()) continue;
        std::vector<int> rows = range(2, n), cols;
        for (int k = 1; k <= n; ++k)
            if (k != j + 1) cols.push_back(k);
        S term = a(0, j) * det_cofactor<S>(submatrix(a, rows, cols));
        if (j % 2) out -= term;
        else out += term;
    }
    return out;
}

namespace {

// Gaussian elimination with pivots chosen among invertible entries.
// Returns false when no invertible pivot exists in some column.
template <class S>
bool det_elimination(Mat<S> m, S& out) {
    const int n = static_cast<int>(m.rows());
    S d(1);
    for (int k = 0; k < n; ++k) {
        int p = k;
        while (p < n && !is_unit(m(p, k))) ++p;
        if (p == n) return false;
        if (p != k) {
            m.row(k).swap(m.row(p));
            d = -d;
        }
        d *= m(k, k);
        S inv = S(1) / m(k, k);
        for (int i = k + 1; i < n; ++i) {
            if (m(i, k).is_zero()) continue;
            S f = m(i, k) * inv;
            for (int j = k + 1; j < n; ++j)
                if (!m(k, j).is_zero()) m(i, j) -= f * m(k, j);
        }
    }
    out = d;
    return true;
}

}  // namespace

template <class S>
S det(const Mat<S>& m) {
    if (m.rows() != m.cols()) throw InvalidInput("det: non-square matrix");
    if constexpr (std::is_same_v<S, Rat>) {
        return det_bareiss(m);
    } else if constexpr (std::is_same_v<S, Dual2>) {
        S out;
        if (det_elimination<S>(m, out)) return out;
        return det_berkowitz<S>(m);
    } else {
        if (m.rows() <= 3) return det_cofactor<S>(m);
        return det_berkowitz<S>(m);
    }
}

template <class S>
S trailing_minor(const Mat<S>& u, int i, int j) {
    const int n = static_cast<int>(u.rows());
    const int l = std::min(n - i, n - j);
    return det<S>(u.block(i - 1, j - 1, l + 1, l + 1));
}

template <class S>
LDU<S> gauss(const Mat<S>& m) {
    if (m.rows() != m.cols()) throw InvalidInput("gauss: non-square matrix");
    const int n = static_cast<int>(m.rows());
    Mat<S> a = m;
    LDU<S> out{identity<S>(n), zeros<S>(n, n), identity<S>(n)};
    for (int c = 0; c < n; ++c) {
        if (!is_unit(a(c, c))) throw NonGeneric(c + 1, "gauss");
        S inv = S(1) / a(c, c);
        for (int r = c + 1; r < n; ++r) {
            if (a(r, c).is_zero()) continue;
            S f = a(r, c) * inv;
            out.lower(r, c) = f;
            for (int j = c; j < n; ++j)
                if (!a(c, j).is_zero()) a(r, j) -= f * a(c, j);
        }
        out.diag(c, c) = a(c, c);
        for (int j = c + 1; j < n; ++j) out.upper(c, j) = a(c, j) * inv;
    }
    return out;
}

template <class S>
OppositeGauss<S> opposite_gauss(const Mat<S>& m) {
    const int n = static_cast<int>(m.rows());
    const SignedPerm w = SignedPerm::w0(n);
    LDU<S> g;
    try {
        g = gauss<S>(w.conjugate(m));
    } catch (const NonGeneric& e) {
        throw NonGeneric(e.index, "opposite_gauss");
    }
    return {w.conjugate<S>(g.lower), w.conjugate<S>(Mat<S>(g.diag * g.upper))};
}

template <class S>
Mat<S> inverse(const Mat<S>& m) {
    if (m.rows() != m.cols()) throw InvalidInput("inverse: non-square matrix");
    const int n = static_cast<int>(m.rows());
    Mat<S> a = m;
    Mat<S> b = identity<S>(n);
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && !is_unit(a(p, c))) ++p;
        if (p == n) throw std::domain_error("inverse: singular matrix");
        if (p != c) {
            a.row(c).swap(a.row(p));
            b.row(c).swap(b.row(p));
        }
        S inv = S(1) / a(c, c);
        for (int j = 0; j < n; ++j) {
            if (!a(c, j).is_zero()) a(c, j) *= inv;
            if (!b(c, j).is_zero()) b(c, j) *= inv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || a(r, c).is_zero()) continue;
            S f = a(r, c);
            for (int j = 0; j < n; ++j) {
                if (!a(c, j).is_zero()) a(r, j) -= f * a(c, j);
                if (!b(c, j).is_zero()) b(r, j) -= f * b(c, j);
            }
        }
    }
    return b;
}

namespace {

template <class S>
Mat<S> cofactor_by_minors(const Mat<S>& m) {
    const int n = static_cast<int>(m.rows());
    Mat<S> c(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            std::vector<int> rows, cols;
            for (int k = 1; k <= n; ++k) {
                if (k != i) rows.push_back(k);
                if (k != j) cols.push_back(k);
            }
            S x = n == 1 ? S(1) : minor_det(m, rows, cols);
            c(i - 1, j - 1) = (i + j) % 2 ? S(-x) : x;
        }
    return c;
}

}  // namespace

template <class S>
Mat<S> cofactor_matrix(const Mat<S>& m) {
    if (m.rows() != m.cols()) throw InvalidInput("cofactor: non-square matrix");
    if constexpr (!std::is_same_v<S, Poly>) {
        S d = det<S>(m);
        if (is_unit(d)) {
            Mat<S> inv = inverse<S>(m);
            Mat<S> c = inv.transpose();
            for (Eigen::Index i = 0; i < c.rows(); ++i)
                for (Eigen::Index j = 0; j < c.cols(); ++j)
                    if (!c(i, j).is_zero()) c(i, j) *= d;
            return c;
        }
    }
    return cofactor_by_minors<S>(m);
}

template <class S>
Mat<S> dual_matrix(const Mat<S>& m) {
    return SignedPerm::w0J(static_cast<int>(m.rows())).conjugate<S>(cofactor_matrix<S>(m));
}

SignedPerm::SignedPerm(std::vector<int> perm, std::vector<int> sign)
    : perm_(std::move(perm)), sign_(std::move(sign)) {
    if (perm_.size() != sign_.size()) throw InvalidInput("SignedPerm: size mismatch");
    std::vector<int> seen(perm_.size(), 0);
    for (int p : perm_) {
        if (p < 0 || p >= size() || seen[p]++) throw InvalidInput("SignedPerm: not a permutation");
    }
    for (int s : sign_)
        if (s != 1 && s != -1) throw InvalidInput("SignedPerm: sign must be +-1");
}

SignedPerm SignedPerm::identity(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    return SignedPerm(p, std::vector<int>(n, 1));
}

SignedPerm SignedPerm::w0(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = n - 1 - i;
    return SignedPerm(p, std::vector<int>(n, 1));
}

SignedPerm SignedPerm::J(int n) {
    std::vector<int> p(n), s(n);
    for (int i = 0; i < n; ++i) {
        p[i] = i;
        s[i] = (i + 1) % 2 ? -1 : 1;
    }
    return SignedPerm(p, s);
}

SignedPerm SignedPerm::w0J(int n) { return w0(n) * J(n); }

SignedPerm SignedPerm::operator*(const SignedPerm& o) const {
    if (size() != o.size()) throw InvalidInput("SignedPerm: size mismatch");
    std::vector<int> p(size()), s(size());
    for (int i = 0; i < size(); ++i) {
        p[i] = perm_[o.perm_[i]];
        s[i] = o.sign_[i] * sign_[o.perm_[i]];
    }
    return SignedPerm(p, s);
}

SignedPerm SignedPerm::inverse() const {
    std::vector<int> p(size()), s(size());
    for (int i = 0; i < size(); ++i) {
        p[perm_[i]] = i;
        s[perm_[i]] = sign_[i];
    }
    return SignedPerm(p, s);
}

#define BDC_INSTANTIATE_ALL(S)                                   \
    template S det_berkowitz<S>(const Mat<S>&);                  \
    template S det_cofactor<S>(const Mat<S>&);                   \
    template S det<S>(const Mat<S>&);                            \
    template S trailing_minor<S>(const Mat<S>&, int, int);       \
    template Mat<S> cofactor_matrix<S>(const Mat<S>&);           \
    template Mat<S> dual_matrix<S>(const Mat<S>&);

#define BDC_INSTANTIATE_FIELD(S)                                 \
    template LDU<S> gauss<S>(const Mat<S>&);                     \
    template OppositeGauss<S> opposite_gauss<S>(const Mat<S>&);  \
    template Mat<S> inverse<S>(const Mat<S>&);

BDC_INSTANTIATE_ALL(Rat)
BDC_INSTANTIATE_ALL(Dual2)
BDC_INSTANTIATE_ALL(Poly)
BDC_INSTANTIATE_FIELD(Rat)
BDC_INSTANTIATE_FIELD(Dual2)

}  // namespace bdc
