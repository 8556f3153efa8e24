#include "bdc/poissonmap.hpp"

namespace bdc {

template <class S>
Mat<S> block_diagonal(const Mat<S>& m, const RunPartition& runs) {
    Mat<S> out = identity<S>(static_cast<int>(m.rows()));
    for (const Interval& r : runs.runs)
        out.block(r.lo - 1, r.lo - 1, r.size(), r.size()) = m.block(r.lo - 1, r.lo - 1, r.size(), r.size());
    return out;
}

namespace {

MatQ elementary_rep(int n, int i) {
    MatQ s = identity<Rat>(n);
    s(i - 1, i - 1) = Rat(0);
    s(i, i) = Rat(0);
    s(i - 1, i) = Rat(-1);
    s(i, i - 1) = Rat(1);
    return s;
}

// Local w0 J on a block of size p, up to an irrelevant global sign.
template <class S>
Mat<S> local_w0j(int p) {
    Mat<S> m = zeros<S>(p, p);
    for (int i = 0; i < p; ++i) m(i, p - 1 - i) = S(i % 2 ? 1 : -1);
    return m;
}

template <class S>
Mat<S> w0_matrix(int n) {
    return SignedPerm::w0(n).matrix<S>();
}

template <class S>
bool in_run_blocks(const Mat<S>& m, const RunPartition& runs) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero() && runs.number_of(i + 1) != runs.number_of(j + 1)) return false;
    return true;
}

}  // namespace

MatQ weyl_representative(const RunPartition& runs) {
    const int n = runs.n;
    MatQ w = identity<Rat>(n);
    for (const Interval& r : runs.runs) {
        MatQ b = identity<Rat>(n);
        for (int top = r.lo; top < r.hi; ++top)
            for (int i = top; i >= r.lo; --i) b = b * elementary_rep(n, i);
        w = w * b;
    }
    return w;
}

template <class S>
Mat<S> bar_v(const Mat<S>& v, const MatQ& w, BarSide side) {
    Mat<S> ws = lift<S>(w);
    if (side == BarSide::Plus) return opposite_gauss<S>(Mat<S>(v * ws)).plus;
    // W V = (W V)_{+,0} (W V)_-, read off the transpose
    Mat<S> t = (ws * v).transpose();
    return opposite_gauss<S>(t).plus.transpose();
}

template <class S>
UnipotentSplit<S> leading_unipotent_factor(const Mat<S>& u_minus, const RunPartition& runs) {
    const int n = static_cast<int>(u_minus.rows());
    if (!is_lower_unitriangular<S>(u_minus)) throw InvalidInput("leading_unipotent_factor: input not lower unitriangular");
    if (in_run_blocks<S>(u_minus, runs)) return {u_minus, identity<S>(n)};
    Mat<S> vbar = block_diagonal<S>(opposite_gauss<S>(Mat<S>(u_minus * w0_matrix<S>(n))).plus, runs);
    Mat<S> w_inv = lift<S>(inverse<Rat>(weyl_representative(runs)));
    Mat<S> v = gauss<S>(Mat<S>(vbar * w_inv)).lower;
    return {v, Mat<S>(inverse<S>(v) * u_minus)};
}

template <class S>
UnipotentSplit<S> trailing_unipotent_factor(const Mat<S>& u_plus, const RunPartition& runs) {
    if (!is_upper_unitriangular<S>(u_plus)) throw InvalidInput("trailing_unipotent_factor: input not upper unitriangular");
    auto t = leading_unipotent_factor<S>(Mat<S>(u_plus.transpose()), runs);
    return {Mat<S>(t.v.transpose()), Mat<S>(t.rest.transpose())};
}

template <class S>
Mat<S> bar_v_rows(const Mat<S>& u, const BDTriple& rows) {
    const int n = static_cast<int>(u.rows());
    Mat<S> lower;
    try {
        lower = gauss<S>(u).lower;
    } catch (const NonGeneric& e) {
        throw NonGeneric(e.index, "gauss of U");
    }
    const RunPartition rr = runs(rows, Side::RowsOfX);
    try {
        // Seaweed points: U_- is its own leading factor.
        if (in_run_blocks<S>(lower, rr)) return bar_v<S>(lower, weyl_representative(rr), BarSide::Plus);
        return block_diagonal<S>(opposite_gauss<S>(Mat<S>(lower * w0_matrix<S>(n))).plus, rr);
    } catch (const NonGeneric& e) {
        throw NonGeneric(e.index, "row barV");
    }
}

template <class S>
Mat<S> bar_v_cols(const Mat<S>& u, const BDTriple& cols) {
    const int n = static_cast<int>(u.rows());
    Mat<S> upper;
    try {
        upper = gauss<S>(u).upper;
    } catch (const NonGeneric& e) {
        throw NonGeneric(e.index, "gauss of U");
    }
    const RunPartition rc = runs(cols, Side::ColsOfY);
    try {
        if (in_run_blocks<S>(upper, rc))
            return Mat<S>(bar_v<S>(Mat<S>(upper.transpose()), weyl_representative(rc), BarSide::Plus).transpose());
        Mat<S> t = opposite_gauss<S>(Mat<S>(upper.transpose() * w0_matrix<S>(n))).plus;
        return Mat<S>(block_diagonal<S>(t, rc).transpose());
    } catch (const NonGeneric& e) {
        throw NonGeneric(e.index, "column barV");
    }
}

template <class S>
Mat<S> bgamma(const BDTriple& t, const Mat<S>& m) {
    const int n = static_cast<int>(m.rows());
    Mat<S> out = identity<S>(n);
    for (const Interval& c : t.components()) {
        const int p = c.size() + 1;
        Mat<S> blk = m.block(c.lo - 1, c.lo - 1, p, p);
        int target;
        if (t.orientation_of(c.lo) == Orientation::Preserved) {
            target = t.gamma(c.lo);
        } else {
            target = t.gamma(c.hi);
            Mat<S> pm = local_w0j<S>(p);
            Mat<S> pinv = pm.transpose();
            blk = pm * Mat<S>(inverse<S>(blk).transpose()) * pinv;
        }
        out.block(target - 1, target - 1, p, p) = blk;
    }
    return out;
}

namespace {

template <class S>
bool is_identity(const Mat<S>& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (m(i, j) != S(i == j ? 1 : 0)) return false;
    return true;
}

}  // namespace

template <class S>
Mat<S> h_rows(const Mat<S>& u, const BDTriple& rows) {
    const int n = static_cast<int>(u.rows());
    Mat<S> h = identity<S>(n);
    if (rows.empty()) return h;
    Mat<S> cur = bar_v_rows<S>(u, rows);
    while (true) {
        cur = bgamma<S>(rows, cur);
        if (is_identity<S>(cur)) break;
        h = cur * h;
    }
    return h;
}

template <class S>
Mat<S> h_cols(const Mat<S>& u, const BDTriple& cols) {
    const int n = static_cast<int>(u.rows());
    Mat<S> h = identity<S>(n);
    if (cols.empty()) return h;
    const BDTriple star = cols.inverse();
    Mat<S> cur = bar_v_cols<S>(u, cols);
    while (true) {
        cur = bgamma<S>(star, cur);
        if (is_identity<S>(cur)) break;
        h = h * cur;
    }
    return h;
}

template <class S>
HPair<S> h_maps(const BDPair& p, const Mat<S>& u) {
    try {
        gauss<S>(u);
    } catch (const NonGeneric& e) {
        throw NonGeneric(e.index, "gauss of U");
    }
    HPair<S> out{h_rows<S>(u, p.rows), h_cols<S>(u, p.cols), Mat<S>()};
    out.h = out.hr * u * out.hc;
    return out;
}

MatQ invert_hr_seaweed(const BDTriple& rows, const MatQ& z) {
    if (rows.empty()) return z;
    MatQ zm;
    try {
        zm = gauss<Rat>(z).lower;
    } catch (const NonGeneric& e) {
        throw NonGeneric(e.index, "gauss of Z");
    }
    MatQ zbar = zm * weyl_representative(runs(rows, Side::RowsOfX));
    MatQ plus;
    try {
        plus = opposite_gauss<Rat>(zbar).plus;
    } catch (const NonGeneric& e) {
        throw NonGeneric(e.index, "opposite gauss of Z_- W");
    }
    return bgamma<Rat>(rows, inverse<Rat>(plus)) * z;
}

#define BDC_INSTANTIATE(S)                                                                       \
    template Mat<S> block_diagonal<S>(const Mat<S>&, const RunPartition&);                      \
    template UnipotentSplit<S> leading_unipotent_factor<S>(const Mat<S>&, const RunPartition&); \
    template UnipotentSplit<S> trailing_unipotent_factor<S>(const Mat<S>&, const RunPartition&);\
    template Mat<S> bar_v<S>(const Mat<S>&, const MatQ&, BarSide);                              \
    template Mat<S> bar_v_rows<S>(const Mat<S>&, const BDTriple&);                              \
    template Mat<S> bar_v_cols<S>(const Mat<S>&, const BDTriple&);                              \
    template Mat<S> bgamma<S>(const BDTriple&, const Mat<S>&);                                  \
    template Mat<S> h_rows<S>(const Mat<S>&, const BDTriple&);                                  \
    template Mat<S> h_cols<S>(const Mat<S>&, const BDTriple&);                                  \
    template HPair<S> h_maps<S>(const BDPair&, const Mat<S>&);

BDC_INSTANTIATE(Rat)
BDC_INSTANTIATE(Dual2)

}  // namespace bdc
