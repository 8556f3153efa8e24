#pragma once

#include "bdc/dual2.hpp"
#include "bdc/errors.hpp"
#include "bdc/poly.hpp"
#include "bdc/rat.hpp"

#include <Eigen/Core>
#include <vector>

namespace bdc {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
using MatQ = Mat<Rat>;
using MatD = Mat<Dual2>;
using MatP = Mat<Poly>;

inline bool is_unit(const Rat& x) { return !x.is_zero(); }
inline bool is_unit(const Dual2& x) { return !x.v.is_zero(); }
inline bool is_unit(const Poly& x) { return x.size() == 1 && x.total_degree() == 0; }

template <class S>
Mat<S> identity(int n) {
    Mat<S> m = Mat<S>::Constant(n, n, S(0));
    for (int i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
}

template <class S>
Mat<S> zeros(int r, int c) {
    return Mat<S>::Constant(r, c, S(0));
}

// Elementary matrix E_ab, 1-based indices.
template <class S>
Mat<S> unit_matrix(int n, int a, int b) {
    Mat<S> m = zeros<S>(n, n);
    m(a - 1, b - 1) = S(1);
    return m;
}

template <class To>
Mat<To> lift(const MatQ& m) {
    Mat<To> out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = To(m(i, j));
    return out;
}

MatQ value_part(const MatD& m);

// Rows and columns are 1-based index lists.
template <class S>
Mat<S> submatrix(const Mat<S>& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    Mat<S> out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i] - 1, cols[j] - 1);
    return out;
}

std::vector<int> range(int a, int b);  // [a,b], empty if b < a

// Fraction-free Bareiss elimination.
Rat det_bareiss(const MatQ& m);
// Division-free characteristic polynomial method; valid over any commutative ring.
template <class S>
S det_berkowitz(const Mat<S>& m);
// Laplace expansion along the first row; test oracle.
template <class S>
S det_cofactor(const Mat<S>& m);
template <class S>
S det(const Mat<S>& m);

template <class S>
S minor_det(const Mat<S>& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    return det(submatrix(m, rows, cols));
}

// F_ij(U): the maximal trailing minor with upper left corner (i,j), 1-based.
template <class S>
S trailing_minor(const Mat<S>& u, int i, int j);

template <class S>
struct LDU {
    Mat<S> lower, diag, upper;
};
template <class S>
LDU<S> gauss(const Mat<S>& m);

// m = plus * zero_minus with plus upper unitriangular.
template <class S>
struct OppositeGauss {
    Mat<S> plus, zero_minus;
};
template <class S>
OppositeGauss<S> opposite_gauss(const Mat<S>& m);

template <class S>
Mat<S> inverse(const Mat<S>& m);

template <class S>
Mat<S> cofactor_matrix(const Mat<S>& m);

// Entry (a,b) is the unsigned minor of m with row n+1-a and column n+1-b
// deleted; equal to (w0 J) Cof(m) (w0 J)^{-1}. Defined for singular m too.
template <class S>
Mat<S> dual_matrix(const Mat<S>& m);

// Monomial matrix e_i -> sign[i] e_{perm[i]}, 0-based internally.
class SignedPerm {
public:
    SignedPerm() = default;
    SignedPerm(std::vector<int> perm, std::vector<int> sign);

    static SignedPerm identity(int n);
    static SignedPerm w0(int n);
    static SignedPerm J(int n);  // diag((-1)^i), i 1-based
    static SignedPerm w0J(int n);

    int size() const { return static_cast<int>(perm_.size()); }
    const std::vector<int>& perm() const { return perm_; }
    const std::vector<int>& sign() const { return sign_; }

    SignedPerm operator*(const SignedPerm& o) const;
    SignedPerm inverse() const;
    bool operator==(const SignedPerm& o) const { return perm_ == o.perm_ && sign_ == o.sign_; }

    template <class S>
    Mat<S> matrix() const {
        Mat<S> m = zeros<S>(size(), size());
        for (int i = 0; i < size(); ++i) m(perm_[i], i) = S(sign_[i]);
        return m;
    }

    // P m P^{-1}
    template <class S>
    Mat<S> conjugate(const Mat<S>& m) const {
        Mat<S> out(m.rows(), m.cols());
        for (int i = 0; i < size(); ++i)
            for (int j = 0; j < size(); ++j) {
                const S& x = m(i, j);
                out(perm_[i], perm_[j]) = sign_[i] * sign_[j] > 0 ? x : S(-x);
            }
        return out;
    }

private:
    std::vector<int> perm_, sign_;
};

template <class S>
bool is_lower_unitriangular(const Mat<S>& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (i == j && m(i, j) != S(1)) return false;
            if (j > i && !m(i, j).is_zero()) return false;
        }
    return true;
}

template <class S>
bool is_upper_unitriangular(const Mat<S>& m) {
    return is_lower_unitriangular<S>(m.transpose());
}

// Matrix JSON: array of rows, each entry a string "p" or "p/q".
MatQ parse_matrix_json(const std::string& text);
std::string matrix_to_json(const MatQ& m);

}  // namespace bdc
