#pragma once

#include "bdc/bd_data.hpp"
#include "bdc/grad.hpp"

#include <optional>
#include <vector>

namespace bdc {

// gamma and gamma* on gl_n. Off the diagonal both act monomially with
// coefficients +-1; on the diagonal gamma is the orthogonal projection onto
// span{h_a : a in gamma1} followed by h_a -> h_gamma(a).
class GammaOp {
public:
    struct Image {
        int row, col, coeff;
    };

    explicit GammaOp(const BDTriple& t);

    int n() const { return n_; }
    // Root vector E_pq, p != q, 1-based.
    const std::optional<Image>& image(int p, int q) const { return fwd_[idx(p, q)]; }
    const std::optional<Image>& star_image(int p, int q) const { return bwd_[idx(p, q)]; }
    // n x n matrix acting on diagonal vectors.
    const MatQ& cartan() const { return cartan_; }

    // Dense n^2 x n^2 matrices in the row-major basis E_11, E_12, ...
    MatQ matrix(bool include_cartan = true) const;
    MatQ star_matrix(bool include_cartan = true) const;

private:
    int idx(int p, int q) const { return (p - 1) * n_ + (q - 1); }
    int n_;
    std::vector<std::optional<Image>> fwd_, bwd_;
    MatQ cartan_;
};

struct CartanOp {
    MatQ s;                       // skew, zero row sums
    std::vector<MatQ> nullspace;  // skew matrices solving the homogeneous system
};

// S(1 - gamma) h_a = (1/2)(1 + gamma) h_a for a in gamma1; free parameters
// of the skew coefficients s_ij (i<j, lexicographic) are set to zero.
CartanOp solve_cartan(const BDTriple& t);

// eta -> (1/2 + S) eta_0 + sum_{k>=0} gamma^k eta_> - sum_{k>=1} gamma*^k eta_<
// where eta_0 is the diagonal part. Without the gamma sums for standard
// companions.
class ROp {
public:
    ROp(const BDTriple& t, MatQ s, bool exotic);

    int n() const { return gamma_.n(); }
    bool exotic() const { return exotic_; }
    const MatQ& cartan_s() const { return s_; }

    template <class S>
    Mat<S> apply(const Mat<S>& eta) const;

    MatQ matrix() const;
    // Adjoint with respect to <A,B> = tr(AB).
    MatQ adjoint_matrix() const;

private:
    GammaOp gamma_;
    MatQ s_;
    bool exotic_;
};

enum class BracketKind { Exotic, StandardCompanion };
enum class SlotOrder { RowsCols, ColsRows };

// {f,g} = <L(grad^L f), grad^L g> - <R(grad^R f), grad^R g> with
// grad^L f = grad f . X and grad^R f = X . grad f, both made traceless.
struct BracketSpec {
    ROp right, left;
};

BracketSpec build_bracket(const BDPair& p, const CartanOp& rows, const CartanOp& cols, BracketKind kind,
                          SlotOrder order);
BracketSpec build_bracket(const BDPair& p, BracketKind kind, SlotOrder order);

template <class S>
S pairing(const Mat<S>& a, const Mat<S>& b);
template <class S>
Mat<S> traceless(const Mat<S>& a);

// Bracket from trace-pairing gradients g1 = grad f, g2 = grad g at x.
template <class S>
S bracket_from_gradients(const BracketSpec& spec, const Mat<S>& g1, const Mat<S>& g2, const Mat<S>& x);

Rat bracket(const BracketSpec& spec, const MatFn& f, const MatFn& g, const MatQ& x);
// The same over Dual2 points carrying an ea part; gradients use eb.
Dual2 bracket(const BracketSpec& spec, const MatFn& f, const MatFn& g, const MatD& x);
// {log f, log g} = {f,g}/(fg).
Rat bracket_of_logs(const BracketSpec& spec, const MatFn& f, const MatFn& g, const MatQ& x);

}  // namespace bdc
