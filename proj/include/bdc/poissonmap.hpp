#pragma once

#include "bdc/bd_data.hpp"
#include "bdc/matrix.hpp"

namespace bdc {

// Block diagonal part of m on the given runs, identity elsewhere.
template <class S>
Mat<S> block_diagonal(const Mat<S>& m, const RunPartition& runs);

// Per run, the product of elementary representatives (identity with the
// block ((0,-1),(1,0)) at i,i+1) along the reduced word
// s_k (s_{k+1} s_k) (s_{k+2} s_{k+1} s_k) ... of the run's longest element.
MatQ weyl_representative(const RunPartition& runs);

template <class S>
struct UnipotentSplit {
    Mat<S> v, rest;
};

// u_minus = v * rest with v in N_-^J and (v w)_+ equal to the J-block part
// of (u_minus w0)_+, w the Weyl representative of the runs.
template <class S>
UnipotentSplit<S> leading_unipotent_factor(const Mat<S>& u_minus, const RunPartition& runs);
// u_plus = rest * v, the transposed construction.
template <class S>
UnipotentSplit<S> trailing_unipotent_factor(const Mat<S>& u_plus, const RunPartition& runs);

enum class BarSide { Plus, Minus };
// Plus: (V W)_+ from V W = (V W)_+ (V W)_{0,-}; Minus: (W V)_- from
// W V = (W V)_{+,0} (W V)_-.
template <class S>
Mat<S> bar_v(const Mat<S>& v, const MatQ& w, BarSide side);

// Closed forms computed straight from U: block parts of (U_- w0)_+ on the
// gamma1 runs of the row triple, and of (w0 U_+)_- on the gamma2 runs of
// the column triple.
template <class S>
Mat<S> bar_v_rows(const Mat<S>& u, const BDTriple& rows);
template <class S>
Mat<S> bar_v_cols(const Mat<S>& u, const BDTriple& cols);

// Group lift of gamma: copies each gamma1-component block of n to its
// image (preserved orientation) or applies b -> P b^{-T} P^{-1}, P = w0 J
// (reversed). Identity outside the image blocks.
template <class S>
Mat<S> bgamma(const BDTriple& t, const Mat<S>& n);
template <class S>
Mat<S> bgamma_star(const BDTriple& t, const Mat<S>& n) {
    return bgamma<S>(t.inverse(), n);
}

template <class S>
Mat<S> h_rows(const Mat<S>& u, const BDTriple& rows);  // H^r(U)
template <class S>
Mat<S> h_cols(const Mat<S>& u, const BDTriple& cols);  // H^c(U)

template <class S>
struct HPair {
    Mat<S> hr, hc, h;
};
template <class S>
HPair<S> h_maps(const BDPair& p, const Mat<S>& u);

template <class S>
Mat<S> apply_h(const BDPair& p, const Mat<S>& u) {
    return h_maps<S>(p, u).h;
}

// U with H^r(U) U = z, valid for z in the image of the seaweed.
MatQ invert_hr_seaweed(const BDTriple& rows, const MatQ& z);

}  // namespace bdc
