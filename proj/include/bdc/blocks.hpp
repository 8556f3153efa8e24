#pragma once

#include "bdc/bd_graph.hpp"
#include "bdc/matrix.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bdc {

enum class Source { X, Xdag, Y, Ydag };

inline bool is_x_type(Source s) { return s == Source::X || s == Source::Xdag; }
inline bool is_dual(Source s) { return s == Source::Xdag || s == Source::Ydag; }
std::string to_string(Source s);

using Point = std::pair<int, int>;  // (row, col), 1-based

struct BlockSpec {
    Source source;
    Interval rows, cols;
    Point exit, entrance;
    bool operator==(const BlockSpec&) const = default;
};

// Minimal block through the sub/superdiagonal defined by a horizontal edge.
// Upper edges carry X or Xdag blocks, lower edges Y or Ydag blocks.
BlockSpec block_for_edge(const BDPair& p, const Edge& e, Source source);

struct TemplateEntry {
    Source source;
    int row, col;
};

struct Gluing {
    bool row_to_row;     // via the row triple; otherwise column to column
    bool primal_to_dual; // the orientation was reversed
};

// Square matrix glued from blocks along an alternating path. The first
// block of the path sits in the lower right corner. Template position =
// source position + offset.
class GluedMatrix {
public:
    int size() const { return size_; }
    const std::vector<BlockSpec>& blocks() const { return blocks_; }
    const std::vector<Point>& offsets() const { return offsets_; }
    const std::vector<Gluing>& gluings() const { return gluings_; }
    const std::optional<TemplateEntry>& at(int r, int c) const { return cells_[(r - 1) * size_ + (c - 1)]; }
    Point template_position(std::size_t block, Point source) const;

    // Submatrix on template rows/cols (1-based) with x, y and their duals
    // substituted.
    template <class S>
    Mat<S> materialize(const std::vector<int>& rows, const std::vector<int>& cols, const Mat<S>& x,
                       const Mat<S>& y, const Mat<S>& xd, const Mat<S>& yd) const {
        Mat<S> out(rows.size(), cols.size());
        for (std::size_t a = 0; a < rows.size(); ++a)
            for (std::size_t b = 0; b < cols.size(); ++b) {
                const auto& e = at(rows[a], cols[b]);
                if (!e) {
                    out(a, b) = S(0);
                    continue;
                }
                const Mat<S>& src = e->source == Source::X ? x : e->source == Source::Y ? y
                                  : e->source == Source::Xdag ? xd : yd;
                out(a, b) = src(e->row - 1, e->col - 1);
            }
        return out;
    }

    // Entry names such as "x21", "y13", "x+21" for duals, "0" outside blocks.
    std::vector<std::vector<std::string>> symbolic() const;

    friend std::pair<GluedMatrix, GluedMatrix> glued_matrices(const BDPair& p, const AlternatingPath& path);

private:
    int size_ = 0;
    std::vector<BlockSpec> blocks_;
    std::vector<Point> offsets_;
    std::vector<Gluing> gluings_;
    std::vector<std::optional<TemplateEntry>> cells_;
};

// (L, Ldag): L starts with the primal block of the first horizontal edge,
// Ldag with its dual. Block k corresponds to the k-th horizontal edge.
std::pair<GluedMatrix, GluedMatrix> glued_matrices(const BDPair& p, const AlternatingPath& path);

struct SubordinateSet {
    std::vector<int> x_rows;  // exit points (k,1)
    std::vector<int> y_cols;  // exit points (1,m)
    std::vector<Point> points() const;
};

struct SeedFunction {
    int i = 0, j = 0, n = 0;
    std::shared_ptr<const GluedMatrix> host;     // null when i == j
    std::shared_ptr<const GluedMatrix> sibling;  // the other matrix of the same path
    std::size_t block = 0;                       // index of the X/Y block hosting x_ij or y_ij
    int anchor = 0;                              // diagonal position in host, 1-based
    SubordinateSet subordinates;
    bool frozen = false;

    int degree() const;

    template <class S>
    S eval(const Mat<S>& x, const Mat<S>& y, const Mat<S>& xd, const Mat<S>& yd) const {
        if (!host) return trailing_minor<S>(x, i, i);
        auto idx = range(anchor, host->size());
        return det<S>(host->template materialize<S>(idx, idx, x, y, xd, yd));
    }
};

// All n^2 functions f_ij of an aperiodic pair, f_11 being det.
class Seed {
public:
    explicit Seed(const BDPair& p);

    const BDPair& pair() const { return pair_; }
    int n() const { return pair_.n(); }
    const SeedFunction& at(int i, int j) const { return fns_.at({i, j}); }
    const std::map<Point, SeedFunction>& functions() const { return fns_; }
    const PathDecomposition& decomposition() const { return dec_; }

    template <class S>
    S eval(int i, int j, const Mat<S>& z) const {
        Mat<S> zd = dual_matrix<S>(z);
        return at(i, j).template eval<S>(z, z, zd, zd);
    }
    template <class S>
    S eval_xy(int i, int j, const Mat<S>& x, const Mat<S>& y) const {
        return at(i, j).template eval<S>(x, y, dual_matrix<S>(x), dual_matrix<S>(y));
    }
    // Values of every f_ij at z, sharing the dual matrix.
    template <class S>
    std::map<Point, S> eval_all(const Mat<S>& z) const {
        Mat<S> zd = dual_matrix<S>(z);
        std::map<Point, S> out;
        for (const auto& [ij, f] : fns_) out.emplace(ij, f.template eval<S>(z, z, zd, zd));
        return out;
    }

    // Product of F over the subordinate set of any (i,j) with i - j = d.
    Rat t_factor(int d, const MatQ& u) const;

    // (det M(j,k), det Mdag(j,k)) for the trailing minor f_{i1} when i-1 lies
    // in a reversed component [i-1-s, i-1+t]: M(j,k) swaps row i+k of the X
    // block for row i-j, Mdag(j,k) swaps row idag+j-1 of the dual block for
    // row idag-k-1, idag = n+2-i. Admissible: 1<=j<=s, 0<=k<t, or (0,0).
    std::pair<Rat, Rat> perturbed_minors(int i, int j, int k, const MatQ& z, bool check_range = true) const;

private:
    BDPair pair_;
    PathDecomposition dec_;
    std::map<Point, SeedFunction> fns_;
};

SeedFunction locate(const Seed& s, int i, int j);
SubordinateSet subordinate_exits(const Seed& s, int i, int j);

}  // namespace bdc
