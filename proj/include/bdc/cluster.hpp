#pragma once

#include "bdc/blocks.hpp"
#include "bdc/grad.hpp"
#include "bdc/poly.hpp"

#include <Eigen/Core>

#include <optional>
#include <vector>

namespace bdc {

// Vertices (i,j) in [1,n]^2, including the dummy (1,1). Arrows are kept as a
// skew integer matrix b(u,v) = #(u->v) - #(v->u), so opposite arrows cancel.
class Quiver {
public:
    explicit Quiver(int n);

    int n() const { return n_; }
    int size() const { return n_ * n_; }
    int index(Point v) const;
    Point vertex(int k) const { return {k / n_ + 1, k % n_ + 1}; }

    bool frozen(Point v) const { return frozen_[index(v)]; }
    void set_frozen(Point v, bool f) { frozen_[index(v)] = f; }
    std::vector<Point> mutable_vertices() const;
    std::vector<Point> frozen_vertices() const;

    int b(Point u, Point v) const { return b_(index(u), index(v)); }
    int arrows(Point u, Point v) const { return std::max(0, b(u, v)); }
    void add_arrow(Point u, Point v, int mult = 1);
    void add_path(const std::vector<Point>& path);
    // Removes arrows whose endpoints are both frozen.
    void drop_frozen_arrows();

    struct Arrow {
        Point from, to;
        int mult;
    };
    std::vector<Arrow> arrow_list() const;
    std::vector<Point> out_neighbors(Point v) const;
    std::vector<Point> in_neighbors(Point v) const;

    // Rows: all vertices; columns: mutable vertices; row-major (i,j) order.
    Eigen::MatrixXi exchange_matrix() const;
    const Eigen::MatrixXi& skew_matrix() const { return b_; }

    Quiver mutate(Point v) const;

    bool operator==(const Quiver& o) const { return n_ == o.n_ && frozen_ == o.frozen_ && b_ == o.b_; }

private:
    int n_;
    std::vector<bool> frozen_;
    Eigen::MatrixXi b_;
};

Quiver standard_quiver(int n);
// Paths added to the standard quiver for the row X-runs and column Y-runs.
std::vector<std::vector<Point>> added_paths(const BDPair& p);
Quiver exotic_quiver(const BDPair& p);

std::string quiver_to_dot(const Quiver& q);
std::string quiver_to_json(const Quiver& q);

// Functions attached to the vertices, indexed by Quiver::index.
struct ClusterSeed {
    Quiver quiver;
    std::vector<MatFn> f;
};

ClusterSeed cluster_seed(const BDPair& p);
// Trailing minors F_ij with the standard quiver.
ClusterSeed standard_cluster_seed(int n);

Rat evaluate(const ClusterSeed& s, Point v, const MatQ& z);
Rat y_variable(const ClusterSeed& s, Point v, const MatQ& z);
// From precomputed values, indexed by Quiver::index.
Rat y_variable(const Quiver& q, Point v, const std::vector<Rat>& values);
ClusterSeed mutate(const ClusterSeed& s, Point v);

// Seed functions as polynomials in the entries z_ab (variable (a-1)n+(b-1)),
// for n <= 3. f_11 is kept as det Z.
std::map<Point, Poly> symbolic_seed(const BDPair& p);

struct RegularityVerdict {
    Point vertex;
    bool divisible = false;
    Poly numerator;
    std::optional<Poly> quotient;
};

RegularityVerdict regularity_check(const BDPair& p, Point v);

}  // namespace bdc
