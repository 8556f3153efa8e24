#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bdc {

// Closed integer interval [lo, hi], 1-based.
struct Interval {
    int lo = 1, hi = 0;
    int size() const { return hi - lo + 1; }
    bool contains(int i) const { return lo <= i && i <= hi; }
    bool operator==(const Interval&) const = default;
};

enum class Orientation { Preserved, Reversed };

struct ComponentOrientation {
    Interval component;
    Orientation orientation;
};

// A Belavin-Drinfeld triple for SL_n. Construct through validate().
class BDTriple {
public:
    BDTriple() = default;

    int n() const { return n_; }
    const std::vector<int>& gamma1() const { return gamma1_; }
    const std::vector<int>& gamma2() const { return gamma2_; }
    const std::map<int, int>& map() const { return map_; }
    // Maximal intervals of gamma1, left to right.
    const std::vector<Interval>& components() const { return components_; }

    bool in_gamma1(int i) const { return map_.count(i) != 0; }
    bool in_gamma2(int i) const { return inverse_.count(i) != 0; }
    int gamma(int i) const { return map_.at(i); }
    int gamma_inverse(int j) const { return inverse_.at(j); }
    bool empty() const { return gamma1_.empty(); }

    std::optional<Interval> component_of(int root) const;
    Orientation orientation_of(int root) const;

    // (gamma2, gamma1, inverse map): the triple governing gamma*.
    BDTriple inverse() const;

    bool operator==(const BDTriple& o) const { return n_ == o.n_ && map_ == o.map_; }

    friend BDTriple validate(int n, std::vector<int> gamma1, std::vector<int> gamma2, std::map<int, int> map);

private:
    int n_ = 0;
    std::vector<int> gamma1_, gamma2_;
    std::map<int, int> map_, inverse_;
    std::vector<Interval> components_;
};

// Checks bijectivity, type-A isometry and nilpotency. Throws NotBijective,
// NotIsometry or NotNilpotent (all InvalidInput).
BDTriple validate(int n, std::vector<int> gamma1, std::vector<int> gamma2, std::map<int, int> map);
BDTriple empty_triple(int n);

ComponentOrientation orientation(const BDTriple& t, Interval component);

struct BDPair {
    BDTriple rows, cols;
    int n() const { return rows.n(); }
    bool operator==(const BDPair&) const = default;
};

BDPair make_pair(BDTriple rows, BDTriple cols);
BDPair empty_pair(int n);

enum class Side { RowsOfX, ColsOfX, RowsOfY, ColsOfY };

// Ordered partition of [1,n] into runs. Dual partitions list runs in the
// reversed numbering, so runs[0] is the rightmost interval.
struct RunPartition {
    int n = 0;
    std::vector<Interval> runs;
    bool dual = false;

    const Interval& run_of(int i) const;
    // 1-based number of the run containing i.
    int number_of(int i) const;
    bool operator==(const RunPartition&) const = default;
};

// Runs of [1,n] with respect to a set of simple roots: i and i+1 share a
// run iff i is in the set.
RunPartition runs_of_roots(int n, const std::vector<int>& roots);
// X-sides use gamma1, Y-sides use gamma2.
RunPartition runs(const BDTriple& t, Side side);
// The run partition of `side` within a pair: rows from the row triple,
// columns from the column triple.
RunPartition runs(const BDPair& p, Side side);
RunPartition dual_runs(const RunPartition& p);

enum class Which { Rows, Cols };

// Deletes an endpoint root of a gamma1 component together with its image.
BDPair remove_root(const BDPair& p, Which which, int alpha);

std::string to_string(const Interval& iv);

}  // namespace bdc
