#pragma once

#include "bdc/verify.hpp"

#include <gtest/gtest.h>

#include <initializer_list>
#include <random>

namespace bdc::test {

inline MatQ mq(std::initializer_list<std::initializer_list<Rat>> rows) {
    MatQ m(rows.size(), rows.begin()->size());
    int i = 0;
    for (const auto& r : rows) {
        int j = 0;
        for (const auto& x : r) m(i, j++) = x;
        ++i;
    }
    return m;
}

inline BDPair running_example() {
    return make_pair(validate(7, {1, 2, 5}, {1, 3, 4}, {{1, 4}, {2, 3}, {5, 1}}),
                     validate(7, {3, 4, 6}, {2, 3, 5}, {{3, 2}, {4, 3}, {6, 5}}));
}

// Rows 1 -> 2, empty columns.
inline BDPair single_root3() { return make_pair(validate(3, {1}, {2}, {{1, 2}}), empty_triple(3)); }

// Reversed component [1,2] -> [3,4] at n = 5. No triple with n <= 4 has a
// reversed component of length two.
inline BDTriple reversed5() { return validate(5, {1, 2}, {3, 4}, {{1, 4}, {2, 3}}); }

inline MatQ random_matrix(int r, int c, std::uint64_t seed, int bound = 4) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> d(-bound, bound);
    MatQ m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = Rat(d(rng));
    return m;
}

inline MatQ random_unitriangular(int n, bool upper, std::uint64_t seed, int bound = 3) {
    MatQ m = random_matrix(n, n, seed, bound);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i == j)
                m(i, j) = Rat(1);
            else if ((j > i) != upper)
                m(i, j) = Rat(0);
    return m;
}

// Independent determinant: permutation expansion.
inline Rat leibniz_det(const MatQ& m) {
    const int n = static_cast<int>(m.rows());
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    Rat total(0);
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        Rat term(inv % 2 ? -1 : 1);
        for (int i = 0; i < n; ++i) term *= m(i, perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

}  // namespace bdc::test
