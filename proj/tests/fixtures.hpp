#pragma once

#include <string>
#include <vector>

#include "qspec/instances.hpp"
#include "qspec/lattice.hpp"
#include "qspec/quantale.hpp"

namespace qspec::fixtures {

/// Order matrix from rows of '0'/'1' characters, row a column b = a <= b.
inline Lattice from_rows(const std::vector<std::string>& rows,
                         std::vector<std::string> labels = {}) {
    const int n = static_cast<int>(rows.size());
    std::vector<ElemSet> up(n, ElemSet(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (rows[a][b] == '1') up[a].set(b);
    return Lattice::from_order(std::move(up), std::move(labels));
}

/// Five-element frame 0 < a,b < c < 1 with a, b incomparable.
inline Quantale f5() {
    return frame_quantale(from_rows({"11111",  //
                                     "01011",  //
                                     "00111",  //
                                     "00011",  //
                                     "00001"},
                                    {"0", "a", "b", "c", "1"}));
}

/// Diamond: three incomparable atoms sharing bottom and top.
inline Lattice m3() {
    return from_rows({"11111", "01001", "00101", "00011", "00001"},
                     {"0", "x", "y", "z", "1"});
}

/// Pentagon: 0 < x < z < 1 and 0 < y < 1 with y incomparable to both.
inline Lattice n5() {
    return from_rows({"11111", "01101", "00101", "00011", "00001"},
                     {"0", "x", "z", "y", "1"});
}

/// Down-sets of the three-point poset with one point below the other two;
/// the smallest non-normal frame in the corpus.
inline Quantale non_normal_frame() {
    return downset_frame(Poset{3, {{2, 0}, {2, 1}}});
}

/// Commutative, integral, join-distributive table on a 4-chain that breaks
/// associativity: (a*b)*b = a*b = a while a*(b*b) = a*a = 0.
inline Quantale broken_assoc() {
    Lattice lat = from_rows({"1111", "0111", "0011", "0001"},
                            {"0", "a", "b", "1"});
    return Quantale(std::move(lat),
                    {0, 0, 0, 0,  //
                     0, 0, 1, 1,  //
                     0, 1, 1, 2,  //
                     0, 1, 2, 3});
}

}  // namespace qspec::fixtures
