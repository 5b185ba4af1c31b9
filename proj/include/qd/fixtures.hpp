#pragma once

#include <array>
#include <vector>

#include "qd/cyclotomic.hpp"

namespace qd {

/// Reference S-matrix of the order-6 nonabelian double in the canonical
/// A..H anyon order, scaled by the common denominator 6.
inline const std::array<std::array<long long, 8>, 8>& s3_smatrix_times6() {
    static const std::array<std::array<long long, 8>, 8> s = {{
        {1, 1, 2, 3, 3, 2, 2, 2},
        {1, 1, 2, -3, -3, 2, 2, 2},
        {2, 2, 4, 0, 0, -2, -2, -2},
        {3, -3, 0, 3, -3, 0, 0, 0},
        {3, -3, 0, -3, 3, 0, 0, 0},
        {2, 2, -2, 0, 0, 4, -2, -2},
        {2, 2, -2, 0, 0, -2, -2, 4},
        {2, 2, -2, 0, 0, -2, 4, -2},
    }};
    return s;
}

/// Reference twists in the same A..H order.
inline std::vector<CycNum> s3_t_fixture() {
    return {CycNum(1), CycNum(1), CycNum(1), CycNum(1),
            CycNum(-1), CycNum(1), CycNum::zeta(3, 2), CycNum::zeta(3, 1)};
}

/// Reference fusion table in the A..H order, each product rendered as a
/// sorted multiplicity-one sum.
inline const std::array<std::array<const char*, 8>, 8>& s3_fusion_sums() {
    static const std::array<std::array<const char*, 8>, 8> f = {{
        {"A", "B", "C", "D", "E", "F", "G", "H"},
        {"B", "A", "C", "E", "D", "F", "G", "H"},
        {"C", "C", "A + B + C", "D + E", "D + E", "G + H", "F + H", "F + G"},
        {"D", "E", "D + E", "A + C + F + G + H", "B + C + F + G + H", "D + E", "D + E", "D + E"},
        {"E", "D", "D + E", "B + C + F + G + H", "A + C + F + G + H", "D + E", "D + E", "D + E"},
        {"F", "F", "G + H", "D + E", "D + E", "A + B + F", "C + H", "C + G"},
        {"G", "G", "F + H", "D + E", "D + E", "C + H", "A + B + G", "C + F"},
        {"H", "H", "F + G", "D + E", "D + E", "C + G", "C + F", "A + B + H"},
    }};
    return f;
}

/// Reference modular data of the order-2 double (the toric code) in the
/// order vacuum, e, m, em: S scaled by 2, then the twists.
inline const std::array<std::array<long long, 4>, 4>& toric_smatrix_times2() {
    static const std::array<std::array<long long, 4>, 4> s = {{
        {1, 1, 1, 1},
        {1, 1, -1, -1},
        {1, -1, 1, -1},
        {1, -1, -1, 1},
    }};
    return s;
}

inline std::vector<CycNum> toric_t_fixture() {
    return {CycNum(1), CycNum(1), CycNum(1), CycNum(-1)};
}

}  // namespace qd
