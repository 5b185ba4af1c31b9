#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "qd/cyclotomic.hpp"

namespace qd {

/// lcm of entry denominators, for common-denominator table rendering.
inline long long common_denominator(const std::vector<std::vector<CycNum>>& m) {
    long long l = 1;
    for (const auto& row : m)
        for (const CycNum& v : row) l = std::lcm(l, v.den());
    return l;
}

/// The entry scaled to a shared denominator: "k/L" for rational values,
/// "(poly)/L" otherwise. L must clear the entry's own denominator.
inline std::string over_denominator(const CycNum& v, long long l) {
    CycNum s = v * Rational(l);
    if (s.den() != 1) throw std::invalid_argument("over_denominator: " + std::to_string(l) + " does not clear the entry");
    if (s.is_rational()) return std::to_string(s.as_rational().num()) + "/" + std::to_string(l);
    return s.str() + "/" + std::to_string(l);
}

/// Fixed-width grid with a row-label column and column headers.
inline std::string render_grid(const std::vector<std::string>& col_heads,
                               const std::vector<std::string>& row_heads,
                               const std::vector<std::vector<std::string>>& cells) {
    const size_t rows = cells.size(), cols = col_heads.size();
    size_t head_w = 0;
    for (const auto& h : row_heads) head_w = std::max(head_w, h.size());
    std::vector<size_t> w(cols);
    for (size_t c = 0; c < cols; ++c) {
        w[c] = col_heads[c].size();
        for (size_t r = 0; r < rows; ++r) w[c] = std::max(w[c], cells[r][c].size());
    }
    std::string out;
    out.append(head_w, ' ');
    for (size_t c = 0; c < cols; ++c) {
        out += "  ";
        out.append(w[c] - col_heads[c].size(), ' ');
        out += col_heads[c];
    }
    out += "\n";
    for (size_t r = 0; r < rows; ++r) {
        out += row_heads[r];
        out.append(head_w - row_heads[r].size(), ' ');
        for (size_t c = 0; c < cols; ++c) {
            out += "  ";
            out.append(w[c] - cells[r][c].size(), ' ');
            out += cells[r][c];
        }
        out += "\n";
    }
    return out;
}

/// "A + B + 2*C" from a multiplicity row; "0" when everything vanishes.
inline std::string fusion_sum(const std::vector<long long>& row,
                              const std::vector<std::string>& names) {
    std::string out;
    for (size_t i = 0; i < row.size(); ++i) {
        if (!row[i]) continue;
        if (!out.empty()) out += " + ";
        if (row[i] != 1) out += std::to_string(row[i]) + "*";
        out += names[i];
    }
    return out.empty() ? "0" : out;
}

}  // namespace qd
