#pragma once

#include <cstddef>
#include <vector>

#include "gentime/rational.hpp"

namespace gentime {

/// Exact rank of a dense rational matrix (rows of equal length).
///
/// A pre-pass repeatedly extracts rows with at most one nonzero entry: such a
/// row pins its column, the column is erased everywhere, and the row counts
/// one toward the rank. Condition systems coming from coordinate points are
/// entirely of this shape, so they never reach the elimination stage.
inline std::size_t matrix_rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows[0].size();
    std::size_t rank = 0;

    std::vector<bool> col_dead(ncols, false);
    std::vector<bool> row_dead(rows.size(), false);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (row_dead[r]) continue;
            std::size_t nz = 0, nzc = 0;
            for (std::size_t c = 0; c < ncols && nz < 2; ++c) {
                if (col_dead[c] || rows[r][c] == 0) continue;
                ++nz;
                nzc = c;
            }
            if (nz == 0) {
                row_dead[r] = true;
            } else if (nz == 1) {
                row_dead[r] = true;
                col_dead[nzc] = true;
                ++rank;
                changed = true;
            }
        }
    }

    std::vector<std::vector<Rational>> rest;
    for (std::size_t r = 0; r < rows.size(); ++r)
        if (!row_dead[r]) rest.push_back(std::move(rows[r]));
    if (rest.empty()) return rank;

    // Dense fraction elimination on what remains.
    std::size_t lead_row = 0;
    for (std::size_t c = 0; c < ncols && lead_row < rest.size(); ++c) {
        if (col_dead[c]) continue;
        std::size_t piv = lead_row;
        while (piv < rest.size() && rest[piv][c] == 0) ++piv;
        if (piv == rest.size()) continue;
        std::swap(rest[piv], rest[lead_row]);
        const Rational inv = Rational(1) / rest[lead_row][c];
        for (std::size_t r = lead_row + 1; r < rest.size(); ++r) {
            if (rest[r][c] == 0) continue;
            const Rational f = rest[r][c] * inv;
            for (std::size_t cc = c; cc < ncols; ++cc)
                if (!col_dead[cc]) rest[r][cc] -= f * rest[lead_row][cc];
        }
        ++lead_row;
        ++rank;
    }
    return rank;
}

} // namespace gentime
