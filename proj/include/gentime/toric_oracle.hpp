#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "gentime/checked.hpp"
#include "gentime/cohomology_vector.hpp"
#include "gentime/errors.hpp"
#include "gentime/geometry.hpp"

namespace gentime {

// Character-by-character Cech cohomology of O(D), D = sum a_i D_i, on a
// smooth complete toric surface. For a character u let
//     Neg(u) = { rays i : <u, v_i> + a_i < 0 }.
// The weight-u summand contributes 1 to h^0 when Neg(u) is empty, 1 to h^2
// when Neg(u) is all rays, and (number of cyclic arcs of Neg(u)) - 1 to h^1
// otherwise (reduced cohomology of the arc subcomplex of the circle of rays).
//
// Exhaustion bound. Let A = max_i |a_i| + 1 and call ray i ambiguous at u
// when |<u, v_i>| < A (then the offset a_i can decide the sign), definite
// otherwise. Two non-parallel rays are simultaneously ambiguous only inside
// the parallelogram cut out by <u, v_i> = +-A, <u, v_j> = +-A, so outside the
// bounding box B of all those pairwise crossing points at most one antipodal
// ray pair is ambiguous. The definite rays in the open half-plane <u,.> < 0
// form one nonempty contiguous arc (rays are in convex position), definite
// positives another, and any ambiguous ray sits at one of the two ends of
// those arcs; hence Neg(u) is a single nonempty proper arc and u contributes
// nothing. The polytopes deciding h^0 and h^2 have their vertices among the
// same crossing points, so they lie inside B as well. The scan below
// therefore covers every row y of B completely (each row is partitioned into
// finitely many segments of constant Neg-pattern plus two infinite tails),
// and it verifies at runtime that both tails of every row carry the
// no-contribution pattern.

namespace detail {

struct OracleRow {
    std::vector<std::int64_t> breakpoints; // ascending x where some membership flips
};

inline int arcs_minus_one_or_kind(std::uint32_t neg, std::size_t r, int& kind) {
    // kind: 0 -> h0 (empty), 2 -> h2 (all), 1 -> h1 with returned multiplicity.
    const std::uint32_t full = (r == 32) ? 0xffffffffu : ((1u << r) - 1u);
    if (neg == 0) {
        kind = 0;
        return 1;
    }
    if (neg == full) {
        kind = 2;
        return 1;
    }
    kind = 1;
    int arcs = 0;
    for (std::size_t i = 0; i < r; ++i) {
        const bool cur = (neg >> i) & 1u;
        const bool nxt = (neg >> ((i + 1) % r)) & 1u;
        if (cur && !nxt) ++arcs;
    }
    return arcs - 1;
}

} // namespace detail

inline CohomologyVector h_toric_oracle(const ToricSurfaceFan& fan,
                                       const std::vector<std::int64_t>& ray_coeffs) {
    const std::size_t r = fan.num_rays();
    if (ray_coeffs.size() != r)
        throw structural_error("one coefficient per ray is required");
    if (r > 31) throw unsupported_error("fans with more than 31 rays are not supported");

    std::int64_t amax = 1;
    for (auto a : ray_coeffs) amax = std::max(amax, (a < 0 ? -a : a) + 1);

    // Vertical extent of the crossing-point box: for non-parallel rays i, j
    // the crossings of <u,v_i> = s*A, <u,v_j> = t*A have
    // |y| <= A * (|v_i[0]| + |v_j[0]|) / |det(v_i, v_j)|.
    std::int64_t ycoef = 1;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            const std::int64_t d = det2(fan.rays[i], fan.rays[j]);
            if (d == 0) continue;
            const std::int64_t num = std::abs(fan.rays[i][0]) + std::abs(fan.rays[j][0]);
            const std::int64_t bound = (num + std::abs(d) - 1) / std::abs(d);
            ycoef = std::max(ycoef, bound);
        }
    const std::int64_t yext = checked_add(checked_mul(amax, ycoef), 1);

    std::int64_t h0 = 0, h1 = 0, h2 = 0;
    std::vector<std::int64_t> breaks;
    breaks.reserve(r);

    for (std::int64_t y = -yext; y <= yext; ++y) {
        breaks.clear();
        // s_i(x) = v_i[0] x + (v_i[1] y + a_i); membership flips at the
        // smallest integer x where the sign of s_i changes.
        for (std::size_t i = 0; i < r; ++i) {
            const std::int64_t vx = fan.rays[i][0];
            if (vx == 0) continue;
            const std::int64_t c = -(checked_add(checked_mul(fan.rays[i][1], y), ray_coeffs[i]));
            // s_i < 0  <=>  vx * x < c.
            // For vx > 0: x < c/vx, first excluded integer is ceil(c/vx).
            // For vx < 0: x > c/vx, first included integer is floor(c/vx)+1.
            std::int64_t q;
            if (vx > 0)
                q = (c >= 0) ? (c + vx - 1) / vx : -((-c) / vx);
            else {
                const std::int64_t pvx = -vx, pc = -c;
                q = ((pc >= 0) ? (pc / pvx) : -((-pc + pvx - 1) / pvx)) + 1;
            }
            breaks.push_back(q);
        }
        std::sort(breaks.begin(), breaks.end());
        breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

        auto pattern_at = [&](std::int64_t x) {
            std::uint32_t neg = 0;
            for (std::size_t i = 0; i < r; ++i) {
                const std::int64_t s = checked_add(
                    checked_add(checked_mul(fan.rays[i][0], x), checked_mul(fan.rays[i][1], y)),
                    ray_coeffs[i]);
                if (s < 0) neg |= (1u << i);
            }
            return neg;
        };
        auto add = [&](std::uint32_t neg, std::int64_t count) {
            int kind = 0;
            const int mult = detail::arcs_minus_one_or_kind(neg, r, kind);
            if (mult == 0) return;
            if (kind == 0)
                h0 = checked_add(h0, count);
            else if (kind == 2)
                h2 = checked_add(h2, count);
            else
                h1 = checked_add(h1, checked_mul(count, static_cast<std::int64_t>(mult)));
        };

        if (breaks.empty()) {
            // Constant pattern along the whole row; must be non-contributing.
            int kind = 0;
            if (detail::arcs_minus_one_or_kind(pattern_at(0), r, kind) != 0)
                throw integrity_error("toric oracle: unbounded constant row contributes");
            continue;
        }
        // Infinite tails: verified non-contributing (see the bound above).
        int kind = 0;
        if (detail::arcs_minus_one_or_kind(pattern_at(breaks.front() - 1), r, kind) != 0)
            throw integrity_error("toric oracle: left tail contributes, bound violated");
        if (detail::arcs_minus_one_or_kind(pattern_at(breaks.back()), r, kind) != 0)
            throw integrity_error("toric oracle: right tail contributes, bound violated");
        for (std::size_t b = 0; b + 1 < breaks.size(); ++b) {
            const std::int64_t len = breaks[b + 1] - breaks[b];
            add(pattern_at(breaks[b]), len);
        }
    }
    return CohomologyVector{{h0, h1, h2}};
}

} // namespace gentime
