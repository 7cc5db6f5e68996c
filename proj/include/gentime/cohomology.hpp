#pragma once

#include <cstdint>
#include <vector>

#include "gentime/checked.hpp"
#include "gentime/cohomology_vector.hpp"
#include "gentime/errors.hpp"
#include "gentime/geometry.hpp"
#include "gentime/interpolation.hpp"
#include "gentime/lattice.hpp"
#include "gentime/toric_oracle.hpp"

namespace gentime {

/// Line bundle cohomology on P^n: h^0 = C(n+d, n) for d >= 0, h^n = C(-d-1, n)
/// for d <= -n-1, nothing in between.
inline CohomologyVector h_projective_space(std::int64_t n, std::int64_t d) {
    if (n < 1) throw validation_error("projective space dimension must be >= 1");
    CohomologyVector out;
    out.h.assign(static_cast<std::size_t>(n) + 1, 0);
    if (d >= 0) out.h.front() = binomial(n + d, n);
    if (d <= -n - 1) out.h.back() = binomial(-d - 1, n);
    return out;
}

/// Valuation vector for the class dH - sum m_i E_i: the requested vanishing
/// order along the exceptional curve of center i. At a first-order satellite
/// the effective divisor representing the parent class contains the satellite
/// curve once, so the satellite's order is m_parent + m_i.
inline std::vector<std::int64_t> class_valuations(const BlowupSurface& X, const DivisorClass& d) {
    std::vector<std::int64_t> v(X.num_centers(), 0);
    for (std::size_t i = 0; i < X.num_centers(); ++i) {
        const std::int64_t m = checked_sub(0, d.coeffs.at(i + 1));
        if (const auto* inf = std::get_if<InfinitesimalCenter>(&X.config.centers[i])) {
            const std::int64_t mp = checked_sub(0, d.coeffs.at(inf->parent + 1));
            v[i] = checked_add(m, mp);
        } else {
            v[i] = m;
        }
    }
    return v;
}

inline std::int64_t h0_blowup(const BlowupSurface& X, const DivisorClass& d) {
    if (d.rank() != X.lattice.rank())
        throw structural_error("divisor class does not match surface lattice");
    return h0_interpolation(X.config, d.coeffs[0], class_valuations(X, d));
}

/// Full h-vector on a blow-up surface: h^0 by interpolation, h^2 by Serre
/// duality (h^0 of K - D), h^1 from Riemann-Roch. A negative h^1 cannot
/// happen for correct inputs and raises an integrity error.
inline CohomologyVector h_line_bundle_surface(const BlowupSurface& X, const DivisorClass& d) {
    const std::int64_t h0 = h0_blowup(X, d);
    const std::int64_t h2 = h0_blowup(X, serre_dual_class(X.lattice, d));
    const std::int64_t chi = euler_char_surface(X.lattice, d);
    const std::int64_t h1 = checked_sub(checked_add(h0, h2), chi);
    if (h1 < 0)
        throw integrity_error("negative h1 on a blow-up surface: interpolation bug or "
                              "unsupported configuration");
    return CohomologyVector{{h0, h1, h2}};
}

/// Toric inputs delegate to the Cech oracle via the ray-class dictionary.
inline CohomologyVector h_line_bundle_surface(const ToricSurfaceModel& model,
                                              const DivisorClass& d) {
    return h_toric_oracle(model.fan, model.lift(d));
}

/// Cohomology of O(aS + bH) on X_{m,n} via the pushforward
/// Sym^a(O + O(-m)) (x) O(b): h^i = sum_{j=0..a} h^i(P^n, O(b - j m)),
/// returned with one extra slot so the vector has length dim + 1 = n + 2.
/// a = -1 gives the zero sheaf pushforward; a <= -2 would require relative
/// Serre duality and is deliberately out of range: reaching it is a caller bug.
inline CohomologyVector h_proj_bundle(std::int64_t m, std::int64_t n, std::int64_t a,
                                      std::int64_t b) {
    if (m < 0 || n < 1) throw validation_error("h_proj_bundle requires m >= 0, n >= 1");
    if (a <= -2)
        throw unsupported_error("h_proj_bundle: S-degree " + std::to_string(a) +
                                " is below the supported range (a >= -1)");
    CohomologyVector out;
    out.h.assign(static_cast<std::size_t>(n) + 2, 0);
    if (a == -1) return out;
    for (std::int64_t j = 0; j <= a; ++j) {
        const auto part = h_projective_space(n, checked_sub(b, checked_mul(j, m)));
        for (std::size_t i = 0; i < part.h.size(); ++i)
            out.h[i] = checked_add(out.h[i], part.h[i]);
    }
    return out;
}

/// Number of monomials of weighted degree k in variables of the given weights
/// (the denumerant), by exact dynamic programming.
inline std::int64_t denumerant(const std::vector<std::int64_t>& weights, std::int64_t k) {
    if (k < 0) return 0;
    std::vector<std::int64_t> dp(static_cast<std::size_t>(k) + 1, 0);
    dp[0] = 1;
    for (const auto w : weights)
        for (std::int64_t v = w; v <= k; ++v)
            dp[static_cast<std::size_t>(v)] =
                checked_add(dp[static_cast<std::size_t>(v)], dp[static_cast<std::size_t>(v - w)]);
    return dp[static_cast<std::size_t>(k)];
}

/// Cohomology of O(k) on the stack P(a_0,...,a_n): h^0 counts monomials of
/// weighted degree k, h^n those of degree -k - sum a_i, middle groups vanish.
inline CohomologyVector h_weighted(const WeightedProjectiveSpace& space, std::int64_t k) {
    const std::int64_t n = space.dim();
    CohomologyVector out;
    out.h.assign(static_cast<std::size_t>(n) + 1, 0);
    out.h.front() = denumerant(space.weights, k);
    const std::int64_t dual = checked_sub(checked_sub(0, k), space.weight_sum());
    out.h.back() = checked_add(out.h.back(), denumerant(space.weights, dual));
    return out;
}

} // namespace gentime
