#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gentime/checked.hpp"
#include "gentime/geometry.hpp"
#include "gentime/linalg.hpp"
#include "gentime/rational.hpp"

namespace gentime {

// h0_interpolation computes the dimension of the space of degree-d plane
// forms f whose total transform has ord_{E_i}(pi* f) >= mults[i] for every
// exceptional divisor E_i of the configuration. Each valuation condition is
// linear in the coefficients of f:
//
//  * proper center p, valuation v: all jets of order < v vanish at p, i.e.
//    c_{ij} = 0 for i + j < v, where c_{ij} are the coefficients of
//    F(x,y) = f(p + x u + y w) for any frame (u, w) completing p to a basis;
//
//  * first-order infinitesimal center q over p with tangent direction u,
//    valuation v: substituting the blow-up chart (x, y) = (s, s t) into the
//    local expansion gives pi* f = sum c_{ij} s^{i+j} t^j, so the condition
//    ord_{E_q} >= v is exactly c_{ij} = 0 for i + 2j < v. The weight
//    filtration (x has weight 1, y weight 2) does not depend on the choice
//    of the complementary vector w.
//
// Valuations <= 0 impose no condition; d < 0 returns 0. The conditions are
// exact, so the rank computation decides dependent condition sets correctly
// (conditions at a point and at its infinitesimal satellites overlap).

namespace detail {

/// Truncated bivariate polynomial with rational coefficients, indexed [i][j],
/// total degree <= cap.
using Jet = std::vector<std::vector<Rational>>;

inline Jet jet_zero(std::size_t cap) {
    return Jet(cap + 1, std::vector<Rational>(cap + 1, Rational(0)));
}

/// Multiply jet by (c + a x + b y)^e, truncating at total degree cap.
inline Jet jet_mul_linear_power(const Jet& in, const Rational& c, const Rational& a,
                                const Rational& b, std::int64_t e, std::size_t cap) {
    // Expand (c + a x + b y)^e by multinomials, truncated.
    Jet factor = jet_zero(cap);
    for (std::size_t alpha = 0; alpha <= cap; ++alpha) {
        if (static_cast<std::int64_t>(alpha) > e) break;
        for (std::size_t beta = 0; alpha + beta <= cap; ++beta) {
            if (static_cast<std::int64_t>(alpha + beta) > e) break;
            // e! / (alpha! beta! (e-alpha-beta)!)
            const std::int64_t m =
                checked_mul(binomial(e, static_cast<std::int64_t>(alpha)),
                            binomial(e - static_cast<std::int64_t>(alpha),
                                     static_cast<std::int64_t>(beta)));
            Rational term(m);
            for (std::size_t k = 0; k < alpha; ++k) term *= a;
            for (std::size_t k = 0; k < beta; ++k) term *= b;
            const std::int64_t crest = e - static_cast<std::int64_t>(alpha + beta);
            for (std::int64_t k = 0; k < crest; ++k) term *= c;
            factor[alpha][beta] = term;
        }
    }
    Jet out = jet_zero(cap);
    for (std::size_t i = 0; i <= cap; ++i)
        for (std::size_t j = 0; i + j <= cap; ++j) {
            if (in[i][j] == 0) continue;
            for (std::size_t k = 0; i + j + k <= cap; ++k)
                for (std::size_t l = 0; i + j + k + l <= cap; ++l) {
                    if (factor[k][l] == 0) continue;
                    out[i + k][j + l] += in[i][j] * factor[k][l];
                }
        }
    return out;
}

/// Jet of the monomial x0^{e0} x1^{e1} x2^{e2} along p + x u + y w.
inline Jet monomial_jet(const std::array<std::int64_t, 3>& e, const ProjPoint& p,
                        const ProjPoint& u, const ProjPoint& w, std::size_t cap) {
    Jet jet = jet_zero(cap);
    jet[0][0] = Rational(1);
    for (std::size_t k = 0; k < 3; ++k)
        if (e[k] > 0) jet = jet_mul_linear_power(jet, p[k], u[k], w[k], e[k], cap);
    return jet;
}

/// Degree-d monomial exponent triples in a fixed order.
inline std::vector<std::array<std::int64_t, 3>> degree_monomials(std::int64_t d) {
    std::vector<std::array<std::int64_t, 3>> out;
    for (std::int64_t a = d; a >= 0; --a)
        for (std::int64_t b = d - a; b >= 0; --b) out.push_back({a, d - a - b, b});
    return out;
}

/// Complementary frame vectors for a proper point (any basis completion).
inline std::pair<ProjPoint, ProjPoint> proper_frame(const ProjPoint& p) {
    const std::size_t k = pivot_index(p);
    ProjPoint u{Rational(0), Rational(0), Rational(0)};
    ProjPoint w{Rational(0), Rational(0), Rational(0)};
    std::array<std::size_t, 2> rest{};
    std::size_t pos = 0;
    for (std::size_t c = 0; c < 3; ++c)
        if (c != k) rest[pos++] = c;
    u[rest[0]] = Rational(1);
    w[rest[1]] = Rational(1);
    return {u, w};
}

/// Completion of (p, u) to a basis by a standard vector.
inline ProjPoint completing_vector(const ProjPoint& p, const ProjPoint& u) {
    for (std::size_t k = 0; k < 3; ++k) {
        ProjPoint w{Rational(0), Rational(0), Rational(0)};
        w[k] = Rational(1);
        if (det3(p, u, w) != 0) return w;
    }
    throw integrity_error("degenerate frame: tangent vector proportional to its point");
}

/// A center is coordinate-monomial when its point is a standard basis point
/// and, if infinitesimal, its tangent is a standard direction. The jet
/// conditions are then single monomial coefficients.
struct MonomialKill {
    std::size_t weight1_coord; // exponent with weight 1
    std::size_t weight2_coord; // exponent with weight 2 (proper: weight 1)
    bool proper;
    std::int64_t valuation;
};

inline std::optional<MonomialKill> coordinate_kill(const PointConfiguration& config,
                                                   std::size_t idx, std::int64_t v) {
    const auto& c = config.centers[idx];
    auto axis = [](const ProjPoint& q) -> std::optional<std::size_t> {
        std::optional<std::size_t> ax;
        for (std::size_t k = 0; k < 3; ++k) {
            if (q[k] == 0) continue;
            if (ax) return std::nullopt;
            ax = k;
        }
        return ax;
    };
    if (const auto* p = std::get_if<ProperCenter>(&c)) {
        const auto ax = axis(p->coords);
        if (!ax) return std::nullopt;
        std::array<std::size_t, 2> rest{};
        std::size_t pos = 0;
        for (std::size_t k = 0; k < 3; ++k)
            if (k != *ax) rest[pos++] = k;
        return MonomialKill{rest[0], rest[1], true, v};
    }
    const auto& inf = std::get<InfinitesimalCenter>(c);
    const auto* par = std::get_if<ProperCenter>(&config.centers[inf.parent]);
    const auto pax = axis(par->coords);
    if (!pax) return std::nullopt;
    const auto u = tangent_vector(par->coords, inf.tangent);
    const auto uax = axis(u);
    if (!uax) return std::nullopt;
    std::size_t wax = 3;
    for (std::size_t k = 0; k < 3; ++k)
        if (k != *pax && k != *uax) wax = k;
    return MonomialKill{*uax, wax, false, v};
}

} // namespace detail

/// Dimension of degree-d forms on P^2 satisfying the valuation conditions
/// mults (one entry per center of the configuration; entries <= 0 impose no
/// condition). Exact; see the derivation at the top of this header.
inline std::int64_t h0_interpolation(const PointConfiguration& config, std::int64_t d,
                                     const std::vector<std::int64_t>& mults) {
    if (mults.size() != config.size())
        throw structural_error("one valuation per center is required");
    if (d < 0) return 0;
    const auto monomials = detail::degree_monomials(d);
    const std::int64_t n_mono = static_cast<std::int64_t>(monomials.size());

    // Fast path: all active centers coordinate-monomial.
    {
        std::vector<detail::MonomialKill> kills;
        bool ok = true;
        for (std::size_t i = 0; i < config.size() && ok; ++i) {
            if (mults[i] <= 0) continue;
            auto k = detail::coordinate_kill(config, i, mults[i]);
            if (!k)
                ok = false;
            else
                kills.push_back(*k);
        }
        if (ok) {
            std::int64_t alive = 0;
            for (const auto& mono : monomials) {
                bool killed = false;
                for (const auto& k : kills) {
                    const std::int64_t wgt = k.proper
                        ? mono[k.weight1_coord] + mono[k.weight2_coord]
                        : mono[k.weight1_coord] + 2 * mono[k.weight2_coord];
                    if (wgt < k.valuation) {
                        killed = true;
                        break;
                    }
                }
                if (!killed) ++alive;
            }
            return alive;
        }
    }

    // General path: assemble the jet-condition matrix and take the nullity.
    std::vector<std::vector<Rational>> rows;
    for (std::size_t ci = 0; ci < config.size(); ++ci) {
        const std::int64_t v = mults[ci];
        if (v <= 0) continue;
        const std::size_t cap = static_cast<std::size_t>(v - 1);
        ProjPoint p, u, w;
        bool proper;
        if (const auto* pc = std::get_if<ProperCenter>(&config.centers[ci])) {
            p = pc->coords;
            auto [uu, ww] = detail::proper_frame(p);
            u = uu;
            w = ww;
            proper = true;
        } else {
            const auto& inf = std::get<InfinitesimalCenter>(config.centers[ci]);
            p = std::get<ProperCenter>(config.centers[inf.parent]).coords;
            u = tangent_vector(p, inf.tangent);
            w = detail::completing_vector(p, u);
            proper = false;
        }
        std::vector<detail::Jet> jets;
        jets.reserve(monomials.size());
        for (const auto& mono : monomials)
            jets.push_back(detail::monomial_jet(mono, p, u, w, cap));
        for (std::size_t i = 0; i <= cap; ++i) {
            for (std::size_t j = 0; i + j <= cap; ++j) {
                const std::int64_t wgt = proper ? static_cast<std::int64_t>(i + j)
                                                : static_cast<std::int64_t>(i + 2 * j);
                if (wgt >= v) continue;
                std::vector<Rational> row;
                row.reserve(monomials.size());
                for (const auto& jet : jets) row.push_back(jet[i][j]);
                rows.push_back(std::move(row));
            }
        }
    }
    const std::int64_t rank = static_cast<std::int64_t>(matrix_rank(std::move(rows)));
    return n_mono - rank;
}

} // namespace gentime
