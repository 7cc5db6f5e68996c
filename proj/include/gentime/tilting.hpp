#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "gentime/cohomology.hpp"
#include "gentime/errors.hpp"
#include "gentime/geometry.hpp"
#include "gentime/sheaves.hpp"
#include "gentime/toric_oracle.hpp"

namespace gentime {

/// Blow-up surface together with the configuration-level assertion that the
/// anti-canonical system contains a smooth connected member (an input fact,
/// not something the engine derives).
struct SurfaceSpace {
    BlowupSurface X;
    bool anticanonical_smooth_member = false;
};

/// Raw toric surface; members are ray-coefficient vectors.
struct ToricSpace {
    ToricSurfaceFan fan;
    bool anticanonical_smooth_member = false;
};

using Space = std::variant<SurfaceSpace, ToricSpace, ProjectiveBundleSpace, WeightedProjectiveSpace>;

inline std::int64_t space_dim(const Space& s) {
    if (std::holds_alternative<SurfaceSpace>(s) || std::holds_alternative<ToricSpace>(s)) return 2;
    if (const auto* b = std::get_if<ProjectiveBundleSpace>(&s)) return b->dim();
    return std::get<WeightedProjectiveSpace>(s).dim();
}

/// Ordered collection of sheaves on one space. Exactly one member list is
/// populated, matching the space kind.
struct Collection {
    Space space;
    std::vector<SheafDescriptor> surface_members;
    std::vector<std::vector<std::int64_t>> toric_members; // ray coefficients
    std::vector<BidegreeClass> bundle_members;
    std::vector<WeightedClass> weighted_members;

    std::size_t size() const {
        return surface_members.size() + toric_members.size() + bundle_members.size() +
               weighted_members.size();
    }
};

inline void validate_collection(const Collection& c) {
    if (c.size() == 0) throw validation_error("collection must be nonempty");
    const bool s = !c.surface_members.empty(), t = !c.toric_members.empty(),
               b = !c.bundle_members.empty(), w = !c.weighted_members.empty();
    if (s + t + b + w != 1)
        throw validation_error("collection members must all live on the one space");
    if (s != std::holds_alternative<SurfaceSpace>(c.space) ||
        t != std::holds_alternative<ToricSpace>(c.space) ||
        b != std::holds_alternative<ProjectiveBundleSpace>(c.space) ||
        w != std::holds_alternative<WeightedProjectiveSpace>(c.space))
        throw validation_error("collection member kind does not match the space kind");
    if (const auto* ss = std::get_if<SurfaceSpace>(&c.space))
        for (const auto& m : c.surface_members) validate_sheaf(ss->X, m);
    if (const auto* ts = std::get_if<ToricSpace>(&c.space))
        for (const auto& m : c.toric_members)
            if (m.size() != ts->fan.num_rays())
                throw validation_error("toric member has wrong ray-coefficient length");
}

/// dim Ext^*(E_a, E_b (x) omega^p); p <= 0 throughout the callers.
inline ExtVector pair_ext(const Collection& c, std::size_t a, std::size_t b, std::int64_t p) {
    if (const auto* ss = std::get_if<SurfaceSpace>(&c.space)) {
        const auto twisted =
            twist(ss->X, c.surface_members.at(b), ss->X.lattice.canonical * p);
        return ext_dims(ss->X, c.surface_members.at(a), twisted);
    }
    if (const auto* ts = std::get_if<ToricSpace>(&c.space)) {
        const auto& ma = c.toric_members.at(a);
        const auto& mb = c.toric_members.at(b);
        std::vector<std::int64_t> diff(ma.size());
        for (std::size_t i = 0; i < ma.size(); ++i)
            diff[i] = checked_sub(checked_add(mb[i], checked_mul(p, -1)), ma[i]);
        return h_toric_oracle(ts->fan, diff);
    }
    if (const auto* bu = std::get_if<ProjectiveBundleSpace>(&c.space)) {
        const auto& ma = c.bundle_members.at(a);
        const auto& mb = c.bundle_members.at(b);
        const auto k = bu->canonical();
        return h_proj_bundle(bu->m, bu->n, checked_add(checked_sub(mb.a, ma.a), checked_mul(p, k.a)),
                             checked_add(checked_sub(mb.b, ma.b), checked_mul(p, k.b)));
    }
    const auto& ws = std::get<WeightedProjectiveSpace>(c.space);
    const std::int64_t k = checked_sub(c.weighted_members.at(b).k, c.weighted_members.at(a).k);
    return h_weighted(ws, checked_add(k, checked_mul(p, ws.canonical().k)));
}

struct StrongExceptionalResult {
    bool ok = true;
    /// First violation (i, j, l): nonzero Ext^l(E_i, E_j) forbidden by the
    /// ordering, or a wrong endomorphism dimension at i = j.
    std::optional<std::array<std::int64_t, 3>> witness;
};

/// Strong exceptionality of the ordered collection: End(E_i) = k, no higher
/// self-Exts, no morphisms backward in any degree, no higher Exts forward.
inline StrongExceptionalResult check_strong_exceptional(const Collection& c) {
    validate_collection(c);
    const std::size_t n = c.size();
    StrongExceptionalResult res;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto e = pair_ext(c, i, j, 0);
            for (std::size_t l = 0; l < e.h.size(); ++l) {
                bool bad;
                if (i == j)
                    bad = (l == 0) ? e.h[l] != 1 : e.h[l] != 0;
                else if (j < i)
                    bad = e.h[l] != 0;
                else
                    bad = l > 0 && e.h[l] != 0;
                if (bad) {
                    res.ok = false;
                    res.witness = {static_cast<std::int64_t>(i), static_cast<std::int64_t>(j),
                                   static_cast<std::int64_t>(l)};
                    return res;
                }
            }
        }
    }
    return res;
}

/// i0 = max{ i >= 0 : Ext^i(E_a, E_b (x) omega^dual) != 0 for some pair }.
/// Zero when no positive-degree group survives.
inline std::int64_t compute_i0(const Collection& c) {
    validate_collection(c);
    const std::size_t n = c.size();
    std::int64_t i0 = 0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const auto e = pair_ext(c, a, b, -1);
            for (std::size_t l = e.h.size(); l-- > 1;)
                if (e.h[l] != 0) {
                    i0 = std::max<std::int64_t>(i0, static_cast<std::int64_t>(l));
                    break;
                }
        }
    return i0;
}

/// Strongly cyclic: strong exceptional, and rotating through a twist by
/// omega^dual stays strong exceptional, i.e. Ext^{l>0}(E_j, E_i (x)
/// omega^dual) = 0 for i < j.
struct CyclicResult {
    bool ok = true;
    std::optional<std::array<std::int64_t, 3>> witness; // (j, i, l)
};

inline CyclicResult check_strongly_cyclic(const Collection& c) {
    CyclicResult res;
    const auto se = check_strong_exceptional(c);
    if (!se.ok) {
        res.ok = false;
        res.witness = se.witness;
        return res;
    }
    const std::size_t n = c.size();
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            const auto e = pair_ext(c, j, i, -1);
            for (std::size_t l = 1; l < e.h.size(); ++l)
                if (e.h[l] != 0) {
                    res.ok = false;
                    res.witness = {static_cast<std::int64_t>(j), static_cast<std::int64_t>(i),
                                   static_cast<std::int64_t>(l)};
                    return res;
                }
        }
    return res;
}

enum class PullbackVerdict { True, False, Unresolved };

struct PullbackResult {
    PullbackVerdict verdict = PullbackVerdict::Unresolved;
    std::int64_t p_reached = 0; // certification level, violating level, or -cap
};

namespace detail {

/// Data for the early-termination criterion of the pullback sweep on
/// surfaces: once every pair class D + pK has no higher cohomology and the
/// margin ((1-p)K - D).K is strictly positive for every pair, the vanishing
/// persists for all smaller p. The margin grows by K^2 per step, the
/// restriction of (1-p)K - D to an anti-canonical curve then has negative
/// degree (hence is nontrivial), and induction applies. Requires -K
/// effective with a smooth connected member and K^2 >= 1.
struct SurfaceTermination {
    bool usable = false;
    std::int64_t ksq = 0;
};

inline SurfaceTermination surface_termination(const Collection& c) {
    SurfaceTermination t;
    if (const auto* ss = std::get_if<SurfaceSpace>(&c.space)) {
        if (!ss->anticanonical_smooth_member) return t;
        const auto& L = ss->X.lattice;
        if (h0_blowup(ss->X, -L.canonical) <= 0) return t;
        t.ksq = intersect(L, L.canonical, L.canonical);
        t.usable = t.ksq >= 1;
        return t;
    }
    if (const auto* ts = std::get_if<ToricSpace>(&c.space)) {
        if (!ts->anticanonical_smooth_member) return t;
        const std::vector<std::int64_t> k(ts->fan.num_rays(), -1);
        std::vector<std::int64_t> mk(ts->fan.num_rays(), 1);
        if (h_toric_oracle(ts->fan, mk)[0] <= 0) return t;
        t.ksq = toric_intersect(ts->fan, k, k);
        t.usable = t.ksq >= 1;
        return t;
    }
    return t;
}

/// Margin ((1-p)K - D_ab).K for a pair at sweep level p; only meaningful on
/// surface kinds.
inline std::int64_t surface_margin(const Collection& c, std::size_t a, std::size_t b,
                                   std::int64_t p) {
    if (const auto* ss = std::get_if<SurfaceSpace>(&c.space)) {
        const auto* la = std::get_if<LineBundleSheaf>(&c.surface_members[a]);
        const auto* lb = std::get_if<LineBundleSheaf>(&c.surface_members[b]);
        if (!la || !lb) throw unsupported_error("pullback margins need line-bundle members");
        const auto& L = ss->X.lattice;
        const auto w = L.canonical * (1 - p) - (lb->cls - la->cls);
        return intersect(L, w, L.canonical);
    }
    const auto& ts = std::get<ToricSpace>(c.space);
    const auto& ma = c.toric_members[a];
    const auto& mb = c.toric_members[b];
    std::vector<std::int64_t> w(ma.size());
    const std::vector<std::int64_t> k(ma.size(), -1);
    for (std::size_t i = 0; i < ma.size(); ++i)
        w[i] = checked_sub(checked_mul(1 - p, -1), checked_sub(mb[i], ma[i]));
    return toric_intersect(ts.fan, w, k);
}

} // namespace detail

/// Sweep p = 0, -1, -2, ... checking Ext^{l != 0}(E_a, E_b (x) omega^p) = 0
/// for all pairs. Returns False on the first violation; True when a
/// termination criterion certifies all remaining levels; Unresolved(p) when
/// the cap is hit without certification. Never a silent true.
inline PullbackResult check_pullback(const Collection& c, std::int64_t p_cap = 25) {
    validate_collection(c);
    if (p_cap < 1) throw validation_error("pullback cap must be positive");
    const std::size_t n = c.size();

    const bool surface_kind = std::holds_alternative<SurfaceSpace>(c.space) ||
                              std::holds_alternative<ToricSpace>(c.space);
    const bool line_bundles_only = [&] {
        if (const auto* ss = std::get_if<SurfaceSpace>(&c.space)) {
            (void)ss;
            for (const auto& m : c.surface_members)
                if (!std::holds_alternative<LineBundleSheaf>(m)) return false;
        }
        return true;
    }();
    const auto term = (surface_kind && line_bundles_only) ? detail::surface_termination(c)
                                                          : detail::SurfaceTermination{};

    for (std::int64_t p = 0; p >= -p_cap; --p) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const auto e = pair_ext(c, a, b, p);
                for (std::size_t l = 1; l < e.h.size(); ++l)
                    if (e.h[l] != 0) return PullbackResult{PullbackVerdict::False, p};
            }
        // Level p verified clean; try to certify all deeper levels.
        if (const auto* bu = std::get_if<ProjectiveBundleSpace>(&c.space)) {
            // Higher cohomology of (a,b) vanishes iff b - a m >= -n (for
            // a >= 0); the margin moves by n + 1 - m per level, so for
            // m <= n + 1 a clean level stays clean forever.
            if (bu->m <= bu->n + 1) return PullbackResult{PullbackVerdict::True, p};
        } else if (std::holds_alternative<WeightedProjectiveSpace>(c.space)) {
            // Degrees only grow as p decreases and h^{>0}(O(k)) = 0 once
            // k > -sum(weights); a clean level certifies the rest.
            return PullbackResult{PullbackVerdict::True, p};
        } else if (term.usable) {
            bool certified = true;
            for (std::size_t a = 0; a < n && certified; ++a)
                for (std::size_t b = 0; b < n && certified; ++b)
                    if (detail::surface_margin(c, a, b, p) < 1) certified = false;
            if (certified) return PullbackResult{PullbackVerdict::True, p};
        }
    }
    return PullbackResult{PullbackVerdict::Unresolved, -p_cap};
}

/// chi-pairing table: entry (i, j) = sum_l (-1)^l ext^l(E_i, E_j).
inline std::vector<std::vector<std::int64_t>> euler_matrix(const Collection& c) {
    validate_collection(c);
    const std::size_t n = c.size();
    std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = pair_ext(c, i, j, 0).euler_char();
    return m;
}

/// Entry (i, j) = dim Hom(E_i, E_j).
inline std::vector<std::vector<std::int64_t>> hom_matrix(const Collection& c) {
    validate_collection(c);
    const std::size_t n = c.size();
    std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = pair_ext(c, i, j, 0)[0];
    return m;
}

/// Cohomology of the anti-canonical bundle with the two generation-time
/// bounds it implies: the cap 2 dim - 1 for tilting bundles when -K is
/// effective, and the floor dim + max{ i > 0 : h^i != 0 } for collections of
/// bundles containing O.
struct AnticanonicalDiagnostics {
    CohomologyVector h_anticanonical;
    bool effective = false;
    std::optional<std::int64_t> upper_cap;
    std::int64_t lower_bound = 0;
};

inline AnticanonicalDiagnostics anticanonical_diagnostics(const Space& s) {
    AnticanonicalDiagnostics d;
    const std::int64_t dim = space_dim(s);
    if (const auto* ss = std::get_if<SurfaceSpace>(&s)) {
        d.h_anticanonical = h_line_bundle_surface(ss->X, -ss->X.lattice.canonical);
    } else if (const auto* ts = std::get_if<ToricSpace>(&s)) {
        const std::vector<std::int64_t> mk(ts->fan.num_rays(), 1);
        d.h_anticanonical = h_toric_oracle(ts->fan, mk);
    } else if (const auto* bu = std::get_if<ProjectiveBundleSpace>(&s)) {
        const auto k = bu->canonical();
        d.h_anticanonical = h_proj_bundle(bu->m, bu->n, -k.a, -k.b);
    } else {
        throw unsupported_error("anticanonical diagnostics cover surfaces and projective bundles");
    }
    d.effective = d.h_anticanonical[0] > 0;
    if (d.effective) d.upper_cap = 2 * dim - 1;
    d.lower_bound = dim;
    for (std::size_t i = 1; i < d.h_anticanonical.h.size(); ++i)
        if (d.h_anticanonical.h[i] != 0)
            d.lower_bound = dim + static_cast<std::int64_t>(i);
    return d;
}

enum class AntieffVerdict { VanishingCertified, NonvanishingCertified, Indeterminate };

/// Criterion for H^{>0}(D - K) = 0 on a surface whose anti-canonical system
/// has a smooth connected member C, for D with no higher cohomology:
/// vanishing holds iff (K-D)|_C is nontrivial and (K-D).K >= 0. Nonzero
/// restriction degree certifies nontriviality; at degree zero triviality is
/// equivalent to the restriction having a section, decided through
/// h^0(K-D) vs h^0(2K-D) when h^1(2K-D) does not obstruct. The verdict is
/// cross-checked against the direct computation of h^{>0}(D-K).
inline AntieffVerdict rational_antieffective_check(const SurfaceSpace& s, const DivisorClass& d) {
    const auto& L = s.X.lattice;
    if (h0_blowup(s.X, -L.canonical) <= 0)
        throw validation_error("rational_antieffective_check requires effective -K");
    const auto hD = h_line_bundle_surface(s.X, d);
    const bool premise = hD[1] == 0 && hD[2] == 0;
    const auto kd = serre_dual_class(L, d);
    const std::int64_t margin = intersect(L, kd, L.canonical);

    auto verdict = AntieffVerdict::Indeterminate;
    if (premise) {
        if (margin < 0) {
            verdict = AntieffVerdict::NonvanishingCertified;
        } else if (margin > 0) {
            verdict = AntieffVerdict::VanishingCertified;
        } else {
            const std::int64_t h0_kd = h0_blowup(s.X, kd);
            const auto h_2kd = h_line_bundle_surface(s.X, kd + L.canonical);
            if (h0_kd - h_2kd[0] > 0)
                verdict = AntieffVerdict::NonvanishingCertified; // restriction trivial
            else if (h_2kd[1] == 0)
                verdict = AntieffVerdict::VanishingCertified; // restriction has no section
        }
    }

    const auto direct = h_line_bundle_surface(s.X, d - L.canonical);
    const bool vanishes = direct[1] == 0 && direct[2] == 0;
    if (verdict == AntieffVerdict::VanishingCertified && !vanishes)
        throw integrity_error("anti-effective criterion certified vanishing but h^{>0} != 0");
    if (verdict == AntieffVerdict::NonvanishingCertified && vanishes)
        throw integrity_error("anti-effective criterion certified nonvanishing but h^{>0} = 0");
    return verdict;
}

/// Per-collection verdicts; hochschild_dim = dim + i0 is the generation-time
/// value, an equality for spaces proper over a perfect field (all supported
/// presets; the base field is declared characteristic zero in configs).
struct CollectionReport {
    bool strong_exceptional = false;
    std::optional<std::array<std::int64_t, 3>> violation;
    std::int64_t i0 = 0;
    std::int64_t dim_space = 0;
    std::int64_t hochschild_dim = 0;
    bool equality_claim = true;
    bool strongly_cyclic = false;
    PullbackResult pullback;
    std::int64_t lower_bound = 0; // dim <= generation time
    std::int64_t upper_bound = 0; // generation time <= 2 dim
    std::vector<std::vector<ExtVector>> ext_table;
    std::vector<std::vector<std::int64_t>> hom;
    std::vector<std::vector<std::int64_t>> euler;
};

inline CollectionReport generation_time_report(const Collection& c, std::int64_t p_cap = 25) {
    validate_collection(c);
    CollectionReport r;
    const auto se = check_strong_exceptional(c);
    r.strong_exceptional = se.ok;
    r.violation = se.witness;
    r.i0 = compute_i0(c);
    r.dim_space = space_dim(c.space);
    r.hochschild_dim = r.dim_space + r.i0;
    r.equality_claim = true;
    r.strongly_cyclic = check_strongly_cyclic(c).ok;
    r.pullback = check_pullback(c, p_cap);
    r.lower_bound = r.dim_space;
    r.upper_bound = 2 * r.dim_space;
    const std::size_t n = c.size();
    r.ext_table.assign(n, std::vector<ExtVector>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r.ext_table[i][j] = pair_ext(c, i, j, 0);
    r.hom.assign(n, std::vector<std::int64_t>(n, 0));
    r.euler.assign(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            r.hom[i][j] = r.ext_table[i][j][0];
            r.euler[i][j] = r.ext_table[i][j].euler_char();
        }
    return r;
}

} // namespace gentime
