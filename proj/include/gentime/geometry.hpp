#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gentime/errors.hpp"
#include "gentime/lattice.hpp"
#include "gentime/rational.hpp"

namespace gentime {

/// Point of P^2 with exact rational homogeneous coordinates, not all zero.
using ProjPoint = std::array<Rational, 3>;

inline bool proj_equal(const ProjPoint& p, const ProjPoint& q) {
    // Equal iff all 2x2 minors of the 2x3 matrix (p; q) vanish.
    return p[0] * q[1] == p[1] * q[0] && p[0] * q[2] == p[2] * q[0] &&
           p[1] * q[2] == p[2] * q[1];
}

/// Proper blow-up center.
struct ProperCenter {
    ProjPoint coords;
};

/// First-order infinitesimal center: a point on the exceptional curve of an
/// earlier proper center, i.e. a tangent direction at the parent. The ratio
/// [a : b] picks the direction vector v with v[pivot] = 0 and (v[i], v[j]) =
/// (a, b), where pivot is the first nonzero coordinate of the parent and
/// i < j are the two remaining positions. Any direction at the parent has a
/// unique such representative up to scale.
struct InfinitesimalCenter {
    std::size_t parent = 0;
    std::array<Rational, 2> tangent{};
};

using Center = std::variant<ProperCenter, InfinitesimalCenter>;

/// Ordered forest of blow-up centers on P^2.
struct PointConfiguration {
    std::vector<Center> centers;

    std::size_t size() const { return centers.size(); }
    bool is_proper(std::size_t i) const {
        return std::holds_alternative<ProperCenter>(centers.at(i));
    }
};

inline std::size_t pivot_index(const ProjPoint& p) {
    for (std::size_t k = 0; k < 3; ++k)
        if (p[k] != 0) return k;
    throw validation_error("projective point has all coordinates zero");
}

/// Direction vector in Q^3 attached to an infinitesimal center (see above).
inline ProjPoint tangent_vector(const ProjPoint& parent, const std::array<Rational, 2>& t) {
    if (t[0] == 0 && t[1] == 0)
        throw validation_error("tangent direction must be a nonzero ratio");
    const std::size_t k = pivot_index(parent);
    ProjPoint v{Rational(0), Rational(0), Rational(0)};
    std::size_t pos = 0;
    for (std::size_t c = 0; c < 3; ++c)
        if (c != k) v[c] = t[pos++];
    return v;
}

inline void validate_configuration(const PointConfiguration& config) {
    const auto& cs = config.centers;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (const auto* p = std::get_if<ProperCenter>(&cs[i])) {
            if (p->coords[0] == 0 && p->coords[1] == 0 && p->coords[2] == 0)
                throw validation_error("center " + std::to_string(i) +
                                       ": homogeneous coordinates are all zero");
            for (std::size_t j = 0; j < i; ++j)
                if (const auto* q = std::get_if<ProperCenter>(&cs[j]))
                    if (proj_equal(p->coords, q->coords))
                        throw validation_error("center " + std::to_string(i) +
                                               " duplicates center " + std::to_string(j));
        } else {
            const auto& inf = std::get<InfinitesimalCenter>(cs[i]);
            if (inf.parent >= i)
                throw validation_error("center " + std::to_string(i) +
                                       ": parent index must be strictly smaller");
            if (!config.is_proper(inf.parent))
                throw validation_error("center " + std::to_string(i) +
                                       ": second-order infinitesimal towers are not supported");
            const auto& par = std::get<ProperCenter>(cs[inf.parent]).coords;
            const auto v = tangent_vector(par, inf.tangent); // validates the ratio
            for (std::size_t j = 0; j < i; ++j) {
                if (const auto* other = std::get_if<InfinitesimalCenter>(&cs[j])) {
                    if (other->parent != inf.parent) continue;
                    const auto w = tangent_vector(par, other->tangent);
                    if (proj_equal(v, w))
                        throw validation_error("center " + std::to_string(i) +
                                               " duplicates the infinitesimal center " +
                                               std::to_string(j));
                }
            }
        }
    }
}

/// Iterated blow-up of P^2 described by a point configuration, together with
/// its Picard lattice in the (H, E_1..E_t) basis.
struct BlowupSurface {
    PointConfiguration config;
    SurfaceLattice lattice;

    std::size_t num_centers() const { return config.size(); }

    /// Indices of infinitesimal centers sitting on center i.
    std::vector<std::size_t> children(std::size_t i) const {
        std::vector<std::size_t> out;
        for (std::size_t j = 0; j < config.size(); ++j)
            if (const auto* inf = std::get_if<InfinitesimalCenter>(&config.centers[j]))
                if (inf->parent == i) out.push_back(j);
        return out;
    }
};

inline BlowupSurface build_blowup_surface(PointConfiguration config) {
    validate_configuration(config);
    const std::size_t t = config.size();
    return BlowupSurface{std::move(config), blowup_lattice(t)};
}

/// Genericity predicates, decided by exact determinant and rank computations
/// on the proper centers; infinitesimal centers are excluded and counted.
struct GenericityReport {
    bool distinct = true;
    bool no_three_collinear = true;
    bool no_six_on_conic = true;
    std::size_t infinitesimal_excluded = 0;
};

namespace detail {

inline Rational det3(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

/// Row of conic monomial values x^2, y^2, z^2, xy, xz, yz at a point.
inline std::array<Rational, 6> conic_row(const ProjPoint& p) {
    return {p[0] * p[0], p[1] * p[1], p[2] * p[2], p[0] * p[1], p[0] * p[2], p[1] * p[2]};
}

inline Rational det6(std::array<std::array<Rational, 6>, 6> m) {
    // Fraction-aware Gaussian elimination; exact.
    Rational det(1);
    for (std::size_t col = 0; col < 6; ++col) {
        std::size_t piv = col;
        while (piv < 6 && m[piv][col] == 0) ++piv;
        if (piv == 6) return Rational(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < 6; ++r) {
            if (m[r][col] == 0) continue;
            const Rational f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < 6; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

} // namespace detail

inline GenericityReport genericity_report(const PointConfiguration& config) {
    GenericityReport rep;
    std::vector<ProjPoint> pts;
    for (const auto& c : config.centers) {
        if (const auto* p = std::get_if<ProperCenter>(&c))
            pts.push_back(p->coords);
        else
            ++rep.infinitesimal_excluded;
    }
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n && rep.distinct; ++i)
        for (std::size_t j = i + 1; j < n && rep.distinct; ++j)
            if (proj_equal(pts[i], pts[j])) rep.distinct = false;
    for (std::size_t i = 0; i < n && rep.no_three_collinear; ++i)
        for (std::size_t j = i + 1; j < n && rep.no_three_collinear; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                if (detail::det3(pts[i], pts[j], pts[k]) == 0) {
                    rep.no_three_collinear = false;
                    break;
                }
    if (n >= 6) {
        // Every 6-subset must give a nonsingular conic-evaluation matrix.
        std::array<std::size_t, 6> idx{};
        std::vector<std::array<std::size_t, 6>> subsets;
        // simple combinations enumeration
        std::vector<std::size_t> comb(6);
        for (std::size_t i = 0; i < 6; ++i) comb[i] = i;
        while (true) {
            for (std::size_t i = 0; i < 6; ++i) idx[i] = comb[i];
            subsets.push_back(idx);
            std::size_t i = 6;
            while (i-- > 0) {
                if (comb[i] != i + n - 6) {
                    ++comb[i];
                    for (std::size_t j = i + 1; j < 6; ++j) comb[j] = comb[j - 1] + 1;
                    break;
                }
                if (i == 0) goto done;
            }
        }
    done:
        for (const auto& s : subsets) {
            std::array<std::array<Rational, 6>, 6> m;
            for (std::size_t i = 0; i < 6; ++i) m[i] = detail::conic_row(pts[s[i]]);
            if (detail::det6(m) == 0) {
                rep.no_six_on_conic = false;
                break;
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Projective bundles and weighted projective stacks
// ---------------------------------------------------------------------------

/// X_{m,n} = P(O + O(-m)) over P^n; dim = n + 1.
struct ProjectiveBundleSpace {
    std::int64_t m = 0;
    std::int64_t n = 1;

    std::int64_t dim() const { return n + 1; }

    BidegreeClass canonical() const { return BidegreeClass{-2, -(n + 1 + m)}; }
};

inline ProjectiveBundleSpace make_projective_bundle(std::int64_t m, std::int64_t n) {
    if (m < 0) throw validation_error("projective bundle requires m >= 0");
    if (n < 1) throw validation_error("projective bundle requires n >= 1");
    return ProjectiveBundleSpace{m, n};
}

/// Stacky weighted projective space P(a_0,...,a_n); dim = n.
struct WeightedProjectiveSpace {
    std::vector<std::int64_t> weights;

    std::int64_t dim() const { return static_cast<std::int64_t>(weights.size()) - 1; }

    std::int64_t weight_sum() const {
        std::int64_t s = 0;
        for (auto w : weights) s = checked_add(s, w);
        return s;
    }

    WeightedClass canonical() const { return WeightedClass{-weight_sum()}; }
};

inline WeightedProjectiveSpace make_weighted_projective(std::vector<std::int64_t> weights) {
    if (weights.size() < 2) throw validation_error("weighted projective space needs >= 2 weights");
    for (auto w : weights)
        if (w < 1) throw validation_error("weights must be positive integers");
    return WeightedProjectiveSpace{std::move(weights)};
}

// ---------------------------------------------------------------------------
// Toric surface fans
// ---------------------------------------------------------------------------

using RayVector = std::array<std::int64_t, 2>;

/// Smooth complete toric surface: primitive rays in strict counterclockwise
/// order with consecutive determinants exactly 1.
struct ToricSurfaceFan {
    std::vector<RayVector> rays;

    std::size_t num_rays() const { return rays.size(); }

    const RayVector& ray(std::size_t i) const { return rays[i % rays.size()]; }
};

inline std::int64_t det2(const RayVector& a, const RayVector& b) {
    return checked_sub(checked_mul(a[0], b[1]), checked_mul(a[1], b[0]));
}

namespace detail {
inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        const auto t = a % b;
        a = b;
        b = t;
    }
    return a;
}
} // namespace detail

/// v_{i-1} + v_{i+1} = a_i v_i; the self-intersection of the i-th ray divisor
/// is -a_i. Exactness of the relation is forced by the unit determinants.
inline std::int64_t fan_ray_selfint_coeff(const ToricSurfaceFan& fan, std::size_t i) {
    const std::size_t r = fan.num_rays();
    const auto& prev = fan.ray((i + r - 1) % r);
    const auto& cur = fan.ray(i);
    const auto& next = fan.ray((i + 1) % r);
    const RayVector sum{checked_add(prev[0], next[0]), checked_add(prev[1], next[1])};
    // sum = a * cur  (the cross term vanishes because det(prev,cur)=det(cur,next)=1)
    if (det2(cur, sum) != 0)
        throw integrity_error("fan relation v_{i-1} + v_{i+1} = a v_i failed");
    std::int64_t a;
    if (cur[0] != 0)
        a = checked_div_exact(sum[0], cur[0]);
    else
        a = checked_div_exact(sum[1], cur[1]);
    return a;
}

inline void validate_fan(const ToricSurfaceFan& fan) {
    const std::size_t r = fan.num_rays();
    if (r < 3) throw validation_error("fan is incomplete: fewer than three rays");
    for (std::size_t i = 0; i < r; ++i) {
        const auto& v = fan.rays[i];
        if (v[0] == 0 && v[1] == 0)
            throw validation_error("ray " + std::to_string(i) + " is zero");
        if (detail::gcd64(v[0], v[1]) != 1)
            throw validation_error("ray " + std::to_string(i) + " is not primitive");
        for (std::size_t j = 0; j < i; ++j)
            if (fan.rays[j] == v)
                throw validation_error("ray " + std::to_string(i) + " duplicates ray " +
                                       std::to_string(j));
    }
    std::int64_t self_sum = 0;
    for (std::size_t i = 0; i < r; ++i) {
        const std::int64_t d = det2(fan.ray(i), fan.ray(i + 1));
        if (d <= 0)
            throw validation_error("rays " + std::to_string(i) + "," +
                                   std::to_string((i + 1) % r) +
                                   " are not in strict counterclockwise order");
        if (d != 1)
            throw validation_error("cone (" + std::to_string(i) + "," +
                                   std::to_string((i + 1) % r) +
                                   ") is singular: determinant " + std::to_string(d));
        self_sum = checked_add(self_sum, fan_ray_selfint_coeff(fan, i));
    }
    // Winding-number check: a smooth complete fan traversed once satisfies
    // sum a_i = 3r - 12 (each extra winding adds 12 to the defect).
    if (self_sum != 3 * static_cast<std::int64_t>(r) - 12)
        throw validation_error("fan does not close up with winding number one");
}

/// Intersection number of two toric divisors given by ray coefficients.
inline std::int64_t toric_intersect(const ToricSurfaceFan& fan,
                                    const std::vector<std::int64_t>& a,
                                    const std::vector<std::int64_t>& b) {
    const std::size_t r = fan.num_rays();
    if (a.size() != r || b.size() != r)
        throw structural_error("ray coefficient vector length does not match fan");
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < r; ++i) {
        if (a[i] == 0) continue;
        // D_i . D_i = -a_i, D_i . D_{i+-1} = 1, disjoint otherwise.
        acc = checked_sub(acc, checked_mul(a[i], checked_mul(fan_ray_selfint_coeff(fan, i), b[i])));
        acc = checked_add(acc, checked_mul(a[i], b[(i + 1) % r]));
        acc = checked_add(acc, checked_mul(a[i], b[(i + r - 1) % r]));
    }
    return acc;
}

/// chi of a toric divisor from Riemann-Roch; K has ray coefficients (-1,..,-1).
inline std::int64_t toric_euler_char(const ToricSurfaceFan& fan,
                                     const std::vector<std::int64_t>& a) {
    const std::vector<std::int64_t> k(fan.num_rays(), -1);
    const std::int64_t num = checked_sub(toric_intersect(fan, a, a), toric_intersect(fan, a, k));
    if (num % 2 != 0) throw integrity_error("toric Riemann-Roch parity violation");
    return 1 + num / 2;
}

/// A toric surface together with its blow-up model: the fan, the matching
/// point configuration, and the dictionary from rays to Picard classes.
struct ToricSurfaceModel {
    ToricSurfaceFan fan;
    BlowupSurface surface;
    std::vector<std::string> ray_labels;
    std::vector<DivisorClass> ray_classes;
    /// basis_lifts[j] = ray-coefficient vector representing the j-th Picard
    /// basis class (H, E_1, ...); used to lift arbitrary classes to the fan.
    std::vector<std::vector<std::int64_t>> basis_lifts;

    std::vector<std::int64_t> lift(const DivisorClass& d) const {
        if (d.rank() != surface.lattice.rank())
            throw structural_error("class rank does not match surface lattice");
        std::vector<std::int64_t> out(fan.num_rays(), 0);
        for (std::size_t j = 0; j < d.rank(); ++j) {
            if (d.coeffs[j] == 0) continue;
            for (std::size_t i = 0; i < out.size(); ++i)
                out[i] = checked_add(out[i], checked_mul(d.coeffs[j], basis_lifts[j][i]));
        }
        return out;
    }
};

namespace detail {
inline ProjPoint make_point(int x, int y, int z) {
    return ProjPoint{Rational(x), Rational(y), Rational(z)};
}
} // namespace detail

/// The three torus-fixed points of P^2.
inline PointConfiguration torus_fixed_config() {
    PointConfiguration c;
    c.centers.push_back(ProperCenter{detail::make_point(1, 0, 0)});
    c.centers.push_back(ProperCenter{detail::make_point(0, 1, 0)});
    c.centers.push_back(ProperCenter{detail::make_point(0, 0, 1)});
    return c;
}

/// Blow-up of P^2 at the three torus-fixed points, with the fan model.
inline ToricSurfaceModel torus_fixed_b3_model() {
    ToricSurfaceModel m;
    m.fan.rays = {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}};
    validate_fan(m.fan);
    m.surface = build_blowup_surface(torus_fixed_config());
    m.ray_labels = {"H-E1-E3", "E1", "H-E1-E2", "E2", "H-E2-E3", "E3"};
    auto cls = [](std::vector<std::int64_t> v) { return DivisorClass(std::move(v)); };
    m.ray_classes = {cls({1, -1, 0, -1}), cls({0, 1, 0, 0}),  cls({1, -1, -1, 0}),
                     cls({0, 0, 1, 0}),   cls({1, 0, -1, -1}), cls({0, 0, 0, 1})};
    // H = (H-E1-E2) + E1 + E2, E_i are rays directly.
    m.basis_lifts = {
        {0, 1, 1, 1, 0, 0}, // H
        {0, 1, 0, 0, 0, 0}, // E1
        {0, 0, 0, 1, 0, 0}, // E2
        {0, 0, 0, 0, 0, 1}, // E3
    };
    return m;
}

/// Hirzebruch surface X_{m,1} as a fan; ray classes in the (S, H) basis.
inline ToricSurfaceModel hirzebruch_model(std::int64_t m_param) {
    if (m_param < 0) throw validation_error("Hirzebruch parameter must be >= 0");
    ToricSurfaceModel m;
    m.fan.rays = {{1, 0}, {0, 1}, {-1, m_param}, {0, -1}};
    validate_fan(m.fan);
    // No blow-up model; the surface field carries only the lattice.
    m.surface.lattice = hirzebruch_lattice(m_param);
    m.ray_labels = {"H", "S", "H", "S+" + std::to_string(m_param) + "H"};
    auto cls = [](std::vector<std::int64_t> v) { return DivisorClass(std::move(v)); };
    m.ray_classes = {cls({0, 1}), cls({1, 0}), cls({0, 1}), cls({1, m_param})};
    m.basis_lifts = {
        {0, 1, 0, 0}, // S
        {1, 0, 0, 0}, // H
    };
    return m;
}

/// The Picard-rank-seven toric surface: P^2 blown up at the three torus-fixed
/// points and then at one point of each exceptional curve, in the cyclic
/// pattern "tangent at p1 toward p3, at p3 toward p2, at p2 toward p1".
/// Both models are returned: the nine-ray fan with its ray-class dictionary,
/// and the equivalent point configuration (E4 on E1, E5 on E2, E6 on E3).
inline ToricSurfaceModel rank7_toric_model() {
    ToricSurfaceModel m;
    m.fan.rays = {{1, 0}, {1, 1}, {1, 2}, {0, 1}, {-1, 0}, {-2, -1}, {-1, -1}, {0, -1}, {1, -1}};
    validate_fan(m.fan);

    PointConfiguration c = torus_fixed_config();
    // Directions: at p1=(1:0:0) the chart ratio [a:b] means v=(0,a,b);
    // at p2=(0:1:0), v=(a,0,b); at p3=(0:0:1), v=(a,b,0).
    c.centers.push_back(InfinitesimalCenter{0, {Rational(0), Rational(1)}}); // E4: toward p3
    c.centers.push_back(InfinitesimalCenter{1, {Rational(1), Rational(0)}}); // E5: toward p1
    c.centers.push_back(InfinitesimalCenter{2, {Rational(0), Rational(1)}}); // E6: toward p2
    m.surface = build_blowup_surface(std::move(c));

    m.ray_labels = {"H-E1-E2-E5", "E1-E4", "E4",     "H-E1-E3-E4", "E3-E6",
                    "E6",         "H-E2-E3-E6", "E2-E5", "E5"};
    auto cls = [](std::vector<std::int64_t> v) { return DivisorClass(std::move(v)); };
    m.ray_classes = {cls({1, -1, -1, 0, 0, -1, 0}), cls({0, 1, 0, 0, -1, 0, 0}),
                     cls({0, 0, 0, 0, 1, 0, 0}),    cls({1, -1, 0, -1, -1, 0, 0}),
                     cls({0, 0, 0, 1, 0, 0, -1}),   cls({0, 0, 0, 0, 0, 0, 1}),
                     cls({1, 0, -1, -1, 0, 0, -1}), cls({0, 0, 1, 0, 0, -1, 0}),
                     cls({0, 0, 0, 0, 0, 1, 0})};
    // H = (H-E1-E2-E5) + E1 + E2 + E5 with E1 = (E1-E4)+E4, E2 = (E2-E5)+E5.
    m.basis_lifts = {
        {1, 1, 1, 0, 0, 0, 0, 1, 2}, // H
        {0, 1, 1, 0, 0, 0, 0, 0, 0}, // E1
        {0, 0, 0, 0, 0, 0, 0, 1, 1}, // E2
        {0, 0, 0, 0, 1, 1, 0, 0, 0}, // E3
        {0, 0, 1, 0, 0, 0, 0, 0, 0}, // E4
        {0, 0, 0, 0, 0, 0, 0, 0, 1}, // E5
        {0, 0, 0, 0, 0, 1, 0, 0, 0}, // E6
    };
    return m;
}

} // namespace gentime
