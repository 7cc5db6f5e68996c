#pragma once

#include <cstdint>
#include <variant>

#include "gentime/cohomology.hpp"
#include "gentime/errors.hpp"
#include "gentime/geometry.hpp"
#include "gentime/lattice.hpp"

namespace gentime {

/// Entry i = dim Ext^i(A, B); same shape as a cohomology vector.
using ExtVector = CohomologyVector;

/// Line bundle O(D).
struct LineBundleSheaf {
    DivisorClass cls;
};

/// Twisted structure sheaf O_{E_i}(k) of the exceptional curve of center i.
/// Only valid when center i carries no infinitesimal satellites, so that the
/// lattice class E_i is the class of the (irreducible) curve itself.
struct ExceptionalTwistSheaf {
    std::size_t curve = 0;
    std::int64_t twist = 0;
};

using SheafDescriptor = std::variant<LineBundleSheaf, ExceptionalTwistSheaf>;

inline void validate_sheaf(const BlowupSurface& X, const SheafDescriptor& s) {
    if (const auto* lb = std::get_if<LineBundleSheaf>(&s)) {
        if (lb->cls.rank() != X.lattice.rank())
            throw structural_error("line bundle class does not match surface lattice");
        return;
    }
    const auto& tw = std::get<ExceptionalTwistSheaf>(s);
    if (tw.curve >= X.num_centers())
        throw validation_error("exceptional twist references a center that does not exist");
    if (!X.children(tw.curve).empty())
        throw unsupported_error("exceptional twist on a center with infinitely-near satellites: "
                                "the lattice class is not an irreducible curve");
}

/// Tensor with O(D). Restriction to a curve of class C turns O(D) into
/// O_{P^1}(D.C).
inline SheafDescriptor twist(const BlowupSurface& X, const SheafDescriptor& s,
                             const DivisorClass& d) {
    if (const auto* lb = std::get_if<LineBundleSheaf>(&s))
        return LineBundleSheaf{lb->cls + d};
    const auto& tw = std::get<ExceptionalTwistSheaf>(s);
    const auto e = X.lattice.basis_class(tw.curve + 1);
    return ExceptionalTwistSheaf{tw.curve, checked_add(tw.twist, intersect(X.lattice, d, e))};
}

/// Degree of O(D) restricted to a curve of class C.
inline std::int64_t restriction_degree(const SurfaceLattice& L, const DivisorClass& d,
                                       const DivisorClass& c) {
    return intersect(L, d, c);
}

namespace detail {
inline CohomologyVector p1_as_surface(const CohomologyVector& v) {
    return CohomologyVector{{v[0], v[1], 0}};
}
} // namespace detail

/// Ext^*(A, B) on a blow-up surface, by closed forms:
///  - two line bundles: cohomology of the difference class;
///  - Ext(O(D), O_E(k)) = H^*(P^1, O(k - D.E));
///  - Ext(O_E(k), O(D)) = H^{2-*}(P^1, O(k - D.E + K.E))^dual
///    (Grothendieck-Serre duality);
///  - Ext(O_E(a), O_E(b)) on one curve: contributions from O(b-a) in degree
///    j = 0 and from O(b-a-1) = O(b-a) (x) N in degree j = 1, N = O(E.E);
///  - distinct curves are disjoint and give zero.
inline ExtVector ext_dims(const BlowupSurface& X, const SheafDescriptor& A,
                          const SheafDescriptor& B) {
    validate_sheaf(X, A);
    validate_sheaf(X, B);
    const auto& L = X.lattice;

    if (const auto* a = std::get_if<LineBundleSheaf>(&A)) {
        if (const auto* b = std::get_if<LineBundleSheaf>(&B))
            return h_line_bundle_surface(X, b->cls - a->cls);
        const auto& tb = std::get<ExceptionalTwistSheaf>(B);
        const auto e = L.basis_class(tb.curve + 1);
        const std::int64_t deg = checked_sub(tb.twist, intersect(L, a->cls, e));
        return detail::p1_as_surface(h_projective_space(1, deg));
    }

    const auto& ta = std::get<ExceptionalTwistSheaf>(A);
    const auto ea = L.basis_class(ta.curve + 1);

    if (const auto* b = std::get_if<LineBundleSheaf>(&B)) {
        const std::int64_t ke = intersect(L, L.canonical, ea); // -1 on a (-1)-curve
        const std::int64_t deg =
            checked_add(checked_sub(ta.twist, intersect(L, b->cls, ea)), ke);
        const auto dual = h_projective_space(1, deg);
        return CohomologyVector{{0, dual[1], dual[0]}};
    }

    const auto& tb = std::get<ExceptionalTwistSheaf>(B);
    if (ta.curve != tb.curve) {
        if (intersect(L, ea, L.basis_class(tb.curve + 1)) != 0)
            throw unsupported_error("ext between torsion sheaves on intersecting curves");
        const auto z = std::int64_t{0};
        return CohomologyVector{{z, z, z}};
    }
    const std::int64_t diff = checked_sub(tb.twist, ta.twist);
    const std::int64_t ee = intersect(L, ea, ea);
    const auto j0 = h_projective_space(1, diff);
    const auto j1 = h_projective_space(1, checked_add(diff, ee));
    return CohomologyVector{{j0[0], checked_add(j0[1], j1[0]), j1[1]}};
}

} // namespace gentime
