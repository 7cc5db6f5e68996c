#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gentime/checked.hpp"
#include "gentime/errors.hpp"

namespace gentime {

/// Integer vector in a fixed Picard-lattice basis.
struct DivisorClass {
    std::vector<std::int64_t> coeffs;

    DivisorClass() = default;
    explicit DivisorClass(std::vector<std::int64_t> c) : coeffs(std::move(c)) {}

    std::size_t rank() const { return coeffs.size(); }

    bool operator==(const DivisorClass& o) const = default;

    DivisorClass operator+(const DivisorClass& o) const {
        require_same_rank(o);
        DivisorClass r(coeffs);
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            r.coeffs[i] = checked_add(r.coeffs[i], o.coeffs[i]);
        return r;
    }

    DivisorClass operator-(const DivisorClass& o) const {
        require_same_rank(o);
        DivisorClass r(coeffs);
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            r.coeffs[i] = checked_sub(r.coeffs[i], o.coeffs[i]);
        return r;
    }

    DivisorClass operator-() const {
        DivisorClass r(coeffs);
        for (auto& c : r.coeffs) c = checked_sub(0, c);
        return r;
    }

    DivisorClass operator*(std::int64_t s) const {
        DivisorClass r(coeffs);
        for (auto& c : r.coeffs) c = checked_mul(c, s);
        return r;
    }

  private:
    void require_same_rank(const DivisorClass& o) const {
        if (coeffs.size() != o.coeffs.size())
            throw structural_error("divisor classes live in lattices of different rank");
    }
};

/// Class aS + bH on the projective bundle X_{m,n}; for n > 1 there is no
/// intersection lattice, only this bidegree bookkeeping.
struct BidegreeClass {
    std::int64_t a = 0; // coefficient of S (relative hyperplane)
    std::int64_t b = 0; // coefficient of H (pullback hyperplane)
    bool operator==(const BidegreeClass&) const = default;
};

/// Degree of O(k) on a weighted projective stack P(a_0,...,a_n).
struct WeightedClass {
    std::int64_t k = 0;
    bool operator==(const WeightedClass&) const = default;
};

/// Picard lattice of a surface: symmetric integer pairing plus the canonical class.
struct SurfaceLattice {
    std::vector<std::string> basis_labels;
    std::vector<std::vector<std::int64_t>> gram; // symmetric, signature (1, rank-1)
    DivisorClass canonical;

    std::size_t rank() const { return basis_labels.size(); }

    DivisorClass zero() const { return DivisorClass(std::vector<std::int64_t>(rank(), 0)); }

    DivisorClass basis_class(std::size_t i) const {
        auto d = zero();
        d.coeffs.at(i) = 1;
        return d;
    }
};

/// Blow-up of P^2 at t centers: basis (H, E_1..E_t), gram diag(1,-1,...,-1),
/// K = -3H + sum E_i.
inline SurfaceLattice blowup_lattice(std::size_t t) {
    SurfaceLattice L;
    L.basis_labels.push_back("H");
    for (std::size_t i = 1; i <= t; ++i) L.basis_labels.push_back("E" + std::to_string(i));
    const std::size_t n = t + 1;
    L.gram.assign(n, std::vector<std::int64_t>(n, 0));
    L.gram[0][0] = 1;
    for (std::size_t i = 1; i < n; ++i) L.gram[i][i] = -1;
    std::vector<std::int64_t> k(n, 1);
    k[0] = -3;
    L.canonical = DivisorClass(std::move(k));
    return L;
}

/// X_{m,1} (the Hirzebruch surface): basis (S, H) with S^2 = -m, S.H = 1, H^2 = 0,
/// K = -2S - (m+2)H. The sign convention S^2 = -m is forced by K together with
/// adjunction on the section; the opposite convention S^2 = +m is also common
/// elsewhere, so it is fixed here once and for all.
inline SurfaceLattice hirzebruch_lattice(std::int64_t m) {
    if (m < 0) throw validation_error("Hirzebruch parameter m must be >= 0");
    SurfaceLattice L;
    L.basis_labels = {"S", "H"};
    L.gram = {{-m, 1}, {1, 0}};
    L.canonical = DivisorClass({-2, -(m + 2)});
    return L;
}

/// D1 . D2 with respect to the lattice pairing.
inline std::int64_t intersect(const SurfaceLattice& L, const DivisorClass& d1,
                              const DivisorClass& d2) {
    if (d1.rank() != L.rank() || d2.rank() != L.rank())
        throw structural_error("divisor class rank does not match lattice rank");
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < L.rank(); ++i) {
        if (d1.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < L.rank(); ++j) {
            if (L.gram[i][j] == 0 || d2.coeffs[j] == 0) continue;
            acc = checked_add(acc, checked_mul(d1.coeffs[i], checked_mul(L.gram[i][j], d2.coeffs[j])));
        }
    }
    return acc;
}

/// Riemann-Roch on a smooth proper rational surface: chi(D) = 1 + (D.D - D.K)/2.
/// The division is exact; a parity violation means the lattice is malformed.
inline std::int64_t euler_char_surface(const SurfaceLattice& L, const DivisorClass& d) {
    const std::int64_t dd = intersect(L, d, d);
    const std::int64_t dk = intersect(L, d, L.canonical);
    const std::int64_t num = checked_sub(dd, dk);
    if (num % 2 != 0)
        throw integrity_error("Riemann-Roch parity violation: D.D - D.K is odd");
    return checked_add(1, num / 2);
}

/// K - D.
inline DivisorClass serre_dual_class(const SurfaceLattice& L, const DivisorClass& d) {
    return L.canonical - d;
}

} // namespace gentime
