#pragma once

#include <utility>
#include <vector>

#include "mubkit/linalg.hpp"
#include "mubkit/residue.hpp"

namespace mubkit {

// Phase conventions. omega is the primitive N-th root, tau = -e^{i*pi/N} the
// 2N-th root used inside displacement operators, sigma the ninth root used by
// the dimension-3 cubic construction, mu the eighth root used in dimension 2.
inline Complex omega(i64 n) { return root_of_unity(1, n); }
inline Complex omega_power(i64 n, i64 e) { return root_of_unity(e, n); }
inline Complex tau(i64 n) { return root_of_unity(n + 1, 2 * n); }
inline Complex tau_power(i64 n, i64 e) { return root_of_unity(Residue::reduce(e, 2 * n) * (n + 1), 2 * n); }
inline Complex sigma_power(i64 e) { return root_of_unity(e, 9); }
inline Complex mu_power(i64 e) { return root_of_unity(e, 8); }

/// Cyclic shift: X|a> = |a+1>.
inline CMatrix x_matrix(i64 n) {
    CMatrix x(static_cast<std::size_t>(n));
    for (i64 a = 0; a < n; ++a) x(static_cast<std::size_t>((a + 1) % n), static_cast<std::size_t>(a)) = 1.0;
    return x;
}

/// Clock: Z|a> = omega^a |a>.
inline CMatrix z_matrix(i64 n) {
    CMatrix z(static_cast<std::size_t>(n));
    for (i64 a = 0; a < n; ++a) z(static_cast<std::size_t>(a), static_cast<std::size_t>(a)) = omega_power(n, a);
    return z;
}

/// Label (p1, p2) in Z_N x Z_N of a displacement operator.
struct DisplacementIndex {
    Residue p1;
    Residue p2;

    DisplacementIndex(Residue a, Residue b) : p1(std::move(a)), p2(std::move(b)) {
        if (p1.modulus() != p2.modulus()) {
            throw ModulusMismatch("DisplacementIndex: mixed moduli");
        }
    }
    DisplacementIndex(i64 a, i64 b, i64 n) : p1(a, n), p2(b, n) {}

    i64 modulus() const { return p1.modulus(); }

    bool operator==(const DisplacementIndex& o) const { return p1 == o.p1 && p2 == o.p2; }
};

/// D_p = tau^{p1 p2} X^{p1} Z^{p2}.
inline CMatrix displacement(const DisplacementIndex& p) {
    const i64 n = p.modulus();
    const i64 p1 = p.p1.value(), p2 = p.p2.value();
    const Complex front = tau_power(n, p1 * p2);
    CMatrix d(static_cast<std::size_t>(n));
    for (i64 v = 0; v < n; ++v) {
        const i64 u = (v + p1) % n;
        d(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) = front * omega_power(n, v * p2);
    }
    return d;
}

// ---------------------------------------------------------------------------
// Extraspecial tensor-product group for dimensions 2^n (used at N = 2, 4 and
// by the dimension-8 fiducial search). Elements are tensor products of the
// 2x2 factors {1, X, Z, XZ}; phases are handled projectively.
// ---------------------------------------------------------------------------

struct ExtraspecialElement {
    std::vector<std::pair<int, int>> label; // per-factor (x power, z power)
    CMatrix matrix;
};

inline std::vector<ExtraspecialElement> extraspecial_group(int n_factors) {
    if (n_factors < 1 || n_factors > 3) {
        throw DomainError("extraspecial_group: supported factor counts are 1..3");
    }
    const CMatrix x2 = x_matrix(2), z2 = z_matrix(2);
    // Indexed by 2a + b for the factor X^a Z^b.
    const CMatrix factors[4] = {CMatrix::identity(2), z2, x2, x2 * z2};
    std::vector<ExtraspecialElement> out;
    const int total = 1 << (2 * n_factors);
    out.reserve(static_cast<std::size_t>(total));
    for (int code = 0; code < total; ++code) {
        std::vector<std::pair<int, int>> label;
        int c = code;
        CMatrix m;
        for (int f = 0; f < n_factors; ++f) {
            const int a = (c >> 1) & 1, b = c & 1;
            c >>= 2;
            label.emplace_back(a, b);
            const CMatrix& fac = factors[2 * a + b];
            m = (f == 0) ? fac : kron(m, fac);
        }
        out.push_back({std::move(label), std::move(m)});
    }
    return out;
}

namespace detail {

/// Partition a list of unit vectors into groups of pairwise orthogonal
/// vectors of size group_size, greedily in input order.
inline std::vector<std::vector<CVector>> group_by_orthogonality(const std::vector<CVector>& vecs,
                                                                std::size_t group_size,
                                                                const Tolerance& tol) {
    std::vector<std::vector<CVector>> groups;
    for (const auto& v : vecs) {
        bool placed = false;
        for (auto& g : groups) {
            if (g.size() >= group_size) continue;
            bool ok = true;
            for (const auto& w : g) {
                if (std::abs(inner(w, v)) > tol.eps) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                g.push_back(v);
                placed = true;
                break;
            }
        }
        if (!placed) groups.emplace_back(1, v);
    }
    for (const auto& g : groups) {
        if (g.size() != group_size) {
            throw Error("group_by_orthogonality: orbit does not split into full orthonormal sets");
        }
    }
    return groups;
}

} // namespace detail

/// The orbit of a unit fiducial under the group, collected into N candidate
/// bases. For prime N, basis b holds the vectors D_{(b,j)} f, j = 0..N-1:
/// Z moves vectors within a basis and X moves vectors between bases. For
/// N = 4 the extraspecial orbit is regrouped empirically by orthogonality.
inline std::vector<std::vector<CVector>> wh_orbit_bases(const CVector& fiducial,
                                                        const Tolerance& tol = Tolerance()) {
    require_unit(fiducial, tol);
    const auto n = static_cast<i64>(fiducial.size());
    if (n == 4) {
        std::vector<CVector> orbit;
        for (const auto& g : extraspecial_group(2)) orbit.push_back(normalized(g.matrix * fiducial));
        return detail::group_by_orthogonality(orbit, 4, tol);
    }
    if (!is_prime(n)) throw DomainError("wh_orbit_bases: dimension must be prime or 4");
    std::vector<std::vector<CVector>> bases;
    bases.reserve(static_cast<std::size_t>(n));
    for (i64 b = 0; b < n; ++b) {
        std::vector<CVector> basis;
        basis.reserve(static_cast<std::size_t>(n));
        for (i64 j = 0; j < n; ++j) {
            basis.push_back(normalized(displacement(DisplacementIndex(b, j, n)) * fiducial));
        }
        bases.push_back(std::move(basis));
    }
    return bases;
}

} // namespace mubkit
