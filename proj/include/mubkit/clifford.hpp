#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "mubkit/linalg.hpp"
#include "mubkit/weyl_heisenberg.hpp"

namespace mubkit {

// ---------------------------------------------------------------------------
// Symplectic indices.
// ---------------------------------------------------------------------------

/// 2x2 matrix over Z_N with determinant 1; the index of a Clifford unitary.
class SymplecticMatrix {
public:
    SymplecticMatrix(Residue a, Residue b, Residue c, Residue d)
        : alpha_(a), beta_(b), gamma_(c), delta_(d) {
        if (a.modulus() != b.modulus() || a.modulus() != c.modulus() ||
            a.modulus() != d.modulus()) {
            throw ModulusMismatch("SymplecticMatrix: mixed moduli");
        }
        if ((alpha_ * delta_ - beta_ * gamma_).value() != 1) {
            throw NotSymplectic("SymplecticMatrix: determinant is not 1 mod N");
        }
    }
    SymplecticMatrix(i64 a, i64 b, i64 c, i64 d, i64 n)
        : SymplecticMatrix(Residue(a, n), Residue(b, n), Residue(c, n), Residue(d, n)) {}

    static SymplecticMatrix identity(i64 n) { return {1, 0, 0, 1, n}; }
    /// F = [[0,-1],[1,0]], the Fourier index.
    static SymplecticMatrix fourier(i64 n) { return {0, -1, 1, 0, n}; }
    /// S = [[1,0],[1,1]], the shear whose unitary is the quadratic diagonal.
    static SymplecticMatrix shear(i64 n) { return {1, 0, 1, 1, n}; }
    /// A = -identity, the phase-point (parity) index.
    static SymplecticMatrix parity(i64 n) { return {-1, 0, 0, -1, n}; }

    const Residue& alpha() const { return alpha_; }
    const Residue& beta() const { return beta_; }
    const Residue& gamma() const { return gamma_; }
    const Residue& delta() const { return delta_; }
    i64 modulus() const { return alpha_.modulus(); }

    SymplecticMatrix operator*(const SymplecticMatrix& o) const {
        return SymplecticMatrix(alpha_ * o.alpha_ + beta_ * o.gamma_,
                                alpha_ * o.beta_ + beta_ * o.delta_,
                                gamma_ * o.alpha_ + delta_ * o.gamma_,
                                gamma_ * o.beta_ + delta_ * o.delta_);
    }

    SymplecticMatrix inverse() const {
        return SymplecticMatrix(delta_, -beta_, -gamma_, alpha_);
    }

    SymplecticMatrix pow(i64 e) const {
        SymplecticMatrix acc = identity(modulus());
        for (i64 k = 0; k < e; ++k) acc = acc * (*this);
        return acc;
    }

    DisplacementIndex apply(const DisplacementIndex& p) const {
        if (p.modulus() != modulus()) throw ModulusMismatch("SymplecticMatrix::apply");
        return DisplacementIndex(alpha_ * p.p1 + beta_ * p.p2, gamma_ * p.p1 + delta_ * p.p2);
    }

    bool is_identity() const {
        return alpha_.value() == 1 && beta_.value() == 0 && gamma_.value() == 0 &&
               delta_.value() == 1;
    }

    bool operator==(const SymplecticMatrix& o) const {
        return alpha_ == o.alpha_ && beta_ == o.beta_ && gamma_ == o.gamma_ && delta_ == o.delta_;
    }

    std::array<i64, 4> key() const {
        return {alpha_.value(), beta_.value(), gamma_.value(), delta_.value()};
    }

private:
    Residue alpha_, beta_, gamma_, delta_;
};

/// Smallest m >= 1 with g^m = identity.
inline i64 symplectic_order(const SymplecticMatrix& g) {
    SymplecticMatrix acc = g;
    i64 m = 1;
    const i64 n = g.modulus();
    const i64 cap = n * (n * n - 1) + 1;
    while (!acc.is_identity()) {
        acc = acc * g;
        ++m;
        if (m > cap) throw Error("symplectic_order: exceeded group order cap");
    }
    return m;
}

/// All of SL(2, Z_N), in lexicographic (alpha, beta, gamma, delta) order.
inline std::vector<SymplecticMatrix> sl2_elements(i64 n) {
    std::vector<SymplecticMatrix> out;
    out.reserve(static_cast<std::size_t>(n * (n * n - 1)));
    for (i64 a = 0; a < n; ++a)
        for (i64 b = 0; b < n; ++b)
            for (i64 c = 0; c < n; ++c)
                for (i64 d = 0; d < n; ++d)
                    if (Residue::reduce(a * d - b * c, n) == 1)
                        out.emplace_back(a, b, c, d, n);
    return out;
}

// ---------------------------------------------------------------------------
// Metaplectic representation.
// ---------------------------------------------------------------------------

/// Unitary representative of a symplectic index in odd prime dimension, with
/// matrix element (u,v) proportional to tau^{beta^{-1}(delta u^2 - 2uv + alpha v^2)}.
/// When beta is not invertible the fixed factorisation g = (g F) F^{-1} is
/// used; for prime N both factors then have invertible upper-right entries.
inline CMatrix symplectic_unitary(const SymplecticMatrix& g) {
    const i64 n = g.modulus();
    if (n == 2) throw DomainError("symplectic_unitary: defined here for odd prime N only");
    if (g.beta().is_zero()) {
        const SymplecticMatrix f = SymplecticMatrix::fourier(n);
        return symplectic_unitary(g * f) * symplectic_unitary(f.inverse());
    }
    const i64 binv = inverse(g.beta()).value();
    const i64 al = g.alpha().value(), de = g.delta().value();
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    CMatrix u(static_cast<std::size_t>(n));
    for (i64 r = 0; r < n; ++r) {
        for (i64 c = 0; c < n; ++c) {
            const i64 e = Residue::reduce(binv * (de * r * r - 2 * r * c + al * c * c), n);
            u(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = tau_power(n, e) * scale;
        }
    }
    return u;
}

/// A unitary rescaled so that matrix^order = 1 exactly (up to rounding) and
/// no smaller positive power is proportional to the identity.
struct NormalizedUnitary {
    CMatrix matrix;
    i64 order = 1;
};

/// Rescale U by a root of unity so that U^m = 1. Requires U^m to already be a
/// scalar within tolerance.
inline NormalizedUnitary normalize_to_order(const CMatrix& u, i64 m,
                                            const Tolerance& tol = Tolerance()) {
    const CMatrix um = u.pow(static_cast<std::size_t>(m));
    const Complex lambda = um(0, 0);
    if (std::abs(std::abs(lambda) - 1.0) > tol.eps ||
        max_abs_diff(um, CMatrix::identity(u.dim()) * lambda) > tol.eps) {
        throw NotOrderM("normalize_to_order: U^m is not a unimodular scalar");
    }
    const double theta = std::arg(lambda);
    const Complex zeta = std::polar(1.0, -theta / static_cast<double>(m));
    return {u * zeta, m};
}

/// The permutation |a> -> |-a mod N>, i.e. the unitary of the symplectic
/// index -1. Order 2, eigenspace dimensions (N+1)/2 and (N-1)/2.
inline NormalizedUnitary parity_unitary(i64 n) {
    if (!is_prime(n) || n == 2) throw DomainError("parity_unitary: N must be an odd prime");
    CMatrix p(static_cast<std::size_t>(n));
    for (i64 a = 0; a < n; ++a) {
        p(static_cast<std::size_t>(Residue::reduce(-a, n)), static_cast<std::size_t>(a)) = 1.0;
    }
    return {p, 2};
}

// ---------------------------------------------------------------------------
// Projective Clifford elements (g, p), materialised as D_p U_g on demand.
// ---------------------------------------------------------------------------

struct CliffordElement {
    SymplecticMatrix g;
    DisplacementIndex p;

    CliffordElement(SymplecticMatrix gg, DisplacementIndex pp) : g(std::move(gg)), p(std::move(pp)) {
        if (g.modulus() != p.modulus()) throw ModulusMismatch("CliffordElement: mixed moduli");
    }

    static CliffordElement identity(i64 n) {
        return {SymplecticMatrix::identity(n), DisplacementIndex(0, 0, n)};
    }

    i64 modulus() const { return g.modulus(); }

    bool is_identity() const { return g.is_identity() && p.p1.is_zero() && p.p2.is_zero(); }

    bool operator==(const CliffordElement& o) const { return g == o.g && p == o.p; }

    std::array<i64, 6> key() const {
        const auto gk = g.key();
        return {gk[0], gk[1], gk[2], gk[3], p.p1.value(), p.p2.value()};
    }

    /// D_p U_g as a concrete matrix (phase per the theta = 0 convention).
    CMatrix matrix() const { return displacement(p) * symplectic_unitary(g); }
};

/// Projective semidirect-product law: (g1,p1)(g2,p2) = (g1 g2, p1 + g1 p2).
inline CliffordElement compose(const CliffordElement& c1, const CliffordElement& c2) {
    if (c1.modulus() != c2.modulus()) throw ModulusMismatch("compose: mixed moduli");
    const DisplacementIndex shifted = c1.g.apply(c2.p);
    return {c1.g * c2.g, DisplacementIndex(c1.p.p1 + shifted.p1, c1.p.p2 + shifted.p2)};
}

/// Smallest m >= 1 with c^m projectively the identity; computed symbolically.
inline i64 element_order(const CliffordElement& c) {
    CliffordElement acc = c;
    i64 m = 1;
    const i64 n = c.modulus();
    const i64 cap = n * n * n * (n * n - 1) + 1;
    while (!acc.is_identity()) {
        acc = compose(acc, c);
        ++m;
        if (m > cap) throw Error("element_order: exceeded group order cap");
    }
    return m;
}

/// True when c equals D_q U_g D_q^{-1} for some q, i.e. when its displacement
/// part lies in the image of (1 - g) on Z_N^2. Not defined for g = identity
/// (those elements belong to the WH group itself).
inline bool is_wh_translate(const CliffordElement& c) {
    if (c.g.is_identity()) {
        throw DomainError("is_wh_translate: element lies in the WH group");
    }
    const i64 n = c.modulus();
    const i64 m00 = Residue::reduce(1 - c.g.alpha().value(), n);
    const i64 m01 = Residue::reduce(-c.g.beta().value(), n);
    const i64 m10 = Residue::reduce(-c.g.gamma().value(), n);
    const i64 m11 = Residue::reduce(1 - c.g.delta().value(), n);
    const i64 det = Residue::reduce(m00 * m11 - m01 * m10, n);
    if (det != 0) return true;
    // Rank <= 1: the image is spanned by any nonzero column.
    i64 c0 = m00, c1 = m10;
    if (c0 == 0 && c1 == 0) {
        c0 = m01;
        c1 = m11;
    }
    const i64 p1 = c.p.p1.value(), p2 = c.p.p2.value();
    if (c0 == 0 && c1 == 0) return p1 == 0 && p2 == 0;
    return Residue::reduce(p1 * c1 - p2 * c0, n) == 0;
}

// ---------------------------------------------------------------------------
// Exhaustive subgroup enumeration.
// ---------------------------------------------------------------------------

struct SymplecticSubgroup {
    /// The N-1 nonidentity elements, sorted by lexicographic key.
    std::vector<SymplecticMatrix> nonidentity;

    const SymplecticMatrix& generator() const { return nonidentity.front(); }
};

/// The N+1 cyclic order-N subgroups of SL(2, Z_N), by exhaustive scan.
inline std::vector<SymplecticSubgroup> enumerate_order_n_symplectic_subgroups(i64 n) {
    std::map<std::vector<std::array<i64, 4>>, SymplecticSubgroup> seen;
    for (const auto& g : sl2_elements(n)) {
        if (g.is_identity() || symplectic_order(g) != n) continue;
        std::vector<SymplecticMatrix> elems;
        SymplecticMatrix acc = g;
        while (!acc.is_identity()) {
            elems.push_back(acc);
            acc = acc * g;
        }
        std::sort(elems.begin(), elems.end(),
                  [](const SymplecticMatrix& a, const SymplecticMatrix& b) { return a.key() < b.key(); });
        std::vector<std::array<i64, 4>> key;
        key.reserve(elems.size());
        for (const auto& e : elems) key.push_back(e.key());
        seen.emplace(std::move(key), SymplecticSubgroup{std::move(elems)});
    }
    std::vector<SymplecticSubgroup> out;
    out.reserve(seen.size());
    for (auto& [k, v] : seen) out.push_back(std::move(v));
    return out;
}

struct CliffordSubgroup {
    /// Nonidentity elements sorted by key; all share the same translate status.
    std::vector<CliffordElement> nonidentity;
    bool translate = false;

    const CliffordElement& generator() const { return nonidentity.front(); }
};

struct CliffordSubgroupCensus {
    i64 dimension = 0;
    i64 sl2_order = 0;
    i64 order_n_elements = 0; // elements with nontrivial symplectic part
    i64 translate_elements = 0;
    std::vector<CliffordSubgroup> translate_subgroups;
    std::vector<CliffordSubgroup> non_translate_subgroups;
};

/// Enumerate every order-N cyclic subgroup of the projective Clifford group
/// whose elements have nontrivial symplectic part, split into WH translates
/// and non-translates. Exhaustive; guarded by a dimension cap.
inline CliffordSubgroupCensus enumerate_order_n_clifford_subgroups(i64 n, i64 cap = 7) {
    if (n > cap) {
        throw DimensionTooLarge("enumerate_order_n_clifford_subgroups: dimension " +
                                std::to_string(n) + " above cap " + std::to_string(cap));
    }
    CliffordSubgroupCensus census;
    census.dimension = n;
    std::vector<SymplecticMatrix> order_n_sympl;
    for (const auto& g : sl2_elements(n)) {
        ++census.sl2_order;
        if (!g.is_identity() && symplectic_order(g) == n) order_n_sympl.push_back(g);
    }
    std::map<std::vector<std::array<i64, 6>>, CliffordSubgroup> seen;
    for (const auto& g : order_n_sympl) {
        for (i64 p1 = 0; p1 < n; ++p1) {
            for (i64 p2 = 0; p2 < n; ++p2) {
                const CliffordElement c(g, DisplacementIndex(p1, p2, n));
                ++census.order_n_elements;
                if (is_wh_translate(c)) ++census.translate_elements;
                std::vector<CliffordElement> elems;
                CliffordElement acc = c;
                while (!acc.is_identity()) {
                    elems.push_back(acc);
                    acc = compose(acc, c);
                }
                std::sort(elems.begin(), elems.end(), [](const CliffordElement& a, const CliffordElement& b) {
                    return a.key() < b.key();
                });
                std::vector<std::array<i64, 6>> key;
                key.reserve(elems.size());
                for (const auto& e : elems) key.push_back(e.key());
                if (seen.contains(key)) continue;
                CliffordSubgroup sub{std::move(elems), false};
                sub.translate = is_wh_translate(sub.generator());
                seen.emplace(std::move(key), std::move(sub));
            }
        }
    }
    for (auto& [k, sub] : seen) {
        (sub.translate ? census.translate_subgroups : census.non_translate_subgroups)
            .push_back(std::move(sub));
    }
    return census;
}

/// The N+1 lines of Z_N^2 through the origin, each listing its N-1 nonzero
/// points. These index the maximal abelian WH subgroups whose joint
/// eigenbases form the standard complete MUB.
inline std::vector<std::vector<DisplacementIndex>> wh_line_subgroups(i64 n) {
    std::vector<std::vector<DisplacementIndex>> lines;
    auto line_through = [&](i64 a, i64 b) {
        std::vector<DisplacementIndex> pts;
        for (i64 k = 1; k < n; ++k) pts.emplace_back(k * a, k * b, n);
        return pts;
    };
    lines.push_back(line_through(0, 1));
    for (i64 t = 0; t < n; ++t) lines.push_back(line_through(1, t));
    return lines;
}

} // namespace mubkit
