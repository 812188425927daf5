#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "mubkit/errors.hpp"
#include "mubkit/residue.hpp"

namespace mubkit {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

/// Numerical tolerance for verifiers. Everything in this library is an exact
/// algebraic number evaluated in double precision, so deviations should sit
/// near machine epsilon; the default leaves three orders of headroom.
struct Tolerance {
    double eps = 1e-9;

    Tolerance() = default;
    explicit Tolerance(double e) : eps(e) {
        if (!(e > 0.0 && e < 1e-3)) {
            throw DomainError("Tolerance: eps must lie in (0, 1e-3)");
        }
    }
};

/// e^{2*pi*i * num/den}, with the rational exponent reduced mod 1 first.
/// Roots of unity are never built by repeated multiplication.
inline Complex root_of_unity(i64 num, i64 den) {
    num = Residue::reduce(num, den);
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(num) /
                         static_cast<double>(den);
    return Complex(std::cos(angle), std::sin(angle));
}

// ---------------------------------------------------------------------------
// Dense square complex matrix with value semantics.
// ---------------------------------------------------------------------------

class CMatrix {
public:
    CMatrix() : n_(0) {}
    explicit CMatrix(std::size_t n) : n_(n), a_(n * n, Complex(0, 0)) {}

    static CMatrix identity(std::size_t n) {
        CMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static CMatrix diagonal(const CVector& d) {
        CMatrix m(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t dim() const { return n_; }

    Complex& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

    CMatrix operator*(const CMatrix& o) const {
        require_same(o);
        CMatrix out(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t k = 0; k < n_; ++k) {
                const Complex aik = (*this)(i, k);
                if (aik == Complex(0, 0)) continue;
                for (std::size_t j = 0; j < n_; ++j) {
                    out(i, j) += aik * o(k, j);
                }
            }
        }
        return out;
    }

    CVector operator*(const CVector& v) const {
        if (v.size() != n_) throw DimensionMismatch("CMatrix * CVector size mismatch");
        CVector out(n_, Complex(0, 0));
        for (std::size_t i = 0; i < n_; ++i) {
            Complex s(0, 0);
            for (std::size_t j = 0; j < n_; ++j) s += (*this)(i, j) * v[j];
            out[i] = s;
        }
        return out;
    }

    CMatrix operator*(Complex s) const {
        CMatrix out = *this;
        for (auto& x : out.a_) x *= s;
        return out;
    }

    CMatrix operator+(const CMatrix& o) const {
        require_same(o);
        CMatrix out = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
        return out;
    }

    CMatrix operator-(const CMatrix& o) const {
        require_same(o);
        CMatrix out = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] -= o.a_[i];
        return out;
    }

    CMatrix adjoint() const {
        CMatrix out(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) out(j, i) = std::conj((*this)(i, j));
        return out;
    }

    CMatrix pow(std::size_t e) const {
        CMatrix out = identity(n_);
        for (std::size_t k = 0; k < e; ++k) out = out * (*this);
        return out;
    }

    Complex trace() const {
        Complex t(0, 0);
        for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

    std::size_t size() const { return a_.size(); }
    const Complex* data() const { return a_.data(); }

    double max_abs() const {
        double m = 0;
        for (const auto& x : a_) m = std::max(m, std::abs(x));
        return m;
    }

private:
    void require_same(const CMatrix& o) const {
        if (n_ != o.n_) throw DimensionMismatch("CMatrix dimension mismatch");
    }

    std::size_t n_;
    std::vector<Complex> a_;
};

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
    const std::size_t na = a.dim(), nb = b.dim();
    CMatrix out(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l)
                    out(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
    return out;
}

/// Entrywise sup-norm of A - B.
inline double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("max_abs_diff dimension mismatch");
    double m = 0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

/// <v|w>, conjugate-linear in the first argument.
inline Complex inner(const CVector& v, const CVector& w) {
    if (v.size() != w.size()) throw DimensionMismatch("inner: length mismatch");
    Complex s(0, 0);
    for (std::size_t i = 0; i < v.size(); ++i) s += std::conj(v[i]) * w[i];
    return s;
}

inline double norm(const CVector& v) { return std::sqrt(std::abs(inner(v, v))); }

inline CVector normalized(const CVector& v) {
    const double nrm = norm(v);
    if (nrm == 0) throw NotUnit("normalized: zero vector");
    CVector out = v;
    for (auto& x : out) x /= nrm;
    return out;
}

inline CVector scaled(const CVector& v, Complex s) {
    CVector out = v;
    for (auto& x : out) x *= s;
    return out;
}

inline double max_abs_diff(const CVector& a, const CVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("max_abs_diff length mismatch");
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

/// Deviation of U from unitarity: max |(U^dag U - 1)_{ij}|.
inline double unitarity_deviation(const CMatrix& u) {
    return max_abs_diff(u.adjoint() * u, CMatrix::identity(u.dim()));
}

/// Tests A == phase * B for some unimodular phase. If so, optionally reports
/// the phase through *phase_out.
inline bool proportional(const CMatrix& a, const CMatrix& b, const Tolerance& tol = Tolerance(),
                         Complex* phase_out = nullptr) {
    if (a.dim() != b.dim()) throw DimensionMismatch("proportional: dimension mismatch");
    std::size_t pi = 0, pj = 0;
    double best = 0;
    for (std::size_t i = 0; i < b.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) {
            if (std::abs(b(i, j)) > best) {
                best = std::abs(b(i, j));
                pi = i;
                pj = j;
            }
        }
    }
    if (best < tol.eps) return a.max_abs() < tol.eps;
    const Complex phase = a(pi, pj) / b(pi, pj);
    if (std::abs(std::abs(phase) - 1.0) > tol.eps) return false;
    if (max_abs_diff(a, b * phase) > tol.eps) return false;
    if (phase_out) *phase_out = phase;
    return true;
}

// ---------------------------------------------------------------------------
// Spectral decomposition of finite-order unitaries via group averaging.
// ---------------------------------------------------------------------------

/// Projectors P_k = (1/m) sum_j w^{-jk} U^j for a unitary with U^m = 1.
/// Avoids a general eigensolver: every operator diagonalised in this library
/// has known finite order.
inline std::vector<CMatrix> cyclic_eigenprojectors(const CMatrix& u, std::size_t m,
                                                   const Tolerance& tol = Tolerance()) {
    if (m == 0) throw DomainError("cyclic_eigenprojectors: m must be positive");
    std::vector<CMatrix> powers;
    powers.reserve(m);
    powers.push_back(CMatrix::identity(u.dim()));
    for (std::size_t j = 1; j < m; ++j) powers.push_back(powers.back() * u);
    const CMatrix um = powers.back() * u;
    if (max_abs_diff(um, CMatrix::identity(u.dim())) > tol.eps) {
        throw NotOrderM("cyclic_eigenprojectors: U^m differs from identity");
    }
    std::vector<CMatrix> projs;
    projs.reserve(m);
    for (std::size_t k = 0; k < m; ++k) {
        CMatrix p(u.dim());
        for (std::size_t j = 0; j < m; ++j) {
            p = p + powers[j] * (root_of_unity(-static_cast<i64>(j * k), static_cast<i64>(m)) /
                                 static_cast<double>(m));
        }
        projs.push_back(p);
    }
    return projs;
}

/// Orthonormal spanning set for the image of a Hermitian idempotent, by
/// column-pivoted Gram-Schmidt. The number of vectors equals round(tr P).
inline std::vector<CVector> orthonormal_from_projector(const CMatrix& p,
                                                       const Tolerance& tol = Tolerance()) {
    const std::size_t n = p.dim();
    if (max_abs_diff(p, p.adjoint()) > tol.eps || max_abs_diff(p * p, p) > tol.eps) {
        throw NotProjector("orthonormal_from_projector: matrix is not a Hermitian idempotent");
    }
    const double tr = p.trace().real();
    const auto rank = static_cast<std::size_t>(std::llround(tr));
    if (std::abs(tr - static_cast<double>(rank)) > tol.eps * static_cast<double>(n)) {
        throw NotProjector("orthonormal_from_projector: trace is not close to an integer");
    }
    std::vector<CVector> cols(n, CVector(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) cols[j][i] = p(i, j);
    std::vector<CVector> out;
    for (std::size_t step = 0; step < rank; ++step) {
        std::size_t best = 0;
        double best_norm = -1;
        for (std::size_t j = 0; j < n; ++j) {
            const double nj = norm(cols[j]);
            if (nj > best_norm) {
                best_norm = nj;
                best = j;
            }
        }
        if (best_norm < tol.eps) {
            throw NotProjector("orthonormal_from_projector: rank deficient image");
        }
        CVector q = normalized(cols[best]);
        for (auto& c : cols) {
            const Complex overlap = inner(q, c);
            for (std::size_t i = 0; i < n; ++i) c[i] -= overlap * q[i];
        }
        out.push_back(std::move(q));
    }
    return out;
}

/// Numerical rank of a set of vectors by row reduction with pivoting by
/// magnitude; pivots below tol.eps count as zero.
inline std::size_t rank(std::vector<CVector> rows, const Tolerance& tol = Tolerance()) {
    if (rows.empty()) throw DomainError("rank: empty vector list");
    const std::size_t ncols = rows[0].size();
    for (const auto& r : rows) {
        if (r.size() != ncols) throw DimensionMismatch("rank: ragged vector list");
    }
    std::size_t rk = 0;
    std::size_t col = 0;
    while (rk < rows.size() && col < ncols) {
        std::size_t best = rk;
        double best_abs = std::abs(rows[rk][col]);
        for (std::size_t r = rk + 1; r < rows.size(); ++r) {
            if (std::abs(rows[r][col]) > best_abs) {
                best_abs = std::abs(rows[r][col]);
                best = r;
            }
        }
        if (best_abs <= tol.eps) {
            ++col;
            continue;
        }
        std::swap(rows[rk], rows[best]);
        const Complex pivot = rows[rk][col];
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rk) continue;
            const Complex f = rows[r][col] / pivot;
            if (f == Complex(0, 0)) continue;
            for (std::size_t c = col; c < ncols; ++c) rows[r][c] -= f * rows[rk][c];
        }
        ++rk;
        ++col;
    }
    return rk;
}

// ---------------------------------------------------------------------------
// Projective comparisons.
// ---------------------------------------------------------------------------

inline void require_unit(const CVector& v, const Tolerance& tol = Tolerance()) {
    if (std::abs(norm(v) - 1.0) > tol.eps) throw NotUnit("expected a unit vector");
}

/// True when v and w span the same ray: | |<v|w>| - 1 | < eps.
inline bool equal_up_to_phase(const CVector& v, const CVector& w,
                              const Tolerance& tol = Tolerance()) {
    require_unit(v, tol);
    require_unit(w, tol);
    return std::abs(std::abs(inner(v, w)) - 1.0) < tol.eps;
}

/// True when the matrix of squared overlaps |<v_i|w_j>|^2 is a permutation
/// matrix within tolerance, i.e. the two orthonormal lists agree up to
/// reordering and per-vector phases.
inline bool sets_equal_up_to_phase_perm(const std::vector<CVector>& v,
                                        const std::vector<CVector>& w,
                                        const Tolerance& tol = Tolerance()) {
    if (v.size() != w.size()) return false;
    if (!v.empty() && v[0].size() != w[0].size()) {
        throw DimensionMismatch("sets_equal_up_to_phase_perm: ambient dimension mismatch");
    }
    const std::size_t n = v.size();
    std::vector<bool> used(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        bool matched = false;
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j]) continue;
            const double ov = std::norm(inner(v[i], w[j]));
            if (std::abs(ov - 1.0) < tol.eps) {
                used[j] = true;
                matched = true;
                break;
            }
        }
        if (!matched) return false;
    }
    return true;
}

/// Rephase/permutation-invariant fingerprint of a vector list: the sorted
/// squared overlaps against two fixed probe directions. Used as a cheap
/// pre-check before exact projective matching.
inline std::vector<double> set_fingerprint(const std::vector<CVector>& vs) {
    if (vs.empty()) return {};
    const std::size_t n = vs[0].size();
    CVector probe(n);
    double nrm = 0;
    for (std::size_t i = 0; i < n; ++i) {
        probe[i] = Complex(static_cast<double>(i + 1), static_cast<double>((i * i + 3) % 7) * 0.25);
        nrm += std::norm(probe[i]);
    }
    nrm = std::sqrt(nrm);
    for (auto& x : probe) x /= nrm;
    std::vector<double> a, b;
    a.reserve(vs.size());
    b.reserve(vs.size());
    for (const auto& v : vs) {
        a.push_back(std::norm(v[0]));
        b.push_back(std::norm(inner(probe, v)));
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

inline double fingerprint_distance(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return 1e30;
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

} // namespace mubkit
