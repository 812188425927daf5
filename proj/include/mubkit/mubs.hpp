#pragma once

#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

#include "mubkit/clifford.hpp"
#include "mubkit/linalg.hpp"
#include "mubkit/weyl_heisenberg.hpp"

namespace mubkit {

// ---------------------------------------------------------------------------
// Bases and complete MUB families.
// ---------------------------------------------------------------------------

struct Basis {
    std::vector<CVector> vectors;
    std::string label;

    std::size_t dim() const { return vectors.empty() ? 0 : vectors[0].size(); }
};

/// A set of N+1 candidate mutually unbiased bases. Canonical order: the basis
/// shared with the standard complete MUB comes first.
struct CompleteMub {
    std::vector<Basis> bases;
    std::string label;

    std::size_t dim() const { return bases.empty() ? 0 : bases[0].dim(); }
};

inline double orthonormality_deviation(const Basis& b) {
    double dev = 0;
    for (std::size_t i = 0; i < b.vectors.size(); ++i) {
        for (std::size_t j = 0; j < b.vectors.size(); ++j) {
            const Complex g = inner(b.vectors[i], b.vectors[j]);
            dev = std::max(dev, std::abs(g - (i == j ? Complex(1, 0) : Complex(0, 0))));
        }
    }
    return dev;
}

/// Max deviation of |<e_i|f_j>|^2 from 1/N over all N^2 vector pairs.
inline double mub_pair_deviation(const Basis& b1, const Basis& b2) {
    if (b1.dim() != b2.dim()) throw DimensionMismatch("mub_pair_deviation: dimension mismatch");
    const double target = 1.0 / static_cast<double>(b1.dim());
    double dev = 0;
    for (const auto& e : b1.vectors) {
        for (const auto& f : b2.vectors) {
            dev = std::max(dev, std::abs(std::norm(inner(e, f)) - target));
        }
    }
    return dev;
}

inline bool is_mub_pair(const Basis& b1, const Basis& b2, const Tolerance& tol = Tolerance()) {
    return mub_pair_deviation(b1, b2) < tol.eps;
}

/// Max deviation over all bases (orthonormality) and basis pairs (unbiasedness).
inline double complete_mub_deviation(const CompleteMub& m) {
    double dev = 0;
    for (const auto& b : m.bases) dev = std::max(dev, orthonormality_deviation(b));
    for (std::size_t i = 0; i < m.bases.size(); ++i) {
        for (std::size_t j = i + 1; j < m.bases.size(); ++j) {
            dev = std::max(dev, mub_pair_deviation(m.bases[i], m.bases[j]));
        }
    }
    return dev;
}

inline bool is_complete_mub(const CompleteMub& m, const Tolerance& tol = Tolerance()) {
    if (m.bases.size() != m.dim() + 1) return false;
    return complete_mub_deviation(m) < tol.eps;
}

inline bool bases_equal_up_to_phase_perm(const Basis& b1, const Basis& b2,
                                         const Tolerance& tol = Tolerance()) {
    if (b1.dim() != b2.dim()) throw DimensionMismatch("bases_equal_up_to_phase_perm");
    return sets_equal_up_to_phase_perm(b1.vectors, b2.vectors, tol);
}

/// Projective equality of complete MUBs: the two sets of bases match
/// bijectively under phase/permutation equivalence.
inline bool mubs_equal(const CompleteMub& m1, const CompleteMub& m2,
                       const Tolerance& tol = Tolerance()) {
    if (m1.bases.size() != m2.bases.size()) return false;
    std::vector<bool> used(m2.bases.size(), false);
    for (const auto& b : m1.bases) {
        bool matched = false;
        for (std::size_t j = 0; j < m2.bases.size(); ++j) {
            if (used[j]) continue;
            if (bases_equal_up_to_phase_perm(b, m2.bases[j], tol)) {
                used[j] = true;
                matched = true;
                break;
            }
        }
        if (!matched) return false;
    }
    return true;
}

/// Indices of bases the two families share (projectively).
inline std::vector<std::pair<std::size_t, std::size_t>> shared_bases(const CompleteMub& m1,
                                                                     const CompleteMub& m2,
                                                                     const Tolerance& tol = Tolerance()) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < m1.bases.size(); ++i) {
        for (std::size_t j = 0; j < m2.bases.size(); ++j) {
            if (bases_equal_up_to_phase_perm(m1.bases[i], m2.bases[j], tol)) out.emplace_back(i, j);
        }
    }
    return out;
}

inline CompleteMub apply_unitary(const CMatrix& u, const CompleteMub& m, const std::string& label) {
    CompleteMub out;
    out.label = label;
    out.bases.reserve(m.bases.size());
    for (const auto& b : m.bases) {
        Basis nb;
        nb.label = b.label;
        nb.vectors.reserve(b.vectors.size());
        for (const auto& v : b.vectors) nb.vectors.push_back(u * v);
        out.bases.push_back(std::move(nb));
    }
    return out;
}

inline std::vector<CVector> all_vectors(const CompleteMub& m) {
    std::vector<CVector> out;
    for (const auto& b : m.bases) out.insert(out.end(), b.vectors.begin(), b.vectors.end());
    return out;
}

/// Frame potential sum_{i,j} |<v_i|v_j>|^4 over all ordered pairs, diagonal
/// included. A 2-design on M unit vectors attains 2 M^2 / (N (N+1)).
inline double frame_potential(const std::vector<CVector>& vecs) {
    double sum = 0;
    for (const auto& v : vecs) {
        for (const auto& w : vecs) {
            const double ov = std::norm(inner(v, w));
            sum += ov * ov;
        }
    }
    return sum;
}

inline double welch_bound(std::size_t dim, std::size_t count) {
    const double m = static_cast<double>(count);
    const double n = static_cast<double>(dim);
    return 2.0 * m * m / (n * (n + 1.0));
}

// ---------------------------------------------------------------------------
// Standard complete MUB.
// ---------------------------------------------------------------------------

inline Basis computational_basis(i64 n) {
    Basis b;
    b.label = "computational[N=" + std::to_string(n) + "]";
    for (i64 k = 0; k < n; ++k) {
        CVector v(static_cast<std::size_t>(n), Complex(0, 0));
        v[static_cast<std::size_t>(k)] = 1.0;
        b.vectors.push_back(std::move(v));
    }
    return b;
}

inline Basis basis_from_columns(const CMatrix& u, const std::string& label) {
    Basis b;
    b.label = label;
    const std::size_t n = u.dim();
    for (std::size_t c = 0; c < n; ++c) {
        CVector v(n);
        for (std::size_t r = 0; r < n; ++r) v[r] = u(r, c);
        b.vectors.push_back(std::move(v));
    }
    return b;
}

/// diag(omega^{k m^2 / 2}), the k-th power of the shear unitary.
inline CMatrix shear_unitary_power(i64 n, i64 k) {
    const i64 inv2 = inverse(Residue(2, n)).value();
    CVector d(static_cast<std::size_t>(n));
    for (i64 m = 0; m < n; ++m) d[static_cast<std::size_t>(m)] = omega_power(n, k * inv2 * m * m);
    return CMatrix::diagonal(d);
}

/// The rotation that advances the non-computational bases of the standard
/// complete MUB: the shear diagonal for odd primes, diag(1, i) for N = 2.
inline CMatrix standard_rotation(i64 n) {
    if (n == 2) return CMatrix::diagonal({Complex(1, 0), Complex(0, 1)});
    return shear_unitary_power(n, 1);
}

inline CMatrix fourier_unitary(i64 n) {
    const double s = 1.0 / std::sqrt(static_cast<double>(n));
    CMatrix u(static_cast<std::size_t>(n));
    for (i64 r = 0; r < n; ++r)
        for (i64 c = 0; c < n; ++c)
            u(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = omega_power(n, r * c) * s;
    return u;
}

/// The standard complete MUB: computational basis, Fourier basis, and the
/// N-1 images of the Fourier basis under successive shear rotations.
inline CompleteMub standard_mub(i64 n) {
    if (!is_prime(n)) throw DomainError("standard_mub: N must be prime");
    CompleteMub m;
    m.label = "standard[N=" + std::to_string(n) + "]";
    m.bases.push_back(computational_basis(n));
    const CMatrix f = fourier_unitary(n);
    m.bases.push_back(basis_from_columns(f, "standard[N=" + std::to_string(n) + "]/k=1"));
    const CMatrix rot = standard_rotation(n);
    CMatrix acc = f;
    for (i64 k = 2; k <= n; ++k) {
        acc = rot * acc;
        m.bases.push_back(basis_from_columns(acc, "standard[N=" + std::to_string(n) + "]/k=" +
                                                      std::to_string(k)));
    }
    return m;
}

// ---------------------------------------------------------------------------
// Cubic-phase (Alltop) fiducials and their orbit complete MUBs.
// ---------------------------------------------------------------------------

/// The cubic-phase fiducial: components sigma^{a x^3}/sqrt(3) in dimension 3
/// and omega^{x a^3}/sqrt(N) for N > 3. Note the cube sits on x in the first
/// form and on a in the second.
inline CVector alltop_fiducial(i64 x, i64 n) {
    if (n == 2) throw DomainError("alltop_fiducial: no cubic fiducial in dimension 2");
    if (!is_prime(n)) throw DomainError("alltop_fiducial: N must be prime");
    if (x <= 0 || x >= n) throw DomainError("alltop_fiducial: x must lie in 1..N-1");
    const double s = 1.0 / std::sqrt(static_cast<double>(n));
    CVector f(static_cast<std::size_t>(n));
    for (i64 a = 0; a < n; ++a) {
        if (n == 3) {
            f[static_cast<std::size_t>(a)] = sigma_power(a * x * x * x) * s;
        } else {
            f[static_cast<std::size_t>(a)] = omega_power(n, x * a * a * a) * s;
        }
    }
    return f;
}

/// Computational basis plus the WH orbit of the fiducial with parameter x.
inline CompleteMub orbit_complete_mub(i64 x, i64 n) {
    const CVector f = alltop_fiducial(x, n);
    CompleteMub m;
    m.label = "orbit[N=" + std::to_string(n) + ",x=" + std::to_string(x) + "]";
    m.bases.push_back(computational_basis(n));
    const auto orbit = wh_orbit_bases(f);
    for (std::size_t b = 0; b < orbit.size(); ++b) {
        Basis basis;
        basis.label = m.label + "/b=" + std::to_string(b);
        basis.vectors = orbit[b];
        m.bases.push_back(std::move(basis));
    }
    return m;
}

struct OrbitMub {
    CompleteMub mub;
    i64 x = 0;       // fiducial parameter of the seed family
    i64 overlap = 0; // index of the standard basis this family contains
};

/// All N^2 - 1 orbit complete MUBs: the N-1 fiducial families overlapping at
/// the computational basis, rotated through the remaining standard bases by
/// the Fourier unitary and then successive shear rotations.
inline std::vector<OrbitMub> all_orbit_complete_mubs(i64 n) {
    if (!is_prime(n) || n == 2) throw DomainError("all_orbit_complete_mubs: N must be an odd prime");
    if (n > 11) throw DimensionTooLarge("all_orbit_complete_mubs: capped at N <= 11");
    std::vector<OrbitMub> out;
    out.reserve(static_cast<std::size_t>(n * n - 1));
    std::vector<CompleteMub> family;
    for (i64 x = 1; x < n; ++x) {
        family.push_back(orbit_complete_mub(x, n));
        out.push_back({family.back(), x, 0});
    }
    const CMatrix f = fourier_unitary(n);
    const CMatrix rot = standard_rotation(n);
    for (i64 k = 1; k <= n; ++k) {
        const CMatrix& step = (k == 1) ? f : rot;
        for (i64 x = 1; x < n; ++x) {
            const auto idx = static_cast<std::size_t>(x - 1);
            family[idx] = apply_unitary(step, family[idx],
                                        "orbit[N=" + std::to_string(n) + ",x=" + std::to_string(x) +
                                            ",overlap=" + std::to_string(k) + "]");
            out.push_back({family[idx], x, k});
        }
    }
    return out;
}

/// Every non-standard basis across a family of orbit complete MUBs.
inline std::vector<Basis> orbit_bases(const std::vector<OrbitMub>& mubs) {
    std::vector<Basis> out;
    for (const auto& om : mubs) {
        for (std::size_t b = 1; b < om.mub.bases.size(); ++b) out.push_back(om.mub.bases[b]);
    }
    return out;
}

/// Diagonal unitary whose entries are the cubic-phase pattern: sigma^a for
/// N = 3 (order 9) and omega^{a^3} for N > 3 (order N). It advances the
/// complete MUBs that overlap at the computational basis.
inline CMatrix cycling_unitary(i64 n) {
    if (!is_prime(n) || n == 2) throw DomainError("cycling_unitary: N must be an odd prime");
    CVector d(static_cast<std::size_t>(n));
    for (i64 a = 0; a < n; ++a) {
        d[static_cast<std::size_t>(a)] = (n == 3) ? sigma_power(a) : omega_power(n, a * a * a);
    }
    return CMatrix::diagonal(d);
}

// ---------------------------------------------------------------------------
// Clifford stabilizers of the fiducials.
// ---------------------------------------------------------------------------

struct StabilizerElement {
    CliffordElement element;
    i64 phase_num = 0; // phase = e^{2 pi i phase_num / phase_den}
    i64 phase_den = 1;
    CMatrix matrix;  // phase * D_p * U_g; fixes `target` exactly
    CVector target;  // the vector held fixed, first vector of orbit basis 0
};

/// For N > 3: the closed-form element omega^k D_{(i,j)} U_S with parameters
/// i = 1/(6x), j = 1/(12x), k = -1/(432 x^2); it fixes the cubic fiducial
/// exactly. For N = 3 the parameters degenerate and the element is found by
/// exhaustive search over the 216 projective Clifford elements with
/// ninth-root phases; the search target is the linear-phase representative
/// sigma^{x a} (for x = 1 this is the cubic fiducial itself, for x = 2 its
/// clock translate within the same orbit basis).
inline StabilizerElement stabilizer_element(i64 x, i64 n, const Tolerance& tol = Tolerance()) {
    if (!is_prime(n) || n == 2) throw DomainError("stabilizer_element: N must be an odd prime");
    if (x <= 0 || x >= n) throw DomainError("stabilizer_element: x must lie in 1..N-1");
    if (n > 3) {
        const auto [i, j, k] = stabilizer_params(Residue(x, n));
        const CliffordElement elem(SymplecticMatrix::shear(n), DisplacementIndex(i, j));
        const CMatrix m = elem.matrix() * omega_power(n, k.value());
        return {elem, k.value(), n, m, alltop_fiducial(x, n)};
    }
    // Dimension 3: exhaustive search.
    const double s = 1.0 / std::sqrt(3.0);
    CVector target(3);
    for (i64 a = 0; a < 3; ++a) target[static_cast<std::size_t>(a)] = sigma_power(x * a) * s;
    struct Hit {
        i64 t;
        std::array<i64, 6> key;
        CliffordElement elem;
        CMatrix m;
    };
    std::vector<Hit> hits;
    for (const auto& g : sl2_elements(3)) {
        for (i64 p1 = 0; p1 < 3; ++p1) {
            for (i64 p2 = 0; p2 < 3; ++p2) {
                const CliffordElement elem(g, DisplacementIndex(p1, p2, 3));
                if (elem.is_identity()) continue;
                const CMatrix base = elem.matrix();
                const CVector image = base * target;
                for (i64 t = 0; t < 9; ++t) {
                    if (max_abs_diff(scaled(image, sigma_power(t)), target) < tol.eps) {
                        hits.push_back({t, elem.key(), elem, base * sigma_power(t)});
                    }
                }
            }
        }
    }
    if (hits.empty()) {
        throw SearchFailed("stabilizer_element: no projective Clifford element fixes the fiducial");
    }
    std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
        return std::tie(a.t, a.key) < std::tie(b.t, b.key);
    });
    const Hit& best = hits.front();
    return {best.elem, best.t, 9, best.m, target};
}

// ---------------------------------------------------------------------------
// Eigenbasis correspondence between order-N subgroups and MUB bases.
// ---------------------------------------------------------------------------

struct CorrespondenceReport {
    i64 dimension = 0;
    i64 non_translate_subgroups = 0;
    i64 orbit_basis_count = 0;
    std::vector<i64> basis_of_subgroup; // orbit-basis index per subgroup, -1 if unmatched
    i64 unmatched = 0;
    i64 degenerate_projectors = 0; // projector rank != 1 events
    bool bijective = false;
    i64 wh_line_count = 0;
    bool standard_bijective = false; // WH line subgroups <-> standard bases
};

namespace detail {

inline i64 match_by_fingerprint(const std::vector<CVector>& probe,
                                const std::vector<std::vector<double>>& fingerprints,
                                const std::vector<Basis>& candidates, const Tolerance& tol) {
    const auto fp = set_fingerprint(probe);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (fingerprint_distance(fp, fingerprints[i]) > 1e-7) continue;
        if (sets_equal_up_to_phase_perm(probe, candidates[i].vectors, tol)) {
            return static_cast<i64>(i);
        }
    }
    return -1;
}

} // namespace detail

/// Extract the joint eigenbasis of the cyclic subgroup generated by a
/// normalized order-N unitary. Returns an empty list if any spectral
/// projector fails to be rank one.
inline std::vector<CVector> order_n_eigenbasis(const CMatrix& u, i64 n, i64* degenerate,
                                               const Tolerance& tol = Tolerance()) {
    const auto normalized_u = normalize_to_order(u, n, tol);
    const auto projs = cyclic_eigenprojectors(normalized_u.matrix, n, tol);
    std::vector<CVector> basis;
    for (const auto& p : projs) {
        if (std::llround(p.trace().real()) != 1) {
            if (degenerate) ++(*degenerate);
            return {};
        }
        const auto vecs = orthonormal_from_projector(p, tol);
        basis.push_back(vecs[0]);
    }
    return basis;
}

/// Match the eigenbasis of every non-translate order-N Clifford subgroup
/// against the orbit MUB bases, and the eigenbasis of every WH line subgroup
/// against the standard bases. Both matchings must be bijections.
inline CorrespondenceReport eigenbasis_correspondence(i64 n, const Tolerance& tol = Tolerance()) {
    CorrespondenceReport rep;
    rep.dimension = n;
    const auto census = enumerate_order_n_clifford_subgroups(n);
    const auto family = all_orbit_complete_mubs(n);
    const auto bases = orbit_bases(family);
    rep.non_translate_subgroups = static_cast<i64>(census.non_translate_subgroups.size());
    rep.orbit_basis_count = static_cast<i64>(bases.size());

    std::vector<std::vector<double>> fingerprints;
    fingerprints.reserve(bases.size());
    for (const auto& b : bases) fingerprints.push_back(set_fingerprint(b.vectors));

    std::vector<i64> hit_count(bases.size(), 0);
    for (const auto& sub : census.non_translate_subgroups) {
        const auto eigen = order_n_eigenbasis(sub.generator().matrix(), n, &rep.degenerate_projectors, tol);
        i64 idx = -1;
        if (!eigen.empty()) idx = detail::match_by_fingerprint(eigen, fingerprints, bases, tol);
        rep.basis_of_subgroup.push_back(idx);
        if (idx < 0) {
            ++rep.unmatched;
        } else {
            ++hit_count[static_cast<std::size_t>(idx)];
        }
    }
    rep.bijective = rep.unmatched == 0 && rep.non_translate_subgroups == rep.orbit_basis_count &&
                    std::all_of(hit_count.begin(), hit_count.end(), [](i64 c) { return c == 1; });

    // Standard side: each line of Z_N^2 generates a maximal abelian WH
    // subgroup whose joint eigenbasis is one standard basis.
    const auto std_mub = standard_mub(n);
    std::vector<std::vector<double>> std_fp;
    for (const auto& b : std_mub.bases) std_fp.push_back(set_fingerprint(b.vectors));
    const auto lines = wh_line_subgroups(n);
    rep.wh_line_count = static_cast<i64>(lines.size());
    std::vector<i64> std_hits(std_mub.bases.size(), 0);
    bool std_ok = true;
    for (const auto& line : lines) {
        const CMatrix d = displacement(line.front());
        i64 degenerate = 0;
        const auto eigen = order_n_eigenbasis(d, n, &degenerate, tol);
        const i64 idx = eigen.empty() ? -1
                                      : detail::match_by_fingerprint(
                                            eigen,
                                            std_fp,
                                            std_mub.bases, tol);
        if (idx < 0) {
            std_ok = false;
        } else {
            ++std_hits[static_cast<std::size_t>(idx)];
        }
    }
    rep.standard_bijective =
        std_ok && std::all_of(std_hits.begin(), std_hits.end(), [](i64 c) { return c == 1; });
    return rep;
}

// ---------------------------------------------------------------------------
// Clifford orbits of the orbit complete MUBs.
// ---------------------------------------------------------------------------

/// Closure of the N^2-1 orbit complete MUBs under {X, Z, U_F, U_S}, reported
/// as the sorted sizes of the resulting orbits.
inline std::vector<i64> clifford_orbit_partition(i64 n, const Tolerance& tol = Tolerance()) {
    if (n > 7) throw DimensionTooLarge("clifford_orbit_partition: capped at N <= 7");
    const auto family = all_orbit_complete_mubs(n);
    const std::size_t count = family.size();

    // Order-insensitive fingerprint: the sorted multiset of all per-basis
    // fingerprint values. Sorting scalars keeps near-ties stable, which a
    // lexicographic sort of noisy per-basis vectors would not.
    auto mub_fingerprint = [](const CompleteMub& m) {
        std::vector<double> flat;
        for (const auto& b : m.bases) {
            const auto fp = set_fingerprint(b.vectors);
            flat.insert(flat.end(), fp.begin(), fp.end());
        }
        std::sort(flat.begin(), flat.end());
        return flat;
    };
    std::vector<std::vector<double>> fingerprints;
    fingerprints.reserve(count);
    for (const auto& om : family) fingerprints.push_back(mub_fingerprint(om.mub));

    auto find_mub = [&](const CompleteMub& m) -> i64 {
        const auto flat = mub_fingerprint(m);
        for (std::size_t i = 0; i < count; ++i) {
            if (fingerprint_distance(flat, fingerprints[i]) > 1e-7) continue;
            if (mubs_equal(m, family[i].mub, tol)) return static_cast<i64>(i);
        }
        return -1;
    };

    std::vector<std::size_t> parent(count);
    std::iota(parent.begin(), parent.end(), 0u);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    };
    auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };

    const std::vector<CMatrix> generators = {x_matrix(n), z_matrix(n), fourier_unitary(n),
                                             standard_rotation(n)};
    for (std::size_t i = 0; i < count; ++i) {
        for (const auto& g : generators) {
            const auto image = apply_unitary(g, family[i].mub, "image");
            const i64 j = find_mub(image);
            if (j < 0) {
                throw Error("clifford_orbit_partition: image left the orbit MUB family");
            }
            unite(i, static_cast<std::size_t>(j));
        }
    }

    std::map<std::size_t, i64> sizes;
    for (std::size_t i = 0; i < count; ++i) ++sizes[find(i)];
    std::vector<i64> out;
    for (const auto& [root, size] : sizes) out.push_back(size);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace mubkit
