#pragma once

#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "mubkit/mubs.hpp"

namespace mubkit {

// ---------------------------------------------------------------------------
// Bloch-space representation.
// ---------------------------------------------------------------------------

/// The traceless Hermitian matrix |v><v| - 1/N attached to a unit vector.
inline CMatrix bloch_vector(const CVector& v, const Tolerance& tol = Tolerance()) {
    require_unit(v, tol);
    const std::size_t n = v.size();
    CMatrix m(n);
    const double shift = 1.0 / static_cast<double>(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            m(r, c) = v[r] * std::conj(v[c]);
        }
        m(r, r) -= shift;
    }
    return m;
}

/// Trace inner product of two Bloch vectors (real for Hermitian arguments).
inline double bloch_inner(const CMatrix& a, const CMatrix& b) {
    return (a * b).trace().real();
}

// ---------------------------------------------------------------------------
// Chordal Grassmannian distance between the planes spanned by two bases.
// ---------------------------------------------------------------------------

/// D_c^2 = 1 - (1/(N-1)) sum_{ij} (|<e_i|f_j>|^2 - 1/N)^2. Ranges over
/// [0, 1]: zero for projectively identical bases, one for a MUB pair.
inline double chordal_distance_sq(const Basis& b1, const Basis& b2) {
    if (b1.dim() != b2.dim()) throw DimensionMismatch("chordal_distance_sq");
    const double n = static_cast<double>(b1.dim());
    double sum = 0;
    for (const auto& e : b1.vectors) {
        for (const auto& f : b2.vectors) {
            const double d = std::norm(inner(e, f)) - 1.0 / n;
            sum += d * d;
        }
    }
    return 1.0 - sum / (n - 1.0);
}

struct DistanceCluster {
    double value = 0;
    i64 multiplicity = 0;
};

struct DistanceReport {
    std::vector<std::tuple<std::string, std::string, double>> pairs;
    std::vector<DistanceCluster> clusters;
};

/// All pairwise distances over a basis family, clustered with an absolute
/// gap of 1e-6 (three orders above the arithmetic tolerance; the candidate
/// theorem values differ by at least 2/N^2 at desk scales).
inline DistanceReport distance_spectrum(const std::vector<Basis>& bases,
                                        double cluster_gap = 1e-6) {
    DistanceReport rep;
    std::vector<double> values;
    for (std::size_t i = 0; i < bases.size(); ++i) {
        for (std::size_t j = i + 1; j < bases.size(); ++j) {
            const double d = chordal_distance_sq(bases[i], bases[j]);
            rep.pairs.emplace_back(bases[i].label, bases[j].label, d);
            values.push_back(d);
        }
    }
    std::sort(values.begin(), values.end());
    for (double v : values) {
        if (!rep.clusters.empty() && v - rep.clusters.back().value < cluster_gap) {
            ++rep.clusters.back().multiplicity;
        } else {
            rep.clusters.push_back({v, 1});
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Distance theorems over the complete MUB families.
// ---------------------------------------------------------------------------

struct OverlapDistanceReport {
    i64 dimension = 0;
    i64 mub_pairs = 0;
    i64 distance_count = 0;
    double min_value = 0, max_value = 0;
    double expected = 0; // (N-1)/N
    double spread = 0;
    double max_deviation = 0;
};

/// Distances between non-shared bases of every overlapping pair of complete
/// MUBs (standard-orbit and orbit-orbit alike).
inline OverlapDistanceReport overlap_distance_check(i64 n, const Tolerance& tol = Tolerance()) {
    OverlapDistanceReport rep;
    rep.dimension = n;
    rep.expected = static_cast<double>(n - 1) / static_cast<double>(n);
    std::vector<CompleteMub> mubs;
    mubs.push_back(standard_mub(n));
    for (auto& om : all_orbit_complete_mubs(n)) mubs.push_back(std::move(om.mub));
    rep.min_value = 2.0;
    rep.max_value = -1.0;
    for (std::size_t a = 0; a < mubs.size(); ++a) {
        for (std::size_t b = a + 1; b < mubs.size(); ++b) {
            const auto shared = shared_bases(mubs[a], mubs[b], tol);
            if (shared.size() != 1) continue;
            ++rep.mub_pairs;
            for (std::size_t i = 0; i < mubs[a].bases.size(); ++i) {
                if (i == shared[0].first) continue;
                for (std::size_t j = 0; j < mubs[b].bases.size(); ++j) {
                    if (j == shared[0].second) continue;
                    const double d = chordal_distance_sq(mubs[a].bases[i], mubs[b].bases[j]);
                    rep.min_value = std::min(rep.min_value, d);
                    rep.max_value = std::max(rep.max_value, d);
                    rep.max_deviation = std::max(rep.max_deviation, std::abs(d - rep.expected));
                    ++rep.distance_count;
                }
            }
        }
    }
    rep.spread = rep.max_value - rep.min_value;
    return rep;
}

struct NonOverlapDistanceReport {
    i64 dimension = 0;
    i64 mub_pairs = 0;
    i64 distance_count = 0;
    double min_value = 0, max_value = 0, mean_value = 0;
    double spread = 0;
    double candidate_minus = 0; // (N-1)/N - 1/N^2
    double candidate_plus = 0;  // (N-1)/N + 1/N^2
    std::string matches;        // which candidate the measured constant equals
    double max_deviation_from_match = 0;
};

/// Distances between orbit bases of non-overlapping orbit complete MUBs.
/// The report states which closed-form candidate the measured constant matches;
/// nothing is assumed about the sign.
inline NonOverlapDistanceReport non_overlap_distance_check(i64 n,
                                                           const Tolerance& tol = Tolerance()) {
    NonOverlapDistanceReport rep;
    rep.dimension = n;
    const double nn = static_cast<double>(n);
    rep.candidate_minus = (nn - 1.0) / nn - 1.0 / (nn * nn);
    rep.candidate_plus = (nn - 1.0) / nn + 1.0 / (nn * nn);
    const auto family = all_orbit_complete_mubs(n);
    rep.min_value = 2.0;
    rep.max_value = -1.0;
    double sum = 0;
    for (std::size_t a = 0; a < family.size(); ++a) {
        for (std::size_t b = a + 1; b < family.size(); ++b) {
            if (family[a].overlap == family[b].overlap) continue; // same family: overlapping
            ++rep.mub_pairs;
            // Basis 0 is the standard-family basis in canonical order; the
            // theorem concerns the remaining orbit bases.
            for (std::size_t i = 1; i < family[a].mub.bases.size(); ++i) {
                for (std::size_t j = 1; j < family[b].mub.bases.size(); ++j) {
                    const double d =
                        chordal_distance_sq(family[a].mub.bases[i], family[b].mub.bases[j]);
                    rep.min_value = std::min(rep.min_value, d);
                    rep.max_value = std::max(rep.max_value, d);
                    sum += d;
                    ++rep.distance_count;
                }
            }
        }
    }
    rep.spread = rep.max_value - rep.min_value;
    rep.mean_value = rep.distance_count ? sum / static_cast<double>(rep.distance_count) : 0.0;
    const double dev_minus = std::abs(rep.mean_value - rep.candidate_minus);
    const double dev_plus = std::abs(rep.mean_value - rep.candidate_plus);
    if (dev_plus < tol.eps) {
        rep.matches = "plus";
        rep.max_deviation_from_match = std::max(std::abs(rep.min_value - rep.candidate_plus),
                                                std::abs(rep.max_value - rep.candidate_plus));
    } else if (dev_minus < tol.eps) {
        rep.matches = "minus";
        rep.max_deviation_from_match = std::max(std::abs(rep.min_value - rep.candidate_minus),
                                                std::abs(rep.max_value - rep.candidate_minus));
    } else {
        rep.matches = "neither";
        rep.max_deviation_from_match = std::min(dev_minus, dev_plus);
    }
    return rep;
}

/// The 2-design row sum: for a basis B of M and an overlapping M', the
/// distances from B to all bases of M' add up to N.
inline double two_design_row_sum_deviation(const CompleteMub& m, const CompleteMub& m_other) {
    const double n = static_cast<double>(m.dim());
    double max_dev = 0;
    for (const auto& b : m.bases) {
        double sum = 0;
        for (const auto& b2 : m_other.bases) sum += chordal_distance_sq(b, b2);
        max_dev = std::max(max_dev, std::abs(sum - n));
    }
    return max_dev;
}

/// A Haar-distributed unitary: QR of a complex Ginibre matrix via modified
/// Gram-Schmidt (positive diagonal R makes Q Haar).
inline CMatrix haar_unitary(i64 n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    std::vector<CVector> cols(static_cast<std::size_t>(n), CVector(static_cast<std::size_t>(n)));
    for (auto& col : cols)
        for (auto& x : col) x = Complex(g(rng), g(rng));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        for (std::size_t prev = 0; prev < c; ++prev) {
            const Complex ov = inner(cols[prev], cols[c]);
            for (std::size_t r = 0; r < cols[c].size(); ++r) cols[c][r] -= ov * cols[prev][r];
        }
        cols[c] = normalized(cols[c]);
    }
    CMatrix u(static_cast<std::size_t>(n));
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < cols.size(); ++r) u(r, c) = cols[c][r];
    return u;
}

/// Monte-Carlo estimate of the mean distance between the computational basis
/// and a Haar-random one; the exact value is N/(N+1).
inline double average_distance_mc(i64 n, i64 samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const Basis comp = computational_basis(n);
    double sum = 0;
    for (i64 s = 0; s < samples; ++s) {
        const Basis random = basis_from_columns(haar_unitary(n, rng), "haar");
        sum += chordal_distance_sq(comp, random);
    }
    return sum / static_cast<double>(samples);
}

// ---------------------------------------------------------------------------
// Linear dependencies: the cubic sum theorem and phase-point invariants.
// ---------------------------------------------------------------------------

struct CubicDependencyReport {
    i64 dimension = 0;
    i64 x = 0;
    bool residue_one_mod_three = false; // N = 3k+1
    double fiducial_overlap_abs = 0;    // |<u|f_x>|
    std::vector<i64> standard_basis_of_vector;
    bool one_per_standard_basis = false;
    double max_orthogonality_deviation = 0; // max_m |<v_m|f_x>|, meaningful for N = 3k+2
    i64 rank_value = 0;
};

/// Apply the fiducial's Clifford stabilizer repeatedly to the uniform vector.
/// The N images land one per non-computational standard basis; for N = 3k+2
/// they are all orthogonal to the fiducial and hence linearly dependent.
inline CubicDependencyReport cubic_dependency_check(i64 x, i64 n, const Tolerance& tol = Tolerance()) {
    if (!is_prime(n) || n < 5) throw DomainError("cubic_dependency_check: N must be a prime >= 5");
    CubicDependencyReport rep;
    rep.dimension = n;
    rep.x = x;
    rep.residue_one_mod_three = (n % 3 == 1);
    const CVector f = alltop_fiducial(x, n);
    const double s = 1.0 / std::sqrt(static_cast<double>(n));
    CVector u(static_cast<std::size_t>(n), Complex(s, 0));
    rep.fiducial_overlap_abs = std::abs(inner(u, f));

    const auto stab = stabilizer_element(x, n, tol);
    const auto std_mub = standard_mub(n);
    std::vector<CVector> generated;
    CVector v = u;
    for (i64 m = 0; m < n; ++m) {
        generated.push_back(v);
        rep.max_orthogonality_deviation =
            std::max(rep.max_orthogonality_deviation, std::abs(inner(v, f)));
        i64 basis_idx = -1;
        for (std::size_t k = 0; k < std_mub.bases.size() && basis_idx < 0; ++k) {
            for (const auto& w : std_mub.bases[k].vectors) {
                if (equal_up_to_phase(v, w, tol)) {
                    basis_idx = static_cast<i64>(k);
                    break;
                }
            }
        }
        rep.standard_basis_of_vector.push_back(basis_idx);
        v = stab.matrix * v;
    }
    std::set<i64> distinct(rep.standard_basis_of_vector.begin(), rep.standard_basis_of_vector.end());
    rep.one_per_standard_basis = distinct.size() == static_cast<std::size_t>(n) &&
                                 !distinct.contains(0) && !distinct.contains(-1);
    rep.rank_value = static_cast<i64>(rank(generated, tol));
    return rep;
}

struct PhasePointReport {
    i64 dimension = 0;
    std::vector<i64> invariant_vector_index; // per standard basis
    std::vector<CVector> invariant_vectors;
    double max_fix_deviation = 0; // || P v - v ||_inf, eigenvalue +1 exactly
    i64 rank_value = 0;
    i64 expected_rank = 0; // (N+1)/2
};

/// One vector per standard basis is fixed by the parity operator; together
/// the N+1 invariant vectors span only the (N+1)/2-dimensional +1 eigenspace.
inline PhasePointReport phase_point_dependencies(i64 n, const Tolerance& tol = Tolerance()) {
    PhasePointReport rep;
    rep.dimension = n;
    rep.expected_rank = (n + 1) / 2;
    const CMatrix parity = parity_unitary(n).matrix;
    const auto std_mub = standard_mub(n);
    for (const auto& basis : std_mub.bases) {
        i64 found = -1;
        i64 count = 0;
        for (std::size_t i = 0; i < basis.vectors.size(); ++i) {
            const CVector image = parity * basis.vectors[i];
            if (equal_up_to_phase(image, basis.vectors[i], tol)) {
                ++count;
                found = static_cast<i64>(i);
            }
        }
        if (count != 1) {
            throw InvariantVectorNotUnique("phase_point_dependencies: basis " + basis.label +
                                           " holds " + std::to_string(count) +
                                           " parity-invariant vectors");
        }
        rep.invariant_vector_index.push_back(found);
        const CVector& v = basis.vectors[static_cast<std::size_t>(found)];
        rep.invariant_vectors.push_back(v);
        rep.max_fix_deviation = std::max(rep.max_fix_deviation, max_abs_diff(parity * v, v));
    }
    rep.rank_value = static_cast<i64>(rank(rep.invariant_vectors, tol));
    return rep;
}

} // namespace mubkit
