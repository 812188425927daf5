#pragma once

#include <chrono>
#include <optional>
#include <set>

#include "mubkit/geometry.hpp"
#include "mubkit/report.hpp"
#include "mubkit/sic3.hpp"
#include "mubkit/small_dim.hpp"

namespace mubkit {

struct VerifyOptions {
    Tolerance tol{};
    i64 enumeration_cap = 7;   // Clifford-wide enumeration commands
    i64 construction_cap = 13; // non-enumerative verifiers
    i64 mc_samples = 10000;
    std::uint64_t mc_seed = 0x5eed0001;
};

namespace claims {

inline Claim deviation(const std::string& id, const std::string& anchor, double dev, double eps) {
    return {id, anchor, "deviation < " + fmt_g12(eps), fmt_g12(dev), dev, dev < eps};
}

inline Claim count(const std::string& id, const std::string& anchor, i64 expected, i64 measured) {
    return {id,       anchor, fmt_int(expected), fmt_int(measured),
            std::abs(static_cast<double>(expected - measured)), expected == measured};
}

inline Claim boolean(const std::string& id, const std::string& anchor, const std::string& expected,
                     const std::string& measured, bool pass) {
    return {id, anchor, expected, measured, pass ? 0.0 : 1.0, pass};
}

inline Claim value(const std::string& id, const std::string& anchor, double expected,
                   double measured, double eps) {
    const double dev = std::abs(expected - measured);
    return {id, anchor, fmt_g12(expected), fmt_g12(measured), dev, dev < eps};
}

} // namespace claims

namespace detail {

/// Pairwise projective distinctness of a basis family, fingerprint-gated.
inline bool bases_all_distinct(const std::vector<Basis>& bases, const Tolerance& tol) {
    std::vector<std::vector<double>> fps;
    fps.reserve(bases.size());
    for (const auto& b : bases) fps.push_back(set_fingerprint(b.vectors));
    for (std::size_t i = 0; i < bases.size(); ++i) {
        for (std::size_t j = i + 1; j < bases.size(); ++j) {
            if (fingerprint_distance(fps[i], fps[j]) > 1e-7) continue;
            if (bases_equal_up_to_phase_perm(bases[i], bases[j], tol)) return false;
        }
    }
    return true;
}

inline CompleteMub standard_mub_any(i64 n) {
    return n == 4 ? standard_mub_dim4() : standard_mub(n);
}

inline std::vector<CompleteMub> orbit_mubs_any(i64 n) {
    if (n == 2 || n == 4) return small_dim_orbit_mubs(n);
    if (n <= 11) {
        std::vector<CompleteMub> out;
        for (auto& om : all_orbit_complete_mubs(n)) out.push_back(std::move(om.mub));
        return out;
    }
    // Above the family cap only the fiducial-seeded sets are materialised.
    std::vector<CompleteMub> out;
    for (i64 x = 1; x < n; ++x) out.push_back(orbit_complete_mub(x, n));
    return out;
}

} // namespace detail

/// The unbiasedness suite: standard and orbit complete MUBs against the
/// overlap condition, plus family counts, distinctness, overlap structure,
/// and (in small dimensions) the design bound.
inline Report verify_mub(i64 n, const VerifyOptions& opt = {}) {
    Report rep;
    rep.command = "verify mub";
    rep.dimensions = {n};
    if (n > opt.construction_cap) {
        throw DimensionTooLarge("verify mub: dimension above cap " +
                                std::to_string(opt.construction_cap));
    }
    const double eps = opt.tol.eps;
    const auto standard = detail::standard_mub_any(n);
    rep.claims.push_back(
        claims::deviation("standard-complete", "mub-condition", complete_mub_deviation(standard), eps));

    const auto orbit_mubs = detail::orbit_mubs_any(n);
    i64 expected_count = 0;
    if (n == 2) {
        expected_count = 3;
    } else if (n == 4) {
        expected_count = 10;
    } else if (n <= 11) {
        expected_count = n * n - 1;
    } else {
        expected_count = n - 1;
    }
    rep.claims.push_back(
        claims::count("orbit-family-count", "orbit-construction", expected_count,
                      static_cast<i64>(orbit_mubs.size())));
    double worst = 0;
    for (const auto& m : orbit_mubs) worst = std::max(worst, complete_mub_deviation(m));
    rep.claims.push_back(claims::deviation("orbit-complete", "mub-condition", worst, eps));

    if (is_prime(n) && n != 2 && n <= 11) {
        const auto family = all_orbit_complete_mubs(n);
        const auto bases = orbit_bases(family);
        rep.claims.push_back(claims::count("orbit-basis-count", "orbit-construction",
                                           n * (n * n - 1), static_cast<i64>(bases.size())));
        rep.claims.push_back(claims::boolean("orbit-basis-distinct", "orbit-construction",
                                             "pairwise distinct", "checked",
                                             detail::bases_all_distinct(bases, opt.tol)));
        bool overlap_ok = true;
        std::vector<i64> per_standard_basis(static_cast<std::size_t>(n + 1), 0);
        for (const auto& om : family) {
            const auto shared = shared_bases(standard, om.mub, opt.tol);
            if (shared.size() != 1 || static_cast<i64>(shared[0].first) != om.overlap) {
                overlap_ok = false;
            } else {
                ++per_standard_basis[shared[0].first];
            }
        }
        for (i64 c : per_standard_basis) overlap_ok = overlap_ok && (c == n - 1);
        rep.claims.push_back(claims::boolean("overlap-structure", "orbit-construction",
                                             "one shared standard basis each",
                                             overlap_ok ? "confirmed" : "violated", overlap_ok));
    }

    if (n <= 7) {
        double design_dev = 0;
        auto check = [&](const CompleteMub& m) {
            const auto vecs = all_vectors(m);
            design_dev = std::max(design_dev, std::abs(frame_potential(vecs) -
                                                       welch_bound(m.dim(), vecs.size())));
        };
        check(standard);
        for (const auto& m : orbit_mubs) check(m);
        rep.claims.push_back(claims::deviation("frame-potential", "design-bound", design_dev, 1e-8));
    }
    return rep;
}

/// Group-order and subgroup-count claims from the exhaustive enumeration.
inline Report verify_counts(i64 n, const VerifyOptions& opt = {}) {
    Report rep;
    rep.command = "verify counts";
    rep.dimensions = {n};
    const auto census = enumerate_order_n_clifford_subgroups(n, opt.enumeration_cap);
    rep.claims.push_back(
        claims::count("sl2-order", "group-counting", n * (n * n - 1), census.sl2_order));
    rep.claims.push_back(claims::count(
        "symplectic-subgroups", "group-counting", n + 1,
        static_cast<i64>(enumerate_order_n_symplectic_subgroups(n).size())));
    rep.claims.push_back(claims::count("order-n-elements", "group-counting", n * n * (n * n - 1),
                                       census.order_n_elements));
    rep.claims.push_back(claims::count("translate-elements", "translate-split", n * (n * n - 1),
                                       census.translate_elements));
    rep.claims.push_back(claims::count("non-translate-elements", "translate-split",
                                       n * (n - 1) * (n * n - 1),
                                       census.order_n_elements - census.translate_elements));
    rep.claims.push_back(claims::count("translate-subgroups", "translate-split", n * (n + 1),
                                       static_cast<i64>(census.translate_subgroups.size())));
    rep.claims.push_back(claims::count("non-translate-subgroups", "translate-split",
                                       n * (n * n - 1),
                                       static_cast<i64>(census.non_translate_subgroups.size())));
    rep.claims.push_back(claims::count(
        "order-n-subgroups", "group-counting", n * n * (n + 1),
        static_cast<i64>(census.translate_subgroups.size() + census.non_translate_subgroups.size())));
    return rep;
}

/// The bijection between non-translate order-N subgroups and orbit bases,
/// with the standard-side WH-line bijection as control.
inline Report verify_correspondence(i64 n, const VerifyOptions& opt = {}) {
    Report rep;
    rep.command = "verify correspondence";
    rep.dimensions = {n};
    const auto cr = eigenbasis_correspondence(n, opt.tol);
    rep.claims.push_back(claims::count("non-translate-subgroups", "translate-split",
                                       n * (n * n - 1), cr.non_translate_subgroups));
    rep.claims.push_back(
        claims::count("orbit-bases", "orbit-construction", n * (n * n - 1), cr.orbit_basis_count));
    rep.claims.push_back(claims::count("unmatched-subgroups", "subgroup-basis-bijection", 0,
                                       cr.unmatched));
    rep.claims.push_back(claims::count("degenerate-projectors", "subgroup-basis-bijection", 0,
                                       cr.degenerate_projectors));
    rep.claims.push_back(claims::boolean("eigenbasis-bijection", "subgroup-basis-bijection",
                                         "bijective", cr.bijective ? "bijective" : "not bijective",
                                         cr.bijective));
    rep.claims.push_back(claims::boolean("standard-eigenbasis-bijection",
                                         "subgroup-basis-bijection", "bijective",
                                         cr.standard_bijective ? "bijective" : "not bijective",
                                         cr.standard_bijective));
    return rep;
}

/// Distance spectrum claims: the overlap constant, the non-overlap constant
/// with its sign resolution, the 2-design row sum, and the Monte-Carlo mean.
inline Report verify_distances(i64 n, const VerifyOptions& opt = {}) {
    Report rep;
    rep.command = "verify distances";
    rep.dimensions = {n};
    const double eps = opt.tol.eps;

    const auto od = overlap_distance_check(n, opt.tol);
    rep.claims.push_back(claims::deviation("overlap-distance-spread", "overlap-distance",
                                           od.spread, eps));
    rep.claims.push_back(claims::value("overlap-distance-value", "overlap-distance", od.expected,
                                       od.max_value, eps));

    const auto nd = non_overlap_distance_check(n, opt.tol);
    rep.claims.push_back(claims::deviation("nonoverlap-distance-spread", "nonoverlap-distance",
                                           nd.spread, eps));
    rep.claims.push_back(claims::boolean(
        "nonoverlap-distance-sign", "nonoverlap-distance", "matches one closed-form candidate",
        "matches " + nd.matches + " (value " + fmt_g12(nd.mean_value) + ")",
        nd.matches != "neither"));
    rep.claims.push_back(claims::deviation("nonoverlap-distance-value", "nonoverlap-distance",
                                           nd.max_deviation_from_match, eps));

    // Full spectrum over the standard plus orbit bases: three clusters, at
    // (N-1)/N, the non-overlap constant, and 1.
    {
        std::vector<Basis> bases = standard_mub(n).bases;
        for (auto& b : orbit_bases(all_orbit_complete_mubs(n))) bases.push_back(std::move(b));
        const auto spectrum = distance_spectrum(bases);
        std::string measured;
        rep.extra_csv = "cluster_value,multiplicity\n";
        for (std::size_t i = 0; i < spectrum.clusters.size(); ++i) {
            if (i) measured += "; ";
            measured += fmt_g12(spectrum.clusters[i].value) + " x" +
                        fmt_int(spectrum.clusters[i].multiplicity);
            rep.extra_csv += fmt_g12(spectrum.clusters[i].value) + "," +
                             fmt_int(spectrum.clusters[i].multiplicity) + "\n";
        }
        const double n_real = static_cast<double>(n);
        const bool ok = spectrum.clusters.size() == 3 &&
                        std::abs(spectrum.clusters.front().value - (n_real - 1.0) / n_real) < eps &&
                        std::abs(spectrum.clusters.back().value - 1.0) < eps;
        rep.claims.push_back(claims::boolean("distance-clusters", "overlap-distance",
                                             "three clusters at (N-1)/N, c2, 1", measured, ok));
    }

    const auto std_m = standard_mub(n);
    const auto orbit = orbit_complete_mub(1, n);
    rep.claims.push_back(claims::deviation("design-row-sum", "design-bound",
                                           two_design_row_sum_deviation(std_m, orbit), eps));

    const double mean = average_distance_mc(n, opt.mc_samples, opt.mc_seed);
    const double expect = static_cast<double>(n) / static_cast<double>(n + 1);
    rep.claims.push_back(claims::value("mean-distance", "mean-distance", expect, mean,
                                       0.02 * expect));
    return rep;
}

/// Linear-dependency claims: cubic-sum orthogonality (or its failure for
/// N = 3k+1), the quadratic-residue criterion, and phase-point invariants.
inline Report verify_dependencies(i64 n, std::optional<i64> x_filter = std::nullopt,
                                  const VerifyOptions& opt = {}) {
    Report rep;
    rep.command = "verify dependencies";
    rep.dimensions = {n};
    const double eps = opt.tol.eps;

    if (n >= 5) {
        std::vector<i64> xs;
        if (x_filter) {
            xs.push_back(*x_filter);
        } else {
            for (i64 x = 1; x < n; ++x) xs.push_back(x);
        }
        bool placement_ok = true;
        double max_orth = 0;
        i64 max_rank = 0;
        double min_overlap = 1e30;
        for (i64 x : xs) {
            const auto cr = cubic_dependency_check(x, n, opt.tol);
            placement_ok = placement_ok && cr.one_per_standard_basis;
            max_orth = std::max(max_orth, cr.max_orthogonality_deviation);
            max_rank = std::max(max_rank, cr.rank_value);
            min_overlap = std::min(min_overlap, cr.fiducial_overlap_abs);
        }
        rep.claims.push_back(claims::boolean("generated-vector-placement", "cubic-sum",
                                             "one vector per non-shared standard basis",
                                             placement_ok ? "confirmed" : "violated",
                                             placement_ok));
        if (n % 3 == 2) {
            rep.claims.push_back(
                claims::deviation("cubic-sum-orthogonality", "cubic-sum", max_orth, eps));
            rep.claims.push_back(claims::boolean("dependent-rank", "cubic-sum",
                                                 "rank <= " + fmt_int(n - 1), fmt_int(max_rank),
                                                 max_rank <= n - 1));
        } else {
            rep.claims.push_back(claims::boolean(
                "cubic-sum-nonzero", "cubic-sum", "|<u|f_x>| > 0.001",
                fmt_g12(min_overlap), min_overlap > 1e-3));
        }
    }

    bool residue_ok = true;
    for (i64 p : {5, 7, 11, 13, 17, 19, 23}) {
        residue_ok = residue_ok && (is_quadratic_residue(Residue(-3, p)) == (p % 3 == 1));
    }
    rep.claims.push_back(claims::boolean("residue-criterion", "residue-criterion",
                                         "-3 is a square iff N = 3k+1",
                                         residue_ok ? "confirmed" : "violated", residue_ok));

    const auto pp = phase_point_dependencies(n, opt.tol);
    rep.claims.push_back(claims::count("parity-invariant-vectors", "parity-eigenspace", n + 1,
                                       static_cast<i64>(pp.invariant_vectors.size())));
    rep.claims.push_back(
        claims::count("parity-invariant-rank", "parity-eigenspace", (n + 1) / 2, pp.rank_value));
    rep.claims.push_back(
        claims::deviation("parity-fix-residual", "parity-eigenspace", pp.max_fix_deviation, eps));
    return rep;
}

/// Orbit partition of the N^2-1 orbit complete MUBs under the Clifford
/// generators.
inline Report verify_orbits(i64 n, const VerifyOptions& opt = {}) {
    Report rep;
    rep.command = "verify orbits";
    rep.dimensions = {n};
    const auto partition = clifford_orbit_partition(n, opt.tol);
    std::string measured;
    i64 total = 0;
    for (std::size_t i = 0; i < partition.size(); ++i) {
        if (i) measured += "+";
        measured += fmt_int(partition[i]);
        total += partition[i];
    }
    const i64 expected_orbits = (n % 3 == 1) ? 3 : 1;
    rep.claims.push_back(claims::count("orbit-total", "orbit-split", n * n - 1, total));
    rep.claims.push_back(claims::count("orbit-count", "orbit-split", expected_orbits,
                                       static_cast<i64>(partition.size())));
    rep.claims.push_back(claims::boolean("orbit-sizes", "orbit-split",
                                         (n % 3 == 1) ? "three orbits" : "single orbit", measured,
                                         static_cast<i64>(partition.size()) == expected_orbits));
    return rep;
}

/// Dimension 2 and 4 orbit families from the extraspecial group.
inline Report verify_smalldim(i64 n, const VerifyOptions& opt = {}) {
    if (n != 2 && n != 4) throw DomainError("verify smalldim: N must be 2 or 4");
    Report rep;
    rep.command = "verify smalldim";
    rep.dimensions = {n};
    const double eps = opt.tol.eps;
    const auto standard = detail::standard_mub_any(n);
    rep.claims.push_back(claims::deviation("standard-complete", "mub-condition",
                                           complete_mub_deviation(standard), eps));
    const auto mubs = small_dim_orbit_mubs(n);
    rep.claims.push_back(claims::count("orbit-family-count", "small-dim-orbits", n == 2 ? 3 : 10,
                                       static_cast<i64>(mubs.size())));
    double worst = 0;
    for (const auto& m : mubs) worst = std::max(worst, complete_mub_deviation(m));
    rep.claims.push_back(claims::deviation("orbit-complete", "mub-condition", worst, eps));
    bool distinct = true;
    for (std::size_t i = 0; i < mubs.size(); ++i)
        for (std::size_t j = i + 1; j < mubs.size(); ++j)
            distinct = distinct && !mubs_equal(mubs[i], mubs[j], opt.tol);
    rep.claims.push_back(claims::boolean("orbit-family-distinct", "small-dim-orbits",
                                         "pairwise distinct", distinct ? "confirmed" : "violated",
                                         distinct));
    bool share_one = true;
    for (const auto& m : mubs) share_one = share_one && shared_bases(standard, m, opt.tol).size() == 1;
    rep.claims.push_back(claims::boolean("overlap-structure", "small-dim-orbits",
                                         "one shared standard basis each",
                                         share_one ? "confirmed" : "violated", share_one));
    return rep;
}

/// The phi-family of dimension-3 SICs and the diagonal relating unitary.
inline Report verify_sic(i64 grid_points, const VerifyOptions& opt = {}) {
    Report rep;
    rep.command = "verify sic";
    rep.dimensions = {3};
    const double eps = opt.tol.eps;
    double worst = 0;
    for (i64 k = 0; k < grid_points; ++k) {
        const double phi = 2.0 * std::numbers::pi * static_cast<double>(k) /
                           static_cast<double>(grid_points);
        worst = std::max(worst, sic_deviation(sic_orbit({phi})));
    }
    rep.claims.push_back(claims::deviation("sic-grid", "sic-condition", worst, eps));

    const auto u = sic_shift_unitary();
    const auto f2 = alltop_fiducial(2, 3);
    double diag_dev = 0;
    for (std::size_t a = 0; a < 3; ++a) {
        diag_dev = std::max(diag_dev, std::abs(u(a, a) - f2[a] * std::sqrt(3.0)));
    }
    rep.claims.push_back(claims::deviation("shift-diagonal", "sic-shift", diag_dev, eps));
    rep.claims.push_back(claims::boolean("shift-order", "sic-shift", "projective order 9",
                                         "checked",
                                         max_abs_diff(u.pow(9), CMatrix::identity(3)) < eps &&
                                             !proportional(u.pow(3), CMatrix::identity(3))));

    bool all_minus = true, all_plus = true, all_some = true;
    for (i64 k = 0; k < 10; ++k) {
        const auto sr = sic_shift_check(0.05 + 0.6 * static_cast<double>(k), opt.tol);
        all_minus = all_minus && sr.maps_to_minus;
        all_plus = all_plus && sr.maps_to_plus;
        all_some = all_some && (sr.maps_to_minus || sr.maps_to_plus);
    }
    std::string direction = all_minus ? (all_plus ? "both" : "minus") : (all_plus ? "plus" : "mixed");
    rep.claims.push_back(claims::boolean("shift-direction", "sic-shift",
                                         "orbit maps to phi +- 2pi/9",
                                         "measured shift: " + direction, all_some));
    return rep;
}

/// The full battery over a list of dimensions, claims prefixed per dimension.
inline Report report_all(const std::vector<i64>& dims, const VerifyOptions& opt = {}) {
    Report rep;
    rep.command = "report all";
    rep.dimensions = dims;
    auto absorb = [&rep](i64 n, const Report& sub) {
        for (const auto& c : sub.claims) {
            Claim copy = c;
            copy.id = "N=" + fmt_int(n) + "/" + sub.command.substr(sub.command.find(' ') + 1) +
                      "/" + c.id;
            rep.claims.push_back(std::move(copy));
        }
    };
    for (i64 n : dims) {
        absorb(n, verify_mub(n, opt));
        if (n == 2 || n == 4) {
            absorb(n, verify_smalldim(n, opt));
            continue;
        }
        if (n <= opt.enumeration_cap) {
            absorb(n, verify_counts(n, opt));
            absorb(n, verify_orbits(n, opt));
        }
        if (n == 3 || n == 5) absorb(n, verify_correspondence(n, opt));
        if (n >= 3 && n <= 7) absorb(n, verify_distances(n, opt));
        if (n >= 3) absorb(n, verify_dependencies(n, std::nullopt, opt));
        if (n == 3) absorb(n, verify_sic(100, opt));
    }
    return rep;
}

} // namespace mubkit
