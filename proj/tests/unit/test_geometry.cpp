#include "doctest.h"

#include <random>

#include "mubkit/geometry.hpp"

using namespace mubkit;

namespace {

CVector random_unit(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    CVector v(n);
    for (auto& x : v) x = Complex(g(rng), g(rng));
    return normalized(v);
}

} // namespace

TEST_CASE("Bloch vectors") {
    CVector e0 = {1.0, 0.0};
    const auto b = bloch_vector(e0);
    CHECK(std::abs(b(0, 0) - Complex(0.5, 0)) < 1e-12);
    CHECK(std::abs(b(1, 1) - Complex(-0.5, 0)) < 1e-12);
    CHECK(std::abs(b(0, 1)) < 1e-12);

    // Computational vs Fourier in N=3: all nine trace inner products vanish.
    const auto m3 = standard_mub(3);
    for (const auto& e : m3.bases[0].vectors) {
        for (const auto& f : m3.bases[1].vectors) {
            CHECK(std::abs(bloch_inner(bloch_vector(e), bloch_vector(f))) < 1e-10);
        }
    }

    std::mt19937_64 rng(3);
    for (i64 n : {2, 3, 5}) {
        const auto v = random_unit(static_cast<std::size_t>(n), rng);
        const auto bv = bloch_vector(v);
        CHECK(std::abs(bv.trace()) < 1e-12);
        CHECK(max_abs_diff(bv, bv.adjoint()) < 1e-12);
        CHECK(bloch_inner(bv, bv) ==
              doctest::Approx(1.0 - 1.0 / static_cast<double>(n)).epsilon(1e-10));
    }

    CVector unnormalized(3, Complex(1, 0));
    CHECK_THROWS_AS(bloch_vector(unnormalized), NotUnit);
}

TEST_CASE("unbiasedness is equivalent to Bloch-plane orthogonality") {
    const auto family = all_orbit_complete_mubs(3);
    const auto std3 = standard_mub(3);
    std::vector<Basis> bases = {std3.bases[0], std3.bases[1], family[0].mub.bases[1],
                                family[1].mub.bases[2]};
    for (std::size_t i = 0; i < bases.size(); ++i) {
        for (std::size_t j = i + 1; j < bases.size(); ++j) {
            double max_bloch = 0;
            for (const auto& e : bases[i].vectors)
                for (const auto& f : bases[j].vectors)
                    max_bloch = std::max(
                        max_bloch, std::abs(bloch_inner(bloch_vector(e), bloch_vector(f))));
            CHECK(is_mub_pair(bases[i], bases[j]) == (max_bloch < 1e-9));
        }
    }
}

TEST_CASE("chordal distance endpoints") {
    const auto m5 = standard_mub(5);
    CHECK(chordal_distance_sq(m5.bases[0], m5.bases[0]) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(chordal_distance_sq(m5.bases[0], m5.bases[1]) == doctest::Approx(1.0).epsilon(1e-12));
    std::mt19937_64 rng(7);
    for (int t = 0; t < 5; ++t) {
        const Basis b1 = basis_from_columns(haar_unitary(4, rng), "h1");
        const Basis b2 = basis_from_columns(haar_unitary(4, rng), "h2");
        const double d = chordal_distance_sq(b1, b2);
        CHECK(d >= -1e-12);
        CHECK(d <= 1.0 + 1e-12);
    }
    CHECK_THROWS_AS(chordal_distance_sq(m5.bases[0], standard_mub(3).bases[0]), DimensionMismatch);
}

TEST_CASE("distance spectrum of the dimension-3 families") {
    const auto std3 = standard_mub(3);
    const auto family = all_orbit_complete_mubs(3);

    // A standard basis against a non-shared basis of an overlapping orbit
    // family sits at (N-1)/N = 2/3.
    CHECK(chordal_distance_sq(std3.bases[1], family[0].mub.bases[1]) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-10));

    // Full spectrum over all standard plus orbit bases: distances cluster at
    // {c2, 2/3, 1}.
    std::vector<Basis> bases = std3.bases;
    for (const auto& b : orbit_bases(family)) bases.push_back(b);
    const auto rep = distance_spectrum(bases);
    REQUIRE(rep.clusters.size() == 3);
    CHECK(rep.clusters[0].value == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
    CHECK(rep.clusters[2].value == doctest::Approx(1.0).epsilon(1e-9));
    // The middle cluster is the non-overlap constant; its value is measured
    // and checked against the two closed-form candidates below.
    CHECK(rep.clusters[1].value > 2.0 / 3.0);
    CHECK(rep.clusters[1].value < 1.0);
}

TEST_CASE("overlapping families sit at a single distance (N-1)/N") {
    for (i64 n : {3, 5}) {
        const auto rep = overlap_distance_check(n);
        CHECK(rep.mub_pairs > 0);
        CHECK(rep.spread < 1e-9);
        CHECK(rep.max_deviation < 1e-9);
    }
}

TEST_CASE("non-overlapping orbit families sit at a single measured constant") {
    for (i64 n : {3, 5}) {
        const auto rep = non_overlap_distance_check(n);
        CHECK(rep.mub_pairs > 0);
        CHECK(rep.spread < 1e-9);
        // Measured resolution of the sign: the constant lands on the plus
        // candidate, as the 2-design row sum forces.
        CHECK(rep.matches == "plus");
        CHECK(rep.max_deviation_from_match < 1e-9);
        if (n == 3) CHECK(rep.mean_value == doctest::Approx(7.0 / 9.0).epsilon(1e-10));
    }
}

TEST_CASE("2-design row sums equal N") {
    for (i64 n : {3, 5}) {
        const auto std_m = standard_mub(n);
        const auto orbit = orbit_complete_mub(1, n);
        CHECK(two_design_row_sum_deviation(std_m, orbit) < 1e-9);
        CHECK(two_design_row_sum_deviation(orbit, std_m) < 1e-9);
    }
}

TEST_CASE("Monte-Carlo average distance approaches N/(N+1)") {
    const double got = average_distance_mc(3, 2000, 12345);
    CHECK(got == doctest::Approx(0.75).epsilon(0.05));
}

TEST_CASE("cubic-sum dependencies for N = 3k+2") {
    const auto rep = cubic_dependency_check(1, 5);
    CHECK(!rep.residue_one_mod_three);
    CHECK(rep.fiducial_overlap_abs < 1e-9);
    CHECK(rep.one_per_standard_basis);
    CHECK(rep.max_orthogonality_deviation < 1e-9);
    CHECK(rep.rank_value <= 4);

    for (i64 x = 1; x < 5; ++x) {
        const auto r = cubic_dependency_check(x, 5);
        CHECK(r.max_orthogonality_deviation < 1e-9);
        CHECK(r.rank_value <= 4);
        CHECK(r.one_per_standard_basis);
    }
}

TEST_CASE("no cubic-sum orthogonality for N = 3k+1") {
    const auto rep = cubic_dependency_check(1, 7);
    CHECK(rep.residue_one_mod_three);
    CHECK(rep.fiducial_overlap_abs > 1e-3);
    CHECK(rep.one_per_standard_basis);
}

TEST_CASE("phase-point invariant vectors and their rank") {
    const auto r3 = phase_point_dependencies(3);
    CHECK(r3.invariant_vectors.size() == 4);
    CHECK(r3.rank_value == 2);
    CHECK(r3.expected_rank == 2);
    CHECK(r3.max_fix_deviation < 1e-10);
    // The computational basis holds |0> fixed.
    CHECK(r3.invariant_vector_index[0] == 0);

    const auto r5 = phase_point_dependencies(5);
    CHECK(r5.invariant_vectors.size() == 6);
    CHECK(r5.rank_value == 3);
}
