#include "doctest.h"

#include "mubkit/small_dim.hpp"

using namespace mubkit;

TEST_CASE("dimension-2 fiducial orbit matches the displayed set") {
    const auto fs = small_dim_fiducials(2);
    REQUIRE(fs.size() == 1);
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(max_abs_diff(fs[0], CVector{s, mu_power(1) * s}) < 1e-12);

    const auto orbit = wh_orbit_bases(fs[0]);
    REQUIRE(orbit.size() == 2);
    Basis d1{{{s * mu_power(0), s * mu_power(1)}, {s * mu_power(0), s * mu_power(5)}}, "display"};
    Basis d2{{{s * mu_power(0), s * mu_power(7)}, {s * mu_power(0), s * mu_power(3)}}, "display"};
    CHECK(sets_equal_up_to_phase_perm(orbit[0], d1.vectors));
    CHECK(sets_equal_up_to_phase_perm(orbit[1], d2.vectors));
}

TEST_CASE("dimension 2 yields three orbit complete MUBs") {
    const auto mubs = small_dim_orbit_mubs(2);
    REQUIRE(mubs.size() == 3);
    for (const auto& m : mubs) CHECK(is_complete_mub(m));
    for (std::size_t i = 0; i < mubs.size(); ++i)
        for (std::size_t j = i + 1; j < mubs.size(); ++j) CHECK(!mubs_equal(mubs[i], mubs[j]));

    const auto std2 = standard_mub(2);
    for (std::size_t i = 0; i < mubs.size(); ++i) {
        const auto shared = shared_bases(std2, mubs[i]);
        REQUIRE(shared.size() == 1);
        CHECK(shared[0].first == i); // families walk through the standard bases in order
    }
}

TEST_CASE("two-qubit Pauli classes") {
    const auto paulis = detail::two_qubit_paulis();
    REQUIRE(paulis.size() == 15);
    for (const auto& p : paulis) {
        CHECK(max_abs_diff(p, p.adjoint()) < 1e-12);
        CHECK(max_abs_diff(p * p, CMatrix::identity(4)) < 1e-12);
    }
    const auto classes = detail::pauli_classes(paulis);
    CHECK(classes.size() == 15);
    const auto spread = detail::pauli_spread(paulis, classes);
    REQUIRE(spread.size() == 5);
    std::set<int> covered;
    for (const auto& cls : spread) covered.insert(cls.begin(), cls.end());
    CHECK(covered.size() == 15);
}

TEST_CASE("dimension-4 standard complete MUB") {
    const auto m = standard_mub_dim4();
    REQUIRE(m.bases.size() == 5);
    CHECK(bases_equal_up_to_phase_perm(m.bases[0], computational_basis(4)));
    CHECK(is_complete_mub(m));
}

TEST_CASE("dimension-4 rotations map the computational basis onto each standard basis") {
    const auto m = standard_mub_dim4();
    const auto rots = small_dim_rotations(4);
    REQUIRE(rots.size() == 4);
    const auto comp = computational_basis(4);
    for (std::size_t k = 0; k < rots.size(); ++k) {
        CHECK(unitarity_deviation(rots[k]) < 1e-10);
        Basis image;
        image.vectors = comp.vectors;
        for (auto& v : image.vectors) v = rots[k] * v;
        CHECK(bases_equal_up_to_phase_perm(image, m.bases[k + 1]));
    }
}

TEST_CASE("dimension-4 fiducial orbits form complete MUBs") {
    const auto fs = small_dim_fiducials(4);
    REQUIRE(fs.size() == 2);
    for (const auto& f : fs) {
        const auto orbit = wh_orbit_bases(f);
        REQUIRE(orbit.size() == 4);
        // The 16 orbit vectors are projectively distinct.
        std::vector<CVector> flat;
        for (const auto& basis : orbit) flat.insert(flat.end(), basis.begin(), basis.end());
        for (std::size_t i = 0; i < flat.size(); ++i)
            for (std::size_t j = i + 1; j < flat.size(); ++j)
                CHECK(!equal_up_to_phase(flat[i], flat[j]));
    }
}

TEST_CASE("dimension 4 yields ten orbit complete MUBs") {
    const auto mubs = small_dim_orbit_mubs(4);
    REQUIRE(mubs.size() == 10);
    for (const auto& m : mubs) CHECK(is_complete_mub(m));
    for (std::size_t i = 0; i < mubs.size(); ++i)
        for (std::size_t j = i + 1; j < mubs.size(); ++j) CHECK(!mubs_equal(mubs[i], mubs[j]));

    const auto std4 = standard_mub_dim4();
    for (const auto& m : mubs) {
        CHECK(shared_bases(std4, m).size() == 1);
    }
}

TEST_CASE("small-dimension entry points reject other dimensions") {
    CHECK_THROWS_AS(small_dim_fiducials(3), DomainError);
    CHECK_THROWS_AS(small_dim_rotations(5), DomainError);
}
