#include "doctest.h"

#include "mubkit/sic3.hpp"

using namespace mubkit;

TEST_CASE("SIC orbits across the phi family") {
    for (double phi : {0.0, 2.0 * std::numbers::pi / 9.0, 0.1234}) {
        const auto orbit = sic_orbit({phi});
        REQUIRE(orbit.size() == 9);
        for (const auto& v : orbit) CHECK(std::abs(norm(v) - 1.0) < 1e-12);
        CHECK(sic_deviation(orbit) < 1e-9);
        CHECK(is_sic(orbit));
    }
    // A small grid; the acceptance suite runs the full 100-point version.
    for (int k = 0; k < 12; ++k) {
        CHECK(is_sic(sic_orbit({k * 0.5})));
    }
}

TEST_CASE("relating unitary: diagonal, order, and fiducial-level shift") {
    const auto u = sic_shift_unitary();
    CHECK(unitarity_deviation(u) < 1e-12);
    // Diagonal equals the x = 2 cubic fiducial components.
    const auto f2 = alltop_fiducial(2, 3);
    for (std::size_t a = 0; a < 3; ++a) {
        CHECK(std::abs(u(a, a) - f2[a] * std::sqrt(3.0)) < 1e-12);
    }
    // Projective order 9.
    CHECK(max_abs_diff(u.pow(9), CMatrix::identity(3)) < 1e-12);
    for (std::size_t k = 1; k < 9; ++k) {
        CHECK(!proportional(u.pow(k), CMatrix::identity(3)));
    }
    // Applied to the phi = 0 fiducial, the image lies in the orbit shifted by
    // -2 pi/9 (measured direction).
    const CVector image = u * SicFiducial{0.0}.vector();
    bool member = false;
    for (const auto& v : sic_orbit({-2.0 * std::numbers::pi / 9.0})) {
        member = member || equal_up_to_phase(image, v);
    }
    CHECK(member);
}

TEST_CASE("relating unitary maps SIC orbits onto shifted SIC orbits") {
    for (double phi : {0.0, 0.3, 1.1, 2.9}) {
        const auto rep = sic_shift_check(phi);
        CHECK(rep.maps_to_minus);
    }
    // The set map commutes with the WH action: images of orbits are orbits,
    // already verified as 9-element projective set equality above; check one
    // explicit displacement conjugation for good measure.
    const auto u = sic_shift_unitary();
    const auto orbit = sic_orbit({0.7});
    std::vector<CVector> image;
    for (const auto& v : orbit) image.push_back(u * v);
    for (i64 p1 = 0; p1 < 3; ++p1) {
        for (i64 p2 = 0; p2 < 3; ++p2) {
            const CMatrix d = displacement(DisplacementIndex(p1, p2, 3));
            std::vector<CVector> displaced;
            for (const auto& v : image) displaced.push_back(d * v);
            CHECK(sets_equal_up_to_phase_perm(displaced, image));
        }
    }
}
