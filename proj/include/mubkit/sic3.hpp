#pragma once

#include <string>
#include <vector>

#include "mubkit/mubs.hpp"

namespace mubkit {

/// The dimension-3 SIC family is parametrised by an angle phi through the
/// fiducial (0, 1, -e^{i phi})/sqrt(2).
struct SicFiducial {
    double phi = 0;

    CVector vector() const {
        const double s = 1.0 / std::sqrt(2.0);
        return {Complex(0, 0), Complex(s, 0), -std::polar(s, phi)};
    }
};

/// The nine WH-orbit vectors of a SIC fiducial, displacement indices in
/// lexicographic order.
inline std::vector<CVector> sic_orbit(const SicFiducial& f) {
    const CVector v = f.vector();
    std::vector<CVector> out;
    out.reserve(9);
    for (i64 p1 = 0; p1 < 3; ++p1) {
        for (i64 p2 = 0; p2 < 3; ++p2) {
            out.push_back(displacement(DisplacementIndex(p1, p2, 3)) * v);
        }
    }
    return out;
}

/// Max deviation of |<e_i|e_j>|^2 from 1/(N+1) = 1/4 over distinct pairs.
inline double sic_deviation(const std::vector<CVector>& orbit) {
    double dev = 0;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
        for (std::size_t j = i + 1; j < orbit.size(); ++j) {
            dev = std::max(dev, std::abs(std::norm(inner(orbit[i], orbit[j])) - 0.25));
        }
    }
    return dev;
}

inline bool is_sic(const std::vector<CVector>& orbit, const Tolerance& tol = Tolerance()) {
    return orbit.size() == 9 && sic_deviation(orbit) < tol.eps;
}

/// diag(1, sigma^8, sigma^7): the diagonal entries are the components of the
/// x = 2 cubic fiducial. Unitary of projective order 9.
inline CMatrix sic_shift_unitary() {
    return CMatrix::diagonal({sigma_power(0), sigma_power(8), sigma_power(7)});
}

struct SicShiftReport {
    double phi = 0;
    bool maps_to_minus = false; // image orbit equals orbit(phi - 2 pi/9)
    bool maps_to_plus = false;  // image orbit equals orbit(phi + 2 pi/9)
};

/// Apply the diagonal relating unitary to a SIC orbit and test, as projective
/// 9-vector sets, which shifted orbit it lands on. The direction is measured,
/// not assumed.
inline SicShiftReport sic_shift_check(double phi, const Tolerance& tol = Tolerance()) {
    SicShiftReport rep;
    rep.phi = phi;
    const CMatrix u = sic_shift_unitary();
    std::vector<CVector> image;
    for (const auto& v : sic_orbit({phi})) image.push_back(u * v);
    const double step = 2.0 * std::numbers::pi / 9.0;
    rep.maps_to_minus = sets_equal_up_to_phase_perm(image, sic_orbit({phi - step}), tol);
    rep.maps_to_plus = sets_equal_up_to_phase_perm(image, sic_orbit({phi + step}), tol);
    return rep;
}

} // namespace mubkit
