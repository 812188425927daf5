#pragma once

#include <bit>
#include <chrono>
#include <functional>

#include "mubkit/mubs.hpp"

namespace mubkit {

// ---------------------------------------------------------------------------
// Budgeted search for dimension-8 fiducials with root-of-unity components
// whose extraspecial orbit would collect into a complete MUB. Expected to
// find nothing; the point is to run, checkpoint and report progress.
// ---------------------------------------------------------------------------

struct Dim8SearchProgress {
    i64 tested = 0;
    i64 budget = 0;
    i64 next_index = 0;
    i64 found = 0;
    double seconds = 0;
};

struct Dim8SearchResult {
    i64 roots = 16;
    i64 budget = 0;
    i64 start_index = 0;
    i64 next_index = 0;  // resume point
    i64 space_size = 0;  // roots^7 candidates (first exponent pinned to 0)
    i64 tested = 0;
    i64 found = 0;
    std::vector<i64> found_indices;
    bool space_exhausted = false;
    double seconds = 0;
};

namespace detail {

/// The three-factor extraspecial element X^a Z^b (a, b packed as 3-bit
/// masks, first factor in the high bit) acting on 8 components:
/// out[s ^ a] = (-1)^{popcount(b & s)} in[s].
inline void extraspecial_apply(int a, int b, const Complex* in, Complex* out) {
    for (int s = 0; s < 8; ++s) {
        const int sign = std::popcount(static_cast<unsigned>(b & s)) & 1;
        out[s ^ a] = sign ? -in[s] : in[s];
    }
}

} // namespace detail

/// Scan candidates index-by-index; each candidate is a flat vector whose
/// seven free components are `roots`-th roots of unity. A candidate survives
/// when every nontrivial orbit overlap |<f|D f>|^2 is 0 or 1/8 (with exactly
/// seven orthogonal partners), and its orbit then splits into eight bases
/// forming a complete MUB with the computational basis.
inline Dim8SearchResult search_dim8_fiducials(
    i64 roots, i64 budget, i64 start_index = 0,
    const std::function<void(const Dim8SearchProgress&)>& progress = {}, i64 progress_every = 4096) {
    if (roots < 2) throw DomainError("search_dim8_fiducials: need at least 2 roots");
    Dim8SearchResult res;
    res.roots = roots;
    res.budget = budget;
    res.start_index = start_index;
    res.space_size = 1;
    for (int k = 0; k < 7; ++k) res.space_size *= roots;

    std::vector<Complex> root_table(static_cast<std::size_t>(roots));
    for (i64 r = 0; r < roots; ++r) root_table[static_cast<std::size_t>(r)] = root_of_unity(r, roots);

    const auto t0 = std::chrono::steady_clock::now();
    const double scale = 1.0 / std::sqrt(8.0);
    Complex f[8], df[8];
    i64 idx = start_index;
    for (; idx < res.space_size && res.tested < budget; ++idx) {
        i64 code = idx;
        f[0] = scale;
        for (int k = 1; k < 8; ++k) {
            f[k] = root_table[static_cast<std::size_t>(code % roots)] * scale;
            code /= roots;
        }
        ++res.tested;

        bool viable = true;
        int orthogonal_partners = 0;
        for (int g = 1; g < 64 && viable; ++g) {
            const int a = g >> 3, b = g & 7;
            detail::extraspecial_apply(a, b, f, df);
            Complex ov(0, 0);
            for (int i = 0; i < 8; ++i) ov += std::conj(f[i]) * df[i];
            const double t = std::norm(ov);
            if (t < 1e-6) {
                ++orthogonal_partners;
            } else if (std::abs(t - 0.125) > 1e-6) {
                viable = false;
            }
        }
        if (viable && orthogonal_partners == 7) {
            // Full confirmation: group the orbit and run the MUB check.
            CVector fid(f, f + 8);
            try {
                CompleteMub m;
                m.bases.push_back(computational_basis(8));
                for (auto& basis_vectors : detail::group_by_orthogonality(
                         [&] {
                             std::vector<CVector> orbit;
                             for (int g = 0; g < 64; ++g) {
                                 detail::extraspecial_apply(g >> 3, g & 7, fid.data(), df);
                                 orbit.emplace_back(df, df + 8);
                             }
                             return orbit;
                         }(),
                         8, Tolerance(1e-6))) {
                    Basis basis;
                    basis.vectors = std::move(basis_vectors);
                    m.bases.push_back(std::move(basis));
                }
                if (is_complete_mub(m, Tolerance(1e-6))) {
                    ++res.found;
                    res.found_indices.push_back(idx);
                }
            } catch (const Error&) {
                // Orbit fails to split into full bases: not a hit.
            }
        }

        if (progress && (res.tested % progress_every == 0)) {
            const double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            progress({res.tested, budget, idx + 1, res.found, secs});
        }
    }
    res.next_index = idx;
    res.space_exhausted = idx >= res.space_size;
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

} // namespace mubkit
