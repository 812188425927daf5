#pragma once

#include <array>
#include <deque>
#include <set>

#include "mubkit/mubs.hpp"

namespace mubkit {

// ---------------------------------------------------------------------------
// Orbit complete MUBs in dimensions 2 and 4 from the extraspecial group.
// ---------------------------------------------------------------------------

/// The fiducials whose extraspecial orbits collect into complete MUBs:
/// (1, mu)/sqrt(2) with mu = e^{i pi/4}, and (1,1,1,+-i)/2.
inline std::vector<CVector> small_dim_fiducials(i64 n) {
    if (n == 2) {
        return {{Complex(1, 0) / std::sqrt(2.0), mu_power(1) / std::sqrt(2.0)}};
    }
    if (n == 4) {
        CVector f1 = {0.5, 0.5, 0.5, Complex(0, 0.5)};
        CVector f2 = {0.5, 0.5, 0.5, Complex(0, -0.5)};
        return {f1, f2};
    }
    throw DomainError("small_dim_fiducials: defined for N = 2 and 4 only");
}

namespace detail {

/// Hermitian two-qubit Paulis, skipping the identity: 15 matrices indexed by
/// (a1, b1, a2, b2) with the per-factor table {1, Z, X, Y}.
inline std::vector<CMatrix> two_qubit_paulis() {
    const CMatrix x2 = x_matrix(2), z2 = z_matrix(2);
    const CMatrix y2 = (x2 * z2) * Complex(0, 1);
    const CMatrix table[4] = {CMatrix::identity(2), z2, x2, y2};
    std::vector<CMatrix> out;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (i == 0 && j == 0) continue;
            out.push_back(kron(table[i], table[j]));
        }
    }
    return out;
}

/// Maximal commuting triples {P, Q, PQ} among the 15 two-qubit Paulis.
inline std::vector<std::array<int, 3>> pauli_classes(const std::vector<CMatrix>& paulis) {
    auto commute = [&](int i, int j) {
        return max_abs_diff(paulis[static_cast<std::size_t>(i)] * paulis[static_cast<std::size_t>(j)],
                            paulis[static_cast<std::size_t>(j)] * paulis[static_cast<std::size_t>(i)]) < 1e-9;
    };
    auto product_index = [&](int i, int j) {
        const CMatrix prod =
            paulis[static_cast<std::size_t>(i)] * paulis[static_cast<std::size_t>(j)];
        for (int k = 0; k < static_cast<int>(paulis.size()); ++k) {
            if (proportional(prod, paulis[static_cast<std::size_t>(k)])) return k;
        }
        return -1;
    };
    std::set<std::array<int, 3>> classes;
    for (int i = 0; i < static_cast<int>(paulis.size()); ++i) {
        for (int j = i + 1; j < static_cast<int>(paulis.size()); ++j) {
            if (!commute(i, j)) continue;
            const int k = product_index(i, j);
            if (k < 0 || k == i || k == j) continue;
            std::array<int, 3> cls = {i, j, k};
            std::sort(cls.begin(), cls.end());
            classes.insert(cls);
        }
    }
    return {classes.begin(), classes.end()};
}

/// Deterministic backtracking for five disjoint classes covering all 15
/// Paulis, with the clock-clock class (whose eigenbasis is computational)
/// forced first.
inline std::vector<std::array<int, 3>> pauli_spread(const std::vector<CMatrix>& paulis,
                                                    const std::vector<std::array<int, 3>>& classes) {
    // Locate the class containing both Z x 1 and 1 x Z: indices into the
    // (a1,b1,a2,b2) enumeration with table {1,Z,X,Y} are 1*4-1=3 and 1-1=0.
    std::size_t z_class = classes.size();
    for (std::size_t c = 0; c < classes.size(); ++c) {
        const auto& cls = classes[c];
        const bool has_z1 = std::find(cls.begin(), cls.end(), 3) != cls.end();
        const bool has_z2 = std::find(cls.begin(), cls.end(), 0) != cls.end();
        if (has_z1 && has_z2) z_class = c;
    }
    if (z_class == classes.size()) throw Error("pauli_spread: clock class not found");

    std::vector<std::array<int, 3>> picked = {classes[z_class]};
    std::set<int> used(classes[z_class].begin(), classes[z_class].end());
    std::function<bool(std::size_t)> extend = [&](std::size_t from) {
        if (picked.size() == 5) return used.size() == paulis.size();
        for (std::size_t c = from; c < classes.size(); ++c) {
            const auto& cls = classes[c];
            if (std::any_of(cls.begin(), cls.end(), [&](int m) { return used.contains(m); })) continue;
            picked.push_back(cls);
            for (int m : cls) used.insert(m);
            if (extend(c + 1)) return true;
            for (int m : cls) used.erase(m);
            picked.pop_back();
        }
        return false;
    };
    if (!extend(0)) throw Error("pauli_spread: no spread extends the clock class");
    return picked;
}

/// Joint eigenbasis of a commuting class {P, Q, PQ} of Hermitian involutions.
inline Basis class_eigenbasis(const std::vector<CMatrix>& paulis, const std::array<int, 3>& cls,
                              const std::string& label) {
    const CMatrix& p = paulis[static_cast<std::size_t>(cls[0])];
    const CMatrix& q = paulis[static_cast<std::size_t>(cls[1])];
    const CMatrix id = CMatrix::identity(4);
    Basis basis;
    basis.label = label;
    for (int s1 : {+1, -1}) {
        for (int s2 : {+1, -1}) {
            const CMatrix proj =
                ((id + p * static_cast<double>(s1)) * (id + q * static_cast<double>(s2))) * 0.25;
            const auto vecs = orthonormal_from_projector(proj);
            if (vecs.size() != 1) throw Error("class_eigenbasis: joint projector is not rank one");
            basis.vectors.push_back(vecs[0]);
        }
    }
    return basis;
}

/// Breadth-first search over Clifford circuits built from one-qubit H and S
/// plus CZ, returning for each target basis a circuit unitary whose image of
/// the computational basis matches it projectively.
inline std::vector<CMatrix> circuits_reaching(const std::vector<Basis>& targets) {
    const CMatrix h2 = fourier_unitary(2);
    const CMatrix s2 = CMatrix::diagonal({Complex(1, 0), Complex(0, 1)});
    const CMatrix id2 = CMatrix::identity(2);
    CMatrix cz = CMatrix::identity(4);
    cz(3, 3) = -1.0;
    const std::vector<CMatrix> gens = {kron(h2, id2), kron(id2, h2), kron(s2, id2),
                                       kron(id2, s2), cz};
    const Basis comp = computational_basis(4);

    std::vector<CMatrix> found(targets.size());
    std::vector<bool> done(targets.size(), false);
    std::size_t remaining = targets.size();

    std::vector<Basis> visited;
    std::deque<CMatrix> queue;
    queue.push_back(CMatrix::identity(4));
    visited.push_back(comp);
    auto consider = [&](const CMatrix& v, const Basis& image) {
        for (std::size_t t = 0; t < targets.size(); ++t) {
            if (!done[t] && bases_equal_up_to_phase_perm(image, targets[t])) {
                found[t] = v;
                done[t] = true;
                --remaining;
            }
        }
    };
    consider(queue.front(), comp);
    while (!queue.empty() && remaining > 0) {
        const CMatrix v = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            const CMatrix next = g * v;
            Basis image;
            image.vectors = computational_basis(4).vectors;
            for (auto& vec : image.vectors) vec = next * vec;
            bool seen = false;
            for (const auto& b : visited) {
                if (bases_equal_up_to_phase_perm(image, b)) {
                    seen = true;
                    break;
                }
            }
            if (seen) continue;
            visited.push_back(image);
            consider(next, image);
            queue.push_back(next);
        }
    }
    if (remaining > 0) throw SearchFailed("circuits_reaching: some target bases unreachable");
    return found;
}

} // namespace detail

/// The standard complete MUB in dimension 4: computational basis plus the
/// joint eigenbases of a spread of two-qubit Pauli classes.
inline CompleteMub standard_mub_dim4() {
    const auto paulis = detail::two_qubit_paulis();
    const auto spread = detail::pauli_spread(paulis, detail::pauli_classes(paulis));
    CompleteMub m;
    m.label = "standard[N=4]";
    m.bases.push_back(computational_basis(4));
    for (std::size_t c = 1; c < spread.size(); ++c) {
        m.bases.push_back(
            detail::class_eigenbasis(paulis, spread[c], "standard[N=4]/k=" + std::to_string(c)));
    }
    return m;
}

/// The unitaries that rotate the computational basis onto the other standard
/// bases. For N = 2 these are the Fourier matrix and the quarter-phase times
/// it; for N = 4 they are H/S/CZ circuits found by search.
inline std::vector<CMatrix> small_dim_rotations(i64 n) {
    if (n == 2) {
        const CMatrix f = fourier_unitary(2);
        return {f, standard_rotation(2) * f};
    }
    if (n == 4) {
        const auto std4 = standard_mub_dim4();
        const std::vector<Basis> targets(std4.bases.begin() + 1, std4.bases.end());
        return detail::circuits_reaching(targets);
    }
    throw DomainError("small_dim_rotations: defined for N = 2 and 4 only");
}

/// The 3 (N = 2) or 10 (N = 4) orbit complete MUBs: each fiducial's orbit
/// plus the computational basis, rotated onto every standard basis.
inline std::vector<CompleteMub> small_dim_orbit_mubs(i64 n) {
    const auto fiducials = small_dim_fiducials(n);
    std::vector<CompleteMub> seeds;
    for (std::size_t fi = 0; fi < fiducials.size(); ++fi) {
        CompleteMub m;
        m.label = "orbit[N=" + std::to_string(n) + ",f=" + std::to_string(fi + 1) + "]";
        m.bases.push_back(computational_basis(n));
        const auto orbit = wh_orbit_bases(fiducials[fi]);
        for (std::size_t b = 0; b < orbit.size(); ++b) {
            Basis basis;
            basis.label = m.label + "/b=" + std::to_string(b);
            basis.vectors = orbit[b];
            m.bases.push_back(std::move(basis));
        }
        seeds.push_back(std::move(m));
    }
    std::vector<CompleteMub> out = seeds;
    const auto rotations = small_dim_rotations(n);
    for (std::size_t r = 0; r < rotations.size(); ++r) {
        for (std::size_t fi = 0; fi < seeds.size(); ++fi) {
            out.push_back(apply_unitary(rotations[r], seeds[fi],
                                        "orbit[N=" + std::to_string(n) + ",f=" +
                                            std::to_string(fi + 1) + ",overlap=" +
                                            std::to_string(r + 1) + "]"));
        }
    }
    return out;
}

} // namespace mubkit
