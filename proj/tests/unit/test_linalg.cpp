#include "doctest.h"

#include <random>

#include "mubkit/clifford.hpp"
#include "mubkit/linalg.hpp"
#include "mubkit/weyl_heisenberg.hpp"

using namespace mubkit;

namespace {

CVector basis_vector(std::size_t n, std::size_t k) {
    CVector v(n, Complex(0, 0));
    v[k] = 1.0;
    return v;
}

CVector random_unit(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    CVector v(n);
    for (auto& x : v) x = Complex(g(rng), g(rng));
    return normalized(v);
}

} // namespace

TEST_CASE("roots of unity come from reduced rational exponents") {
    for (i64 n : {2, 3, 5, 7, 9, 16}) {
        Complex sum(0, 0);
        for (i64 k = 0; k < n; ++k) sum += root_of_unity(k, n);
        CHECK(std::abs(sum) < 1e-12);
        CHECK(std::abs(root_of_unity(n, n) - Complex(1, 0)) < 1e-15);
        CHECK(std::abs(root_of_unity(-1, n) - std::conj(root_of_unity(1, n))) < 1e-15);
    }
    CHECK(std::abs(tau(5) - (-std::polar(1.0, std::numbers::pi / 5))) < 1e-15);
    CHECK(std::abs(tau(3) * tau(3) - omega(3)) < 1e-15);
}

TEST_CASE("inner products on standard and Fourier vectors") {
    const auto e0 = basis_vector(3, 0), e1 = basis_vector(3, 1);
    CHECK(std::abs(inner(e0, e0) - Complex(1, 0)) < 1e-15);
    CHECK(std::abs(inner(e0, e1)) < 1e-15);

    CVector u(3, Complex(1.0 / std::sqrt(3.0), 0));
    CVector f(3);
    for (int a = 0; a < 3; ++a) f[a] = root_of_unity(0, 3) / std::sqrt(3.0);
    CHECK(std::norm(inner(u, f)) == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(inner(e0, basis_vector(4, 0)), DimensionMismatch);
}

TEST_CASE("inner is conjugate-linear in its first argument") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const auto v = random_unit(5, rng), w = random_unit(5, rng);
        const Complex s(0.3, -1.2);
        CHECK(std::abs(inner(scaled(v, s), w) - std::conj(s) * inner(v, w)) < 1e-12);
        CHECK(std::abs(inner(v, scaled(w, s)) - s * inner(v, w)) < 1e-12);
    }
}

TEST_CASE("cyclic eigenprojectors: identity, clock, parity") {
    const auto p1 = cyclic_eigenprojectors(CMatrix::identity(3), 1);
    REQUIRE(p1.size() == 1);
    CHECK(max_abs_diff(p1[0], CMatrix::identity(3)) < 1e-12);

    // Z in N=3 is diagonal: projectors land on the computational rays.
    const auto pz = cyclic_eigenprojectors(z_matrix(3), 3);
    REQUIRE(pz.size() == 3);
    for (std::size_t k = 0; k < 3; ++k) {
        CMatrix expect(3);
        expect(k, k) = 1.0;
        CHECK(max_abs_diff(pz[k], expect) < 1e-12);
    }

    // Parity in N=5 splits into eigenspaces of dimension 3 and 2.
    const auto pa = cyclic_eigenprojectors(parity_unitary(5).matrix, 2);
    REQUIRE(pa.size() == 2);
    CHECK(std::llround(pa[0].trace().real()) == 3);
    CHECK(std::llround(pa[1].trace().real()) == 2);

    CHECK_THROWS_AS(cyclic_eigenprojectors(z_matrix(3), 2), NotOrderM);
}

TEST_CASE("projector completeness and idempotence across an order-m test set") {
    struct Case {
        CMatrix u;
        i64 m;
    };
    std::vector<Case> cases;
    cases.push_back({z_matrix(3), 3});
    cases.push_back({x_matrix(5), 5});
    cases.push_back({parity_unitary(7).matrix, 2});
    cases.push_back({symplectic_unitary(SymplecticMatrix::shear(5)), 5});
    cases.push_back({normalize_to_order(symplectic_unitary(SymplecticMatrix::fourier(3)), 4).matrix, 4});
    for (const auto& c : cases) {
        const auto projs = cyclic_eigenprojectors(c.u, c.m);
        CMatrix sum(c.u.dim());
        for (std::size_t k = 0; k < projs.size(); ++k) {
            sum = sum + projs[k];
            CHECK(max_abs_diff(projs[k] * projs[k], projs[k]) < 1e-8);
            for (std::size_t l = k + 1; l < projs.size(); ++l) {
                CHECK((projs[k] * projs[l]).max_abs() < 1e-8);
            }
        }
        CHECK(max_abs_diff(sum, CMatrix::identity(c.u.dim())) < 1e-8);
    }
}

TEST_CASE("orthonormal vectors from projectors") {
    const auto full = orthonormal_from_projector(CMatrix::identity(3));
    REQUIRE(full.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(std::abs(inner(full[i], full[j]) - (i == j ? 1.0 : 0.0)) < 1e-12);

    CMatrix p00(3);
    p00(0, 0) = 1.0;
    const auto single = orthonormal_from_projector(p00);
    REQUIRE(single.size() == 1);
    CHECK(equal_up_to_phase(single[0], basis_vector(3, 0)));

    // Vectors spanning the +1 parity eigenspace stay fixed under parity.
    const auto parity = parity_unitary(5).matrix;
    const auto projs = cyclic_eigenprojectors(parity, 2);
    const auto fixed = orthonormal_from_projector(projs[0]);
    REQUIRE(fixed.size() == 3);
    for (const auto& v : fixed) CHECK(max_abs_diff(parity * v, v) < 1e-10);

    CHECK_THROWS_AS(orthonormal_from_projector(z_matrix(3)), NotProjector);
}

TEST_CASE("numerical rank") {
    const auto e0 = basis_vector(3, 0), e1 = basis_vector(3, 1);
    CVector sum(3);
    for (int i = 0; i < 3; ++i) sum[i] = e0[i] + e1[i];
    CHECK(rank({e0, e1, sum}) == 2);
    CHECK(rank({sum}) == 1);
    CHECK_THROWS_AS(rank({}), DomainError);
}

TEST_CASE("rank is invariant under permutation and rephasing") {
    std::mt19937_64 rng(23);
    std::vector<CVector> vecs;
    for (int i = 0; i < 4; ++i) vecs.push_back(random_unit(6, rng));
    vecs.push_back(vecs[0]); // force a dependency
    const std::size_t base = rank(vecs);
    CHECK(base == 4);
    std::vector<CVector> shuffled = {scaled(vecs[3], root_of_unity(1, 7)),
                                     scaled(vecs[4], root_of_unity(3, 11)), vecs[1], vecs[0],
                                     scaled(vecs[2], Complex(0, 1))};
    CHECK(rank(shuffled) == base);
}

TEST_CASE("ray equality and basis equality up to phase and permutation") {
    std::mt19937_64 rng(7);
    const auto v = random_unit(4, rng);
    CHECK(equal_up_to_phase(v, scaled(v, std::polar(1.0, std::numbers::pi / 7))));
    CHECK(!equal_up_to_phase(basis_vector(4, 0), basis_vector(4, 1)));

    // Computational vs Fourier: every overlap is 1/N, nothing matches.
    std::vector<CVector> comp, fourier;
    for (std::size_t k = 0; k < 3; ++k) {
        comp.push_back(basis_vector(3, k));
        CVector f(3);
        for (i64 a = 0; a < 3; ++a) f[a] = root_of_unity(a * static_cast<i64>(k), 3) / std::sqrt(3.0);
        fourier.push_back(f);
    }
    CHECK(!sets_equal_up_to_phase_perm(comp, fourier));

    std::vector<CVector> scrambled = {scaled(comp[2], root_of_unity(2, 9)), comp[0],
                                      scaled(comp[1], Complex(0, -1))};
    CHECK(sets_equal_up_to_phase_perm(comp, scrambled));

    // Eigenbasis of the clock operator is the computational basis.
    std::vector<CVector> zbasis;
    for (const auto& p : cyclic_eigenprojectors(z_matrix(3), 3)) {
        const auto vs = orthonormal_from_projector(p);
        REQUIRE(vs.size() == 1);
        zbasis.push_back(vs[0]);
    }
    CHECK(sets_equal_up_to_phase_perm(zbasis, comp));
}

TEST_CASE("set equality up to phase/permutation is an equivalence relation") {
    std::mt19937_64 rng(101);
    std::vector<std::vector<CVector>> family;
    std::vector<CVector> comp;
    for (std::size_t k = 0; k < 3; ++k) comp.push_back(basis_vector(3, k));
    family.push_back(comp);
    family.push_back({scaled(comp[1], root_of_unity(5, 9)), comp[2], comp[0]});
    std::vector<CVector> fourier;
    for (std::size_t k = 0; k < 3; ++k) {
        CVector f(3);
        for (i64 a = 0; a < 3; ++a) f[a] = root_of_unity(a * static_cast<i64>(k), 3) / std::sqrt(3.0);
        fourier.push_back(f);
    }
    family.push_back(fourier);
    for (const auto& b : family) CHECK(sets_equal_up_to_phase_perm(b, b));
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = 0; j < family.size(); ++j) {
            CHECK(sets_equal_up_to_phase_perm(family[i], family[j]) ==
                  sets_equal_up_to_phase_perm(family[j], family[i]));
        }
    }
    // Transitivity on this family: 0 ~ 1, so anything equal to 0 equals 1.
    CHECK(sets_equal_up_to_phase_perm(family[0], family[1]));
    CHECK(sets_equal_up_to_phase_perm(family[0], family[2]) ==
          sets_equal_up_to_phase_perm(family[1], family[2]));
}

TEST_CASE("tolerance bounds") {
    CHECK_THROWS_AS(Tolerance(0.0), DomainError);
    CHECK_THROWS_AS(Tolerance(1e-2), DomainError);
    CHECK(Tolerance(1e-10).eps == doctest::Approx(1e-10));
}
