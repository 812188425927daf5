#include "doctest.h"

#include "mubkit/residue.hpp"

using namespace mubkit;

namespace {

constexpr i64 kSmallPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23};
constexpr i64 kOddPrimes[] = {3, 5, 7, 11, 13, 17, 19, 23};

// Independent oracle: find the inverse by scanning all residues.
i64 inverse_by_search(i64 a, i64 n) {
    for (i64 b = 0; b < n; ++b) {
        if ((a * b) % n == 1) return b;
    }
    return -1;
}

// Independent oracle: exhaustive square table.
bool qr_by_table(i64 a, i64 n) {
    for (i64 y = 0; y < n; ++y) {
        if ((y * y) % n == Residue::reduce(a, n)) return true;
    }
    return false;
}

} // namespace

TEST_CASE("residue construction reduces and validates the modulus") {
    CHECK(Residue(-3, 7).value() == 4);
    CHECK(Residue(10, 7).value() == 3);
    CHECK(Residue(0, 2).value() == 0);
    CHECK_THROWS_AS(Residue(1, 6), DomainError);
    CHECK_THROWS_AS(Residue(1, 1), DomainError);
    CHECK_THROWS_AS(Residue(1, 3) + Residue(1, 5), ModulusMismatch);
}

TEST_CASE("inverse: known values and the exhaustive oracle") {
    CHECK(inverse(Residue(1, 5)).value() == 1);
    CHECK(inverse(Residue(2, 5)).value() == 3); // frozen from the search oracle
    CHECK_THROWS_AS(inverse(Residue(0, 7)), ZeroInverse);

    for (i64 n : kSmallPrimes) {
        for (i64 a = 1; a < n; ++a) {
            const i64 expect = inverse_by_search(a, n);
            REQUIRE(expect != -1);
            CHECK(inverse(Residue(a, n)).value() == expect);
            CHECK((Residue(a, n) * inverse(Residue(a, n))).value() == 1);
        }
    }
}

TEST_CASE("Euler criterion agrees with the square table") {
    CHECK(is_quadratic_residue(Residue(-3, 7)));  // -3 = 4 = 2^2 mod 7
    CHECK(!is_quadratic_residue(Residue(-3, 5)));
    CHECK(is_quadratic_residue(Residue(1, 11)));
    CHECK_THROWS_AS(is_quadratic_residue(Residue(0, 5)), DomainError);
    CHECK_THROWS_AS(is_quadratic_residue(Residue(1, 2)), DomainError);

    for (i64 n : kOddPrimes) {
        for (i64 a = 1; a < n; ++a) {
            CHECK(is_quadratic_residue(Residue(a, n)) == qr_by_table(a, n));
        }
    }
}

TEST_CASE("quadratic character of -3 tracks N mod 3") {
    for (i64 n : {5, 7, 11, 13, 17, 19, 23}) {
        CHECK(is_quadratic_residue(Residue(-3, n)) == (n % 3 == 1));
    }
}

TEST_CASE("stabilizer parameters solve their defining congruences") {
    // Frozen via the modular oracle below; the matrix-level confirmation that
    // these parameters pin the cubic-phase fiducial lives with the MUB tests.
    {
        const auto [i, j, k] = stabilizer_params(Residue(1, 5));
        CHECK(i.value() == 1);
        CHECK(j.value() == 3);
        CHECK(k.value() == 2);
    }
    for (i64 n : {5, 7, 11, 13}) {
        for (i64 x = 1; x < n; ++x) {
            const auto [i, j, k] = stabilizer_params(Residue(x, n));
            CHECK(Residue::reduce(6 * x * i.value(), n) == 1);
            CHECK(Residue::reduce(12 * x * j.value(), n) == 1);
            CHECK(Residue::reduce(432 * x * x * k.value() + 1, n) == 0);
        }
    }
    CHECK_THROWS_AS(stabilizer_params(Residue(0, 5)), DomainError);
    CHECK_THROWS_AS(stabilizer_params(Residue(1, 3)), DomainError);
    CHECK_THROWS_AS(stabilizer_params(Residue(1, 2)), DomainError);
}
