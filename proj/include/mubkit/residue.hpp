#pragma once

#include <cstdint>
#include <ostream>
#include <tuple>

#include "mubkit/errors.hpp"

namespace mubkit {

using i64 = std::int64_t;

/// Deterministic primality check, adequate for the desk-scale moduli used here.
inline bool is_prime(i64 n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (i64 d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

/// A fully reduced element of Z_N for prime N. All scalars that index group
/// elements (symplectic entries, displacement components, stabilizer
/// parameters) live here so that equality is plain integer equality.
class Residue {
public:
    Residue(i64 value, i64 modulus) : modulus_(modulus) {
        if (!is_prime(modulus)) {
            throw DomainError("Residue: modulus " + std::to_string(modulus) + " is not prime");
        }
        value_ = reduce(value, modulus);
    }

    i64 value() const { return value_; }
    i64 modulus() const { return modulus_; }

    static i64 reduce(i64 v, i64 m) {
        i64 r = v % m;
        return r < 0 ? r + m : r;
    }

    bool is_zero() const { return value_ == 0; }

    Residue operator+(const Residue& o) const { return bin(o, value_ + o.value_); }
    Residue operator-(const Residue& o) const { return bin(o, value_ - o.value_); }
    Residue operator*(const Residue& o) const { return bin(o, value_ * o.value_); }
    Residue operator-() const { return Residue(-value_, modulus_); }

    bool operator==(const Residue& o) const {
        return value_ == o.value_ && modulus_ == o.modulus_;
    }
    bool operator!=(const Residue& o) const { return !(*this == o); }

    friend std::ostream& operator<<(std::ostream& os, const Residue& r) {
        return os << r.value_ << " (mod " << r.modulus_ << ")";
    }

private:
    Residue bin(const Residue& o, i64 raw) const {
        if (modulus_ != o.modulus_) {
            throw ModulusMismatch("Residue arithmetic across different moduli");
        }
        return Residue(raw, modulus_);
    }

    i64 value_;
    i64 modulus_;
};

/// a^e mod m by square-and-multiply.
inline i64 pow_mod(i64 a, i64 e, i64 m) {
    a = Residue::reduce(a, m);
    i64 r = 1 % m;
    while (e > 0) {
        if (e & 1) r = (r * a) % m;
        a = (a * a) % m;
        e >>= 1;
    }
    return r;
}

/// Multiplicative inverse in Z_N, N prime. Uses Fermat: a^(N-2).
inline Residue inverse(const Residue& a) {
    if (a.is_zero()) {
        throw ZeroInverse("inverse: 0 has no multiplicative inverse mod " +
                          std::to_string(a.modulus()));
    }
    return Residue(pow_mod(a.value(), a.modulus() - 2, a.modulus()), a.modulus());
}

/// Euler criterion: a^((N-1)/2) == 1 mod N for nonzero a, odd prime N.
inline bool is_quadratic_residue(const Residue& a) {
    if (a.modulus() == 2) {
        throw DomainError("is_quadratic_residue: modulus 2 has no Euler criterion");
    }
    if (a.is_zero()) {
        throw DomainError("is_quadratic_residue: undefined for 0");
    }
    return pow_mod(a.value(), (a.modulus() - 1) / 2, a.modulus()) == 1;
}

/// The closed-form parameters (i, j, k) of the displacement-and-shear element
/// that fixes the cubic-phase fiducial with parameter x:
///   i = 1/(6x),  j = 1/(12x),  k = -1/(432 x^2),  all mod N.
/// Requires N > 3 so that 6, 12 and 432 are invertible.
inline std::tuple<Residue, Residue, Residue> stabilizer_params(const Residue& x) {
    const i64 n = x.modulus();
    if (n == 2 || n == 3) {
        throw DomainError("stabilizer_params: need prime modulus > 3");
    }
    if (x.is_zero()) {
        throw DomainError("stabilizer_params: x must be nonzero");
    }
    const Residue six(6, n), twelve(12, n), c432(432, n);
    const Residue i = inverse(six * x);
    const Residue j = inverse(twelve * x);
    const Residue k = -inverse(c432 * x * x);
    return {i, j, k};
}

} // namespace mubkit
