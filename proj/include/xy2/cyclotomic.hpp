#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "xy2/rational.hpp"

namespace xy2 {

/// N-th cyclotomic polynomial as integer coefficients, lowest degree first.
/// Computed by dividing x^N - 1 by the product of the proper-divisor factors.
std::vector<BigInt> cyclotomic_polynomial(std::uint32_t n);

/// Degree of the N-th cyclotomic polynomial (Euler totient of N).
std::uint32_t totient(std::uint32_t n);

/// Exact element of the cyclotomic field Q(zeta_N), stored as a polynomial in
/// zeta_N reduced mod Phi_N.  Reduction mod Phi_N (not mod x^N - 1) makes the
/// representation canonical and zero-testing exact.  Conductor 1 holds the
/// rationals; any value whose reduced form is constant is renormalized to
/// conductor 1.  Mixed-conductor arithmetic promotes to the lcm, capped at
/// 2^32 - 1.
class Cyclotomic {
public:
    Cyclotomic() : n_(1), c_{Rational(0)} {}
    Cyclotomic(const Rational& r) : n_(1), c_{r} {}
    Cyclotomic(long v) : n_(1), c_{Rational(v)} {}
    Cyclotomic(int v) : n_(1), c_{Rational(v)} {}

    /// zeta_N^e, exponent taken mod N (negative exponents allowed).
    static Cyclotomic zeta(std::uint32_t n, const BigInt& e = BigInt(1));

    /// Builds an element from an arbitrary-length polynomial in zeta_N.
    static Cyclotomic from_coeffs(std::uint32_t n, std::vector<Rational> poly);

    std::uint32_t conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const { return n_ == 1; }
    const Rational& rational_value() const;

    Cyclotomic operator-() const;
    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator/(const Cyclotomic& o) const;
    Cyclotomic& operator+=(const Cyclotomic& o) { *this = *this + o; return *this; }
    Cyclotomic& operator-=(const Cyclotomic& o) { *this = *this - o; return *this; }
    Cyclotomic& operator*=(const Cyclotomic& o) { *this = *this * o; return *this; }

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    /// Galois automorphism zeta_N -> zeta_N^{N-1} (complex conjugation).
    Cyclotomic conjugate() const;

    /// Multiplicative inverse via extended polynomial gcd with Phi_N.
    Cyclotomic inverse() const;

    /// Integer power; negative exponents invert first.
    Cyclotomic pow(const BigInt& e) const;

    /// Re-expresses the element in Q(zeta_M); the conductor must divide M.
    Cyclotomic promoted(std::uint32_t m) const;

    /// a * conjugate(a) when that lands in Q; nullopt otherwise.
    std::optional<Rational> norm_squared() const;

    /// Floating evaluation at zeta_N = e^{2*pi*i/N}.  Reports and norms only;
    /// never used for algebraic decisions.
    std::complex<double> to_complex() const;

    /// Grammar-compatible form, e.g. "1/2", "z3", "-1 + z12^5".  Sums carry
    /// no outer parentheses; callers add them when embedding in a product.
    std::string to_string() const;

    /// True when to_string() needs parentheses inside a product.
    bool needs_parens() const;

private:
    Cyclotomic(std::uint32_t n, std::vector<Rational> reduced)
        : n_(n), c_(std::move(reduced)) {}

    void shrink();

    std::uint32_t n_;
    std::vector<Rational> c_;
};

inline std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) {
    return os << c.to_string();
}

/// lcm of two conductors; throws on overflow past 2^32 - 1.
std::uint32_t conductor_lcm(std::uint32_t a, std::uint32_t b);

}  // namespace xy2
