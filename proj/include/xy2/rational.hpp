#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace xy2 {

using BigInt = mpz_class;

/// Arbitrary-precision rational kept in canonical form: denominator > 0,
/// gcd(|numerator|, denominator) = 1, zero stored as 0/1.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(int n) : q_(n) {}
    Rational(const BigInt& n) : q_(n) {}
    Rational(const BigInt& num, const BigInt& den) : q_(num, den) { normalize(); }
    Rational(long num, long den) : q_(BigInt(num), BigInt(den)) { normalize(); }

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("rational division by zero");
        return Rational(mpq_class(q_ / o.q_));
    }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    bool operator==(const Rational& o) const { return q_ == o.q_; }
    bool operator!=(const Rational& o) const { return q_ != o.q_; }
    bool operator<(const Rational& o) const { return q_ < o.q_; }
    bool operator<=(const Rational& o) const { return q_ <= o.q_; }
    bool operator>(const Rational& o) const { return q_ > o.q_; }
    bool operator>=(const Rational& o) const { return q_ >= o.q_; }

    Rational reciprocal() const {
        if (is_zero()) throw std::domain_error("reciprocal of zero");
        return Rational(denominator(), numerator());
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    /// Integer power; negative exponents go through the reciprocal.
    Rational pow(long e) const {
        if (e < 0) return reciprocal().pow(-e);
        BigInt num, den;
        mpz_pow_ui(num.get_mpz_t(), numerator().get_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(den.get_mpz_t(), denominator().get_mpz_t(), static_cast<unsigned long>(e));
        return Rational(num, den);
    }

    double to_double() const { return q_.get_d(); }

    std::string to_string() const {
        std::string s = numerator().get_str();
        if (!is_integer()) s += "/" + denominator().get_str();
        return s;
    }

    /// Parses "p" or "p/q" with optional leading sign.
    static Rational parse(const std::string& text) {
        mpq_class q;
        if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
            throw std::invalid_argument("bad rational literal: " + text);
        if (sgn(q.get_den()) == 0)
            throw std::invalid_argument("zero denominator: " + text);
        q.canonicalize();
        return Rational(q);
    }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}

    void normalize() {
        if (sgn(q_.get_den()) == 0)
            throw std::domain_error("zero denominator");
        q_.canonicalize();
    }

    mpq_class q_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace xy2
