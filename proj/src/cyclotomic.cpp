#include "xy2/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace xy2 {

namespace {

using ZPoly = std::vector<BigInt>;
using QPoly = std::vector<Rational>;

void zpoly_trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact quotient of num by a monic divisor.
ZPoly zpoly_div_exact(ZPoly num, const ZPoly& den) {
    zpoly_trim(num);
    const std::size_t dd = den.size() - 1;
    if (num.size() <= dd) return {};
    ZPoly q(num.size() - dd);
    for (std::size_t i = num.size(); i-- > dd;) {
        BigInt c = num[i];
        if (c == 0) continue;
        q[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    return q;
}

struct FieldData {
    std::uint32_t conductor = 1;
    std::uint32_t degree = 1;
    ZPoly modulus;                          // Phi_N, monic
    bool binomial = false;                  // Phi_N = x^degree + const
    std::map<std::uint64_t, QPoly> powers;  // reduced zeta^t for t >= degree
};

std::mutex g_mutex;
std::map<std::uint32_t, std::unique_ptr<FieldData>> g_fields;

// Phi_N via the divisor recursion; caller holds g_mutex.
FieldData& field_locked(std::uint32_t n) {
    auto it = g_fields.find(n);
    if (it != g_fields.end()) return *it->second;

    ZPoly num(n + 1);
    num[0] = -1;
    num[n] = 1;
    for (std::uint32_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = zpoly_div_exact(std::move(num), field_locked(d).modulus);
    }
    auto data = std::make_unique<FieldData>();
    data->conductor = n;
    data->degree = static_cast<std::uint32_t>(num.size() - 1);
    data->modulus = std::move(num);
    data->binomial = true;
    for (std::size_t i = 1; i + 1 < data->modulus.size(); ++i)
        if (data->modulus[i] != 0) { data->binomial = false; break; }
    return *g_fields.emplace(n, std::move(data)).first->second;
}

// Reduces p mod Phi_N and pads to exactly deg Phi_N entries.
void reduce_mod_phi(QPoly& p, const FieldData& f) {
    const std::size_t d = f.degree;
    while (p.size() > d) {
        Rational c = p.back();
        p.pop_back();
        if (c.is_zero()) continue;
        const std::size_t base = p.size() - d;
        for (std::size_t j = 0; j < d; ++j) {
            if (f.modulus[j] == 0) continue;
            p[base + j] -= c * Rational(f.modulus[j]);
        }
    }
    p.resize(d);
}

// Reduced form of zeta_N^t for t in [0, N); cached; caller holds g_mutex.
const QPoly& power_locked(FieldData& f, std::uint64_t t) {
    auto it = f.powers.find(t);
    if (it != f.powers.end()) return it->second;
    QPoly q;
    if (f.binomial) {
        // Phi = x^d + c: x^d == -c, so powers stay monomials.
        q.assign(f.degree, Rational(0));
        Rational sign(1);
        const Rational fold = -Rational(f.modulus[0]);
        std::uint64_t r = t;
        while (r >= f.degree) { r -= f.degree; sign = sign * fold; }
        q[r] = sign;
    } else {
        q.assign(t + 1, Rational(0));
        q[t] = Rational(1);
        reduce_mod_phi(q, f);
    }
    return f.powers.emplace(t, std::move(q)).first->second;
}

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(std::uint32_t n) {
    if (n < 1) throw std::domain_error("conductor must be positive");
    std::lock_guard<std::mutex> lock(g_mutex);
    return field_locked(n).modulus;
}

std::uint32_t totient(std::uint32_t n) {
    if (n < 1) throw std::domain_error("conductor must be positive");
    std::lock_guard<std::mutex> lock(g_mutex);
    return field_locked(n).degree;
}

std::uint32_t conductor_lcm(std::uint32_t a, std::uint32_t b) {
    std::uint64_t g = std::gcd<std::uint64_t>(a, b);
    std::uint64_t l = (a / g) * static_cast<std::uint64_t>(b);
    if (l > 0xFFFFFFFFull) throw std::domain_error("conductor overflow past 2^32-1");
    return static_cast<std::uint32_t>(l);
}

void Cyclotomic::shrink() {
    if (n_ == 1) return;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return;
    Rational v = c_[0];
    n_ = 1;
    c_ = {v};
}

Cyclotomic Cyclotomic::zeta(std::uint32_t n, const BigInt& e) {
    if (n < 1) throw std::domain_error("conductor must be positive");
    BigInt r;
    mpz_mod_ui(r.get_mpz_t(), e.get_mpz_t(), n);
    const std::uint64_t t = r.get_ui();
    std::vector<Rational> v;
    {
        std::lock_guard<std::mutex> lock(g_mutex);
        FieldData& f = field_locked(n);
        if (t < f.degree) {
            v.assign(f.degree, Rational(0));
            v[t] = Rational(1);
        } else {
            v = power_locked(f, t);
        }
    }
    Cyclotomic out(n, std::move(v));
    out.shrink();
    return out;
}

Cyclotomic Cyclotomic::from_coeffs(std::uint32_t n, std::vector<Rational> poly) {
    if (n < 1) throw std::domain_error("conductor must be positive");
    {
        std::lock_guard<std::mutex> lock(g_mutex);
        reduce_mod_phi(poly, field_locked(n));
    }
    Cyclotomic out(n, std::move(poly));
    out.shrink();
    return out;
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

const Rational& Cyclotomic::rational_value() const {
    if (n_ != 1) throw std::domain_error("value is not rational");
    return c_[0];
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

Cyclotomic Cyclotomic::promoted(std::uint32_t m) const {
    if (m % n_ != 0) throw std::domain_error("conductor does not divide target");
    if (m == n_) return *this;
    const std::uint64_t step = m / n_;
    std::vector<Rational> poly(static_cast<std::size_t>(step) * (c_.size() - 1) + 1,
                               Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        poly[i * step] = c_[i];
    return from_coeffs(m, std::move(poly));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    const std::uint32_t n = conductor_lcm(n_, o.n_);
    Cyclotomic a = promoted(n), b = o.promoted(n);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    a.shrink();
    return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
    const std::uint32_t n = conductor_lcm(n_, o.n_);
    Cyclotomic a = promoted(n), b = o.promoted(n);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
    a.shrink();
    return a;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    const std::uint32_t n = conductor_lcm(n_, o.n_);
    Cyclotomic a = promoted(n), b = o.promoted(n);
    if (n == 1) return Cyclotomic(a.c_[0] * b.c_[0]);
    QPoly prod(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            prod[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return from_coeffs(n, std::move(prod));
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (n_ == 1) return Cyclotomic(c_[0].reciprocal());

    // Extended Euclid for u with u * this == 1 mod Phi_N; remainders are
    // made monic each step to keep coefficient growth in check.
    QPoly phi;
    {
        std::lock_guard<std::mutex> lock(g_mutex);
        const FieldData& f = field_locked(n_);
        phi.reserve(f.modulus.size());
        for (const auto& z : f.modulus) phi.emplace_back(z);
    }
    auto deg = [](const QPoly& p) -> long {
        for (std::size_t i = p.size(); i-- > 0;)
            if (!p[i].is_zero()) return static_cast<long>(i);
        return -1;
    };
    QPoly r0 = phi, r1 = c_;
    QPoly t0{}, t1{Rational(1)};
    while (deg(r1) > 0) {
        const long d1 = deg(r1);
        const Rational lead = r1[static_cast<std::size_t>(d1)];
        QPoly q(static_cast<std::size_t>(deg(r0) - d1) + 1, Rational(0));
        QPoly rem = r0;
        for (long i = deg(rem); i >= d1; --i) {
            Rational c = rem[static_cast<std::size_t>(i)] / lead;
            if (c.is_zero()) continue;
            q[static_cast<std::size_t>(i - d1)] = c;
            for (long j = 0; j <= d1; ++j)
                rem[static_cast<std::size_t>(i - d1 + j)] -=
                    c * r1[static_cast<std::size_t>(j)];
        }
        QPoly t2(std::max<std::size_t>(t0.size(), q.size() + t1.size()), Rational(0));
        for (std::size_t i = 0; i < t0.size(); ++i) t2[i] = t0[i];
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i].is_zero()) continue;
            for (std::size_t j = 0; j < t1.size(); ++j)
                t2[i + j] -= q[i] * t1[j];
        }
        const long dr = deg(rem);
        rem.resize(dr < 0 ? 0 : static_cast<std::size_t>(dr) + 1);
        if (dr >= 0) {
            const Rational lc = rem.back();
            for (auto& c : rem) c /= lc;
            for (auto& c : t2) c /= lc;
        }
        r0 = std::move(r1);
        t0 = std::move(t1);
        r1 = std::move(rem);
        t1 = std::move(t2);
    }
    if (deg(r1) != 0)
        throw std::logic_error("cyclotomic inverse: gcd with Phi_N not constant");
    const Rational unit = r1[0];
    for (auto& c : t1) c /= unit;
    return from_coeffs(n_, std::move(t1));
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& o) const {
    return *this * o.inverse();
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    if (n_ == o.n_) return c_ == o.c_;
    const std::uint32_t n = conductor_lcm(n_, o.n_);
    return promoted(n).c_ == o.promoted(n).c_;
}

Cyclotomic Cyclotomic::conjugate() const {
    if (n_ == 1) return *this;
    QPoly acc;
    {
        std::lock_guard<std::mutex> lock(g_mutex);
        FieldData& f = field_locked(n_);
        acc.assign(f.degree, Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            const std::uint64_t t = (static_cast<std::uint64_t>(i) * (n_ - 1)) % n_;
            if (t < f.degree) {
                acc[t] += c_[i];
            } else {
                const QPoly& p = power_locked(f, t);
                for (std::size_t j = 0; j < p.size(); ++j) {
                    if (p[j].is_zero()) continue;
                    acc[j] += c_[i] * p[j];
                }
            }
        }
    }
    Cyclotomic out(n_, std::move(acc));
    out.shrink();
    return out;
}

Cyclotomic Cyclotomic::pow(const BigInt& e) const {
    if (sgn(e) == 0) return Cyclotomic(Rational(1));
    if (sgn(e) < 0) return inverse().pow(BigInt(-e));
    if (is_zero()) return Cyclotomic();
    Cyclotomic base = *this;
    Cyclotomic acc(Rational(1));
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i)))
            acc = acc * base;
        if (i + 1 < bits) base = base * base;
    }
    return acc;
}

std::optional<Rational> Cyclotomic::norm_squared() const {
    Cyclotomic z = *this * conjugate();
    if (!z.is_rational()) return std::nullopt;
    return z.rational_value();
}

std::complex<double> Cyclotomic::to_complex() const {
    if (n_ == 1) return {c_[0].to_double(), 0.0};
    const double tau = 6.283185307179586476925286766559;
    const std::complex<double> w = std::polar(1.0, tau / static_cast<double>(n_));
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = acc * w + std::complex<double>(c_[i].to_double(), 0.0);
    return acc;
}

std::string Cyclotomic::to_string() const {
    if (n_ == 1) return c_[0].to_string();
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        Rational q = c_[i];
        if (first) {
            if (q.sign() < 0) { out += "-"; q = -q; }
        } else {
            out += q.sign() < 0 ? " - " : " + ";
            if (q.sign() < 0) q = -q;
        }
        first = false;
        std::string mono;
        if (i == 0) {
            mono = q.to_string();
        } else {
            mono = "z" + std::to_string(n_);
            if (i > 1) mono += "^" + std::to_string(i);
            if (q != Rational(1)) mono = q.to_string() + "*" + mono;
        }
        out += mono;
    }
    return first ? "0" : out;
}

bool Cyclotomic::needs_parens() const {
    if (n_ == 1) return false;
    int nonzero = 0;
    for (const auto& c : c_)
        if (!c.is_zero()) ++nonzero;
    if (nonzero > 1) return true;
    for (const auto& c : c_)
        if (c.sign() < 0) return true;
    return false;
}

}  // namespace xy2
