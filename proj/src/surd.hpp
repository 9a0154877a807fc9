#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace wythoff {

// Largest r >= 0 with r*r <= n. Throws std::domain_error for n < 0.
mpz_class isqrt(const mpz_class& n);

// Exact value (u + t*sqrt(D)) / v with integers u, t, D >= 0 and v > 0.
// Whenever t != 0, D must not be a perfect square, so the represented value
// is either rational (t == 0, D == 0) or a quadratic irrational. Equality and
// ordering are value-based, decided by cross-multiplication and sign analysis
// with squaring; fields are normalized by their gcd but two equal values may
// still differ field-wise (e.g. sqrt(40) vs 2*sqrt(10)).
class SurdRatio {
public:
    // Checked construction: v > 0, D not a perfect square when t != 0, and
    // the represented value strictly positive. Throws std::invalid_argument
    // or std::domain_error.
    static SurdRatio make(mpz_class u, mpz_class t, mpz_class D, mpz_class v);
    static SurdRatio integer(const mpz_class& k);

    const mpz_class& rational_part() const { return u_; }
    const mpz_class& radical_coeff() const { return t_; }
    const mpz_class& radicand() const { return d_; }
    const mpz_class& denominator() const { return v_; }

    bool is_rational() const { return t_ == 0; }
    bool is_zero() const { return u_ == 0 && t_ == 0; }
    int sign() const;
    bool is_positive() const { return sign() > 0; }

    // Value order. Works for any mix of rational operands and radicals with
    // commensurable or incommensurable radicands.
    int compare(const SurdRatio& o) const;
    bool operator==(const SurdRatio& o) const { return compare(o) == 0; }
    bool operator!=(const SurdRatio& o) const { return compare(o) != 0; }
    bool operator<(const SurdRatio& o) const { return compare(o) < 0; }

    // Exact field algebra. Operands must be rational or have commensurable
    // radicands (t1^2*D1 and t2^2*D2 under a common square part); otherwise
    // std::invalid_argument. Results may be non-positive.
    SurdRatio plus(const SurdRatio& o) const;
    SurdRatio minus(const SurdRatio& o) const;
    SurdRatio times(const SurdRatio& o) const;

    // floor(n * value), computed exactly as
    // fdiv(n*u + floor(n*t*sqrt(D)), v) with floor division toward -inf.
    // Requires n >= 0 and a strictly positive value.
    mpz_class floor_scale(const mpz_class& n) const;

    // Largest k >= 0 with floor_scale(k) == 0; equals floor(1/value) for
    // irrational values and returns 0 whenever value >= 1.
    mpz_class floor_recip() const;

    std::string str() const;

private:
    SurdRatio(mpz_class u, mpz_class t, mpz_class d, mpz_class v);
    void normalize();

    mpz_class u_, t_, d_, v_;
};

// Free functions matching the operation names used throughout the library.
inline mpz_class floor_scale(const SurdRatio& s, const mpz_class& n) { return s.floor_scale(n); }
inline mpz_class floor_recip(const SurdRatio& s) { return s.floor_recip(); }

}  // namespace wythoff
