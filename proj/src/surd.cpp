#include "surd.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace wythoff {

namespace {

int sgn(const mpz_class& x) { return mpz_sgn(x.get_mpz_t()); }

bool is_perfect_square(const mpz_class& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// Sign of A + B*sqrt(D). D == 0 degenerates to sign(A); for B != 0 callers
// guarantee D is not a perfect square, so the expression is never zero
// unless A == B == 0.
int sign_linear(const mpz_class& A, const mpz_class& B, const mpz_class& D) {
    if (B == 0 || D == 0) return sgn(A);
    const int sa = sgn(A);
    const int sb = sgn(B);
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    const mpz_class lhs = A * A;
    const mpz_class rhs = B * B * D;
    const int c = cmp(lhs, rhs);
    if (c == 0) return 0;  // unreachable for non-square D
    return c > 0 ? sa : sb;
}

// Sign of A + B*sqrt(D1) + C*sqrt(D2) with non-square positive radicands.
int sign_two_radicals(const mpz_class& A, const mpz_class& B, const mpz_class& D1,
                      const mpz_class& C, const mpz_class& D2) {
    if (B == 0 || D1 == 0) return sign_linear(A, C, D2);
    if (C == 0 || D2 == 0) return sign_linear(A, B, D1);
    if (D1 == D2) return sign_linear(A, B + C, D1);
    const mpz_class prod = D1 * D2;
    const mpz_class r = isqrt(prod);
    if (r * r == prod) {
        // Commensurable radicals: sqrt(D1) = (r/D2)*sqrt(D2), so D2 times the
        // expression collapses to a single radical.
        return sign_linear(A * D2, B * r + C * D2, D2);
    }
    const int sl = sign_linear(A, B, D1);
    const int sr = sgn(C);
    if (sl == 0) return sr;
    if (sr == 0) return sl;
    if (sl == sr) return sl;
    // Opposite signs: compare (A + B*sqrt(D1))^2 against C^2*D2.
    const int c = sign_linear(A * A + B * B * D1 - C * C * D2, 2 * A * B, D1);
    if (c == 0) return 0;  // 1, sqrt(D1), sqrt(D2) are Q-independent here
    return c > 0 ? sl : sr;
}

}  // namespace

mpz_class isqrt(const mpz_class& n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

SurdRatio::SurdRatio(mpz_class u, mpz_class t, mpz_class d, mpz_class v)
    : u_(std::move(u)), t_(std::move(t)), d_(std::move(d)), v_(std::move(v)) {
    normalize();
}

void SurdRatio::normalize() {
    if (t_ == 0) d_ = 0;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), u_.get_mpz_t(), t_.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v_.get_mpz_t());
    if (g > 1) {
        u_ /= g;
        t_ /= g;
        v_ /= g;
    }
}

SurdRatio SurdRatio::make(mpz_class u, mpz_class t, mpz_class D, mpz_class v) {
    if (v <= 0) throw std::invalid_argument("SurdRatio: denominator must be positive");
    if (t < 0) throw std::invalid_argument("SurdRatio: radical coefficient must be non-negative");
    if (t != 0) {
        if (D < 0) throw std::invalid_argument("SurdRatio: negative radicand");
        if (is_perfect_square(D))
            throw std::invalid_argument("SurdRatio: radicand must not be a perfect square");
    }
    SurdRatio s(std::move(u), std::move(t), std::move(D), std::move(v));
    if (!s.is_positive())
        throw std::domain_error("SurdRatio: represented value must be strictly positive");
    return s;
}

SurdRatio SurdRatio::integer(const mpz_class& k) { return SurdRatio(k, 0, 0, 1); }

int SurdRatio::sign() const { return sign_linear(u_, t_, d_); }

int SurdRatio::compare(const SurdRatio& o) const {
    // value - o.value has the sign of u1*v2 - u2*v1 + t1*v2*sqrt(d1) - t2*v1*sqrt(d2).
    return sign_two_radicals(u_ * o.v_ - o.u_ * v_, t_ * o.v_, d_, -o.t_ * v_, o.d_);
}

namespace {

// Rewrites two radical terms t1*sqrt(d1), t2*sqrt(d2) over a common radicand.
// Returns (c1, c2, d) with t1*sqrt(d1) = c1*sqrt(d) and t2*sqrt(d2) = c2*sqrt(d).
// Throws when the radicands are incommensurable.
struct CommonRadical {
    mpz_class c1, c2, d;
};

CommonRadical common_radical(const mpz_class& t1, const mpz_class& d1, const mpz_class& t2,
                             const mpz_class& d2) {
    if (t1 == 0 && t2 == 0) return {0, 0, 0};
    if (t1 == 0) return {0, t2, d2};
    if (t2 == 0) return {t1, 0, d1};
    if (d1 == d2) return {t1, t2, d1};
    const mpz_class prod = d1 * d2;
    const mpz_class r = isqrt(prod);
    if (r * r != prod)
        throw std::invalid_argument("SurdRatio: incommensurable radicands");
    // sqrt(d1)/sqrt(d2) = r/d2 = p/q in lowest terms, so with d = d2/q^2 we get
    // sqrt(d2) = q*sqrt(d) and sqrt(d1) = p*sqrt(d), both with integer factors.
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), d2.get_mpz_t());
    const mpz_class p = r / g;
    const mpz_class q = d2 / g;
    return {t1 * p, t2 * q, d2 / (q * q)};
}

}  // namespace

SurdRatio SurdRatio::plus(const SurdRatio& o) const {
    const CommonRadical cr = common_radical(t_, d_, o.t_, o.d_);
    return SurdRatio(u_ * o.v_ + o.u_ * v_, cr.c1 * o.v_ + cr.c2 * v_, cr.d, v_ * o.v_);
}

SurdRatio SurdRatio::minus(const SurdRatio& o) const {
    const CommonRadical cr = common_radical(t_, d_, o.t_, o.d_);
    return SurdRatio(u_ * o.v_ - o.u_ * v_, cr.c1 * o.v_ - cr.c2 * v_, cr.d, v_ * o.v_);
}

SurdRatio SurdRatio::times(const SurdRatio& o) const {
    const CommonRadical cr = common_radical(t_, d_, o.t_, o.d_);
    return SurdRatio(u_ * o.u_ + cr.c1 * cr.c2 * cr.d, u_ * cr.c2 + o.u_ * cr.c1, cr.d,
                     v_ * o.v_);
}

mpz_class SurdRatio::floor_scale(const mpz_class& n) const {
    if (n < 0) throw std::domain_error("floor_scale: negative scale");
    if (!is_positive()) throw std::domain_error("floor_scale: value must be positive");
    const mpz_class num = n * u_;
    const mpz_class w = n * t_;
    mpz_class radical_floor = 0;
    if (w != 0) {
        const mpz_class s = isqrt(w * w * d_);
        // w*sqrt(d) is irrational (d non-square), so its floor is s for w > 0
        // and -s-1 for w < 0.
        radical_floor = w > 0 ? s : mpz_class(-s - 1);
    }
    const mpz_class total = num + radical_floor;
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), total.get_mpz_t(), v_.get_mpz_t());
    return q;
}

mpz_class SurdRatio::floor_recip() const {
    if (!is_positive()) throw std::domain_error("floor_recip: value must be positive");
    // k*value < 1  <=>  (k*u - v) + k*t*sqrt(d) < 0, decided exactly.
    const auto below_one = [&](const mpz_class& k) {
        return sign_linear(k * u_ - v_, k * t_, d_) < 0;
    };
    if (!below_one(1)) return 0;
    mpz_class lo = 1, hi = 2;
    while (below_one(hi)) {
        lo = hi;
        hi *= 2;
    }
    // Largest k in [lo, hi) with k*value < 1.
    while (lo + 1 < hi) {
        const mpz_class mid = (lo + hi) / 2;
        if (below_one(mid))
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

std::string SurdRatio::str() const {
    std::ostringstream os;
    os << "(" << u_;
    if (t_ != 0) os << (t_ > 0 ? "+" : "") << t_ << "*sqrt(" << d_ << ")";
    os << ")/" << v_;
    return os.str();
}

}  // namespace wythoff
