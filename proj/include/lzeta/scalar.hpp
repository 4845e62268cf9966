// Scalar: exact elements a + b*sqrt(p) of Q(i)[sqrt p], the coefficient ring
// in which every in-scope local quantity lives.  Values with b = 0 are plain
// Gaussian rationals and carry no p context; mixing two genuinely irrational
// scalars of different p is an error.
#pragma once

#include <complex>
#include <cmath>
#include <stdexcept>

#include "gaussian.hpp"

namespace lzeta {

class ring_mismatch_error : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

namespace detail {
// If p = s^2 exactly, returns s, else 0.
inline unsigned long exact_sqrt(unsigned long p) {
    mpz_class z(static_cast<unsigned long>(p));
    if (!mpz_perfect_square_p(z.get_mpz_t())) return 0;
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
    return r.get_ui();
}
} // namespace detail

struct Scalar {
    GaussianRational a; // rational part
    GaussianRational b; // coefficient of sqrt(p)
    unsigned long p = 0; // 0 when b = 0 (no irrational part)

    Scalar() = default;
    Scalar(long v) : a(v) {}
    Scalar(mpq_class v) : a(std::move(v)) {}
    Scalar(GaussianRational v) : a(std::move(v)) {}
    Scalar(GaussianRational ra, GaussianRational rb, unsigned long ctx_p) : a(std::move(ra)), b(std::move(rb)), p(ctx_p) {
        normalize();
    }

    static Scalar i() { return Scalar(GaussianRational::i()); }

    static Scalar sqrt_p(unsigned long ctx_p) {
        require_context(ctx_p);
        return Scalar(GaussianRational(0), GaussianRational(1), ctx_p);
    }

    // p^(e/2) for any integer e, exact: even e stays rational, odd e carries sqrt(p).
    static Scalar half_power_of_p(unsigned long ctx_p, long e) {
        require_context(ctx_p);
        mpq_class q(static_cast<unsigned long>(ctx_p));
        if (e % 2 == 0) return Scalar(pow_q(q, e / 2));
        long k = (e - 1) / 2; // e odd, so e - 1 is even and the division is exact
        return Scalar(GaussianRational(0), GaussianRational(pow_q(q, k)), ctx_p);
    }

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    bool is_rational_part_only() const { return b.is_zero(); }

    Scalar operator-() const { return raw(-a, -b, p); }

    Scalar &operator+=(const Scalar &o) {
        unsigned long cp = merge_ctx(p, o.p);
        a += o.a;
        b += o.b;
        p = b.is_zero() ? 0 : cp;
        return *this;
    }
    Scalar &operator-=(const Scalar &o) {
        unsigned long cp = merge_ctx(p, o.p);
        a -= o.a;
        b -= o.b;
        p = b.is_zero() ? 0 : cp;
        return *this;
    }
    Scalar &operator*=(const Scalar &o) {
        unsigned long cp = merge_ctx(p, o.p);
        if (b.is_zero() && o.b.is_zero()) {
            a *= o.a;
            p = 0;
            return *this;
        }
        // (a1 + b1 s)(a2 + b2 s) = a1 a2 + p b1 b2 + (a1 b2 + b1 a2) s
        GaussianRational na = a * o.a + GaussianRational(mpq_class(cp)) * b * o.b;
        GaussianRational nb = a * o.b + b * o.a;
        a = std::move(na);
        b = std::move(nb);
        p = b.is_zero() ? 0 : cp;
        return *this;
    }
    Scalar &operator/=(const Scalar &o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar x, const Scalar &y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar &y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar &y) { return x *= y; }
    friend Scalar operator/(Scalar x, const Scalar &y) { return x /= y; }

    friend bool operator==(const Scalar &x, const Scalar &y) {
        return x.a == y.a && x.b == y.b && (x.b.is_zero() || x.p == y.p);
    }
    friend bool operator!=(const Scalar &x, const Scalar &y) { return !(x == y); }

    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("Scalar: division by zero");
        if (b.is_zero()) return Scalar(a.inverse());
        // (a + b s)^-1 = (a - b s)/(a^2 - p b^2).  The denominator cannot vanish:
        // a^2 = p b^2 would put sqrt(p) in Q(i), excluded since p is not a square.
        GaussianRational den = a * a - GaussianRational(mpq_class(p)) * b * b;
        GaussianRational dinv = den.inverse();
        return raw(a * dinv, -(b * dinv), p);
    }

    Scalar pow(long k) const {
        if (k == 0) return Scalar(1);
        Scalar base = k > 0 ? *this : inverse();
        unsigned long e = k > 0 ? static_cast<unsigned long>(k) : static_cast<unsigned long>(-(k + 1)) + 1;
        Scalar acc(1);
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    std::complex<double> to_complex() const {
        std::complex<double> v = a.to_complex();
        if (!b.is_zero()) v += b.to_complex() * std::sqrt(static_cast<double>(p));
        return v;
    }

  private:
    static Scalar raw(GaussianRational ra, GaussianRational rb, unsigned long ctx_p) {
        Scalar s;
        s.a = std::move(ra);
        s.b = std::move(rb);
        s.p = s.b.is_zero() ? 0 : ctx_p;
        return s;
    }

    static void require_context(unsigned long ctx_p) {
        if (ctx_p < 2) throw std::domain_error("Scalar: residue cardinality must be >= 2");
    }

    static unsigned long merge_ctx(unsigned long p1, unsigned long p2) {
        if (p1 == 0) return p2;
        if (p2 == 0 || p1 == p2) return p1;
        throw ring_mismatch_error("Scalar: mixing sqrt(p) scalars of different residue cardinalities");
    }

    static mpq_class pow_q(const mpq_class &q, long k) {
        mpq_class acc(1);
        mpq_class base = q;
        bool invert = k < 0;
        unsigned long e = invert ? static_cast<unsigned long>(-(k + 1)) + 1 : static_cast<unsigned long>(k);
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        if (invert) acc = 1 / acc;
        return acc;
    }

    void normalize() {
        if (b.is_zero()) {
            p = 0;
            return;
        }
        require_context(p);
        if (unsigned long s = detail::exact_sqrt(p); s != 0) {
            // sqrt(p) is the integer s: fold the irrational part away.
            a += b * GaussianRational(mpq_class(s));
            b = GaussianRational(0);
            p = 0;
        }
    }
};

inline bool lex_less(const Scalar &x, const Scalar &y) {
    if (x.a != y.a) return lex_less(x.a, y.a);
    if (x.b != y.b) return lex_less(x.b, y.b);
    return x.p < y.p;
}

} // namespace lzeta
