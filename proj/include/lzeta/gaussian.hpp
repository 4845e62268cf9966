// Exact Gaussian rationals: elements of Q(i) with arbitrary-precision parts.
#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace lzeta {

struct GaussianRational {
    mpq_class re;
    mpq_class im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(long r) : re(r), im(0) {}
    GaussianRational(mpq_class r) : re(std::move(r)), im(0) {}
    GaussianRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return GaussianRational(mpq_class(0), mpq_class(1)); }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_one() const { return re == 1 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }

    GaussianRational conj() const { return {re, mpq_class(-im)}; }

    // re^2 + im^2; zero iff the element is zero.
    mpq_class norm() const { return re * re + im * im; }

    GaussianRational operator-() const { return {mpq_class(-re), mpq_class(-im)}; }

    GaussianRational &operator+=(const GaussianRational &o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational &operator-=(const GaussianRational &o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational &operator*=(const GaussianRational &o) {
        if (sgn(im) == 0 && sgn(o.im) == 0) {
            re *= o.re;
            return *this;
        }
        mpq_class r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    GaussianRational &operator/=(const GaussianRational &o) {
        if (o.is_zero()) throw std::domain_error("GaussianRational: division by zero");
        if (sgn(im) == 0 && sgn(o.im) == 0) {
            re /= o.re;
            return *this;
        }
        mpq_class n = o.norm();
        mpq_class r = (re * o.re + im * o.im) / n;
        im = (im * o.re - re * o.im) / n;
        re = std::move(r);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational &b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational &b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational &b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational &b) { return a /= b; }

    friend bool operator==(const GaussianRational &a, const GaussianRational &b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational &a, const GaussianRational &b) { return !(a == b); }

    GaussianRational inverse() const {
        GaussianRational one(1);
        return one /= *this;
    }

    GaussianRational pow(long k) const {
        if (k == 0) return GaussianRational(1);
        GaussianRational base = k > 0 ? *this : inverse();
        unsigned long e = k > 0 ? static_cast<unsigned long>(k) : static_cast<unsigned long>(-(k + 1)) + 1;
        GaussianRational acc(1);
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
};

// Total order used only for canonical sorting (multiset comparisons, stable output).
inline bool lex_less(const GaussianRational &a, const GaussianRational &b) {
    int c = cmp(a.re, b.re);
    if (c != 0) return c < 0;
    return cmp(a.im, b.im) < 0;
}

} // namespace lzeta
