// Factored rational functions prod (1 - c X1^a X2^b)^{e}, e = +-1: the exact
// form of every local L-factor handled here.
#pragma once

#include <algorithm>
#include <complex>
#include <map>
#include <sstream>
#include <tuple>
#include <vector>

#include "errors.hpp"
#include "series.hpp"

namespace lzeta {

template <typename T>
struct EulerTerm {
    T c;
    int a = 0;
    int b = 0;
    int e = -1; // -1: factor in the denominator (the L-factor convention), +1: numerator
};

// 1/(1 - c X1^a X2^b) truncated at total degree D.
template <typename T>
Series2<T> geom_expand(const T &c, int a, int b, int order) {
    if (a < 0 || b < 0 || a + b < 1) throw precondition_error("geom_expand: degenerate factor, needs a+b >= 1");
    if (order < 0) throw precondition_error("geom_expand: negative order");
    Series2<T> out(order);
    T acc = ring_traits<T>::one();
    for (int k = 0; k * (a + b) <= order; ++k) {
        if (k > 0) acc = acc * c;
        if (ring_traits<T>::is_zero(acc)) break;
        out.at(k * a, k * b) = acc;
    }
    return out;
}

template <typename T>
class EulerFactor {
  public:
    EulerFactor() = default; // empty product == 1

    EulerFactor &push(T c, int a, int b, int e) {
        if (a < 0 || b < 0 || a + b < 1) throw precondition_error("EulerFactor: each factor needs a, b >= 0 and a+b >= 1");
        if (e != 1 && e != -1) throw precondition_error("EulerFactor: exponent must be +-1");
        terms_.push_back(EulerTerm<T>{std::move(c), a, b, e});
        return *this;
    }

    const std::vector<EulerTerm<T>> &terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    EulerFactor inverse() const {
        EulerFactor out = *this;
        for (auto &t : out.terms_) t.e = -t.e;
        return out;
    }

    friend EulerFactor operator*(EulerFactor x, const EulerFactor &y) {
        x.terms_.insert(x.terms_.end(), y.terms_.begin(), y.terms_.end());
        return x;
    }

    // Cancels matching (c, a, b) factors of opposite exponent.
    EulerFactor simplified() const {
        std::vector<EulerTerm<T>> pending;
        for (const auto &t : terms_) {
            auto match = std::find_if(pending.begin(), pending.end(), [&](const EulerTerm<T> &u) {
                return u.a == t.a && u.b == t.b && u.e == -t.e && u.c == t.c;
            });
            if (match != pending.end())
                pending.erase(match);
            else
                pending.push_back(t);
        }
        EulerFactor out;
        out.terms_ = std::move(pending);
        return out;
    }

    Series2<T> expansion(int order) const {
        Series2<T> acc = Series2<T>::one(order);
        // Direct (polynomial) factors first; order of multiplication is irrelevant.
        for (const auto &t : terms_) {
            if (t.e != 1) continue;
            Series2<T> poly = Series2<T>::one(order);
            if (t.a + t.b <= order) poly.at(t.a, t.b) = -t.c;
            acc = acc * poly;
        }
        for (const auto &t : terms_) {
            if (t.e != -1) continue;
            acc = acc * geom_expand(t.c, t.a, t.b, order);
        }
        return acc;
    }

    // Exact rational-function value at scalar points.
    T eval(const T &x1, const T &x2) const {
        T acc = ring_traits<T>::one();
        for (size_t i = 0; i < terms_.size(); ++i) {
            const auto &t = terms_[i];
            T v = ring_traits<T>::one() - t.c * ring_pow(x1, t.a) * ring_pow(x2, t.b);
            if (t.e == -1) {
                if (ring_traits<T>::is_zero(v))
                    throw pole_error("EulerFactor: pole at evaluation point (factor #" + std::to_string(i + 1) + ")");
                acc = acc / v;
            } else {
                acc = acc * v;
            }
        }
        return acc;
    }

    // Floating evaluation.  Every factor must satisfy |c x1^a x2^b| <= 1/2 so the
    // truncated expansion provably converges to this value; callers may override.
    std::complex<double> eval_numeric(std::complex<double> x1, std::complex<double> x2,
                                      bool override_margin = false) const {
        std::complex<double> acc{1.0, 0.0};
        for (size_t i = 0; i < terms_.size(); ++i) {
            const auto &t = terms_[i];
            std::complex<double> m =
                ring_traits<T>::to_complex(t.c) * std::pow(x1, t.a) * std::pow(x2, t.b);
            if (!override_margin && std::abs(m) > 0.5) {
                std::ostringstream msg;
                msg << "EulerFactor: convergence margin violated by factor #" << (i + 1) << " (|c x1^" << t.a
                    << " x2^" << t.b << "| = " << std::abs(m) << " > 1/2)";
                throw margin_error(msg.str());
            }
            std::complex<double> v = std::complex<double>{1.0, 0.0} - m;
            if (t.e == -1) {
                if (v == std::complex<double>{0.0, 0.0})
                    throw pole_error("EulerFactor: pole at evaluation point (factor #" + std::to_string(i + 1) + ")");
                acc /= v;
            } else {
                acc *= v;
            }
        }
        return acc;
    }

    // Canonically sorted copy of the factor list; two EulerFactors represent the
    // same multiset of factors iff these compare equal.
    std::vector<std::tuple<int, int, int>> shape_sorted() const {
        std::vector<std::tuple<int, int, int>> v;
        for (const auto &t : terms_) v.emplace_back(t.a, t.b, t.e);
        std::sort(v.begin(), v.end());
        return v;
    }

  private:
    std::vector<EulerTerm<T>> terms_;
};

template <typename T>
Series2<T> euler_expand(const EulerFactor<T> &f, int order) {
    return f.expansion(order);
}

// Multiset equality of factor lists (exact coefficients).
inline bool same_factor_multiset(const EulerFactor<Scalar> &x, const EulerFactor<Scalar> &y) {
    auto xs = x.terms();
    auto ys = y.terms();
    if (xs.size() != ys.size()) return false;
    auto less = [&](const EulerTerm<Scalar> &u, const EulerTerm<Scalar> &v) {
        if (u.a != v.a) return u.a < v.a;
        if (u.b != v.b) return u.b < v.b;
        if (u.e != v.e) return u.e < v.e;
        return lex_less(u.c, v.c);
    };
    std::sort(xs.begin(), xs.end(), less);
    std::sort(ys.begin(), ys.end(), less);
    for (size_t i = 0; i < xs.size(); ++i) {
        const auto &u = xs[i];
        const auto &v = ys[i];
        if (u.a != v.a || u.b != v.b || u.e != v.e || !(u.c == v.c)) return false;
    }
    return true;
}

} // namespace lzeta
