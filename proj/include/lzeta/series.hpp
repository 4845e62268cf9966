// Truncated bivariate power series in X1 = p^{-s1} and X2 = p^{-s2}.
// Truncation is by total degree; coefficients up to the order are exact.
#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ring.hpp"

namespace lzeta {

// Exponent pairs are reported in graded lexicographic order: by total degree,
// then by decreasing X1-exponent within a degree.
using ExponentPair = std::pair<int, int>;

template <typename T>
class Series2 {
  public:
    explicit Series2(int order) : order_(order) {
        if (order < 0) throw std::domain_error("Series2: negative truncation order");
        coeff_.assign(static_cast<size_t>(order + 1) * (order + 2) / 2, ring_traits<T>::zero());
    }

    static Series2 constant(T v, int order) {
        Series2 s(order);
        s.at(0, 0) = std::move(v);
        return s;
    }
    static Series2 one(int order) { return constant(ring_traits<T>::one(), order); }

    int order() const { return order_; }

    bool in_range(int d1, int d2) const { return d1 >= 0 && d2 >= 0 && d1 + d2 <= order_; }

    const T &at(int d1, int d2) const { return coeff_[index(d1, d2)]; }
    T &at(int d1, int d2) { return coeff_[index(d1, d2)]; }

    // Coefficient access that treats out-of-range exponents as absent.
    T coeff_or_zero(int d1, int d2) const {
        return in_range(d1, d2) ? at(d1, d2) : ring_traits<T>::zero();
    }

    Series2 truncated(int new_order) const {
        if (new_order >= order_) return *this;
        Series2 out(new_order);
        for (int s = 0; s <= new_order; ++s)
            for (int d1 = s; d1 >= 0; --d1) out.at(d1, s - d1) = at(d1, s - d1);
        return out;
    }

    friend Series2 operator+(const Series2 &x, const Series2 &y) { return combined(x, y, false); }
    friend Series2 operator-(const Series2 &x, const Series2 &y) { return combined(x, y, true); }

    friend Series2 operator*(const Series2 &x, const Series2 &y) {
        int d = std::min(x.order_, y.order_);
        Series2 out(d);
        for (int s1 = 0; s1 <= std::min(x.order_, d); ++s1) {
            for (int a = s1; a >= 0; --a) {
                const T &cx = x.at(a, s1 - a);
                if (ring_traits<T>::is_zero(cx)) continue;
                int remaining = d - s1;
                for (int s2 = 0; s2 <= std::min(y.order_, remaining); ++s2) {
                    for (int b = s2; b >= 0; --b) {
                        const T &cy = y.at(b, s2 - b);
                        if (ring_traits<T>::is_zero(cy)) continue;
                        out.at(a + b, s1 - a + s2 - b) += cx * cy;
                    }
                }
            }
        }
        return out;
    }

    Series2 &operator*=(const T &v) {
        for (auto &c : coeff_) c = c * v;
        return *this;
    }
    friend Series2 operator*(Series2 x, const T &v) { return x *= v; }

    friend bool operator==(const Series2 &x, const Series2 &y) {
        return x.order_ == y.order_ && x.coeff_ == y.coeff_;
    }
    friend bool operator!=(const Series2 &x, const Series2 &y) { return !(x == y); }

    // First exponent pair (graded lex) at which the two series differ, up to
    // the smaller order; nullopt when they agree everywhere.
    static std::optional<ExponentPair> first_discrepancy(const Series2 &x, const Series2 &y) {
        int d = std::min(x.order_, y.order_);
        for (int s = 0; s <= d; ++s)
            for (int d1 = s; d1 >= 0; --d1)
                if (x.at(d1, s - d1) != y.at(d1, s - d1)) return ExponentPair{d1, s - d1};
        return std::nullopt;
    }

    std::complex<double> eval_numeric(std::complex<double> x1, std::complex<double> x2) const {
        std::complex<double> acc{0.0, 0.0};
        for (int s = order_; s >= 0; --s) {
            for (int d1 = s; d1 >= 0; --d1) {
                const T &c = at(d1, s - d1);
                if (ring_traits<T>::is_zero(c)) continue;
                acc += ring_traits<T>::to_complex(c) * std::pow(x1, d1) * std::pow(x2, s - d1);
            }
        }
        return acc;
    }

    // Exact evaluation at scalar points (exact mode only).
    T eval(const T &x1, const T &x2) const {
        T acc = ring_traits<T>::zero();
        for (int s = 0; s <= order_; ++s) {
            for (int d1 = s; d1 >= 0; --d1) {
                const T &c = at(d1, s - d1);
                if (ring_traits<T>::is_zero(c)) continue;
                acc += c * ring_pow(x1, d1) * ring_pow(x2, s - d1);
            }
        }
        return acc;
    }

    template <typename F>
    void for_each(F &&f) const {
        for (int s = 0; s <= order_; ++s)
            for (int d1 = s; d1 >= 0; --d1)
                if (!ring_traits<T>::is_zero(at(d1, s - d1))) f(d1, s - d1, at(d1, s - d1));
    }

  private:
    size_t index(int d1, int d2) const {
        if (!in_range(d1, d2)) throw std::out_of_range("Series2: exponent outside truncation");
        // Row d1 holds d2 = 0..order-d1.
        size_t row_start = static_cast<size_t>(d1) * (order_ + 1) - static_cast<size_t>(d1) * (d1 - 1) / 2;
        return row_start + static_cast<size_t>(d2);
    }

    static Series2 combined(const Series2 &x, const Series2 &y, bool subtract) {
        int d = std::min(x.order_, y.order_);
        Series2 out(d);
        for (int s = 0; s <= d; ++s) {
            for (int d1 = s; d1 >= 0; --d1) {
                out.at(d1, s - d1) =
                    subtract ? x.at(d1, s - d1) - y.at(d1, s - d1) : x.at(d1, s - d1) + y.at(d1, s - d1);
            }
        }
        return out;
    }

    int order_;
    std::vector<T> coeff_;
};

} // namespace lzeta
