// Traits shared by the two coefficient types: exact Scalar (default mode) and
// std::complex<double> (numeric mode).
#pragma once

#include <cmath>
#include <complex>

#include "scalar.hpp"

namespace lzeta {

template <typename T>
struct ring_traits;

template <>
struct ring_traits<Scalar> {
    static constexpr bool exact = true;
    static Scalar zero() { return Scalar(0); }
    static Scalar one() { return Scalar(1); }
    static Scalar from_int(long v) { return Scalar(v); }
    static bool is_zero(const Scalar &v) { return v.is_zero(); }
    static Scalar half_power_of_p(unsigned long p, long e) { return Scalar::half_power_of_p(p, e); }
    static std::complex<double> to_complex(const Scalar &v) { return v.to_complex(); }
};

template <>
struct ring_traits<std::complex<double>> {
    static constexpr bool exact = false;
    static std::complex<double> zero() { return {0.0, 0.0}; }
    static std::complex<double> one() { return {1.0, 0.0}; }
    static std::complex<double> from_int(long v) { return {static_cast<double>(v), 0.0}; }
    static bool is_zero(const std::complex<double> &v) { return v.real() == 0.0 && v.imag() == 0.0; }
    static std::complex<double> half_power_of_p(unsigned long p, long e) {
        return {std::pow(static_cast<double>(p), static_cast<double>(e) / 2.0), 0.0};
    }
    static std::complex<double> to_complex(const std::complex<double> &v) { return v; }
};

template <typename T>
T ring_pow(T base, long k) {
    if (k == 0) return ring_traits<T>::one(); // avoids complex pow(0, 0)
    if constexpr (ring_traits<T>::exact) {
        return base.pow(k);
    } else {
        return std::pow(base, static_cast<double>(k));
    }
}

} // namespace lzeta
