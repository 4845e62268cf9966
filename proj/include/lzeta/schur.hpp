// Schur polynomials in the Satake parameters and the unramified Whittaker
// torus values they produce.
//
// The default evaluator runs through the Jacobi-Trudi determinant
// det[h_{mu_i - i + j}] in complete homogeneous polynomials, which stays valid
// at repeated parameters; the Weyl character ratio det(alpha^{m+delta})/
// det(alpha^delta) is kept as an independent oracle for distinct parameters.
#pragma once

#include <span>
#include <vector>

#include "rep.hpp"
#include "weights.hpp"

namespace lzeta {

namespace detail {

// Determinant by in-place Gaussian elimination.  Exact coefficients pivot on
// the first nonzero entry; floating ones on the largest modulus.
template <typename T>
T small_det(std::vector<T> &m, int n) {
    T det = ring_traits<T>::one();
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        if constexpr (ring_traits<T>::exact) {
            for (int r = col; r < n; ++r)
                if (!ring_traits<T>::is_zero(m[static_cast<size_t>(r) * n + col])) {
                    pivot = r;
                    break;
                }
        } else {
            double best = 0.0;
            for (int r = col; r < n; ++r) {
                double a = std::abs(m[static_cast<size_t>(r) * n + col]);
                if (a > best) {
                    best = a;
                    pivot = r;
                }
            }
        }
        if (pivot < 0) return ring_traits<T>::zero();
        if (pivot != col) {
            for (int j = col; j < n; ++j) std::swap(m[static_cast<size_t>(pivot) * n + j], m[static_cast<size_t>(col) * n + j]);
            det = -det;
        }
        const T &d = m[static_cast<size_t>(col) * n + col];
        det = det * d;
        for (int r = col + 1; r < n; ++r) {
            T f = m[static_cast<size_t>(r) * n + col] / d;
            if (ring_traits<T>::is_zero(f)) continue;
            for (int j = col; j < n; ++j)
                m[static_cast<size_t>(r) * n + j] = m[static_cast<size_t>(r) * n + j] - f * m[static_cast<size_t>(col) * n + j];
        }
    }
    return det;
}

} // namespace detail

// Per-representation cache of elementary and complete homogeneous symmetric
// polynomial values.  Build one per thread of work; evaluation is then a
// single small determinant per weight.
template <typename T>
class SchurEvaluator {
  public:
    explicit SchurEvaluator(const UnramifiedRep<T> &rep) : rep_(rep) {
        int n = rep_.rank();
        // e_k by expanding prod_i (1 + alpha_i x).
        e_.assign(static_cast<size_t>(n) + 1, ring_traits<T>::zero());
        e_[0] = ring_traits<T>::one();
        for (int i = 0; i < n; ++i) {
            const T &a = rep_.parameter(static_cast<size_t>(i));
            for (int k = i + 1; k >= 1; --k) e_[static_cast<size_t>(k)] = e_[static_cast<size_t>(k)] + a * e_[static_cast<size_t>(k - 1)];
        }
        h_.push_back(ring_traits<T>::one()); // h_0
    }

    const UnramifiedRep<T> &rep() const { return rep_; }

    T elem(int k) const {
        if (k < 0 || k > rep_.rank()) throw precondition_error("elem_sym: index out of range 0..n");
        return e_[static_cast<size_t>(k)];
    }

    // h_k, with h_k = 0 for k < 0; cached and extended on demand through the
    // recurrence sum_{i=0}^{n} (-1)^i e_i h_{k-i} = 0 (k >= 1).
    const T &h(long k) {
        static const T h_neg = ring_traits<T>::zero();
        if (k < 0) return h_neg;
        while (static_cast<long>(h_.size()) <= k) {
            long kk = static_cast<long>(h_.size());
            T acc = ring_traits<T>::zero();
            int n = rep_.rank();
            for (int i = 1; i <= n && i <= kk; ++i) {
                T term = e_[static_cast<size_t>(i)] * h_[static_cast<size_t>(kk - i)];
                if (i % 2 == 0)
                    acc -= term;
                else
                    acc += term;
            }
            h_.push_back(std::move(acc));
        }
        return h_[static_cast<size_t>(k)];
    }

    // lambda_R(m) for a weakly decreasing weight m of length rank(): shift to a
    // partition, pull the shift out through the central product, then the
    // Jacobi-Trudi determinant.
    T schur(std::span<const long> m) {
        int n = rep_.rank();
        if (static_cast<int>(m.size()) != n) throw precondition_error("schur: weight length must equal the rank");
        if (!DominantWeight::is_dominant(m)) throw precondition_error("schur: weight must be weakly decreasing");
        long shift = m[static_cast<size_t>(n) - 1];
        if (n == 1) return ring_pow(rep_.parameter(0), m[0]);
        mat_.assign(static_cast<size_t>(n) * n, ring_traits<T>::zero());
        for (int i = 0; i < n; ++i) {
            long mu = m[static_cast<size_t>(i)] - shift;
            for (int j = 0; j < n; ++j) mat_[static_cast<size_t>(i) * n + j] = h(mu - i + j);
        }
        T det = detail::small_det(mat_, n);
        if (shift != 0) det = det * ring_pow(rep_.central_product(), shift);
        return det;
    }

    T schur(const DominantWeight &m) { return schur(std::span<const long>(m.entries())); }

  private:
    UnramifiedRep<T> rep_;
    std::vector<T> e_;
    std::vector<T> h_;
    std::vector<T> mat_; // scratch for the determinant
};

template <typename T>
T schur(const UnramifiedRep<T> &rep, std::span<const long> m) {
    SchurEvaluator<T> ev(rep);
    return ev.schur(m);
}

template <typename T>
T schur(const UnramifiedRep<T> &rep, const DominantWeight &m) {
    return schur(rep, std::span<const long>(m.entries()));
}

template <typename T>
T elem_sym(const UnramifiedRep<T> &rep, int k) {
    SchurEvaluator<T> ev(rep);
    return ev.elem(k);
}

// Weyl character ratio det([alpha_j^{m_i + n - i}]) / det([alpha_j^{n - i}]),
// valid only at pairwise distinct parameters.
template <typename T>
T schur_weyl_oracle(const UnramifiedRep<T> &rep, std::span<const long> m) {
    int n = rep.rank();
    if (static_cast<int>(m.size()) != n) throw precondition_error("schur_weyl_oracle: weight length must equal the rank");
    if (!DominantWeight::is_dominant(m)) throw precondition_error("schur_weyl_oracle: weight must be weakly decreasing");
    std::vector<T> num(static_cast<size_t>(n) * n), den(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            long em = m[static_cast<size_t>(i)] + n - 1 - i;
            num[static_cast<size_t>(i) * n + j] = ring_pow(rep.parameter(static_cast<size_t>(j)), em);
            den[static_cast<size_t>(i) * n + j] = ring_pow(rep.parameter(static_cast<size_t>(j)), static_cast<long>(n) - 1 - i);
        }
    }
    T d = detail::small_det(den, n);
    if (ring_traits<T>::is_zero(d))
        throw degeneracy_error("schur_weyl_oracle: singular denominator (repeated Satake parameters)");
    T u = detail::small_det(num, n);
    return u / d;
}

template <typename T>
T schur_weyl_oracle(const UnramifiedRep<T> &rep, const DominantWeight &m) {
    return schur_weyl_oracle(rep, std::span<const long>(m.entries()));
}

// Unramified Whittaker torus value: delta^{1/2}(a) lambda(m) on dominant m,
// zero otherwise.  The modular-character exponent sum m_i (n - 2i + 1) is kept
// as an integer so its parity decides whether sqrt(p) enters.
template <typename T>
T whittaker_value(const UnramifiedRep<T> &rep, std::span<const long> m) {
    int n = rep.rank();
    if (static_cast<int>(m.size()) != n) throw precondition_error("whittaker_value: weight length must equal the rank");
    if (!DominantWeight::is_dominant(m)) return ring_traits<T>::zero();
    long exponent = 0;
    for (int i = 1; i <= n; ++i) exponent += m[static_cast<size_t>(i) - 1] * (n - 2 * i + 1);
    T half = ring_traits<T>::half_power_of_p(rep.residue_cardinality(), -exponent);
    return half * schur(rep, m);
}

template <typename T>
T whittaker_value(const UnramifiedRep<T> &rep, const DominantWeight &m) {
    return whittaker_value(rep, std::span<const long>(m.entries()));
}

} // namespace lzeta
