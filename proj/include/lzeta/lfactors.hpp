// Local L, zeta, gamma factors, conductor bookkeeping, the congruence
// subgroup index eta, and the local Casselman-Shalika factor.
#pragma once

#include <algorithm>
#include <complex>
#include <vector>

#include "euler.hpp"
#include "rep.hpp"

namespace lzeta {

// Argument bookkeeping: a factor attached to the variable a*s1 + b*s2, i.e.
// living at the monomial X1^a X2^b per unit exponent.
struct SVarSpec {
    int a = 1;
    int b = 0;

    SVarSpec(int a_, int b_) : a(a_), b(b_) {
        if (a == 0 && b == 0) throw precondition_error("SVarSpec: (a, b) must be nonzero");
        if (a < 0 || b < 0) throw precondition_error("SVarSpec: exponents must be nonnegative");
    }

    static SVarSpec s1() { return {1, 0}; }
    static SVarSpec s2() { return {0, 1}; }
};

// L(a s1 + b s2, R) = prod_i (1 - alpha_i X1^a X2^b)^{-1}.
template <typename T>
EulerFactor<T> local_L(const UnramifiedRep<T> &rep, SVarSpec v) {
    EulerFactor<T> f;
    for (const T &alpha : rep.satake()) f.push(alpha, v.a, v.b, -1);
    return f;
}

// Rankin-Selberg factor: product over parameter pairs alpha_i beta_j.
template <typename T>
EulerFactor<T> local_L_rs(const UnramifiedRep<T> &r1, const UnramifiedRep<T> &r2, SVarSpec v) {
    if (r1.residue_cardinality() != r2.residue_cardinality())
        throw precondition_error("local_L_rs: representations live over different residue cardinalities");
    EulerFactor<T> f;
    for (const T &alpha : r1.satake())
        for (const T &beta : r2.satake()) f.push(alpha * beta, v.a, v.b, -1);
    return f;
}

// zeta_p(a s1 + b s2) as an Euler factor.
template <typename T>
EulerFactor<T> local_zeta(SVarSpec v) {
    EulerFactor<T> f;
    f.push(ring_traits<T>::one(), v.a, v.b, -1);
    return f;
}

// gamma(s, pi) = eps(s, pi) L(1-s, dual pi)/L(s, pi) with unramified eps = 1;
// numeric only, since 1-s is not a polynomial in X.  Values at zeros of
// L(s, pi)^{-1} are fine (they give 0); proximity to a pole of L(1-s, dual pi)
// is refused.
template <typename T>
std::complex<double> gamma_numeric(const UnramifiedRep<T> &rep, std::complex<double> s) {
    constexpr double kPoleMargin = 1e-9;
    double pd = static_cast<double>(rep.residue_cardinality());
    std::complex<double> x_num = std::pow(pd, -s);
    std::complex<double> x_den = std::pow(pd, s - 1.0);
    std::complex<double> num{1.0, 0.0}, den{1.0, 0.0};
    for (const T &alpha : rep.satake()) {
        std::complex<double> a = ring_traits<T>::to_complex(alpha);
        num *= 1.0 - a * x_num;
        std::complex<double> d = 1.0 - x_den / a;
        if (std::abs(d) < kPoleMargin)
            throw pole_error("gamma_numeric: evaluation point within margin of a pole of L(1-s, dual)");
        den *= d;
    }
    return num / den;
}

// [G_n(o) : K_0(p^f)]: the number of points of projective (n-1)-space over
// o/p^f; the exact value behind the asymptotic |p^f|^{-(n-1)}.
inline mpq_class eta_index(unsigned long p, int f, int n) {
    if (p < 2) throw precondition_error("eta_index: p must be >= 2");
    if (f < 0) throw precondition_error("eta_index: f must be >= 0");
    if (n < 2) throw precondition_error("eta_index: n must be >= 2");
    if (f == 0) return {1};
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class pn;
    mpz_pow_ui(pn.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(n));
    mpz_class proj = (pn - 1) / (pz - 1); // 1 + p + ... + p^{n-1}
    mpz_class head;
    mpz_pow_ui(head.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>((f - 1)) * static_cast<unsigned long>(n - 1));
    return mpq_class(head * proj);
}

namespace detail {
template <typename T>
bool same_parameter_multiset(const UnramifiedRep<T> &x, const UnramifiedRep<T> &y) {
    if (x.rank() != y.rank()) return false;
    if constexpr (ring_traits<T>::exact) {
        std::vector<T> a(x.satake().begin(), x.satake().end());
        std::vector<T> b(y.satake().begin(), y.satake().end());
        auto less = [](const T &u, const T &v) { return lex_less(u, v); };
        std::sort(a.begin(), a.end(), less);
        std::sort(b.begin(), b.end(), less);
        return a == b;
    } else {
        return false; // numeric parameters are never considered identical
    }
}
} // namespace detail

// Local Casselman-Shalika factor prod_{i<j} L(1, R_i x dual R_j), evaluated
// exactly at X = 1/p.  The constituents must be pairwise non-isomorphic;
// locally isomorphic pairs (equal Satake multisets) are refused, as is a
// genuine pole c/p = 1.
template <typename T>
T cs_local(std::span<const UnramifiedRep<T>> reps) {
    if (reps.empty()) throw precondition_error("cs_local: needs at least one constituent");
    unsigned long p = reps.front().residue_cardinality();
    for (const auto &r : reps)
        if (r.residue_cardinality() != p) throw precondition_error("cs_local: mixed residue cardinalities");
    for (size_t i = 0; i < reps.size(); ++i)
        for (size_t j = i + 1; j < reps.size(); ++j)
            if (detail::same_parameter_multiset(reps[i], reps[j]))
                throw degeneracy_error("cs_local: isomorphic constituents (pairwise non-isomorphic hypothesis fails)");
    T x = ring_traits<T>::half_power_of_p(p, -2); // 1/p
    T acc = ring_traits<T>::one();
    for (size_t i = 0; i < reps.size(); ++i)
        for (size_t j = i + 1; j < reps.size(); ++j)
            acc = acc * local_L_rs(reps[i], reps[j].dual(), SVarSpec::s1()).eval(x, ring_traits<T>::one());
    return acc;
}

// Conductor bookkeeping bound: the exponent n2 c1 + n1 c2 dominating
// c(pi1 x pi2); report annotation only.
inline long conductor_rules(const RamifiedDescriptor &d1, const RamifiedDescriptor &d2, int n1, int n2) {
    return static_cast<long>(n2) * d1.conductor_exponent + static_cast<long>(n1) * d2.conductor_exponent;
}

} // namespace lzeta
