// The reciprocity-specific layer: local weights on both sides, the
// supercuspidal projection rule, the residue-term local factor at the central
// point, the degenerate-term local factor, the dual-parameter involution, and
// the finite Euler-product assembly of the main term.
#pragma once

#include <complex>
#include <iostream>
#include <optional>
#include <span>

#include "zeta.hpp"

namespace lzeta {

struct SPoint {
    mpq_class s1;
    mpq_class s2;

    SPoint() : s1(0), s2(0) {}
    SPoint(mpq_class a, mpq_class b) : s1(std::move(a)), s2(std::move(b)) {}
    static SPoint central() { return {mpq_class(1, 2), mpq_class(1, 2)}; }

    friend bool operator==(const SPoint &x, const SPoint &y) { return x.s1 == y.s1 && x.s2 == y.s2; }
};

// The dual-parameter affine involution
// s -> ((1 + (n-1) s2 - s1)/n, ((n+1) s1 + s2 - 1)/n).
inline SPoint scheck(const SPoint &s, int n) {
    if (n < 2) throw precondition_error("scheck: n must be >= 2");
    mpq_class nn(n);
    return SPoint{(1 + (nn - 1) * s.s2 - s.s1) / nn, ((nn + 1) * s.s1 + s.s2 - 1) / nn};
}

namespace detail {
// p^{-s} as an exact scalar; s must be a half-integer.
inline Scalar exact_power_point(unsigned long p, const mpq_class &s) {
    mpq_class twice = 2 * s;
    if (twice.get_den() != 1)
        throw precondition_error("exact evaluation point: s must be a half-integer so p^{-s} stays in Q(i)[sqrt p]");
    if (!twice.get_num().fits_slong_p()) throw precondition_error("exact evaluation point: s out of range");
    return Scalar::half_power_of_p(p, -twice.get_num().get_si());
}

// zeta_p(n)/zeta_p(1) = (1 - 1/p)/(1 - p^{-n}).
template <typename T>
T zeta_ratio(unsigned long p, int n) {
    T inv_p = ring_traits<T>::half_power_of_p(p, -2);
    T one = ring_traits<T>::one();
    return (one - inv_p) / (one - ring_pow(inv_p, static_cast<long>(n)));
}
} // namespace detail

// Original-side unramified weight at f = 0: zeta_p(n)/L_p(1, sigma x dual sigma)
// (eta(1) = 1 and the newvector norm is L(1, sigma x dual sigma)/zeta(n)).
template <typename T>
T h_original_unramified(const UnramifiedRep<T> &Pi, const UnramifiedRep<T> &sigma, const UnramifiedRep<T> &pi) {
    int n = sigma.rank();
    if (Pi.rank() != n + 1 || pi.rank() != n - 1)
        throw precondition_error("h_original_unramified: ranks must be n+1 / n / n-1");
    if constexpr (ring_traits<T>::exact) {
        if (sigma.has_repeated_parameters())
            throw degeneracy_error(
                "h_original_unramified: isomorphic constituents in sigma (pairwise non-isomorphic hypothesis fails)");
    }
    T x = ring_traits<T>::half_power_of_p(sigma.residue_cardinality(), -2); // 1/p
    T zeta_n = local_zeta<T>(SVarSpec{sigma.rank(), 0}).eval(x, ring_traits<T>::one());
    T l_one = local_L_rs(sigma, sigma.dual(), SVarSpec::s1()).eval(x, ring_traits<T>::one());
    return zeta_n / l_one;
}

enum class HSupport { vanishes, newvector_case, bounded_case };

// Support rule of the original-side weight in the conductor exponent of sigma.
inline HSupport h_support_rule(int c_sigma, int f) {
    if (c_sigma > f) return HSupport::vanishes;
    if (c_sigma == f) return HSupport::newvector_case;
    return HSupport::bounded_case;
}

// Reported bound exponent in the bounded case: f*eps + c - n(c+f)/2, returned
// as (epsilon coefficient, constant part).
inline std::pair<long, mpq_class> h_bound_exponent(int c_sigma, int f, int n) {
    return {static_cast<long>(f), mpq_class(c_sigma) - mpq_class(n) * (c_sigma + f) / 2};
}

// Dual-side weight for unramified sigma with trivial central product:
// zeta_p(n)/L_p(1, sigma x dual sigma) times the truncation polynomial of the
// averaged-newvector integral, evaluated at x2 = p^{-s2}.
template <typename T>
T h_check_dual(const UnramifiedRep<T> &sigma, const UnramifiedRep<T> &pi, int f, const T &x2) {
    T x = ring_traits<T>::half_power_of_p(sigma.residue_cardinality(), -2);
    T zeta_n = local_zeta<T>(SVarSpec{sigma.rank(), 0}).eval(x, ring_traits<T>::one());
    T l_one = local_L_rs(sigma, sigma.dual(), SVarSpec::s1()).eval(x, ring_traits<T>::one());
    return zeta_n / l_one * psi_checked_ratio(sigma, pi, f, x2);
}

// Gate on the sigma-side descriptor: the dual weight vanishes off the
// unramified spectrum.
template <typename T>
T h_check_dual_gated(const RamifiedDescriptor &sigma_desc, const UnramifiedRep<T> &sigma, const UnramifiedRep<T> &pi,
                     int f, const T &x2) {
    if (sigma_desc.kind != RamifiedDescriptor::Kind::unramified) return ring_traits<T>::zero();
    return h_check_dual(sigma, pi, f, x2);
}

// Supercuspidal projection at the auxiliary place: eps(1, tau x dual tau) on
// the single descriptor equal to tau, zero elsewhere.
inline Scalar h_p0(const RamifiedDescriptor &tau, const RamifiedDescriptor &sigma) {
    if (tau.kind != RamifiedDescriptor::Kind::supercuspidal_tau)
        throw precondition_error("h_p0: tau must be a supercuspidal descriptor");
    if (!tau.epsilon_at_1) throw precondition_error("h_p0: tau needs the opaque epsilon_at_1 input");
    if (sigma == tau) return *tau.epsilon_at_1;
    return Scalar(0);
}

// lambda_{dual sigma(pi,1/2)}(r, 0, ..., 0) through the L-function identity
// L(s, dual sigma(pi,1/2)) = L(s - 1/2, dual pi) zeta(s + (n-1)/2):
// sum_{j=0}^{r} h_j(dual pi) p^{j/2} p^{-(r-j)(n-1)/2}.
template <typename T>
T residue_lambda_expand(const UnramifiedRep<T> &pi, long r) {
    if (r < 0) throw precondition_error("residue_lambda_expand: r must be >= 0");
    int n = pi.rank() + 1;
    unsigned long p = pi.residue_cardinality();
    SchurEvaluator<T> pid_ev(pi.dual());
    T acc = ring_traits<T>::zero();
    for (long j = 0; j <= r; ++j) {
        T term = pid_ev.h(j) * ring_traits<T>::half_power_of_p(p, j) *
                 ring_traits<T>::half_power_of_p(p, -(r - j) * (static_cast<long>(n) - 1));
        acc += term;
    }
    return acc;
}

// The residue-term local weight at s = (1/2, 1/2), in the analytically
// continued (cancelled) form: zeta_p(n)/zeta_p(1) *
// sum_k (-1)^k e_k(dual pi) lambda_{dual sigma(pi,1/2)}(f-k, 0, ...) p^{-(f(n-1)+k)/2}.
template <typename T>
T h_check_residue_point(const UnramifiedRep<T> &pi, int f) {
    if (f < 0) throw precondition_error("h_check_residue_point: f must be >= 0");
    if constexpr (ring_traits<T>::exact) {
        if (!pi.has_trivial_central_product())
            throw precondition_error("h_check_residue_point: requires trivial central product of pi");
    }
    int n = pi.rank() + 1;
    unsigned long p = pi.residue_cardinality();
    SchurEvaluator<T> pid_ev(pi.dual());
    T acc = ring_traits<T>::zero();
    int kmax = std::min(f, n - 1);
    for (int k = 0; k <= kmax; ++k) {
        T term = pid_ev.elem(k) * residue_lambda_expand(pi, f - k) *
                 ring_traits<T>::half_power_of_p(p, -(static_cast<long>(f) * (n - 1) + k));
        if (k % 2 == 1) term = -term;
        acc += term;
    }
    return detail::zeta_ratio<T>(p, n) * acc;
}

// Local factor of the residue term:
// L(1, pi x dual pi) L(1 + n(1-s2), pi) L(1 - n(1-s2), dual pi) * Hcheck(sigma(pi, 1-s2)).
// The three L-values and the newvector-norm denominator inside Hcheck share
// their pole structure; the product is assembled as one factored rational
// function and cancelled exactly before evaluation, which realizes the
// analytic continuation (the literal three-factor product has a pole at the
// central point already for n = 2).
inline Scalar residue_term_local(const UnramifiedRep<Scalar> &pi, int f, const SPoint &s) {
    if (f < 0) throw precondition_error("residue_term_local: f must be >= 0");
    int n = pi.rank() + 1;
    unsigned long p = pi.residue_cardinality();
    mpq_class z = 1 - s.s2;
    Scalar t = detail::exact_power_point(p, z);            // p^{-(1-s2)}
    Scalar x2 = detail::exact_power_point(p, s.s2);        // p^{-s2}
    UnramifiedRep<Scalar> sigma_z = sigma_pi_z(pi, t);
    if (sigma_z.has_repeated_parameters())
        throw degeneracy_error(
            "residue_term_local: sigma(pi, 1-s2) has isomorphic constituents at this point (zeta_p(1)-type degeneracy)");
    if (!sigma_z.has_trivial_central_product())
        throw precondition_error("residue_term_local: requires trivial central product of pi");

    Scalar x = Scalar::half_power_of_p(p, -2); // 1/p
    // All factors written at the common point X = 1/p; the arguments 1 +- nz
    // enter through the coefficients p^{-+nz}.  The newvector-norm denominator
    // L(1, sigma_z x dual sigma_z) matches the three L-values factor by factor
    // up to one unit factor (the net 1/zeta_p(1)) and the surviving zeta_p(n),
    // so the simplified product is pole-free at the central point.
    Scalar tn = t.pow(n);
    EulerFactor<Scalar> merged;
    for (const Scalar &b1 : pi.satake())
        for (const Scalar &b2 : pi.satake()) merged.push(b1 * b2.inverse(), 1, 0, -1); // L(1, pi x dual pi)
    for (const Scalar &b : pi.satake()) merged.push(b * tn, 1, 0, -1);                 // L(1 + nz, pi)
    for (const Scalar &b : pi.satake()) merged.push((b * tn).inverse(), 1, 0, -1);     // L(1 - nz, dual pi)
    merged.push(Scalar::half_power_of_p(p, -2 * (static_cast<long>(n) - 1)), 1, 0, -1); // zeta_p(n)
    for (const Scalar &a1 : sigma_z.satake())
        for (const Scalar &a2 : sigma_z.satake()) merged.push(a1 * a2.inverse(), 1, 0, +1); // 1/L(1, sigma_z x dual)
    Scalar normalization = merged.simplified().eval(x, Scalar(1));

    return normalization * psi_checked_ratio(sigma_z, pi, f, x2);
}

// Per-place data for the Euler-product assembly.
struct PrimeLocalData {
    unsigned long p;
    UnramifiedRep<Scalar> Pi_local; // rank n+1
    UnramifiedRep<Scalar> pi_local; // rank n-1
    int f = 0;
    RamifiedDescriptor descriptor;

    PrimeLocalData(unsigned long p_, UnramifiedRep<Scalar> Pi_, UnramifiedRep<Scalar> pi_, int f_,
                   RamifiedDescriptor desc = {})
        : p(p_), Pi_local(std::move(Pi_)), pi_local(std::move(pi_)), f(f_), descriptor(std::move(desc)) {
        if (Pi_local.rank() != pi_local.rank() + 2)
            throw precondition_error("PrimeLocalData: ranks of Pi and pi must differ by 2");
        if (Pi_local.residue_cardinality() != p || pi_local.residue_cardinality() != p)
            throw precondition_error("PrimeLocalData: residue cardinality mismatch");
        if (f < 0) throw precondition_error("PrimeLocalData: f must be >= 0");
    }
};

// Residue-term local factor gated on the place descriptor: a supercuspidal
// place annihilates the whole residue term.
inline Scalar residue_term_local(const PrimeLocalData &data, const SPoint &s) {
    if (data.descriptor.kind == RamifiedDescriptor::Kind::supercuspidal_tau) return Scalar(0);
    return residue_term_local(data.pi_local, data.f, s);
}

// Degenerate-term local factor: the closed rational function evaluated at an
// exact half-integer point.
inline Scalar degenerate_local(const UnramifiedRep<Scalar> &Pi, const UnramifiedRep<Scalar> &pi, const SPoint &s) {
    unsigned long p = Pi.residue_cardinality();
    Scalar x1 = detail::exact_power_point(p, s.s1);
    Scalar x2 = detail::exact_power_point(p, s.s2);
    return closed_omega(Pi, pi).eval(x1, x2);
}

// One prime's contribution to the main term, composed from the three L-values
// separately (the route independent of the closed degenerate factor):
// L_v(s1+s2, Pi x dual pi) L_v(n s1, dual Pi) / L_v((n+1)s1+s2, dual pi).
inline Scalar main_term_local_factor(const PrimeLocalData &d, int n, const SPoint &s = SPoint::central()) {
    if (d.Pi_local.rank() != n + 1) throw precondition_error("main_term: per-prime data rank does not match n");
    Scalar x1 = detail::exact_power_point(d.p, s.s1);
    Scalar x2 = detail::exact_power_point(d.p, s.s2);
    Scalar num1 = local_L_rs(d.Pi_local, d.pi_local.dual(), SVarSpec{1, 1}).eval(x1, x2);
    Scalar num2 = local_L(d.Pi_local.dual(), SVarSpec{n, 0}).eval(x1, x2);
    Scalar den = local_L(d.pi_local.dual(), SVarSpec{n + 1, 1}).eval(x1, x2);
    return num1 * num2 / den;
}

// Finite Euler-product assembly of the main term:
//   D_inf * prod_{f_v >= 1} zeta_p(n)/zeta_p(1) / eps_p0
//         * prod_{v != p0} L_v(s1+s2, Pi x dual pi) L_v(n s1, dual Pi) / L_v((n+1)s1+s2, dual pi),
// the half-integer evaluation points realized exactly in Q(i)[sqrt p] per
// prime and the final product returned numerically.  The partial products run
// over exactly the supplied primes; no approximation of global L-values is
// claimed.
inline std::complex<double> main_term(std::span<const PrimeLocalData> data, int n,
                                      std::optional<size_t> p0_index, double d_inf, const Scalar &eps_p0,
                                      const SPoint &s = SPoint::central()) {
    if (n < 2) throw precondition_error("main_term: n must be >= 2");
    if (n < 3) std::cerr << "lzeta: warning: main_term outside the n >= 3 regime, result is formal\n";
    if (p0_index && *p0_index >= data.size()) throw precondition_error("main_term: p0 index out of range");
    if (eps_p0.is_zero()) throw precondition_error("main_term: eps_p0 must be nonzero");
    std::complex<double> acc{d_inf, 0.0};
    for (size_t v = 0; v < data.size(); ++v) {
        const PrimeLocalData &d = data[v];
        if (d.f >= 1) acc *= detail::zeta_ratio<Scalar>(d.p, n).to_complex();
        if (p0_index && *p0_index == v) {
            if (d.Pi_local.rank() != n + 1)
                throw precondition_error("main_term: per-prime data rank does not match n");
            continue; // Omega = 1 at the supercuspidal place
        }
        acc *= main_term_local_factor(d, n, s).to_complex();
    }
    return acc / eps_p0.to_complex();
}

} // namespace lzeta
