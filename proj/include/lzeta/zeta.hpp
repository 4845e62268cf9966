// Local Rankin-Selberg zeta integrals in their Iwasawa-reduced form, each
// implemented twice: a brute-force truncated dominant-weight sum and the
// closed form.  Coefficientwise equality of the two routes is the core test
// surface of the library.
//
// All brute sums here are stated purely in Schur values and X-powers; the
// delta^{1/2} and |det|^{s-1/2} factors cancel in every in-scope integral, so
// sqrt(p) never enters this module.
#pragma once

#include <complex>
#include <optional>

#include "lfactors.hpp"
#include "schur.hpp"

namespace lzeta {

template <typename T>
struct ZetaReport {
    Series2<T> brute;
    Series2<T> closed;
    int order;
    bool equal;
    std::optional<ExponentPair> first_discrepancy;
};

template <typename T>
ZetaReport<T> make_zeta_report(Series2<T> brute, Series2<T> closed, int order) {
    auto disc = Series2<T>::first_discrepancy(brute, closed);
    return ZetaReport<T>{std::move(brute), std::move(closed), order, !disc.has_value(), disc};
}

namespace detail {
template <typename T>
void check_same_p(const UnramifiedRep<T> &x, const UnramifiedRep<T> &y, const char *where) {
    if (x.residue_cardinality() != y.residue_cardinality())
        throw precondition_error(std::string(where) + ": representations live over different residue cardinalities");
}
} // namespace detail

// ---------------------------------------------------------------------------
// Psi(s1, W_Pi, conj W_sigma) with unramified sigma: the rank n+1 x n pairing.
// Brute sum over dominant m >= 0 of length n; closed form L(s1, Pi x dual sigma).
// ---------------------------------------------------------------------------

template <typename T>
Series2<T> brute_psi_rs_ev(SchurEvaluator<T> &pi_ev, SchurEvaluator<T> &sigma_dual_ev, int order) {
    int n = sigma_dual_ev.rep().rank();
    if (pi_ev.rep().rank() != n + 1) throw precondition_error("brute_psi_rs: rank of Pi must be rank of sigma plus 1");
    Series2<T> out(order);
    std::vector<long> padded(static_cast<size_t>(n) + 1, 0);
    for_each_dominant(n, 0, order, [&](std::span<const long> m) {
        long total = 0;
        for (size_t i = 0; i < m.size(); ++i) {
            padded[i] = m[i];
            total += m[i];
        }
        padded[static_cast<size_t>(n)] = 0;
        out.at(static_cast<int>(total), 0) += pi_ev.schur(padded) * sigma_dual_ev.schur(m);
    });
    return out;
}

template <typename T>
Series2<T> brute_psi_rs(const UnramifiedRep<T> &Pi, const UnramifiedRep<T> &sigma, int order) {
    detail::check_same_p(Pi, sigma, "brute_psi_rs");
    SchurEvaluator<T> pi_ev(Pi);
    SchurEvaluator<T> sd_ev(sigma.dual());
    return brute_psi_rs_ev(pi_ev, sd_ev, order);
}

template <typename T>
EulerFactor<T> closed_psi_rs(const UnramifiedRep<T> &Pi, const UnramifiedRep<T> &sigma) {
    detail::check_same_p(Pi, sigma, "closed_psi_rs");
    if (Pi.rank() != sigma.rank() + 1) throw precondition_error("closed_psi_rs: rank of Pi must be rank of sigma plus 1");
    return local_L_rs(Pi, sigma.dual(), SVarSpec::s1());
}

// ---------------------------------------------------------------------------
// Psi(s2, unipotent-averaged newvector of sigma at level f, conj W_pi):
// sum over dominant m of length n-1 with m_{n-1} >= f.
// ---------------------------------------------------------------------------

// Shared per-draw cache: Schur products for every weight up to a maximal
// order, reusable across the f-grid.  Only the total and the last entry of
// each weight matter for assembling the series.
template <typename T>
class PsiCheckedBatch {
  public:
    PsiCheckedBatch(const UnramifiedRep<T> &sigma, const UnramifiedRep<T> &pi, int max_order) {
        detail::check_same_p(sigma, pi, "psi_checked");
        int n = sigma.rank();
        if (pi.rank() != n - 1) throw precondition_error("psi_checked: rank of pi must be rank of sigma minus 1");
        SchurEvaluator<T> sig_ev(sigma);
        SchurEvaluator<T> pid_ev(pi.dual());
        std::vector<long> padded(static_cast<size_t>(n), 0);
        terms_.reserve(64);
        for_each_dominant(n - 1, 0, max_order, [&](std::span<const long> m) {
            long total = 0;
            for (size_t i = 0; i < m.size(); ++i) {
                padded[i] = m[i];
                total += m[i];
            }
            padded[static_cast<size_t>(n) - 1] = 0;
            long last = m.empty() ? 0 : m[m.size() - 1];
            terms_.push_back(Term{total, last, sig_ev.schur(padded) * pid_ev.schur(m)});
        });
    }

    // The truncated brute sum with support cutoff m_{n-1} >= f.
    Series2<T> series(int f, int order) const {
        if (f < 0) throw precondition_error("psi_checked: f must be >= 0");
        Series2<T> out(order);
        for (const auto &t : terms_) {
            if (t.last < f || t.total > order) continue;
            out.at(0, static_cast<int>(t.total)) += t.value;
        }
        return out;
    }

    // Complement sum over weights with m_{n-1} < f (enumeration cross-check).
    Series2<T> complement_series(int f, int order) const {
        Series2<T> out(order);
        for (const auto &t : terms_) {
            if (t.last >= f || t.total > order) continue;
            out.at(0, static_cast<int>(t.total)) += t.value;
        }
        return out;
    }

  private:
    struct Term {
        long total;
        long last;
        T value;
    };
    std::vector<Term> terms_;
};

template <typename T>
Series2<T> brute_psi_checked(const UnramifiedRep<T> &sigma, const UnramifiedRep<T> &pi, int f, int order) {
    PsiCheckedBatch<T> batch(sigma, pi, order);
    return batch.series(f, order);
}

// Closed form of the same integral: the Rankin-Selberg factor times the
// truncation polynomial sum_{k=0}^{min(f,n-1)} (-1)^k e_k(dual pi)
// h_{f-k}(dual sigma) X2^{f(n-1)+k}.  The bottom-row determinant expansion
// behind it is exact only for trivial central products: a general central
// character multiplies the polynomial by (prod alpha(sigma) / prod beta(pi))^f.
// That correction is deliberately not implemented; the preconditions are
// enforced instead (pi's only matters for f >= 1, the factor is 1 at f = 0).
template <typename T>
struct PsiCheckedClosed {
    EulerFactor<T> lfactor;  // L(s2, sigma x dual pi)
    Series2<T> correction;   // polynomial in X2

    Series2<T> expand(int order) const {
        Series2<T> corr(order);
        correction.for_each([&](int d1, int d2, const T &c) {
            if (d1 + d2 <= order) corr.at(d1, d2) += c;
        });
        return lfactor.expansion(order) * corr;
    }
};

template <typename T>
PsiCheckedClosed<T> closed_psi_checked(const UnramifiedRep<T> &sigma, const UnramifiedRep<T> &pi, int f) {
    detail::check_same_p(sigma, pi, "closed_psi_checked");
    int n = sigma.rank();
    if (pi.rank() != n - 1) throw precondition_error("closed_psi_checked: rank of pi must be rank of sigma minus 1");
    if (f < 0) throw precondition_error("closed_psi_checked: f must be >= 0");
    auto check_product_one = [](const UnramifiedRep<T> &rep, const char *what) {
        if constexpr (ring_traits<T>::exact) {
            if (!rep.has_trivial_central_product())
                throw precondition_error(std::string("closed_psi_checked: requires trivial central product of ") + what);
        } else {
            if (std::abs(ring_traits<T>::to_complex(rep.central_product()) - std::complex<double>{1.0, 0.0}) > 1e-9)
                throw precondition_error(std::string("closed_psi_checked: requires trivial central product of ") + what);
        }
    };
    check_product_one(sigma, "sigma (prod alpha_i = 1)");
    if (f >= 1) check_product_one(pi, "pi (prod beta_i = 1, needed once f >= 1)");
    int kmax = std::min(f, n - 1);
    Series2<T> corr(f * (n - 1) + kmax);
    SchurEvaluator<T> pid_ev(pi.dual());
    SchurEvaluator<T> sigd_ev(sigma.dual());
    for (int k = 0; k <= kmax; ++k) {
        T term = pid_ev.elem(k) * sigd_ev.h(f - k);
        if (k % 2 == 1) term = -term;
        corr.at(0, f * (n - 1) + k) = std::move(term);
    }
    return PsiCheckedClosed<T>{local_L_rs(sigma, pi.dual(), SVarSpec::s2()), std::move(corr)};
}

// The ratio Psi/L evaluated at a point x2 (the truncation polynomial alone).
template <typename T>
T psi_checked_ratio(const UnramifiedRep<T> &sigma, const UnramifiedRep<T> &pi, int f, const T &x2) {
    auto closed = closed_psi_checked(sigma, pi, f);
    return closed.correction.eval(ring_traits<T>::one(), x2);
}

// ---------------------------------------------------------------------------
// The degenerate-term local integral Omega(s, W_Pi, W_pi): rank n+1 x n-1
// double sum; closed form L(s1+s2, Pi x dual pi) L(n s1, dual Pi) /
// L((n+1) s1 + s2, dual pi).
// ---------------------------------------------------------------------------

template <typename T>
Series2<T> brute_omega(const UnramifiedRep<T> &Pi, const UnramifiedRep<T> &pi, int order) {
    detail::check_same_p(Pi, pi, "brute_omega");
    int n = Pi.rank() - 1;
    if (pi.rank() != n - 1) throw precondition_error("brute_omega: ranks of Pi and pi must differ by 2");
    SchurEvaluator<T> Pi_ev(Pi);
    SchurEvaluator<T> pid_ev(pi.dual());
    Series2<T> out(order);
    std::vector<long> padded(static_cast<size_t>(n) + 1, 0);
    for (long l = 0; static_cast<long>(n) * l <= order; ++l) {
        long budget = (order - static_cast<long>(n) * l) / 2; // |m| <= budget keeps total degree <= order
        for_each_dominant(n - 1, 0, budget, [&](std::span<const long> m) {
            long total = 0;
            for (size_t i = 0; i < m.size(); ++i) {
                padded[i] = m[i] + l;
                total += m[i];
            }
            padded[static_cast<size_t>(n) - 1] = l;
            padded[static_cast<size_t>(n)] = 0;
            out.at(static_cast<int>(total + static_cast<long>(n) * l), static_cast<int>(total)) +=
                Pi_ev.schur(padded) * pid_ev.schur(m);
        });
    }
    return out;
}

template <typename T>
EulerFactor<T> closed_omega(const UnramifiedRep<T> &Pi, const UnramifiedRep<T> &pi) {
    detail::check_same_p(Pi, pi, "closed_omega");
    int n = Pi.rank() - 1;
    if (pi.rank() != n - 1) throw precondition_error("closed_omega: ranks of Pi and pi must differ by 2");
    if constexpr (ring_traits<T>::exact) {
        if (!Pi.has_trivial_central_product())
            throw precondition_error("closed_omega: requires trivial central product of Pi (prod alpha_i = 1)");
    } else {
        if (std::abs(ring_traits<T>::to_complex(Pi.central_product()) - std::complex<double>{1.0, 0.0}) > 1e-9)
            throw precondition_error("closed_omega: requires trivial central product of Pi (prod alpha_i = 1)");
    }
    EulerFactor<T> f = local_L_rs(Pi, pi.dual(), SVarSpec{1, 1});
    f = f * local_L(Pi.dual(), SVarSpec{n, 0});
    f = f * local_L(pi.dual(), SVarSpec{n + 1, 1}).inverse();
    return f;
}

// ---------------------------------------------------------------------------
// The deformed L^2 sum sum_m lambda_sigma(m,0) lambda_sigma'(m,0) X1^{|m|} and
// its Cauchy-type closed form L(s, sigma x sigma') with the zeta(ns)-type
// factor (1 - X1^n e_n(sigma) e_n(sigma')) removed from the denominator.
// At sigma' = dual(sigma), X1 = 1/p this is the L^2 norm of the newvector,
// L(1, sigma x dual sigma)/zeta_p(n).
// ---------------------------------------------------------------------------

template <typename T>
Series2<T> l2_series(const UnramifiedRep<T> &sigma, const UnramifiedRep<T> &sigma2, int order) {
    detail::check_same_p(sigma, sigma2, "l2_series");
    int n = sigma.rank();
    if (sigma2.rank() != n) throw precondition_error("l2_series: ranks must be equal");
    SchurEvaluator<T> a_ev(sigma);
    SchurEvaluator<T> b_ev(sigma2);
    Series2<T> out(order);
    std::vector<long> padded(static_cast<size_t>(n), 0);
    for_each_dominant(n - 1, 0, order, [&](std::span<const long> m) {
        long total = 0;
        for (size_t i = 0; i < m.size(); ++i) {
            padded[i] = m[i];
            total += m[i];
        }
        padded[static_cast<size_t>(n) - 1] = 0;
        out.at(static_cast<int>(total), 0) += a_ev.schur(padded) * b_ev.schur(padded);
    });
    return out;
}

template <typename T>
EulerFactor<T> closed_l2(const UnramifiedRep<T> &sigma, const UnramifiedRep<T> &sigma2) {
    detail::check_same_p(sigma, sigma2, "closed_l2");
    int n = sigma.rank();
    if (sigma2.rank() != n) throw precondition_error("closed_l2: ranks must be equal");
    EulerFactor<T> f = local_L_rs(sigma, sigma2, SVarSpec::s1());
    f.push(sigma.central_product() * sigma2.central_product(), n, 0, +1);
    return f;
}

// ---------------------------------------------------------------------------
// Truncated tail of the rank n+1 x n-1 integral at central valuation l, with
// its Weyl-dimension majorant.  Numeric, tempered (unit-modulus) parameters.
// ---------------------------------------------------------------------------

struct WhittakerTailReport {
    std::complex<double> value;
    double majorant_wd;       // sum with |Schur| replaced by the Weyl dimension; l-dependent
    double majorant_uniform;  // Hadamard/Vandermonde Schur bound, uniform over weights
    double majorant_uniform_l0;
    double scaled_value;      // |value| * p^{nl/2}
    bool value_within_majorants;
    bool uniform_in_l; // majorant_uniform * p^{nl/2} stays below the l = 0 reference
};

// Uniform Schur bound for distinct unit-modulus parameters:
// |s_lambda(alpha)| <= r^{r/2} / |Vandermonde(alpha)| for every weight lambda
// (Hadamard on the numerator determinant).  This is what makes the tail bound
// uniform in l; the Weyl-dimension majorant alone grows with l.
inline double uniform_schur_bound(const UnramifiedRep<std::complex<double>> &rep) {
    int r = rep.rank();
    double vandermonde = 1.0;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            vandermonde *= std::abs(rep.parameter(static_cast<size_t>(i)) - rep.parameter(static_cast<size_t>(j)));
    if (vandermonde == 0.0) throw degeneracy_error("uniform_schur_bound: repeated parameters");
    return std::pow(static_cast<double>(r), static_cast<double>(r) / 2.0) / vandermonde;
}

inline WhittakerTailReport whittaker_tail_check(const UnramifiedRep<std::complex<double>> &Pi,
                                                const UnramifiedRep<std::complex<double>> &xi, long l,
                                                std::complex<double> s, int order) {
    using C = std::complex<double>;
    int n = Pi.rank() - 1;
    if (xi.rank() != n - 1) throw precondition_error("whittaker_tail_check: ranks of Pi and xi must differ by 2");
    if (l < 0) throw precondition_error("whittaker_tail_check: l must be >= 0");
    constexpr double kUnitTol = 1e-9;
    for (const C &a : Pi.satake())
        if (std::abs(std::abs(a) - 1.0) > kUnitTol)
            throw precondition_error("whittaker_tail_check: tempered mode needs unit-modulus parameters (Pi)");
    for (const C &a : xi.satake())
        if (std::abs(std::abs(a) - 1.0) > kUnitTol)
            throw precondition_error("whittaker_tail_check: tempered mode needs unit-modulus parameters (xi)");

    double p = static_cast<double>(Pi.residue_cardinality());
    SchurEvaluator<C> Pi_ev(Pi);
    SchurEvaluator<C> xid_ev(xi.dual());
    C x = std::pow(p, -s);

    // One sweep per level: the actual sum, the Weyl-dimension majorant, and
    // the exponential mass sum_{m >= l*1} p^{-Re(s)|m|} feeding the uniform majorant.
    auto sweep = [&](long level) {
        C acc{0.0, 0.0};
        double wd_acc = 0.0;
        double mass = 0.0;
        std::vector<long> padded(static_cast<size_t>(n) + 1, 0);
        for_each_dominant(n - 1, level, order, [&](std::span<const long> m) {
            long total = 0;
            for (size_t i = 0; i < m.size(); ++i) {
                padded[i] = m[i];
                total += m[i];
            }
            padded[static_cast<size_t>(n) - 1] = level;
            padded[static_cast<size_t>(n)] = 0;
            double damp_m = std::pow(p, -s.real() * static_cast<double>(total));
            acc += Pi_ev.schur(padded) * xid_ev.schur(m) * std::pow(x, static_cast<double>(total));
            wd_acc += weyl_dim(std::span<const long>(padded)).get_d() * weyl_dim(m).get_d() * damp_m;
            mass += damp_m;
        });
        return std::tuple<C, double, double>{acc, wd_acc, mass};
    };

    double bound_product = uniform_schur_bound(Pi) * uniform_schur_bound(xi);
    double damp = std::pow(p, -static_cast<double>(n) * static_cast<double>(l) / 2.0);
    auto [raw, wd_raw, mass] = sweep(l);
    auto [raw0, wd_raw0, mass0] = sweep(0);
    (void)raw0;
    (void)wd_raw0;
    C value = raw * damp;
    double majorant_wd = wd_raw * damp;
    double majorant_uniform = bound_product * mass * damp;
    double majorant_uniform_l0 = bound_product * mass0;
    constexpr double kSlack = 1e-9;
    double scaled = std::abs(value) / damp;
    return WhittakerTailReport{value,
                               majorant_wd,
                               majorant_uniform,
                               majorant_uniform_l0,
                               scaled,
                               std::abs(value) <= majorant_wd * (1.0 + kSlack) + kSlack &&
                                   std::abs(value) <= majorant_uniform * (1.0 + kSlack) + kSlack,
                               majorant_uniform / damp <= majorant_uniform_l0 * (1.0 + kSlack)};
}

} // namespace lzeta
