#include <catch2/catch_amalgamated.hpp>

#include "lzeta/rng.hpp"
#include "lzeta/spectral.hpp"

using namespace lzeta;
using RepQ = UnramifiedRep<Scalar>;

namespace {
RepQ rep_of(unsigned long p, std::initializer_list<mpq_class> params) {
    std::vector<Scalar> s;
    for (const auto &q : params) s.emplace_back(q);
    return RepQ(p, std::move(s));
}
} // namespace

TEST_CASE("the dual-parameter map is an exact involution") {
    CHECK(scheck(SPoint::central(), 2) == SPoint::central());
    CHECK(scheck(SPoint::central(), 5) == SPoint::central());

    SPoint s{mpq_class(1), mpq_class(0)};
    SPoint c = scheck(s, 3);
    CHECK(c.s1 == 0);
    CHECK(c.s2 == 1);

    DeterministicRng rng(41);
    for (int n = 2; n <= 6; ++n) {
        for (int trial = 0; trial < 200; ++trial) {
            SPoint pt{rng.random_rational(40), rng.random_rational(40)};
            SPoint twice = scheck(scheck(pt, n), n);
            CHECK(twice == pt);
        }
        // the fixed point on the diagonal is unique: scheck(s,s) = (s,s) forces s = 1/2
        SPoint diag{mpq_class(1, 3), mpq_class(1, 3)};
        CHECK(!(scheck(diag, n) == diag));
    }
}

TEST_CASE("original-side unramified weight") {
    RepQ Pi = rep_of(5, {2, 1, mpq_class(1, 2)});
    RepQ pi = trivial_rep<Scalar>(5, 1);
    RepQ sigma = rep_of(5, {mpq_class(3, 2), mpq_class(2, 3)});

    Scalar h = h_original_unramified(Pi, sigma, pi);
    // value * ||W_sigma||^2 = 1 with the norm from the closed l2 factor at X = 1/p
    Scalar norm = closed_l2(sigma, sigma.dual()).eval(Scalar(mpq_class(1, 5)), Scalar(1));
    CHECK(h * norm == Scalar(1));

    // isomorphic constituents refused
    RepQ twins = rep_of(5, {1, 1});
    CHECK_THROWS_AS(h_original_unramified(Pi, twins, pi), degeneracy_error);

    // positivity for unitary numeric data
    DeterministicRng rng(42);
    UnramifiedRep<std::complex<double>> Pic(5, rng.random_unit_satake(3, 0.4));
    UnramifiedRep<std::complex<double>> pic(5, rng.random_unit_satake(1, 0.4));
    UnramifiedRep<std::complex<double>> sigc(5, rng.random_unit_satake(2, 0.4));
    auto hv = h_original_unramified(Pic, sigc, pic);
    CHECK(hv.imag() == Catch::Approx(0.0).margin(1e-9));
    CHECK(hv.real() > 0.0);
}

TEST_CASE("support rule in the conductor exponent") {
    CHECK(h_support_rule(3, 1) == HSupport::vanishes);
    CHECK(h_support_rule(2, 2) == HSupport::newvector_case);
    CHECK(h_support_rule(0, 4) == HSupport::bounded_case);
    auto [eps_coeff, constant] = h_bound_exponent(1, 4, 3);
    CHECK(eps_coeff == 4);
    CHECK(constant == mpq_class(1) - mpq_class(15, 2));
}

TEST_CASE("dual weight: f = 0 degenerates to the original unramified weight") {
    DeterministicRng rng(43);
    for (int n = 2; n <= 4; ++n) {
        RepQ sigma(3, rng.random_satake_product_one(n, 10));
        RepQ pi(3, rng.random_satake(n - 1, 10));
        RepQ Pi(3, rng.random_satake(n + 1, 10));
        Scalar x2(mpq_class(1, 3));
        CHECK(h_check_dual(sigma, pi, 0, x2) == h_original_unramified(Pi, sigma, pi));
    }

    // ramified sigma descriptor annihilates the dual weight
    RamifiedDescriptor ram(RamifiedDescriptor::Kind::other, 2);
    RepQ sigma = rep_of(3, {mpq_class(1, 2), 2});
    RepQ pi = trivial_rep<Scalar>(3, 1);
    CHECK(h_check_dual_gated(ram, sigma, pi, 1, Scalar(mpq_class(1, 3))) == Scalar(0));
}

TEST_CASE("supercuspidal projection at the auxiliary place") {
    Scalar eps(GaussianRational(mpq_class(3, 5), mpq_class(4, 5)));
    RamifiedDescriptor tau(RamifiedDescriptor::Kind::supercuspidal_tau, 3, eps);
    CHECK(h_p0(tau, tau) == eps);

    RamifiedDescriptor tau_one(RamifiedDescriptor::Kind::supercuspidal_tau, 3, Scalar(1));
    CHECK(h_p0(tau_one, tau_one) == Scalar(1));

    RamifiedDescriptor other(RamifiedDescriptor::Kind::other, 3);
    CHECK(h_p0(tau, other) == Scalar(0));
    CHECK(h_p0(tau, RamifiedDescriptor{}) == Scalar(0));

    RamifiedDescriptor no_eps(RamifiedDescriptor::Kind::supercuspidal_tau, 3);
    CHECK_THROWS_AS(h_p0(no_eps, tau), precondition_error);
    CHECK_THROWS_AS(h_p0(other, tau), precondition_error);
}

TEST_CASE("residue lambda expansion") {
    RepQ triv2 = trivial_rep<Scalar>(2, 1);
    CHECK(residue_lambda_expand(triv2, 0) == Scalar(1));
    // n = 2, pi trivial, p = 2, r = 2: h_2(sqrt2, 1/sqrt2) = 7/2
    CHECK(residue_lambda_expand(triv2, 2) == Scalar(mpq_class(7, 2)));

    // agreement with the direct Schur value of dual sigma(pi, 1/2)
    DeterministicRng rng(44);
    for (int n = 2; n <= 4; ++n) {
        for (unsigned long p : {2ul, 3ul}) {
            RepQ pi(p, rng.random_satake(n - 1, 10));
            RepQ sigma_dual = sigma_pi_z(pi, Scalar::half_power_of_p(p, -1)).dual();
            SchurEvaluator<Scalar> ev(sigma_dual);
            for (long r = 0; r <= 10; ++r) {
                std::vector<long> m(static_cast<size_t>(n), 0);
                m[0] = r;
                INFO("n = " << n << " p = " << p << " r = " << r);
                CHECK(residue_lambda_expand(pi, r) == ev.schur(m));
            }
        }
    }
}

TEST_CASE("residue point weight") {
    RepQ triv3 = trivial_rep<Scalar>(3, 1);
    // f = 0: zeta_p(n)/zeta_p(1)
    Scalar expect = Scalar(mpq_class(9, 8)) / Scalar(mpq_class(3, 2));
    CHECK(h_check_residue_point(triv3, 0) == expect);

    // two-route agreement with the dual weight at sigma(pi, 1/2), normalized by
    // L(1, sigma x dual sigma)/zeta_p(1).  Needs n >= 3: the only product-one
    // rank-1 pi is trivial, where this route's norm factor has a genuine pole
    // (the cancelled route residue_term_local covers that case below).
    DeterministicRng rng(45);
    for (int n = 3; n <= 4; ++n) {
        RepQ pi(5, rng.random_satake_product_one(n - 1, 8));
        RepQ sigma_z = sigma_pi_z(pi, Scalar::half_power_of_p(5, -1));
        Scalar x = Scalar(mpq_class(1, 5));
        Scalar x2 = Scalar::half_power_of_p(5, -1);
        Scalar l_norm = local_L_rs(sigma_z, sigma_z.dual(), SVarSpec::s1()).eval(x, Scalar(1));
        Scalar zeta1 = local_zeta<Scalar>(SVarSpec::s1()).eval(x, Scalar(1));
        for (int f = 0; f <= 4; ++f) {
            INFO("n = " << n << " f = " << f);
            CHECK(h_check_residue_point(pi, f) == h_check_dual(sigma_z, pi, f, x2) * l_norm / zeta1);
        }
    }
}

TEST_CASE("residue term local factor") {
    // hand product: pi trivial rank 1, p = 3, n = 2, f = 0 at the central point
    RepQ triv3 = trivial_rep<Scalar>(3, 1);
    CHECK(residue_term_local(triv3, 0, SPoint::central()) == Scalar(mpq_class(3, 4)));

    // equality with the cancelled-form residue weight at the central point
    DeterministicRng rng(46);
    for (int n = 2; n <= 4; ++n) {
        RepQ pi(3, rng.random_satake_product_one(n - 1, 8));
        for (int f = 0; f <= 3; ++f) {
            INFO("n = " << n << " f = " << f);
            CHECK(residue_term_local(pi, f, SPoint::central()) == h_check_residue_point(pi, f));
        }
    }

    // a supercuspidal place annihilates the residue term
    RepQ Pi = rep_of(3, {2, mpq_class(1, 4), 2});
    RamifiedDescriptor tau(RamifiedDescriptor::Kind::supercuspidal_tau, 2, Scalar(1));
    PrimeLocalData place(3, rep_of(3, {2, 1, mpq_class(1, 2)}), triv3, 1, tau);
    CHECK(residue_term_local(place, SPoint::central()) == Scalar(0));

    // s2 = 1 makes sigma(pi, 0) collide for pi containing the trivial character
    CHECK_THROWS_AS(residue_term_local(triv3, 0, SPoint{mpq_class(1, 2), mpq_class(1)}), degeneracy_error);
}

TEST_CASE("degenerate local factor and the main-term assembly") {
    DeterministicRng rng(47);
    int n = 3;
    std::vector<PrimeLocalData> data;
    for (unsigned long p : {2ul, 3ul, 5ul}) {
        RepQ Pi(p, rng.random_satake_product_one(n + 1, 6));
        RepQ pi(p, rng.random_satake(n - 1, 6));
        data.emplace_back(p, Pi, pi, p == 3ul ? 2 : 0);
    }

    // two-route agreement: composed three-factor route vs the closed omega factor
    for (const auto &d : data) {
        CHECK(main_term_local_factor(d, n) == degenerate_local(d.Pi_local, d.pi_local, SPoint::central()));
    }

    // empty prime list
    std::vector<PrimeLocalData> none;
    CHECK(main_term(std::span<const PrimeLocalData>(none), n, std::nullopt, 1.0, Scalar(1)) ==
          std::complex<double>{1.0, 0.0});

    // a single supercuspidal place contributes the zeta ratio over eps alone
    RamifiedDescriptor tau(RamifiedDescriptor::Kind::supercuspidal_tau, 3, Scalar(2));
    std::vector<PrimeLocalData> lone;
    lone.emplace_back(2, rep_of(2, {2, 1, 1, mpq_class(1, 4)}), trivial_rep<Scalar>(2, 2), 3, tau);
    std::complex<double> got = main_term(std::span<const PrimeLocalData>(lone), n, 0, 1.0, Scalar(2));
    Scalar zr = (Scalar(1) - Scalar(mpq_class(1, 2))) / (Scalar(1) - Scalar(mpq_class(1, 8)));
    std::complex<double> expect = zr.to_complex() / 2.0;
    CHECK(std::abs(got - expect) < 1e-15);

    // full assembly: product of the per-prime factors (each exact per prime;
    // the cross-prime product is numeric, the factors live in different rings)
    std::complex<double> full = main_term(std::span<const PrimeLocalData>(data), n, std::nullopt, 1.25, Scalar(1));
    std::complex<double> expect_full{1.25, 0.0};
    Scalar zr3 = (Scalar(1) - Scalar(mpq_class(1, 3))) / (Scalar(1) - Scalar(mpq_class(1, 27)));
    for (const auto &d : data) {
        if (d.f >= 1) expect_full *= zr3.to_complex();
        expect_full *= main_term_local_factor(d, n).to_complex();
    }
    CHECK(std::abs(full - expect_full) < 1e-12 * std::abs(expect_full));
}

TEST_CASE("numeric decay of the dual and residue weights") {
    DeterministicRng rng(48);
    using C = std::complex<double>;
    for (unsigned long p : {2ul, 3ul}) {
        for (int n = 2; n <= 4; ++n) {
            UnramifiedRep<C> sigma(p, rng.random_unit_satake(n, 0.7, true));
            UnramifiedRep<C> pi(p, rng.random_unit_satake(n - 1, 0.7, true));
            for (int f = 0; f <= 10; ++f) {
                C x2 = std::pow(std::complex<double>(static_cast<double>(p), 0.0), std::complex<double>(-0.5, -0.3));
                C hv = h_check_dual(sigma, pi, f, x2);
                double scaled = std::abs(hv) * std::pow(static_cast<double>(p), f * (n - 1) / 2.0);
                double majorant = std::pow(2.0, n) * std::pow(static_cast<double>(f + n), n - 1);
                INFO("p = " << p << " n = " << n << " f = " << f);
                CHECK(scaled <= majorant);

                UnramifiedRep<C> pi_n(p, rng.random_unit_satake(n - 1, 0.7, true));
                C rv = h_check_residue_point(pi_n, f);
                double rscaled = std::abs(rv) * std::pow(static_cast<double>(p), f * (n - 2) / 2.0);
                // explicit majorant: zeta ratio <= 1, |e_k| <= C(n-1,k),
                // |lambda(r,0,..)| <= weyl_dim, assembled term by term
                double maj = 0.0;
                for (int k = 0; k <= std::min(f, n - 1); ++k) {
                    double lam = 0.0;
                    for (long j = 0; j <= f - k; ++j) {
                        std::vector<long> w(static_cast<size_t>(n) - 1, 0);
                        w[0] = j;
                        lam += weyl_dim(std::span<const long>(w)).get_d() *
                               std::pow(static_cast<double>(p), j / 2.0 - (f - k - j) * (n - 1) / 2.0);
                    }
                    double binom = 1.0;
                    for (int t = 0; t < k; ++t) binom = binom * (n - 1 - t) / (t + 1);
                    maj += binom * lam * std::pow(static_cast<double>(p), -(f * (n - 1) + k) / 2.0);
                }
                maj *= std::pow(static_cast<double>(p), f * (n - 2) / 2.0);
                CHECK(rscaled <= maj * (1.0 + 1e-9));
            }
        }
    }
}
