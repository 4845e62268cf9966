#include <catch2/catch_amalgamated.hpp>

#include "lzeta/euler.hpp"
#include "lzeta/rng.hpp"
#include "lzeta/schur.hpp"

using namespace lzeta;
using RepQ = UnramifiedRep<Scalar>;

namespace {
RepQ rep_of(unsigned long p, std::initializer_list<mpq_class> params) {
    std::vector<Scalar> s;
    for (const auto &q : params) s.emplace_back(q);
    return RepQ(p, std::move(s));
}
std::vector<long> w(std::initializer_list<long> m) { return std::vector<long>(m); }
} // namespace

TEST_CASE("schur basics") {
    RepQ r = rep_of(3, {2, mpq_class(1, 2)});
    CHECK(schur(r, w({0, 0})) == Scalar(1));
    CHECK(schur(r, w({1, 0})) == Scalar(mpq_class(5, 2)));
    // h_3(2, 1/2) = 8 + 2 + 1/2 + 1/8 = 85/8
    CHECK(schur(r, w({3, 0})) == Scalar(mpq_class(85, 8)));
}

TEST_CASE("weyl character ratio oracle") {
    RepQ r = rep_of(3, {2, mpq_class(1, 2)});
    CHECK(schur_weyl_oracle(r, w({1, 0})) == Scalar(mpq_class(5, 2)));

    RepQ r2 = rep_of(3, {3, mpq_class(1, 3)});
    // (3^3 - 3^-3)/(3 - 1/3) = 91/9
    CHECK(schur_weyl_oracle(r2, w({2, 0})) == Scalar(mpq_class(91, 9)));

    RepQ degenerate = rep_of(3, {1, 1});
    CHECK_THROWS_AS(schur_weyl_oracle(degenerate, w({1, 0})), degeneracy_error);
    CHECK(schur(degenerate, w({1, 0})) == Scalar(2)); // Jacobi-Trudi is fine with repeats
}

TEST_CASE("jacobi-trudi agrees with the weyl ratio on random data") {
    DeterministicRng rng(11);
    for (int n = 1; n <= 5; ++n) {
        RepQ r(5, rng.random_satake(n, 8));
        SchurEvaluator<Scalar> ev(r);
        for_each_dominant(n, 0, 12, [&](std::span<const long> part) {
            // random downward shift exercises negative entries
            std::vector<long> m(part.begin(), part.end());
            long c = rng.uniform(-3, 0);
            for (long &x : m) x += c;
            CHECK(ev.schur(m) == schur_weyl_oracle(r, std::span<const long>(m)));
        });
    }
}

TEST_CASE("translation and duality") {
    DeterministicRng rng(12);
    for (int n = 2; n <= 4; ++n) {
        RepQ r(7, rng.random_satake(n, 10));
        std::vector<long> m;
        for (int i = 0; i < n; ++i) m.push_back(3 * (n - i) + rng.uniform(0, 2));
        for (long c = -3; c <= 3; ++c) {
            std::vector<long> shifted = m;
            for (long &x : shifted) x += c;
            CHECK(schur(r, std::span<const long>(shifted)) ==
                  ring_pow(r.central_product(), c) * schur(r, std::span<const long>(m)));
        }
        // duality: lambda_{dual}(m_1..m_n) = lambda(-m_n..-m_1)
        std::vector<long> rev(m.rbegin(), m.rend());
        for (long &x : rev) x = -x;
        CHECK(schur(r.dual(), std::span<const long>(m)) == schur(r, std::span<const long>(rev)));
    }
}

TEST_CASE("whittaker torus values") {
    RepQ r = rep_of(5, {2, mpq_class(1, 2)});
    CHECK(whittaker_value(r, w({0, 0})) == Scalar(1));
    // n = 2, m = (1,0): p^{-1/2} (alpha + beta)
    Scalar expected = Scalar::half_power_of_p(5, -1) * Scalar(mpq_class(5, 2));
    CHECK(whittaker_value(r, w({1, 0})) == expected);
    CHECK(whittaker_value(r, w({0, 1})) == Scalar(0)); // non-dominant support
}

TEST_CASE("dual twist isobaric and sigma_pi_z") {
    RepQ r = rep_of(3, {2, mpq_class(1, 2)});
    CHECK(r.dual().parameter(0) == Scalar(mpq_class(1, 2)));
    CHECK(r.dual().dual() == r);

    RepQ ones = rep_of(3, {1, 1});
    RepQ twisted = ones.twist(Scalar(3));
    CHECK(twisted.parameter(0) == Scalar(3));
    CHECK(twisted.parameter(1) == Scalar(3));
    CHECK_THROWS_AS(ones.twist(Scalar(0)), precondition_error);

    RepQ a = rep_of(3, {2});
    RepQ b = rep_of(3, {mpq_class(1, 2)});
    RepQ sum = isobaric_sum(a, b);
    CHECK(sum.rank() == 2);
    CHECK(sum == r);

    // z = 0: pi boxplus trivial character
    RepQ pi = rep_of(3, {mpq_class(5, 7)});
    RepQ s0 = sigma_pi_z(pi, Scalar(1));
    CHECK(s0.rank() == 2);
    CHECK(s0.parameter(0) == Scalar(mpq_class(5, 7)));
    CHECK(s0.parameter(1) == Scalar(1));

    // z = 1/2 for trivial rank-1: (p^{-1/2}, p^{1/2})
    RepQ triv = trivial_rep<Scalar>(3, 1);
    RepQ shalf = sigma_pi_z(triv, Scalar::half_power_of_p(3, -1));
    CHECK(shalf.parameter(0) == Scalar::half_power_of_p(3, -1));
    CHECK(shalf.parameter(1) == Scalar::half_power_of_p(3, 1));

    // central product is preserved by the construction
    RepQ pi2 = rep_of(3, {2, mpq_class(3, 4)});
    RepQ sz = sigma_pi_z(pi2, Scalar(mpq_class(2, 9)));
    CHECK(sz.central_product() == pi2.central_product());
}

TEST_CASE("elementary symmetric values and weyl dimension") {
    RepQ r = rep_of(3, {2, 1, mpq_class(1, 2)});
    SchurEvaluator<Scalar> ev(r);
    CHECK(ev.elem(0) == Scalar(1));
    CHECK(ev.elem(3) == r.central_product());
    CHECK(ev.elem(1) == Scalar(mpq_class(7, 2)));
    CHECK(ev.elem(2) == Scalar(mpq_class(7, 2)));
    CHECK_THROWS_AS(ev.elem(4), precondition_error);

    CHECK(weyl_dim(w({4, 0})) == 5);      // rank-2 symmetric power
    CHECK(weyl_dim(w({2, 1, 0})) == 8);   // rank-3 adjoint
    CHECK(weyl_dim(w({3, 3, 3})) == 1);   // determinant powers
}

TEST_CASE("factored L-identity: prod (1 - alpha_i X) = sum (-1)^k e_k X^k") {
    DeterministicRng rng(13);
    for (int n = 1; n <= 5; ++n) {
        RepQ r(2, rng.random_satake(n, 10));
        SchurEvaluator<Scalar> ev(r);
        EulerFactor<Scalar> f;
        for (const Scalar &a : r.satake()) f.push(a, 1, 0, +1);
        Series2<Scalar> poly = f.expansion(n);
        for (int k = 0; k <= n; ++k) {
            Scalar expect = ev.elem(k);
            if (k % 2 == 1) expect = -expect;
            CHECK(poly.at(k, 0) == expect);
        }
    }
}

TEST_CASE("lagrange vanishing: sum_j alpha_j^d / prod_{i != j}(alpha_i - alpha_j) = 0") {
    DeterministicRng rng(14);
    for (int n = 2; n <= 5; ++n) {
        std::vector<Scalar> alpha = rng.random_satake(n, 12);
        for (long d = 0; d + 2 <= n; ++d) {
            Scalar acc(0);
            for (int j = 0; j < n; ++j) {
                Scalar den(1);
                for (int i = 0; i < n; ++i)
                    if (i != j) den *= alpha[static_cast<size_t>(i)] - alpha[static_cast<size_t>(j)];
                acc += alpha[static_cast<size_t>(j)].pow(d) / den;
            }
            CHECK(acc == Scalar(0));
        }
    }
}

TEST_CASE("spherical bound via weyl dimension majorant") {
    DeterministicRng rng(15);
    using C = std::complex<double>;
    for (int n = 2; n <= 4; ++n) {
        double theta = 0.25;
        double p = 3.0;
        std::vector<C> params;
        for (int i = 0; i < n; ++i) params.push_back(rng.random_unit() * std::pow(p, theta * (i % 2 ? 1.0 : -1.0)));
        UnramifiedRep<C> r(3, params);
        SchurEvaluator<C> ev(r);
        double maxmod = 0.0;
        for (const C &a : params) maxmod = std::max(maxmod, std::abs(a));
        double theta_eff = std::log(maxmod) / std::log(p);
        for_each_dominant(n, 0, 8, [&](std::span<const long> m) {
            long total = 0;
            for (long v : m) total += v;
            double bound = weyl_dim(m).get_d() * std::pow(p, theta_eff * static_cast<double>(total));
            CHECK(std::abs(ev.schur(m)) <= bound * (1.0 + 1e-9));
        });
    }
}
