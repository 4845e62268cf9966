#include <catch2/catch_amalgamated.hpp>

#include "lzeta/rng.hpp"
#include "lzeta/scalar.hpp"

using namespace lzeta;

TEST_CASE("gaussian rational arithmetic") {
    GaussianRational a(mpq_class(1, 3), mpq_class(2, 5));
    GaussianRational b(mpq_class(-2), mpq_class(7, 2));
    CHECK(a + b - b == a);
    CHECK(a * b == b * a);
    CHECK((a / b) * b == a);
    CHECK(a * a.inverse() == GaussianRational(1));
    CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
    CHECK(a.conj() * a == GaussianRational(a.norm()));
    CHECK(a.pow(3) == a * a * a);
    CHECK(a.pow(-2) == (a * a).inverse());
}

TEST_CASE("scalar ring laws in Q(i)[sqrt p]") {
    Scalar r = Scalar::sqrt_p(5);
    CHECK(r * r == Scalar(5));
    CHECK(r.inverse() * r == Scalar(1));

    // (a1 + b1 sqrt p)(a2 + b2 sqrt p) = (a1 a2 + p b1 b2) + (a1 b2 + a2 b1) sqrt p
    Scalar x(GaussianRational(mpq_class(2, 3)), GaussianRational(mpq_class(1, 2)), 5);
    Scalar y(GaussianRational(mpq_class(-1, 4), mpq_class(1)), GaussianRational(mpq_class(3)), 5);
    Scalar prod = x * y;
    GaussianRational ea = GaussianRational(mpq_class(2, 3)) * GaussianRational(mpq_class(-1, 4), mpq_class(1)) +
                          GaussianRational(mpq_class(5)) * GaussianRational(mpq_class(1, 2)) * GaussianRational(mpq_class(3));
    GaussianRational eb = GaussianRational(mpq_class(2, 3)) * GaussianRational(mpq_class(3)) +
                          GaussianRational(mpq_class(-1, 4), mpq_class(1)) * GaussianRational(mpq_class(1, 2));
    CHECK(prod.a == ea);
    CHECK(prod.b == eb);

    CHECK((x / y) * y == x);
    CHECK(x.pow(-3) * x.pow(3) == Scalar(1));
}

TEST_CASE("perfect-square residue cardinalities fold into Q(i)") {
    Scalar r = Scalar::sqrt_p(9);
    CHECK(r == Scalar(3));
    CHECK(r.is_rational_part_only());
    CHECK(Scalar::half_power_of_p(4, -3) == Scalar(mpq_class(1, 8)));
}

TEST_CASE("mixing sqrt scalars of different p is an error") {
    Scalar a = Scalar::sqrt_p(5);
    Scalar b = Scalar::sqrt_p(7);
    CHECK_THROWS_AS(a * b, ring_mismatch_error);
    CHECK_THROWS_AS(a + b, ring_mismatch_error);
    // rational scalars are compatible with any context
    CHECK(a * Scalar(2) == Scalar(GaussianRational(0), GaussianRational(2), 5));
}

TEST_CASE("half powers of p") {
    CHECK(Scalar::half_power_of_p(3, 2) == Scalar(3));
    CHECK(Scalar::half_power_of_p(3, -2) == Scalar(mpq_class(1, 3)));
    CHECK(Scalar::half_power_of_p(3, 1) == Scalar::sqrt_p(3));
    CHECK(Scalar::half_power_of_p(3, -1) * Scalar::sqrt_p(3) == Scalar(1));
    CHECK(Scalar::half_power_of_p(3, 3) == Scalar(3) * Scalar::sqrt_p(3));
    CHECK(Scalar::half_power_of_p(2, -3) * Scalar::half_power_of_p(2, 3) == Scalar(1));
}

TEST_CASE("randomized ring axioms") {
    DeterministicRng rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        Scalar x = rng.random_scalar(5);
        Scalar y = rng.random_scalar(5);
        Scalar z = rng.random_scalar(5);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x * y == y * x);
        if (!x.is_zero()) CHECK(x * x.inverse() == Scalar(1));
    }
}
