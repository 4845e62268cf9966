// Deterministic random data for the verification suites.  All distributions
// are implemented directly on top of mt19937_64 (whose output sequence is
// fixed by the standard), so identical seeds give identical draws on every
// platform; std::uniform_* distributions are avoided on purpose.
#pragma once

#include <complex>
#include <random>
#include <vector>

#include "rep.hpp"

namespace lzeta {

class DeterministicRng {
  public:
    explicit DeterministicRng(uint64_t seed) : gen_(seed) {}

    // Stable seed derivation for (suite, n, p, trial) cells.
    static uint64_t mix(uint64_t seed, uint64_t a, uint64_t b = 0, uint64_t c = 0) {
        uint64_t x = seed;
        for (uint64_t v : {a, b, c}) {
            x ^= v + 0x9e3779b97f4a7c15ULL + (x << 6) + (x >> 2);
            x *= 0xbf58476d1ce4e5b9ULL;
            x ^= x >> 27;
        }
        return x;
    }

    uint64_t next() { return gen_(); }

    // Inclusive range; plain modulo keeps this portable and is unbiased enough
    // for test-data generation.
    long uniform(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Rational with numerator in [-bound, bound] and denominator in [1, bound].
    mpq_class random_rational(long bound = 50) {
        mpq_class q(uniform(-bound, bound), uniform(1, bound));
        q.canonicalize();
        return q;
    }

    GaussianRational random_gaussian(long bound = 50) {
        return GaussianRational(random_rational(bound), random_rational(bound));
    }

    GaussianRational random_gaussian_nonzero(long bound = 50) {
        for (;;) {
            GaussianRational g = random_gaussian(bound);
            if (!g.is_zero()) return g;
        }
    }

    Scalar random_scalar(unsigned long p, long bound = 50) {
        return Scalar(random_gaussian(bound), random_gaussian(bound), p);
    }

    // Nonzero Gaussian-rational Satake parameters, pairwise distinct so that
    // both Schur evaluation routes apply.
    std::vector<Scalar> random_satake(int n, long bound = 50) {
        std::vector<Scalar> out;
        while (static_cast<int>(out.size()) < n) {
            Scalar v(random_gaussian_nonzero(bound));
            bool dup = false;
            for (const Scalar &u : out) dup = dup || u == v;
            if (!dup) out.push_back(std::move(v));
        }
        return out;
    }

    // As above, normalized to product one by replacing the last parameter with
    // the inverse of the product of the others.
    std::vector<Scalar> random_satake_product_one(int n, long bound = 50) {
        for (;;) {
            std::vector<Scalar> out = random_satake(n, bound);
            Scalar prod(1);
            for (int i = 0; i + 1 < n; ++i) prod *= out[static_cast<size_t>(i)];
            out[static_cast<size_t>(n) - 1] = prod.inverse();
            bool dup = false;
            for (int i = 0; i + 1 < n; ++i) dup = dup || out[static_cast<size_t>(i)] == out[static_cast<size_t>(n) - 1];
            if (!dup) return out;
        }
    }

    std::complex<double> random_unit() {
        double theta = 2.0 * 3.14159265358979323846 * uniform01();
        return {std::cos(theta), std::sin(theta)};
    }

    // Unit-modulus parameters with a minimal pairwise chord separation (keeps
    // Weyl denominators away from zero in the numeric suites); optionally
    // normalized to product one, which for unit parameters stays unit.
    std::vector<std::complex<double>> random_unit_satake(int n, double min_sep = 0.5, bool product_one = false) {
        for (int attempt = 0; attempt < 10000; ++attempt) {
            std::vector<std::complex<double>> out;
            out.reserve(static_cast<size_t>(n));
            while (static_cast<int>(out.size()) < n) out.push_back(random_unit());
            if (product_one && n >= 1) {
                std::complex<double> prod{1.0, 0.0};
                for (int i = 0; i + 1 < n; ++i) prod *= out[static_cast<size_t>(i)];
                out[static_cast<size_t>(n) - 1] = std::conj(prod) / std::norm(prod);
            }
            bool ok = true;
            for (int i = 0; i < n && ok; ++i)
                for (int j = i + 1; j < n && ok; ++j) ok = std::abs(out[static_cast<size_t>(i)] - out[static_cast<size_t>(j)]) >= min_sep;
            if (ok) return out;
        }
        throw error("random_unit_satake: separation constraint unsatisfiable");
    }

  private:
    std::mt19937_64 gen_;
};

} // namespace lzeta
