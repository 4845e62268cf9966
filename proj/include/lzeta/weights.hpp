// Dominant weights (weakly decreasing integer vectors) indexing torus cosets,
// their enumeration, and the Weyl dimension polynomial.
#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace lzeta {

class DominantWeight {
  public:
    DominantWeight() = default;
    explicit DominantWeight(std::vector<long> m) : m_(std::move(m)) {
        if (!is_dominant(m_)) throw std::domain_error("DominantWeight: entries must be weakly decreasing");
    }

    static bool is_dominant(std::span<const long> m) {
        for (size_t i = 1; i < m.size(); ++i)
            if (m[i - 1] < m[i]) return false;
        return true;
    }

    size_t length() const { return m_.size(); }
    long operator[](size_t i) const { return m_[i]; }
    const std::vector<long> &entries() const { return m_; }

    long total() const {
        long s = 0;
        for (long v : m_) s += v;
        return s;
    }

    DominantWeight shifted(long c) const {
        std::vector<long> v = m_;
        for (long &x : v) x += c;
        return DominantWeight(std::move(v));
    }

    friend bool operator==(const DominantWeight &x, const DominantWeight &y) { return x.m_ == y.m_; }

  private:
    std::vector<long> m_;
};

// Number of semistandard Young tableaux of shape m - m_n*(1,..,1) in n letters:
// prod_{i<j} (m_i - m_j + j - i)/(j - i).
inline mpz_class weyl_dim(std::span<const long> m) {
    if (!DominantWeight::is_dominant(m)) throw std::domain_error("weyl_dim: weight not weakly decreasing");
    mpz_class num(1), den(1);
    int n = static_cast<int>(m.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            num *= static_cast<long>(m[i] - m[j] + j - i);
            den *= static_cast<long>(j - i);
        }
    }
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

inline mpz_class weyl_dim(const DominantWeight &m) { return weyl_dim(std::span<const long>(m.entries())); }

// Visits every dominant weight m of the given length with m_i >= min_last for
// all i (equivalently m_last >= min_last) and total(m) <= max_total, in graded
// lexicographic order: by total ascending, then lexicographically with larger
// leading entries first.  The buffer passed to the visitor is reused; copy it
// if it must outlive the call.  This is the enumeration hot spot: no per-weight
// allocation happens here.
template <typename F>
void for_each_dominant(int length, long min_last, long max_total, F &&visit) {
    if (length < 0) throw std::domain_error("for_each_dominant: negative length");
    if (length == 0) {
        if (max_total >= 0) visit(std::span<const long>{});
        return;
    }
    long base = min_last * length;
    if (base > max_total) return;
    std::vector<long> buf(static_cast<size_t>(length));
    // Partition s into at most `length` parts, largest-first; min_last is added back.
    std::function<void(int, long, long)> gen = [&](int pos, long remaining, long bound) {
        int slots = length - pos;
        if (slots == 0) {
            if (remaining == 0) visit(std::span<const long>(buf));
            return;
        }
        long lo = (remaining + slots - 1) / slots; // smallest head that still fits
        for (long v = std::min(remaining, bound); v >= lo; --v) {
            buf[static_cast<size_t>(pos)] = v + min_last;
            gen(pos + 1, remaining - v, v);
        }
    };
    for (long s = 0; s <= max_total - base; ++s) gen(0, s, s);
}

} // namespace lzeta
