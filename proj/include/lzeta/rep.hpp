// Unramified representation data: a rank, a residue cardinality, and the
// multiset of nonzero Satake parameters.  The universal carrier for Pi, pi,
// sigma, and the twisted family sigma(pi, z).
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "errors.hpp"
#include "ring.hpp"

namespace lzeta {

template <typename T>
class UnramifiedRep {
  public:
    UnramifiedRep(unsigned long p, std::vector<T> satake) : p_(p), satake_(std::move(satake)) {
        if (p_ < 2) throw precondition_error("UnramifiedRep: residue cardinality must be >= 2");
        if (satake_.empty()) throw precondition_error("UnramifiedRep: rank must be >= 1");
        central_ = ring_traits<T>::one();
        for (const T &v : satake_) {
            if (ring_traits<T>::is_zero(v)) throw precondition_error("UnramifiedRep: Satake parameters must be nonzero");
            central_ = central_ * v;
        }
    }

    int rank() const { return static_cast<int>(satake_.size()); }
    unsigned long residue_cardinality() const { return p_; }
    std::span<const T> satake() const { return satake_; }
    const T &parameter(size_t i) const { return satake_[i]; }
    const T &central_product() const { return central_; }

    bool has_trivial_central_product() const { return central_ == ring_traits<T>::one(); }

    UnramifiedRep dual() const {
        std::vector<T> s;
        s.reserve(satake_.size());
        for (const T &v : satake_) {
            if constexpr (ring_traits<T>::exact)
                s.push_back(v.inverse());
            else
                s.push_back(ring_traits<T>::one() / v);
        }
        return UnramifiedRep(p_, std::move(s));
    }

    UnramifiedRep twist(const T &t) const {
        if (ring_traits<T>::is_zero(t)) throw precondition_error("twist: scaling parameter must be nonzero");
        std::vector<T> s;
        s.reserve(satake_.size());
        for (const T &v : satake_) s.push_back(v * t);
        return UnramifiedRep(p_, std::move(s));
    }

    // Drops parameter i (the sigma^(j) of the bottom-row determinant expansion).
    UnramifiedRep without_parameter(size_t i) const {
        std::vector<T> s;
        s.reserve(satake_.size() - 1);
        for (size_t j = 0; j < satake_.size(); ++j)
            if (j != i) s.push_back(satake_[j]);
        return UnramifiedRep(p_, std::move(s));
    }

    bool has_repeated_parameters() const {
        for (size_t i = 0; i < satake_.size(); ++i)
            for (size_t j = i + 1; j < satake_.size(); ++j)
                if (satake_[i] == satake_[j]) return true;
        return false;
    }

    friend bool operator==(const UnramifiedRep &x, const UnramifiedRep &y) {
        return x.p_ == y.p_ && x.satake_ == y.satake_;
    }

  private:
    unsigned long p_;
    std::vector<T> satake_;
    T central_;
};

template <typename T>
UnramifiedRep<T> isobaric_sum(const UnramifiedRep<T> &x, const UnramifiedRep<T> &y) {
    if (x.residue_cardinality() != y.residue_cardinality())
        throw precondition_error("isobaric_sum: summands live over different residue cardinalities");
    std::vector<T> s(x.satake().begin(), x.satake().end());
    s.insert(s.end(), y.satake().begin(), y.satake().end());
    return UnramifiedRep<T>(x.residue_cardinality(), std::move(s));
}

// sigma(pi, z) = pi |det|^z boxplus |.|^{-(n-1)z}, encoded through t = p^{-z}:
// parameters (beta_1 t, ..., beta_{n-1} t, t^{-(n-1)}).
template <typename T>
UnramifiedRep<T> sigma_pi_z(const UnramifiedRep<T> &pi, const T &t) {
    if (ring_traits<T>::is_zero(t)) throw precondition_error("sigma_pi_z: t must be nonzero");
    int n = pi.rank() + 1;
    std::vector<T> s;
    s.reserve(static_cast<size_t>(n));
    for (const T &v : pi.satake()) s.push_back(v * t);
    s.push_back(ring_pow(t, -(static_cast<long>(n) - 1)));
    return UnramifiedRep<T>(pi.residue_cardinality(), std::move(s));
}

template <typename T>
UnramifiedRep<T> trivial_rep(unsigned long p, int rank = 1) {
    return UnramifiedRep<T>(p, std::vector<T>(static_cast<size_t>(rank), ring_traits<T>::one()));
}

// Conductor/ramification bookkeeping for the sigma-side of a place; the
// supercuspidal epsilon value is opaque, user-supplied data.
struct RamifiedDescriptor {
    enum class Kind { unramified, supercuspidal_tau, other };

    Kind kind = Kind::unramified;
    int conductor_exponent = 0;
    std::optional<Scalar> epsilon_at_1;

    RamifiedDescriptor() = default;
    RamifiedDescriptor(Kind k, int c, std::optional<Scalar> eps = std::nullopt)
        : kind(k), conductor_exponent(c), epsilon_at_1(std::move(eps)) {
        if (c < 0) throw precondition_error("RamifiedDescriptor: conductor exponent must be >= 0");
        if (kind == Kind::unramified && c != 0)
            throw precondition_error("RamifiedDescriptor: unramified forces conductor exponent 0");
    }

    friend bool operator==(const RamifiedDescriptor &x, const RamifiedDescriptor &y) {
        return x.kind == y.kind && x.conductor_exponent == y.conductor_exponent && x.epsilon_at_1 == y.epsilon_at_1;
    }
};

} // namespace lzeta
