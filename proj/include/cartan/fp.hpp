#ifndef CARTAN_FP_HPP
#define CARTAN_FP_HPP

#include <cstdint>
#include <vector>

#include "cartan/errors.hpp"

namespace cartan {

/// Arithmetic context for a prime field F_p, p > 3.
///
/// The modulus is carried once per context rather than per scalar; scalars
/// are plain uint32_t residues in [0, p). Inverses are table-driven (the
/// primes of interest are tiny). Mixing values from different contexts is
/// the caller's bug; matrix and algebra types check context equality at
/// their boundaries and throw field_mismatch.
class Fp {
public:
    /// Throws validation_error unless p is a prime with 3 < p < 2^15.
    explicit Fp(uint32_t p);

    uint32_t p() const { return p_; }

    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    uint32_t mul(uint32_t a, uint32_t b) const { return (a * b) % p_; }

    /// Multiplicative inverse of a nonzero residue; throws on 0.
    uint32_t inv(uint32_t a) const {
        if (a == 0) throw validation_error("Fp::inv of zero");
        return inv_[a];
    }

    /// Reduce an arbitrary signed integer into [0, p).
    uint32_t reduce(int64_t v) const {
        int64_t r = v % static_cast<int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<uint32_t>(r);
    }

    bool operator==(const Fp& o) const { return p_ == o.p_; }
    bool operator!=(const Fp& o) const { return p_ != o.p_; }

private:
    uint32_t p_;
    std::vector<uint32_t> inv_;
};

/// Requires lhs and rhs to live over the same prime; throws field_mismatch.
void require_same_field(const Fp& lhs, const Fp& rhs, const char* where);

/// Binomial coefficient mod p via Lucas' theorem.
uint32_t binom_mod(uint64_t n, uint64_t k, const Fp& f);

} // namespace cartan

#endif
