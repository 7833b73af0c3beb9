#include "cartan/fp.hpp"

#include <string>

namespace cartan {

namespace {

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace

Fp::Fp(uint32_t p) : p_(p) {
    if (p <= 3)
        throw validation_error("Fp: characteristic must exceed 3, got " + std::to_string(p));
    if (p >= (1u << 15))
        throw validation_error("Fp: modulus too large (p < 32768 supported)");
    if (!is_prime(p))
        throw validation_error("Fp: modulus " + std::to_string(p) + " is not prime");
    inv_.assign(p_, 0);
    for (uint32_t a = 1; a < p_; ++a) {
        // Fermat: a^(p-2)
        uint32_t r = 1, base = a, e = p_ - 2;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        inv_[a] = r;
    }
}

void require_same_field(const Fp& lhs, const Fp& rhs, const char* where) {
    if (lhs != rhs)
        throw field_mismatch(std::string(where) + ": operands over F_" +
                             std::to_string(lhs.p()) + " and F_" + std::to_string(rhs.p()));
}

uint32_t binom_mod(uint64_t n, uint64_t k, const Fp& f) {
    if (k > n) return 0;
    const uint64_t p = f.p();
    uint32_t result = 1;
    while (n || k) {
        uint64_t nd = n % p, kd = k % p;
        if (kd > nd) return 0;
        // binom(nd, kd) for digits < p, directly
        uint32_t num = 1, den = 1;
        for (uint64_t t = 0; t < kd; ++t) {
            num = f.mul(num, static_cast<uint32_t>((nd - t) % p));
            den = f.mul(den, static_cast<uint32_t>((t + 1) % p));
        }
        result = f.mul(result, f.mul(num, f.inv(den)));
        n /= p;
        k /= p;
    }
    return result;
}

} // namespace cartan
