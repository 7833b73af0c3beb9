#include "cartan/divided_powers.hpp"

#include <string>

namespace cartan {

DividedPowers::DividedPowers(uint32_t nvars, std::vector<uint32_t> ms, const Fp& f,
                             uint64_t dim_cap)
    : field_(f), nvars_(nvars) {
    if (ms.size() != nvars)
        throw validation_error("DividedPowers: exponent tuple length mismatch");
    uint64_t d = 1;
    for (uint32_t m : ms) {
        if (m == 0) throw validation_error("DividedPowers: exponents must be positive");
        uint64_t h = 1;
        for (uint32_t t = 0; t < m; ++t) {
            h *= f.p();
            if (h > dim_cap) throw capacity_error("DividedPowers: p^m exceeds size cap");
        }
        heights_.push_back(static_cast<uint32_t>(h));
        strides_.push_back(static_cast<uint32_t>(d));
        d *= h;
        if (d > dim_cap)
            throw capacity_error("DividedPowers: dimension " + std::to_string(d) +
                                 " exceeds size cap " + std::to_string(dim_cap));
    }
    dim_ = static_cast<uint32_t>(d);
}

uint32_t DividedPowers::index(const std::vector<uint32_t>& a) const {
    uint32_t idx = 0;
    for (uint32_t i = 0; i < nvars_; ++i) idx += a[i] * strides_[i];
    return idx;
}

std::vector<uint32_t> DividedPowers::exponents(uint32_t idx) const {
    std::vector<uint32_t> a(nvars_);
    for (uint32_t i = 0; i < nvars_; ++i) {
        a[i] = idx % heights_[i];
        idx /= heights_[i];
    }
    return a;
}

uint32_t DividedPowers::total_degree(uint32_t idx) const {
    uint32_t s = 0;
    for (uint32_t i = 0; i < nvars_; ++i) {
        s += idx % heights_[i];
        idx /= heights_[i];
    }
    return s;
}

std::pair<uint32_t, uint32_t> DividedPowers::product(uint32_t a, uint32_t b) const {
    uint32_t coeff = 1, idx = 0;
    for (uint32_t i = 0; i < nvars_; ++i) {
        const uint32_t ai = a % heights_[i], bi = b % heights_[i];
        a /= heights_[i];
        b /= heights_[i];
        if (ai + bi >= heights_[i]) return {0, 0};
        coeff = field_.mul(coeff, binom_mod(ai + bi, ai, field_));
        if (coeff == 0) return {0, 0};
        idx += (ai + bi) * strides_[i];
    }
    return {coeff, idx};
}

std::optional<uint32_t> DividedPowers::partial(uint32_t var, uint32_t idx) const {
    if ((idx / strides_[var]) % heights_[var] == 0) return std::nullopt;
    return idx - strides_[var];
}

std::optional<uint32_t> DividedPowers::raise(uint32_t var, uint32_t idx) const {
    if ((idx / strides_[var]) % heights_[var] + 1 >= heights_[var]) return std::nullopt;
    return idx + strides_[var];
}

std::string DividedPowers::label(uint32_t idx) const {
    const auto a = exponents(idx);
    std::string s;
    for (uint32_t i = 0; i < nvars_; ++i) {
        if (!a[i]) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i + 1) + "^(" + std::to_string(a[i]) + ")";
    }
    return s.empty() ? "1" : s;
}

} // namespace cartan
