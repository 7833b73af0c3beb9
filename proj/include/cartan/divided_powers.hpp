#ifndef CARTAN_DIVIDED_POWERS_HPP
#define CARTAN_DIVIDED_POWERS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cartan/fp.hpp"

namespace cartan {

/// Monomial calculus on the divided powers algebra O_n(m̄) over F_p:
/// basis x^(a) with 0 <= a_i < p^{m_i}, product
///   x^(a) x^(b) = prod_i binom(a_i + b_i, a_i) * x^(a+b)
/// (zero when any a_i + b_i overflows), and x^(a) |-> x^(a - e_i) as the
/// i-th special partial derivative.
///
/// Monomials are addressed by a mixed-radix index so that large algebras
/// (contact constructions) never materialize a multiplication table.
class DividedPowers {
public:
    DividedPowers(uint32_t nvars, std::vector<uint32_t> exponents_m, const Fp& f,
                  uint64_t dim_cap);

    const Fp& field() const { return field_; }
    uint32_t nvars() const { return nvars_; }
    uint32_t dim() const { return dim_; }
    const std::vector<uint32_t>& heights() const { return heights_; } // p^{m_i}

    uint32_t index(const std::vector<uint32_t>& a) const;
    std::vector<uint32_t> exponents(uint32_t idx) const;
    /// |a| for the monomial with this index.
    uint32_t total_degree(uint32_t idx) const;

    /// Product of two basis monomials: (coefficient, index); coefficient 0
    /// encodes the truncated-to-zero case.
    std::pair<uint32_t, uint32_t> product(uint32_t a, uint32_t b) const;

    /// d_i x^(a): index of x^(a - e_i), or nullopt when a_i = 0.
    std::optional<uint32_t> partial(uint32_t var, uint32_t idx) const;

    /// index of x^(a + e_i), or nullopt on overflow.
    std::optional<uint32_t> raise(uint32_t var, uint32_t idx) const;

    std::string label(uint32_t idx) const;

private:
    Fp field_;
    uint32_t nvars_;
    std::vector<uint32_t> heights_;
    std::vector<uint32_t> strides_;
    uint32_t dim_;
};

} // namespace cartan

#endif
