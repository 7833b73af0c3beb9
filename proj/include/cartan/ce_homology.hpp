#ifndef CARTAN_CE_HOMOLOGY_HPP
#define CARTAN_CE_HOMOLOGY_HPP

#include <json.hpp>

#include "cartan/comm_algebra.hpp"
#include "cartan/lie_algebra.hpp"

namespace cartan {

/// Default cap on dim Λ³L for the homology computation.
inline constexpr uint64_t kLambda3Cap = 2'000'000;

/// Chevalley-Eilenberg H1/H2 with trivial coefficients.
///
/// Boundaries (homological convention, wedge bases lex-ordered on i < j < k):
///   d2(x ^ y)     = [x,y]
///   d3(x ^ y ^ z) = -[x,y] ^ z + [x,z] ^ y - [y,z] ^ x
struct H2Report {
    uint32_t dim_l = 0;
    uint64_t dim_lambda2 = 0;
    uint64_t dim_lambda3 = 0;
    uint32_t rank_d2 = 0;
    uint64_t rank_d3 = 0;
    uint32_t dim_h1 = 0;
    uint64_t dim_h2 = 0;

    nlohmann::json to_json() const;
};

/// When the algebra is graded the boundary maps preserve total degree and
/// the ranks are accumulated block by block.
H2Report ce_homology(const LieAlgebra& l, uint64_t lambda3_cap = kLambda3Cap);

/// Exact check that d2 ∘ d3 vanishes on every wedge-basis 3-chain.
bool boundary_composite_is_zero(const LieAlgebra& l);

/// Two-route check of the current-algebra second homology:
/// lhs = dim H2(L (x) B) by direct elimination, rhs =
/// dim H2(L)·dim B + B(L)·HC1(B). Requires perfect L.
struct CurrentH2Report {
    uint64_t lhs = 0;
    uint64_t rhs = 0;
    uint64_t h2_l = 0;
    uint32_t dim_b = 0;
    uint32_t coinv_l = 0;
    uint32_t hc1_b = 0;
    bool pass = false;

    nlohmann::json to_json() const;
};

CurrentH2Report verify_current_h2(const LieAlgebra& l, const CommAlgebra& b,
                                  uint64_t lambda3_cap = kLambda3Cap);

} // namespace cartan

#endif
