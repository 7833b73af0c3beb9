#ifndef CARTAN_DERHAM_HPP
#define CARTAN_DERHAM_HPP

#include "cartan/cartan_families.hpp"
#include "cartan/ce_homology.hpp"

namespace cartan {

/// The complex of A-multilinear alternating cochains on an A-module Lie
/// algebra, in degrees 0..2, in the coordinates induced by the A-basis:
/// C0 ≅ A, C1 ≅ A^r, C2 ≅ A^{r(r-1)/2}. C2 coordinates are expanded
/// column-major by (wedge slot i < j in lex order, A-basis index).
struct ACochainComplex {
    uint32_t a_rank = 0;
    uint32_t dim_a = 0;
    FpMatrix d0; // A -> A^r,             a |-> (D_1(a), ..., D_r(a))
    FpMatrix d1; // A^r -> A^{r(r-1)/2},  fd1(φ)(Di,Dj) = Di φ(Dj) - Dj φ(Di) - φ([Di,Dj])
};

/// Builds d0, d1 and verifies d1 ∘ d0 = 0; throws validation_error when the
/// Lie-Rinehart compatibility needed for A-multilinearity fails.
ACochainComplex build_complex(const AModuleLie& la);

struct CohomologyDims {
    uint32_t h0 = 0;
    uint32_t h1 = 0;
};

/// h0 = dim ker d0, h1 = dim ker d1 - rank d0.
CohomologyDims cohomology_dims(const ACochainComplex& c);

/// Consequence of the derivation-algebra homology theorem: for a free
/// A-module Lie algebra satisfying the hom condition, H2(L,K) matches
/// H1(C_A) when the A-rank is 1 and vanishes when the rank exceeds 1.
struct SkryabinReport {
    uint32_t a_rank = 0;
    uint64_t dim_h2 = 0;
    uint32_t h1_derham = 0; // meaningful for rank 1
    bool pass = false;

    nlohmann::json to_json() const;
};

SkryabinReport skryabin_check(const AModuleLie& la, uint64_t lambda3_cap = kLambda3Cap);

/// Tensor isomorphism H^n(C_{A(x)B}(L(x)B, A(x)B)) ≅ H^n(C_A(L,A)) (x) B
/// for n = 0, 1, checked at the level of dimensions.
struct LemmaReport {
    CohomologyDims small;
    CohomologyDims big;
    uint32_t dim_b = 0;
    bool pass = false;

    nlohmann::json to_json() const;
};

LemmaReport lemma_check(const AModuleLie& la, const CommAlgebra& b);

} // namespace cartan

#endif
