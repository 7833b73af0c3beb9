#ifndef CARTAN_INVARIANT_FORMS_HPP
#define CARTAN_INVARIANT_FORMS_HPP

#include "cartan/cartan_families.hpp"
#include "cartan/lie_algebra.hpp"

namespace cartan {

/// Lex rank of the unordered pair i <= j among all such pairs below dim;
/// the coordinate order of symmetric-square objects throughout.
inline uint64_t sym_pair_rank(uint32_t dim, uint32_t i, uint32_t j) {
    return static_cast<uint64_t>(i) * (2 * dim - i + 1) / 2 + (j - i);
}

/// Solution space of the invariance equations
///   w([z,x],y) + w(x,[z,y]) = 0
/// for symmetric bilinear forms on a Lie algebra.
struct InvariantFormSpace {
    uint32_t dimension = 0;
    std::vector<FpMatrix> basis; // symmetric dim x dim matrices
};

/// Solves the invariance system over the unknowns w(e_i, e_j), i <= j.
///
/// With use_grading set, every basis element h whose adjoint action is
/// diagonal on the basis first zeroes all pairs with nonzero eigenvalue sum
/// (the equation with z = h forces (λ(x)+λ(y)) w(x,y) = 0), and only the
/// reduced system is eliminated. The solution space is identical either
/// way; the reduction makes the big contact instances tractable.
/// Elimination stops as soon as the solution space is pinned to zero.
InvariantFormSpace invariant_forms(const LieAlgebra& l, bool use_grading = false);

/// Exact check that a symmetric matrix satisfies the full invariance
/// system; returns the first violating triple if any.
bool form_is_invariant(const LieAlgebra& l, const FpMatrix& w);

/// dim of (L v L) / span{[z,x] v y + x v [z,y]} — the symmetric
/// coinvariants, computed as a plain quotient without graded reduction.
uint32_t sym_coinvariants_dim(const LieAlgebra& l);

/// Basis elements with diagonal adjoint action, with their eigenvalue
/// vectors (length dim, entries in F_p).
std::vector<std::pair<uint32_t, std::vector<uint32_t>>> ad_diagonal_elements(const LieAlgebra& l);

/// Condition Hom_A(L, A) = A · {d(a) : a in A}, where d(a)(D) = D(a):
/// the K-span of the functionals e_b · d(e_a) must be all of
/// Hom_A(L, A) ≅ A^r.
bool hom_condition(const AModuleLie& la);

} // namespace cartan

#endif
