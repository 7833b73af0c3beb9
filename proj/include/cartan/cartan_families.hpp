#ifndef CARTAN_FAMILIES_HPP
#define CARTAN_FAMILIES_HPP

#include <span>

#include "cartan/comm_algebra.hpp"
#include "cartan/lie_algebra.hpp"

namespace cartan {

/// A Lie algebra L realized as a free A-module of rank r inside Der(A):
/// the abstract Lie structure, the algebra A, the A-basis D_1..D_r, the
/// module action of A on L, and the anchor realizing each basis element of
/// L as a derivation of A.
///
/// Construction validates freeness (the induced map A^r -> L is a K-linear
/// isomorphism) and Lie-Rinehart compatibility [D, a D'] = a [D, D'] + D(a) D'
/// on the generators.
struct AModuleLie {
    LieAlgebra lie;
    CommAlgebra algebra;
    uint32_t a_rank = 0;
    std::vector<SparseVec> a_basis;  // r elements of L
    std::vector<SparseOp> action;    // per A-basis element: L -> L
    std::vector<SparseOp> anchor;    // per L-basis element: A -> A

    static AModuleLie make(LieAlgebra lie, CommAlgebra algebra, uint32_t a_rank,
                           std::vector<SparseVec> a_basis, std::vector<SparseOp> action,
                           std::vector<SparseOp> anchor, bool validate = true);

    /// Derivation matrix of an arbitrary element of L.
    SparseOp anchor_of(const SparseVec& lie_elt) const;

    /// Module action of an arbitrary element of A.
    SparseVec act(const SparseVec& algebra_elt, const SparseVec& lie_elt) const;

    /// The K-isomorphism A^r -> L, column (slot i, A-basis a) = e_a . D_i.
    FpMatrix freeness_matrix() const;
};

/// Generalized Jacobson-Witt algebra W_n(m̄) over F_p as an A-module Lie
/// algebra over A = O_n(m̄): K-basis x^(a) d_i, graded by |a| - 1.
AModuleLie witt(uint32_t n, std::span<const uint32_t> m, const Fp& f,
                uint32_t lie_dim_cap = kLieDimCap);

/// Rank-1 module A·E for a derivation E of A (coordinates matrix),
/// with bracket [aE, bE] = (a E(b) - b E(a)) E.
AModuleLie free_rank1_module(const CommAlgebra& a, const FpMatrix& derivation,
                             const std::string& symbol = "E");

/// Hamiltonian algebra on O_{2n}(m̄): the derived subalgebra of the Poisson
/// algebra modulo constants. dim = p^{sum m} - 2 for the standard simple
/// member; graded by |a| - 2.
LieAlgebra hamiltonian(std::span<const uint32_t> m, const Fp& f,
                       uint32_t lie_dim_cap = kLieDimCap);

/// Contact algebra K_{2n+1}(m̄) on O_{2n+1}(m̄), with bracket
///   <f,g> = Delta(f) dz(g) - Delta(g) dz(f)
///           + sum_i (d_i f · d_{i+n} g - d_{i+n} f · d_i g),
/// Delta(f) = 2f - sum_{i<=2n} x_i d_i f, z the last variable. Exponent
/// tuple m̄ has full length 2n+1 (one entry per variable). Passes to the
/// derived subalgebra when 2n+1 = -3 (mod p). Graded with deg x_i = 1
/// (i <= 2n), deg z = 2, bracket degree -2.
LieAlgebra contact(uint32_t n, std::span<const uint32_t> m, const Fp& f,
                   uint32_t lie_dim_cap = kLieDimCap);

/// (L (x) B, A (x) B) as an A-module Lie algebra with A-basis {D_i (x) 1};
/// used by the tensor-isomorphism checks.
AModuleLie tensor_amodule(const AModuleLie& la, const CommAlgebra& b,
                          uint32_t lie_dim_cap = kLieDimCap);

} // namespace cartan

#endif
