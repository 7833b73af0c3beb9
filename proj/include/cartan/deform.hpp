#ifndef CARTAN_DEFORM_HPP
#define CARTAN_DEFORM_HPP

#include <optional>

#include "cartan/invariant_forms.hpp"
#include "cartan/lie_algebra.hpp"

namespace cartan {

/// An antisymmetric 2-cochain in coordinates; only pairs i < j are stored.
class Cochain2 {
public:
    Cochain2(const Fp& f, uint32_t dim);
    /// Sets φ(e_i, e_j) for i < j (φ(e_j, e_i) is implied).
    void set(uint32_t i, uint32_t j, SparseVec value);
    uint32_t dim() const { return dim_; }
    /// φ(e_i, e_j) for arbitrary i != j, appended to out.
    void eval_basis(uint32_t i, uint32_t j, SparseVec& out, const Fp& f) const;
    bool empty() const;

private:
    uint32_t dim_;
    std::vector<SparseVec> upper_; // pair_rank(i<j)
};

/// Polynomial deformation {x,y} = [x,y] + φ_1(x,y) t + ... + φ_k(x,y) t^k.
struct DeformationData {
    LieAlgebra base;
    std::vector<Cochain2> cochains; // φ_1 .. φ_k

    nlohmann::json to_json() const;
};

/// Jacobi identity of the deformed bracket modulo t^{m+1}, checked on all
/// basis triples. Order 0 is the base bracket, already validated.
bool jacobi_up_to_order(const DeformationData& d, uint32_t m);

/// A truncated formal form (·,·) = sum_n (·,·)_n t^n.
struct FormJet {
    std::vector<FpMatrix> orders; // symmetric matrices, order 0 first
};

struct ObstructionReport {
    uint32_t order = 0;        // first order whose system is inconsistent
    uint32_t rank_deficit = 0; // rank [A|b] - rank A
    /// Combination of order-n equations witnessing the inconsistency:
    /// entries index equations (z, x <= y) in the scan order, coefficients
    /// give a vanishing combination of left sides with nonzero right side.
    SparseVec certificate;
};

struct ProlongResult {
    uint32_t max_order = 0; // highest order for which a form was found
    FormJet jet;
    std::optional<ObstructionReport> obstruction;
};

/// Prolongs an invariant seed order by order up to t^m. The order-n system
///   w_n([z,x],y) + w_n(x,[z,y]) + sum_{i>=1} [w_{n-i}(φ_i(z,x),y)
///                                          + w_{n-i}(x,φ_i(z,y))] = 0
/// is solved for w_n given the lower orders; free components are set to 0.
/// Throws precondition_error when the seed is not invariant for the base
/// bracket.
ProlongResult prolong_form(const DeformationData& d, const FpMatrix& seed, uint32_t m);

/// The subspace of invariant forms on the base admitting a prolongation to
/// order m: the joint linear system in (seed, w_1, ..., w_m) is solved once
/// and its solution space projected to the seed coordinates.
InvariantFormSpace classify_prolongable(const DeformationData& d, uint32_t m);

} // namespace cartan

#endif
