#ifndef CARTAN_COMM_ALGEBRA_HPP
#define CARTAN_COMM_ALGEBRA_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "cartan/fp.hpp"
#include "cartan/fp_matrix.hpp"

namespace cartan {

/// Default size cap for commutative algebra constructions.
inline constexpr uint32_t kAlgebraDimCap = 200;

/// Finite-dimensional commutative associative unital algebra over F_p,
/// given by structure constants on a labeled basis.
///
/// Construction validates commutativity, the unit law, and associativity
/// (exhaustively up to dim 64, on seeded random triples above).
class CommAlgebra {
public:
    using MultTable = std::vector<SparseVec>; // (i * dim + j) -> e_i e_j

    static CommAlgebra make(const Fp& f, uint32_t dim, std::vector<std::string> labels,
                            std::vector<uint32_t> unit, MultTable mult);

    const Fp& field() const { return field_; }
    uint32_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<uint32_t>& unit() const { return unit_; }

    const SparseVec& mult(uint32_t i, uint32_t j) const { return mult_[size_t(i) * dim_ + j]; }

    /// Product of two coordinate vectors.
    SparseVec mulvec(const SparseVec& x, const SparseVec& y) const;

    /// Left-multiplication operator by the element with coordinates a.
    FpMatrix mult_matrix(const SparseVec& a) const;

    bool structure_equal(const CommAlgebra& o) const;

    nlohmann::json to_json() const;
    static CommAlgebra from_json(const nlohmann::json& j);

private:
    CommAlgebra(Fp f) : field_(f) {}
    void validate() const;

    Fp field_;
    uint32_t dim_ = 0;
    std::vector<std::string> labels_;
    std::vector<uint32_t> unit_;
    MultTable mult_;
};

/// The ground field itself as a 1-dimensional algebra.
CommAlgebra ground_field(const Fp& f);

/// Divided powers algebra O_n(m̄); dim = p^{sum m}. Throws capacity_error
/// past the cap.
CommAlgebra divided_powers(uint32_t n, std::span<const uint32_t> m, const Fp& f,
                           uint32_t dim_cap = kAlgebraDimCap);

/// K[x]/(x^n) with basis 1, x, ..., x^{n-1}.
CommAlgebra truncated_poly(uint32_t n, const Fp& f);

/// K·1 ⊕ N with N a k-dimensional algebra with zero multiplication.
CommAlgebra unit_plus_nil(uint32_t k, const Fp& f);

/// Tensor product algebra; basis labels are "l ⊗ r" pairs.
CommAlgebra tensor(const CommAlgebra& a, const CommAlgebra& b,
                   uint32_t dim_cap = kAlgebraDimCap);

/// Basis of Der(A): all K-linear maps satisfying the Leibniz rule, computed
/// as the kernel of the linear system D(e_i e_j) = D(e_i) e_j + e_i D(e_j).
struct DerivationBasis {
    uint32_t dim() const { return static_cast<uint32_t>(matrices.size()); }
    std::vector<FpMatrix> matrices; // each dim x dim, acting on coordinates
};

DerivationBasis derivations(const CommAlgebra& a);

} // namespace cartan

#endif
