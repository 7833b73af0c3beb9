#ifndef CARTAN_LIE_ALGEBRA_HPP
#define CARTAN_LIE_ALGEBRA_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "cartan/fp.hpp"
#include "cartan/fp_matrix.hpp"

namespace cartan {

/// Default cap on the dimension of constructed Lie algebras. Contact
/// constructions over F_5 with five variables reach 3125.
inline constexpr uint32_t kLieDimCap = 4096;

/// Lex rank of the ordered pair i < j among all such pairs below dim.
inline uint64_t pair_rank(uint32_t dim, uint32_t i, uint32_t j) {
    return static_cast<uint64_t>(i) * (2 * dim - i - 1) / 2 + (j - i - 1);
}

inline uint64_t pair_count(uint32_t dim) {
    return static_cast<uint64_t>(dim) * (dim - 1) / 2;
}

/// Finite-dimensional Lie algebra over F_p by structure constants.
///
/// Only the upper pairs i < j are stored (CSR over the lex pair index);
/// antisymmetry is structural. Construction checks the Jacobi identity —
/// exhaustively up to dim 128, on >= 10^4 seeded random triples above —
/// and, when a grading is present, [L_a, L_b] ⊆ L_{a+b} exactly.
class LieAlgebra {
public:
    enum class JacobiMode { None, Auto, Exhaustive };

    class Builder {
    public:
        Builder(const Fp& f, uint32_t dim, uint32_t dim_cap = kLieDimCap);
        /// Pairs must be fed in lex order (0,1), (0,2), ..., (dim-2, dim-1).
        void next_pair(SparseVec entries);
        Builder& labels(std::vector<std::string> v);
        Builder& grading(std::vector<int32_t> v);
        Builder& descriptor(nlohmann::json d);
        LieAlgebra finish(JacobiMode mode = JacobiMode::Auto);

    private:
        Fp field_;
        uint32_t dim_;
        uint64_t fed_ = 0;
        std::vector<uint64_t> offsets_;
        SparseVec entries_;
        std::vector<std::string> labels_;
        std::optional<std::vector<int32_t>> grading_;
        nlohmann::json descriptor_;
    };

    const Fp& field() const { return field_; }
    uint32_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::optional<std::vector<int32_t>>& grading() const { return grading_; }
    const nlohmann::json& descriptor() const { return descriptor_; }
    uint64_t bracket_nnz() const { return entries_.size(); }

    /// [e_i, e_j] for i < j, as a view into the stored table.
    std::span<const Ent> upper(uint32_t i, uint32_t j) const {
        const uint64_t r = pair_rank(dim_, i, j);
        return {entries_.data() + offsets_[r],
                entries_.data() + offsets_[r + 1]};
    }

    /// [e_i, e_j] for arbitrary i, j, appended to out (signs handled).
    void bracket_basis(uint32_t i, uint32_t j, SparseVec& out) const;

    SparseVec bracket(const SparseVec& x, const SparseVec& y) const;

    /// Re-runs the Jacobi check at the requested strength; throws
    /// validation_error on failure.
    void check_jacobi(JacobiMode mode) const;

    nlohmann::json to_json() const;
    static LieAlgebra from_json(const nlohmann::json& j);

private:
    friend class Builder;
    LieAlgebra(Fp f) : field_(f) {}
    void validate(JacobiMode mode) const;

    Fp field_;
    uint32_t dim_ = 0;
    std::vector<std::string> labels_;
    std::optional<std::vector<int32_t>> grading_;
    nlohmann::json descriptor_;
    std::vector<uint64_t> offsets_;
    SparseVec entries_;
};

// ------------------------------------------------------------------ fixtures

/// sl_2: [h,e] = 2e, [h,f] = -2f, [e,f] = h.
LieAlgebra sl2(const Fp& f);
LieAlgebra abelian(uint32_t n, const Fp& f);
/// [e1,e2] = e3 central.
LieAlgebra heisenberg(const Fp& f);

// -------------------------------------------------------------- combinations

class CommAlgebra;

/// Current algebra L (x) B with [x (x) a, y (x) b] = [x,y] (x) ab.
LieAlgebra current(const LieAlgebra& l, const CommAlgebra& b,
                   uint32_t dim_cap = kLieDimCap);

/// Semidirect sum M ⋊ S for S acting on M by derivations;
/// bracket [(m,s),(m',s')] = ([m,m'] + rho(s)m' - rho(s')m, [s,s']).
/// Checks that each rho(s) is a derivation of M and that rho is a
/// representation of S.
LieAlgebra semidirect(const LieAlgebra& s, const LieAlgebra& m,
                      std::span<const FpMatrix> action);

/// True iff the span of all brackets is the whole algebra.
bool is_perfect(const LieAlgebra& l);

/// Derived subalgebra [L, L] with an echelonized basis; the second member
/// holds the basis rows in the coordinates of l.
std::pair<LieAlgebra, FpMatrix> derived_subalgebra(const LieAlgebra& l);

} // namespace cartan

#endif
