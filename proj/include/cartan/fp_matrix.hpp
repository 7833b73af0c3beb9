#ifndef CARTAN_FP_MATRIX_HPP
#define CARTAN_FP_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cartan/fp.hpp"

namespace cartan {

/// One entry of a sparse vector / matrix row.
struct Ent {
    uint32_t idx;
    uint32_t val;
    bool operator==(const Ent&) const = default;
};

/// Sparse vector: entries sorted by idx, values in (0, p), no duplicates.
using SparseVec = std::vector<Ent>;

/// Sorts, merges duplicate indices mod p and drops zeros, in place.
void normalize_sparse(SparseVec& v, const Fp& f);

struct Triplet {
    uint32_t row, col;
    uint32_t val;
};

class SubspaceBasis;

/// Immutable matrix over F_p.
///
/// Storage is picked at construction: dense when both sides are < 64 or the
/// fill exceeds 20%, CSR otherwise. Boundary and invariance matrices in this
/// code base are very sparse; small dense blocks go through plain Gaussian
/// elimination. All elimination is exact and deterministic (leftmost column,
/// first candidate row — no pivot randomness).
class FpMatrix {
public:
    static FpMatrix zeros(const Fp& f, uint32_t rows, uint32_t cols);
    static FpMatrix identity(const Fp& f, uint32_t n);
    /// Duplicate (row, col) pairs are merged additively; zeros dropped.
    static FpMatrix from_triplets(const Fp& f, uint32_t rows, uint32_t cols,
                                  std::vector<Triplet> triplets);
    /// Row-major dense input; entries reduced mod p (signed values allowed).
    static FpMatrix from_dense(const Fp& f, uint32_t rows, uint32_t cols,
                               std::span<const int64_t> values);
    static FpMatrix from_rows(const Fp& f, const std::vector<std::vector<int64_t>>& rows);
    static FpMatrix from_sparse_rows(const Fp& f, std::vector<SparseVec> rows, uint32_t cols);

    const Fp& field() const { return field_; }
    uint32_t rows() const { return rows_; }
    uint32_t cols() const { return cols_; }
    uint64_t nnz() const;
    bool dense_storage() const { return dense_; }

    uint32_t at(uint32_t r, uint32_t c) const;
    /// Row r as a sparse view (dense rows are materialized).
    SparseVec row(uint32_t r) const;

    uint32_t rank() const;
    SubspaceBasis kernel_basis() const;
    /// Canonical reduced row-echelon form: pivot columns increasing, unit
    /// pivots, zero rows dropped.
    FpMatrix rref() const;
    FpMatrix transpose() const;
    FpMatrix times(const FpMatrix& rhs) const;

    bool operator==(const FpMatrix& o) const;

private:
    FpMatrix(Fp f, uint32_t rows, uint32_t cols) : field_(f), rows_(rows), cols_(cols) {}

    Fp field_;
    uint32_t rows_ = 0, cols_ = 0;
    bool dense_ = true;
    std::vector<uint32_t> grid_;       // dense, row-major
    std::vector<uint64_t> offsets_;    // CSR
    SparseVec entries_;
};

/// ambient_dim - rank(relations); relations must have ambient_dim columns.
uint32_t quotient_dim(uint32_t ambient_dim, const FpMatrix& relations);

/// Basis of a subspace of F_p^ambient, kept in canonical RREF.
class SubspaceBasis {
public:
    SubspaceBasis(uint32_t ambient_dim, FpMatrix rows_rref);
    /// Canonicalizes arbitrary spanning rows into RREF first.
    static SubspaceBasis from_spanning_rows(const Fp& f, uint32_t ambient_dim,
                                            std::vector<SparseVec> rows);

    uint32_t ambient_dim() const { return ambient_; }
    uint32_t dim() const { return basis_.rows(); }
    const FpMatrix& basis_rows() const { return basis_; }
    bool contains(const SparseVec& v) const;

private:
    uint32_t ambient_;
    FpMatrix basis_;
};

/// Incremental row-echelon accumulator.
///
/// Feed rows one at a time; rank is available after every absorb, so
/// callers processing huge relation streams can stop as soon as the
/// solution space they care about is pinned down (rank saturation).
class RowEliminator {
public:
    RowEliminator(const Fp& f, uint32_t ncols);

    /// Reduces the row against current pivots; keeps it if independent.
    /// Returns true when the rank grew.
    bool absorb(SparseVec row);

    uint32_t rank() const { return static_cast<uint32_t>(rows_.size()); }
    uint32_t ncols() const { return ncols_; }
    bool saturated() const { return rank() == ncols_; }

    /// Back-substitutes to full RREF (idempotent).
    void reduce_full();

    /// Pivot rows sorted by pivot column; call reduce_full() first for RREF.
    std::vector<SparseVec> echelon_rows() const;

    /// Basis of {v : Mv = 0} for the absorbed matrix M.
    std::vector<SparseVec> kernel();

    /// Pivot column of each stored row, in absorption order.
    const std::vector<uint32_t>& pivot_cols() const { return pivots_of_rows_; }

private:
    Fp field_;
    uint32_t ncols_;
    std::vector<int32_t> pivot_row_;       // per column, -1 = none
    std::vector<SparseVec> rows_;          // leading coefficient 1
    std::vector<uint32_t> pivots_of_rows_;
    std::vector<uint32_t> scratch_;        // dense accumulator, ncols
    bool reduced_ = false;
};

/// Column-sparse linear operator; cheap to apply to sparse vectors.
struct SparseOp {
    uint32_t rows = 0, cols = 0;
    std::vector<SparseVec> col; // col[c] = image of e_c

    SparseVec apply(const SparseVec& v, const Fp& f) const {
        SparseVec out;
        for (const auto& e : v)
            for (const auto& w : col[e.idx]) out.push_back({w.idx, f.mul(e.val, w.val)});
        normalize_sparse(out, f);
        return out;
    }
    FpMatrix matrix(const Fp& f) const {
        std::vector<Triplet> ts;
        for (uint32_t c = 0; c < cols; ++c)
            for (const auto& e : col[c]) ts.push_back({e.idx, c, e.val});
        return FpMatrix::from_triplets(f, rows, cols, std::move(ts));
    }
};

/// Result of an exact linear solve A x = b.
struct SolveOutcome {
    bool consistent = false;
    std::vector<uint32_t> particular;        // free unknowns set to 0
    uint32_t rank_a = 0;
    uint32_t rank_augmented = 0;
    /// When inconsistent: coefficients y (sparse over equation indices)
    /// with y^T A = 0 and y^T b != 0.
    SparseVec certificate;
};

/// Rows given as (entries over unknowns, rhs scalar).
SolveOutcome solve_linear(const Fp& f, uint32_t nunknowns,
                          const std::vector<std::pair<SparseVec, uint32_t>>& equations);

} // namespace cartan

#endif
