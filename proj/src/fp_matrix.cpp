#include "cartan/fp_matrix.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace cartan {

void normalize_sparse(SparseVec& v, const Fp& f) {
    std::sort(v.begin(), v.end(), [](const Ent& a, const Ent& b) { return a.idx < b.idx; });
    SparseVec out;
    out.reserve(v.size());
    for (size_t i = 0; i < v.size();) {
        uint32_t idx = v[i].idx, acc = 0;
        while (i < v.size() && v[i].idx == idx) {
            acc = f.add(acc, v[i].val % f.p());
            ++i;
        }
        if (acc) out.push_back({idx, acc});
    }
    v.swap(out);
}

// ---------------------------------------------------------------- FpMatrix

namespace {
constexpr uint32_t kDenseSide = 64;
constexpr double kDenseFill = 0.20;
} // namespace

FpMatrix FpMatrix::zeros(const Fp& f, uint32_t rows, uint32_t cols) {
    FpMatrix m(f, rows, cols);
    m.dense_ = true;
    m.grid_.assign(static_cast<size_t>(rows) * cols, 0);
    return m;
}

FpMatrix FpMatrix::identity(const Fp& f, uint32_t n) {
    FpMatrix m = zeros(f, n, n);
    for (uint32_t i = 0; i < n; ++i) m.grid_[static_cast<size_t>(i) * n + i] = 1;
    return m;
}

FpMatrix FpMatrix::from_triplets(const Fp& f, uint32_t rows, uint32_t cols,
                                 std::vector<Triplet> ts) {
    for (const auto& t : ts)
        if (t.row >= rows || t.col >= cols)
            throw validation_error("FpMatrix::from_triplets: entry out of range");
    std::sort(ts.begin(), ts.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    // merge duplicates additively, drop zeros
    std::vector<Triplet> merged;
    merged.reserve(ts.size());
    for (size_t i = 0; i < ts.size();) {
        uint32_t r = ts[i].row, c = ts[i].col, acc = 0;
        while (i < ts.size() && ts[i].row == r && ts[i].col == c) {
            acc = f.add(acc, ts[i].val % f.p());
            ++i;
        }
        if (acc) merged.push_back({r, c, acc});
    }
    const uint64_t cells = static_cast<uint64_t>(rows) * cols;
    const bool want_dense =
        (rows < kDenseSide && cols < kDenseSide) ||
        (cells > 0 && static_cast<double>(merged.size()) > kDenseFill * static_cast<double>(cells));
    FpMatrix m(f, rows, cols);
    if (want_dense) {
        m.dense_ = true;
        m.grid_.assign(cells, 0);
        for (const auto& t : merged) m.grid_[static_cast<size_t>(t.row) * cols + t.col] = t.val;
    } else {
        m.dense_ = false;
        m.offsets_.assign(rows + 1, 0);
        for (const auto& t : merged) ++m.offsets_[t.row + 1];
        for (uint32_t r = 0; r < rows; ++r) m.offsets_[r + 1] += m.offsets_[r];
        m.entries_.reserve(merged.size());
        for (const auto& t : merged) m.entries_.push_back({t.col, t.val});
    }
    return m;
}

FpMatrix FpMatrix::from_dense(const Fp& f, uint32_t rows, uint32_t cols,
                              std::span<const int64_t> values) {
    if (values.size() != static_cast<size_t>(rows) * cols)
        throw validation_error("FpMatrix::from_dense: size mismatch");
    FpMatrix m(f, rows, cols);
    m.dense_ = true;
    m.grid_.resize(values.size());
    for (size_t i = 0; i < values.size(); ++i) m.grid_[i] = f.reduce(values[i]);
    return m;
}

FpMatrix FpMatrix::from_rows(const Fp& f, const std::vector<std::vector<int64_t>>& rows) {
    const uint32_t r = static_cast<uint32_t>(rows.size());
    const uint32_t c = r ? static_cast<uint32_t>(rows[0].size()) : 0;
    std::vector<int64_t> flat;
    flat.reserve(static_cast<size_t>(r) * c);
    for (const auto& row : rows) {
        if (row.size() != c) throw validation_error("FpMatrix::from_rows: ragged input");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return from_dense(f, r, c, flat);
}

FpMatrix FpMatrix::from_sparse_rows(const Fp& f, std::vector<SparseVec> rows, uint32_t cols) {
    std::vector<Triplet> ts;
    for (uint32_t r = 0; r < rows.size(); ++r)
        for (const auto& e : rows[r]) ts.push_back({r, e.idx, e.val});
    return from_triplets(f, static_cast<uint32_t>(rows.size()), cols, std::move(ts));
}

uint64_t FpMatrix::nnz() const {
    if (!dense_) return entries_.size();
    uint64_t n = 0;
    for (uint32_t v : grid_) n += (v != 0);
    return n;
}

uint32_t FpMatrix::at(uint32_t r, uint32_t c) const {
    if (r >= rows_ || c >= cols_) throw validation_error("FpMatrix::at: out of range");
    if (dense_) return grid_[static_cast<size_t>(r) * cols_ + c];
    const auto first = entries_.begin() + static_cast<ptrdiff_t>(offsets_[r]);
    const auto last = entries_.begin() + static_cast<ptrdiff_t>(offsets_[r + 1]);
    auto it = std::lower_bound(first, last, c,
                               [](const Ent& e, uint32_t col) { return e.idx < col; });
    return (it != last && it->idx == c) ? it->val : 0;
}

SparseVec FpMatrix::row(uint32_t r) const {
    SparseVec out;
    if (dense_) {
        for (uint32_t c = 0; c < cols_; ++c) {
            uint32_t v = grid_[static_cast<size_t>(r) * cols_ + c];
            if (v) out.push_back({c, v});
        }
    } else {
        out.assign(entries_.begin() + static_cast<ptrdiff_t>(offsets_[r]),
                   entries_.begin() + static_cast<ptrdiff_t>(offsets_[r + 1]));
    }
    return out;
}

uint32_t FpMatrix::rank() const {
    RowEliminator elim(field_, cols_);
    for (uint32_t r = 0; r < rows_ && !elim.saturated(); ++r) elim.absorb(row(r));
    return elim.rank();
}

SubspaceBasis FpMatrix::kernel_basis() const {
    RowEliminator elim(field_, cols_);
    for (uint32_t r = 0; r < rows_; ++r) elim.absorb(row(r));
    return SubspaceBasis::from_spanning_rows(field_, cols_, elim.kernel());
}

FpMatrix FpMatrix::rref() const {
    RowEliminator elim(field_, cols_);
    for (uint32_t r = 0; r < rows_; ++r) elim.absorb(row(r));
    elim.reduce_full();
    return from_sparse_rows(field_, elim.echelon_rows(), cols_);
}

FpMatrix FpMatrix::transpose() const {
    std::vector<Triplet> ts;
    for (uint32_t r = 0; r < rows_; ++r)
        for (const auto& e : row(r)) ts.push_back({e.idx, r, e.val});
    return from_triplets(field_, cols_, rows_, std::move(ts));
}

FpMatrix FpMatrix::times(const FpMatrix& rhs) const {
    require_same_field(field_, rhs.field_, "FpMatrix::times");
    if (cols_ != rhs.rows_) throw validation_error("FpMatrix::times: shape mismatch");
    std::vector<Triplet> ts;
    for (uint32_t r = 0; r < rows_; ++r) {
        std::vector<uint32_t> acc(rhs.cols_, 0);
        for (const auto& e : row(r))
            for (const auto& e2 : rhs.row(e.idx))
                acc[e2.idx] = field_.add(acc[e2.idx], field_.mul(e.val, e2.val));
        for (uint32_t c = 0; c < rhs.cols_; ++c)
            if (acc[c]) ts.push_back({r, c, acc[c]});
    }
    return from_triplets(field_, rows_, rhs.cols_, std::move(ts));
}

bool FpMatrix::operator==(const FpMatrix& o) const {
    if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (uint32_t r = 0; r < rows_; ++r)
        if (row(r) != o.row(r)) return false;
    return true;
}

uint32_t quotient_dim(uint32_t ambient_dim, const FpMatrix& relations) {
    if (relations.cols() != ambient_dim)
        throw validation_error("quotient_dim: relations have " + std::to_string(relations.cols()) +
                               " columns, ambient dimension is " + std::to_string(ambient_dim));
    return ambient_dim - relations.rank();
}

// ------------------------------------------------------------ SubspaceBasis

SubspaceBasis::SubspaceBasis(uint32_t ambient_dim, FpMatrix rows_rref)
    : ambient_(ambient_dim), basis_(std::move(rows_rref)) {
    if (basis_.cols() != ambient_)
        throw validation_error("SubspaceBasis: ambient dimension mismatch");
    if (basis_.rank() != basis_.rows())
        throw validation_error("SubspaceBasis: rows not independent");
}

SubspaceBasis SubspaceBasis::from_spanning_rows(const Fp& f, uint32_t ambient_dim,
                                                std::vector<SparseVec> rows) {
    RowEliminator elim(f, ambient_dim);
    for (auto& r : rows) elim.absorb(std::move(r));
    elim.reduce_full();
    return SubspaceBasis(ambient_dim, FpMatrix::from_sparse_rows(f, elim.echelon_rows(), ambient_dim));
}

bool SubspaceBasis::contains(const SparseVec& v) const {
    RowEliminator elim(basis_.field(), ambient_);
    for (uint32_t r = 0; r < basis_.rows(); ++r) elim.absorb(basis_.row(r));
    return !elim.absorb(v);
}

// ------------------------------------------------------------ RowEliminator

RowEliminator::RowEliminator(const Fp& f, uint32_t ncols)
    : field_(f), ncols_(ncols), pivot_row_(ncols, -1), scratch_(ncols, 0) {}

bool RowEliminator::absorb(SparseVec row) {
    // Dense scratch + min-heap of touched columns. Pivot rows keep their
    // leading column minimal, so subtracting the pivot for column c only
    // touches columns >= c and the sweep is monotone.
    std::priority_queue<uint32_t, std::vector<uint32_t>, std::greater<>> heap;
    for (const auto& e : row) {
        uint32_t v = e.val % field_.p();
        if (!v || e.idx >= ncols_) continue;
        if (scratch_[e.idx] == 0) heap.push(e.idx);
        scratch_[e.idx] = field_.add(scratch_[e.idx], v);
        if (scratch_[e.idx] == 0) {
            // cancelled out; leave the stale heap entry, it is skipped on pop
        }
    }
    SparseVec kept;
    int64_t pivot_col = -1;
    while (!heap.empty()) {
        uint32_t c = heap.top();
        heap.pop();
        while (!heap.empty() && heap.top() == c) heap.pop();
        uint32_t v = scratch_[c];
        if (!v) continue;
        if (pivot_col < 0 && pivot_row_[c] >= 0) {
            // eliminate against the stored pivot row
            scratch_[c] = 0;
            const SparseVec& pr = rows_[static_cast<size_t>(pivot_row_[c])];
            for (size_t t = 1; t < pr.size(); ++t) { // entry 0 is the unit pivot
                uint32_t cc = pr[t].idx;
                uint32_t before = scratch_[cc];
                scratch_[cc] = field_.sub(before, field_.mul(v, pr[t].val));
                if (before == 0 && scratch_[cc] != 0) heap.push(cc);
            }
            continue;
        }
        // first surviving column with no pivot: this row becomes a pivot row
        if (pivot_col < 0) pivot_col = c;
        kept.push_back({c, v});
        scratch_[c] = 0;
    }
    if (pivot_col < 0) return false;
    const uint32_t lead = field_.inv(kept.front().val);
    for (auto& e : kept) e.val = field_.mul(e.val, lead);
    pivot_row_[static_cast<size_t>(pivot_col)] = static_cast<int32_t>(rows_.size());
    pivots_of_rows_.push_back(static_cast<uint32_t>(pivot_col));
    rows_.push_back(std::move(kept));
    reduced_ = false;
    return true;
}

void RowEliminator::reduce_full() {
    if (reduced_) return;
    // order rows by pivot column
    std::vector<size_t> order(rows_.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return pivots_of_rows_[a] < pivots_of_rows_[b]; });
    // sweep bottom-up, clearing entries above each pivot
    for (size_t t = order.size(); t-- > 0;) {
        const size_t ri = order[t];
        SparseVec& r = rows_[ri];
        for (const auto& e : r) scratch_[e.idx] = e.val;
        for (size_t u = 1; u < r.size(); ++u) {
            uint32_t c = r[u].idx;
            int32_t pr = pivot_row_[c];
            uint32_t v = scratch_[c];
            if (pr < 0 || static_cast<size_t>(pr) == ri || v == 0) continue;
            scratch_[c] = 0;
            const SparseVec& prow = rows_[static_cast<size_t>(pr)];
            for (size_t w = 1; w < prow.size(); ++w)
                scratch_[prow[w].idx] = field_.sub(scratch_[prow[w].idx],
                                                   field_.mul(v, prow[w].val));
        }
        SparseVec clean;
        clean.push_back({pivots_of_rows_[ri], 1});
        scratch_[pivots_of_rows_[ri]] = 0;
        // collect remaining entries; they can only sit at columns that were
        // in r or in subtracted pivot rows — rescan those candidates
        std::vector<uint32_t> cand;
        for (const auto& e : r)
            if (e.idx != pivots_of_rows_[ri]) cand.push_back(e.idx);
        for (const auto& e : r) {
            int32_t pr = pivot_row_[e.idx];
            if (pr >= 0 && static_cast<size_t>(pr) != ri)
                for (const auto& w : rows_[static_cast<size_t>(pr)]) cand.push_back(w.idx);
        }
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
        for (uint32_t c : cand) {
            if (scratch_[c]) {
                clean.push_back({c, scratch_[c]});
                scratch_[c] = 0;
            }
        }
        normalize_sparse(clean, field_);
        r = std::move(clean);
    }
    reduced_ = true;
}

std::vector<SparseVec> RowEliminator::echelon_rows() const {
    std::vector<size_t> order(rows_.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return pivots_of_rows_[a] < pivots_of_rows_[b]; });
    std::vector<SparseVec> out;
    out.reserve(order.size());
    for (size_t i : order) out.push_back(rows_[i]);
    return out;
}

std::vector<SparseVec> RowEliminator::kernel() {
    reduce_full();
    std::vector<SparseVec> basis;
    for (uint32_t c = 0; c < ncols_; ++c) {
        if (pivot_row_[c] >= 0) continue;
        SparseVec v;
        v.push_back({c, 1});
        for (size_t ri = 0; ri < rows_.size(); ++ri) {
            const SparseVec& r = rows_[ri];
            auto it = std::lower_bound(r.begin(), r.end(), c,
                                       [](const Ent& e, uint32_t col) { return e.idx < col; });
            if (it != r.end() && it->idx == c)
                v.push_back({pivots_of_rows_[ri], field_.neg(it->val)});
        }
        normalize_sparse(v, field_);
        basis.push_back(std::move(v));
    }
    return basis;
}

// ---------------------------------------------------------------- solving

SolveOutcome solve_linear(const Fp& f, uint32_t nunknowns,
                          const std::vector<std::pair<SparseVec, uint32_t>>& equations) {
    SolveOutcome out;
    const uint32_t bcol = nunknowns; // rhs rides along as an extra column
    RowEliminator elim(f, nunknowns + 1);
    for (const auto& [lhs, rhs] : equations) {
        SparseVec row = lhs;
        if (rhs % f.p()) row.push_back({bcol, rhs % f.p()});
        elim.absorb(std::move(row));
    }
    out.rank_augmented = elim.rank();
    uint32_t rank_a = 0;
    for (uint32_t c : elim.pivot_cols())
        if (c < nunknowns) ++rank_a;
    out.rank_a = rank_a;
    out.consistent = (out.rank_augmented == rank_a);
    if (out.consistent) {
        elim.reduce_full();
        out.particular.assign(nunknowns, 0);
        for (const auto& r : elim.echelon_rows()) {
            const uint32_t pc = r.front().idx;
            if (pc >= nunknowns) continue;
            // value of the pivot unknown with all free unknowns at zero
            uint32_t v = 0;
            if (!r.empty() && r.back().idx == bcol) v = r.back().val;
            out.particular[pc] = v;
        }
        return out;
    }
    // Certificate: y with y^T A = 0, y^T b != 0. Work with the transpose.
    const uint32_t neq = static_cast<uint32_t>(equations.size());
    std::vector<SparseVec> cols(nunknowns);
    std::vector<Ent> bvec;
    for (uint32_t r = 0; r < neq; ++r) {
        for (const auto& e : equations[r].first)
            if (e.val % f.p()) cols[e.idx].push_back({r, e.val % f.p()});
        if (equations[r].second % f.p()) bvec.push_back({r, equations[r].second % f.p()});
    }
    RowEliminator tr(f, neq);
    for (auto& c : cols) {
        normalize_sparse(c, f);
        tr.absorb(std::move(c));
    }
    for (auto& y : tr.kernel()) {
        uint32_t dot = 0;
        size_t i = 0, j = 0;
        while (i < y.size() && j < bvec.size()) {
            if (y[i].idx < bvec[j].idx) ++i;
            else if (y[i].idx > bvec[j].idx) ++j;
            else { dot = f.add(dot, f.mul(y[i].val, bvec[j].val)); ++i; ++j; }
        }
        if (dot) {
            out.certificate = std::move(y);
            break;
        }
    }
    return out;
}

} // namespace cartan
