#include "cartan/deform.hpp"

#include <algorithm>

namespace cartan {

// --------------------------------------------------------------------- Cochain2

Cochain2::Cochain2(const Fp& f, uint32_t dim) : dim_(dim), upper_(pair_count(dim)) {
    (void)f;
}

void Cochain2::set(uint32_t i, uint32_t j, SparseVec value) {
    if (i >= j || j >= dim_) throw validation_error("Cochain2::set: need i < j < dim");
    upper_[pair_rank(dim_, i, j)] = std::move(value);
}

void Cochain2::eval_basis(uint32_t i, uint32_t j, SparseVec& out, const Fp& f) const {
    if (i == j) return;
    if (i < j) {
        const auto& v = upper_[pair_rank(dim_, i, j)];
        out.insert(out.end(), v.begin(), v.end());
    } else {
        for (const auto& e : upper_[pair_rank(dim_, j, i)]) out.push_back({e.idx, f.neg(e.val)});
    }
}

bool Cochain2::empty() const {
    for (const auto& v : upper_)
        if (!v.empty()) return false;
    return true;
}

nlohmann::json DeformationData::to_json() const {
    nlohmann::json co = nlohmann::json::array();
    const Fp& f = base.field();
    SparseVec tmp;
    for (uint32_t n = 0; n < cochains.size(); ++n)
        for (uint32_t i = 0; i < base.dim(); ++i)
            for (uint32_t j = i + 1; j < base.dim(); ++j) {
                tmp.clear();
                cochains[n].eval_basis(i, j, tmp, f);
                for (const auto& e : tmp) co.push_back({n + 1, i, j, e.idx, e.val});
            }
    return {{"base", base.descriptor()}, {"cochains", std::move(co)}};
}

// ------------------------------------------------------------------ jacobi gate

namespace {

/// φ_i with φ_0 = the base bracket.
void eval_order(const DeformationData& d, uint32_t order, uint32_t i, uint32_t j,
                SparseVec& out) {
    if (order == 0)
        d.base.bracket_basis(i, j, out);
    else
        d.cochains[order - 1].eval_basis(i, j, out, d.base.field());
}

} // namespace

bool jacobi_up_to_order(const DeformationData& d, uint32_t m) {
    if (m > d.cochains.size())
        throw precondition_error("jacobi_up_to_order: order exceeds the number of cochains");
    const Fp& f = d.base.field();
    const uint32_t dim = d.base.dim();
    std::vector<int64_t> acc(dim, 0);
    SparseVec inner, outer;
    for (uint32_t n = 0; n <= m; ++n) {
        for (uint32_t x = 0; x < dim; ++x)
            for (uint32_t y = x + 1; y < dim; ++y)
                for (uint32_t z = y + 1; z < dim; ++z) {
                    std::fill(acc.begin(), acc.end(), 0);
                    for (uint32_t i = 0; i <= n; ++i) {
                        const uint32_t j = n - i;
                        if (i > d.cochains.size() || j > d.cochains.size()) continue;
                        auto term = [&](uint32_t a, uint32_t b, uint32_t c) {
                            inner.clear();
                            eval_order(d, j, a, b, inner);
                            for (const auto& e : inner) {
                                if (e.idx == c) continue;
                                outer.clear();
                                eval_order(d, i, e.idx, c, outer);
                                for (const auto& w : outer)
                                    acc[w.idx] += int64_t(e.val) * w.val;
                            }
                        };
                        term(x, y, z);
                        term(y, z, x);
                        term(z, x, y);
                    }
                    for (uint32_t t = 0; t < dim; ++t)
                        if (acc[t] % f.p()) return false;
                }
    }
    return true;
}

// --------------------------------------------------------------- prolongation

namespace {

/// w(v, e_y) for a known symmetric matrix w and sparse v.
uint32_t pair_with(const FpMatrix& w, const SparseVec& v, uint32_t y, const Fp& f) {
    uint32_t acc = 0;
    for (const auto& e : v) acc = f.add(acc, f.mul(e.val, w.at(e.idx, y)));
    return acc;
}

void require_symmetric(const FpMatrix& w) {
    for (uint32_t i = 0; i < w.rows(); ++i)
        for (uint32_t j = i + 1; j < w.cols(); ++j)
            if (w.at(i, j) != w.at(j, i))
                throw precondition_error("deform: form matrix is not symmetric");
}

FpMatrix matrix_from_pairs(const Fp& f, uint32_t dim, const std::vector<uint32_t>& pair_vals) {
    std::vector<Triplet> ts;
    for (uint32_t i = 0; i < dim; ++i)
        for (uint32_t j = i; j < dim; ++j) {
            const uint32_t v = pair_vals[sym_pair_rank(dim, i, j)];
            if (!v) continue;
            ts.push_back({i, j, v});
            if (i != j) ts.push_back({j, i, v});
        }
    return FpMatrix::from_triplets(f, dim, dim, std::move(ts));
}

} // namespace

ProlongResult prolong_form(const DeformationData& d, const FpMatrix& seed, uint32_t m) {
    const Fp& f = d.base.field();
    const uint32_t dim = d.base.dim();
    if (seed.rows() != dim || seed.cols() != dim)
        throw precondition_error("prolong_form: seed shape mismatch");
    require_symmetric(seed);
    if (!form_is_invariant(d.base, seed))
        throw precondition_error("prolong_form: seed is not invariant for the base bracket");
    ProlongResult res;
    res.jet.orders.push_back(seed);
    const uint32_t npairs = static_cast<uint32_t>(sym_pair_rank(dim, dim - 1, dim - 1)) + 1;
    SparseVec scratch, lhs;
    for (uint32_t n = 1; n <= m; ++n) {
        std::vector<std::pair<SparseVec, uint32_t>> equations;
        for (uint32_t z = 0; z < dim; ++z)
            for (uint32_t x = 0; x < dim; ++x)
                for (uint32_t y = x; y < dim; ++y) {
                    lhs.clear();
                    scratch.clear();
                    d.base.bracket_basis(z, x, scratch);
                    for (const auto& e : scratch)
                        lhs.push_back({static_cast<uint32_t>(sym_pair_rank(
                                           dim, std::min(e.idx, y), std::max(e.idx, y))),
                                       e.val});
                    scratch.clear();
                    d.base.bracket_basis(z, y, scratch);
                    for (const auto& e : scratch)
                        lhs.push_back({static_cast<uint32_t>(sym_pair_rank(
                                           dim, std::min(x, e.idx), std::max(x, e.idx))),
                                       e.val});
                    normalize_sparse(lhs, f);
                    // known part: sum over deformation cochains
                    uint32_t known = 0;
                    for (uint32_t i = 1; i <= n && i <= d.cochains.size(); ++i) {
                        const FpMatrix& w = res.jet.orders[n - i];
                        scratch.clear();
                        d.cochains[i - 1].eval_basis(z, x, scratch, f);
                        known = f.add(known, pair_with(w, scratch, y, f));
                        scratch.clear();
                        d.cochains[i - 1].eval_basis(z, y, scratch, f);
                        known = f.add(known, pair_with(w, scratch, x, f));
                    }
                    if (!lhs.empty() || known)
                        equations.emplace_back(lhs, f.neg(known)); // lhs · w_n = -known
                }
        SolveOutcome sol = solve_linear(f, npairs, equations);
        if (!sol.consistent) {
            res.obstruction = ObstructionReport{
                n, sol.rank_augmented - sol.rank_a, std::move(sol.certificate)};
            return res;
        }
        res.jet.orders.push_back(matrix_from_pairs(f, dim, sol.particular));
        res.max_order = n;
    }
    return res;
}

InvariantFormSpace classify_prolongable(const DeformationData& d, uint32_t m) {
    const Fp& f = d.base.field();
    const uint32_t dim = d.base.dim();
    const uint32_t npairs = dim ? static_cast<uint32_t>(sym_pair_rank(dim, dim - 1, dim - 1)) + 1 : 0;
    const uint32_t nunknown = npairs * (m + 1); // blocks w_0 .. w_m
    RowEliminator elim(f, nunknown);
    SparseVec scratch, row;
    auto slot = [&](uint32_t block, uint32_t i, uint32_t j) {
        return block * npairs + static_cast<uint32_t>(sym_pair_rank(dim, std::min(i, j),
                                                                    std::max(i, j)));
    };
    for (uint32_t n = 0; n <= m; ++n)
        for (uint32_t z = 0; z < dim; ++z)
            for (uint32_t x = 0; x < dim; ++x)
                for (uint32_t y = x; y < dim; ++y) {
                    row.clear();
                    scratch.clear();
                    d.base.bracket_basis(z, x, scratch);
                    for (const auto& e : scratch) row.push_back({slot(n, e.idx, y), e.val});
                    scratch.clear();
                    d.base.bracket_basis(z, y, scratch);
                    for (const auto& e : scratch) row.push_back({slot(n, x, e.idx), e.val});
                    for (uint32_t i = 1; i <= n && i <= d.cochains.size(); ++i) {
                        scratch.clear();
                        d.cochains[i - 1].eval_basis(z, x, scratch, f);
                        for (const auto& e : scratch)
                            row.push_back({slot(n - i, e.idx, y), e.val});
                        scratch.clear();
                        d.cochains[i - 1].eval_basis(z, y, scratch, f);
                        for (const auto& e : scratch)
                            row.push_back({slot(n - i, x, e.idx), e.val});
                    }
                    normalize_sparse(row, f);
                    if (!row.empty()) elim.absorb(std::move(row));
                }
    // project the solution space onto the w_0 block
    std::vector<SparseVec> seed_rows;
    for (const auto& v : elim.kernel()) {
        SparseVec head;
        for (const auto& e : v)
            if (e.idx < npairs) head.push_back(e);
        if (!head.empty()) seed_rows.push_back(std::move(head));
    }
    SubspaceBasis proj = SubspaceBasis::from_spanning_rows(f, npairs, std::move(seed_rows));
    InvariantFormSpace space;
    space.dimension = proj.dim();
    std::vector<uint32_t> pair_vals(npairs, 0);
    for (uint32_t r = 0; r < proj.dim(); ++r) {
        std::fill(pair_vals.begin(), pair_vals.end(), 0);
        for (const auto& e : proj.basis_rows().row(r)) pair_vals[e.idx] = e.val;
        space.basis.push_back(matrix_from_pairs(f, dim, pair_vals));
    }
    return space;
}

} // namespace cartan
