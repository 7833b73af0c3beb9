#include "cartan/derham.hpp"

#include <string>

#include "cartan/invariant_forms.hpp"

namespace cartan {

ACochainComplex build_complex(const AModuleLie& la) {
    const Fp& f = la.algebra.field();
    const uint32_t da = la.algebra.dim();
    const uint32_t r = la.a_rank;
    const uint32_t dl = la.lie.dim();

    // Lie-Rinehart compatibility is what makes the differential of an
    // A-multilinear cochain A-multilinear again; re-check it here so a
    // complex is never silently built from incompatible data.
    {
        for (uint32_t i = 0; i < r; ++i) {
            SparseOp di = la.anchor_of(la.a_basis[i]);
            for (uint32_t j = 0; j < r; ++j) {
                SparseVec dij = la.lie.bracket(la.a_basis[i], la.a_basis[j]);
                for (uint32_t a = 0; a < da; ++a) {
                    SparseVec lhs = la.lie.bracket(la.a_basis[i],
                                                   la.action[a].apply(la.a_basis[j], f));
                    SparseVec rhs = la.action[a].apply(dij, f);
                    for (const auto& e : la.act(di.apply({{a, 1}}, f), la.a_basis[j]))
                        rhs.push_back(e);
                    normalize_sparse(rhs, f);
                    if (lhs != rhs)
                        throw validation_error(
                            "build_complex: Lie-Rinehart compatibility violated");
                }
            }
        }
    }

    std::vector<SparseOp> danch;
    for (const auto& dvec : la.a_basis) danch.push_back(la.anchor_of(dvec));

    ACochainComplex c{r, da, FpMatrix::zeros(f, 0, 0), FpMatrix::zeros(f, 0, 0)};
    // d0(a) = (D_1(a), ..., D_r(a))
    {
        std::vector<Triplet> ts;
        for (uint32_t a = 0; a < da; ++a)
            for (uint32_t i = 0; i < r; ++i)
                for (const auto& e : danch[i].apply({{a, 1}}, f))
                    ts.push_back({i * da + e.idx, a, e.val});
        c.d0 = FpMatrix::from_triplets(f, r * da, da, std::move(ts));
    }
    // d1(φ)(Di, Dj) = Di(φ(Dj)) - Dj(φ(Di)) - φ([Di, Dj]);
    // φ given by its values f_k = φ(D_k) in A, so φ(sum g_k D_k) = sum g_k f_k.
    const uint32_t npairs = r >= 2 ? r * (r - 1) / 2 : 0;
    {
        // coordinates of [Di, Dj] in A^r via the freeness isomorphism
        FpMatrix fm = la.freeness_matrix();
        RowEliminator elim(f, dl + dl); // [F | I] augmented inverse
        for (uint32_t row = 0; row < dl; ++row) {
            SparseVec v = fm.row(row);
            v.push_back({dl + row, 1});
            elim.absorb(std::move(v));
        }
        elim.reduce_full();
        // F is invertible (freeness); echelon rows are [I | F^{-1}]
        std::vector<SparseVec> inv_rows(dl);
        for (const auto& rrow : elim.echelon_rows()) {
            const uint32_t pc = rrow.front().idx;
            if (pc >= dl) throw validation_error("build_complex: freeness matrix singular");
            SparseVec tail;
            for (const auto& e : rrow)
                if (e.idx >= dl) tail.push_back({e.idx - dl, e.val});
            inv_rows[pc] = std::move(tail);
        }
        std::vector<Triplet> ts;
        uint32_t t = 0;
        for (uint32_t i = 0; i < r; ++i)
            for (uint32_t j = i + 1; j < r; ++j, ++t) {
                // coords g of [Di, Dj] in A^r: g = F^{-1} [Di,Dj]
                SparseVec lij = la.lie.bracket(la.a_basis[i], la.a_basis[j]);
                std::vector<uint32_t> gcoord(static_cast<size_t>(r) * da, 0);
                for (uint32_t rowi = 0; rowi < dl; ++rowi) {
                    uint32_t acc = 0;
                    for (const auto& e : inv_rows[rowi]) {
                        // dot with lij
                        for (const auto& w : lij)
                            if (w.idx == e.idx) acc = f.add(acc, f.mul(e.val, w.val));
                    }
                    gcoord[rowi] = acc;
                }
                for (uint32_t a = 0; a < da; ++a) {
                    // Di(f_j): column block j
                    for (const auto& e : danch[i].apply({{a, 1}}, f))
                        ts.push_back({t * da + e.idx, j * da + a, e.val});
                    for (const auto& e : danch[j].apply({{a, 1}}, f))
                        ts.push_back({t * da + e.idx, i * da + a, f.neg(e.val)});
                    // -φ([Di,Dj]) = -sum_k g_k f_k
                    for (uint32_t k = 0; k < r; ++k) {
                        SparseVec gk;
                        for (uint32_t mm = 0; mm < da; ++mm)
                            if (gcoord[k * da + mm]) gk.push_back({mm, gcoord[k * da + mm]});
                        for (const auto& e : la.algebra.mulvec(gk, {{a, 1}}))
                            ts.push_back({t * da + e.idx, k * da + a, f.neg(e.val)});
                    }
                }
            }
        c.d1 = FpMatrix::from_triplets(f, npairs * da, r * da, std::move(ts));
    }
    if (c.d1.times(c.d0).nnz() != 0)
        throw validation_error("build_complex: d1 ∘ d0 != 0");
    return c;
}

CohomologyDims cohomology_dims(const ACochainComplex& c) {
    CohomologyDims out;
    const uint32_t r0 = c.d0.rank();
    out.h0 = c.dim_a - r0;
    out.h1 = (c.a_rank * c.dim_a - c.d1.rank()) - r0;
    return out;
}

SkryabinReport skryabin_check(const AModuleLie& la, uint64_t lambda3_cap) {
    if (!hom_condition(la))
        throw precondition_error("skryabin_check: the hom condition (1) fails for this "
                                 "A-module Lie algebra");
    SkryabinReport rep;
    rep.a_rank = la.a_rank;
    rep.dim_h2 = ce_homology(la.lie, lambda3_cap).dim_h2;
    if (la.a_rank == 1) {
        rep.h1_derham = cohomology_dims(build_complex(la)).h1;
        rep.pass = rep.dim_h2 == rep.h1_derham;
    } else {
        rep.pass = rep.dim_h2 == 0;
    }
    return rep;
}

nlohmann::json SkryabinReport::to_json() const {
    nlohmann::json j{{"check", "skryabin"},
                     {"params", {{"a_rank", a_rank}}},
                     {"lhs", dim_h2},
                     {"rhs", a_rank == 1 ? h1_derham : 0},
                     {"dims", {{"h2", dim_h2}, {"h1_derham", h1_derham}}},
                     {"status", pass ? "pass" : "fail"}};
    return j;
}

nlohmann::json LemmaReport::to_json() const {
    return {{"check", "lemma_tensor"},
            {"params", {{"dim_b", dim_b}}},
            {"lhs", {big.h0, big.h1}},
            {"rhs", {small.h0 * dim_b, small.h1 * dim_b}},
            {"dims", {{"h0_small", small.h0}, {"h1_small", small.h1},
                      {"h0_big", big.h0}, {"h1_big", big.h1}}},
            {"status", pass ? "pass" : "fail"}};
}

LemmaReport lemma_check(const AModuleLie& la, const CommAlgebra& b) {
    LemmaReport rep;
    rep.dim_b = b.dim();
    rep.small = cohomology_dims(build_complex(la));
    rep.big = cohomology_dims(build_complex(tensor_amodule(la, b)));
    rep.pass = rep.big.h0 == rep.small.h0 * rep.dim_b && rep.big.h1 == rep.small.h1 * rep.dim_b;
    return rep;
}

} // namespace cartan
