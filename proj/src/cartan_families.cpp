#include "cartan/cartan_families.hpp"

#include <algorithm>

#include "cartan/divided_powers.hpp"

namespace cartan {

// ------------------------------------------------------------------ AModuleLie

SparseOp AModuleLie::anchor_of(const SparseVec& lie_elt) const {
    const Fp& f = algebra.field();
    SparseOp op{algebra.dim(), algebra.dim(), std::vector<SparseVec>(algebra.dim())};
    for (uint32_t c = 0; c < algebra.dim(); ++c) {
        SparseVec acc;
        for (const auto& e : lie_elt)
            for (const auto& w : anchor[e.idx].col[c]) acc.push_back({w.idx, f.mul(e.val, w.val)});
        normalize_sparse(acc, f);
        op.col[c] = std::move(acc);
    }
    return op;
}

SparseVec AModuleLie::act(const SparseVec& algebra_elt, const SparseVec& lie_elt) const {
    const Fp& f = algebra.field();
    SparseVec out;
    for (const auto& a : algebra_elt) {
        SparseVec part = action[a.idx].apply(lie_elt, f);
        for (const auto& e : part) out.push_back({e.idx, f.mul(a.val, e.val)});
    }
    normalize_sparse(out, f);
    return out;
}

FpMatrix AModuleLie::freeness_matrix() const {
    const Fp& f = algebra.field();
    const uint32_t da = algebra.dim(), dl = lie.dim();
    std::vector<Triplet> ts;
    for (uint32_t i = 0; i < a_rank; ++i)
        for (uint32_t a = 0; a < da; ++a) {
            SparseVec v = action[a].apply(a_basis[i], f);
            for (const auto& e : v) ts.push_back({e.idx, i * da + a, e.val});
        }
    return FpMatrix::from_triplets(f, dl, a_rank * da, std::move(ts));
}

AModuleLie AModuleLie::make(LieAlgebra lie, CommAlgebra algebra, uint32_t a_rank,
                            std::vector<SparseVec> a_basis, std::vector<SparseOp> action,
                            std::vector<SparseOp> anchor, bool validate) {
    require_same_field(lie.field(), algebra.field(), "AModuleLie");
    AModuleLie la{std::move(lie), std::move(algebra), a_rank,
                  std::move(a_basis), std::move(action), std::move(anchor)};
    const Fp& f = la.algebra.field();
    const uint32_t da = la.algebra.dim(), dl = la.lie.dim();
    if (la.a_basis.size() != a_rank || la.action.size() != da || la.anchor.size() != dl)
        throw validation_error("AModuleLie: table sizes inconsistent");
    if (a_rank * da != dl)
        throw validation_error("AModuleLie: rank * dim A != dim L");
    if (!validate) return la;
    if (dl > 0 && la.freeness_matrix().rank() != dl)
        throw validation_error("AModuleLie: A-basis does not generate L freely");
    // Lie-Rinehart on generators: [D_i, a D_j] = a [D_i, D_j] + D_i(a) D_j
    for (uint32_t i = 0; i < a_rank; ++i) {
        SparseOp di = la.anchor_of(la.a_basis[i]);
        for (uint32_t j = 0; j < a_rank; ++j) {
            SparseVec dij = la.lie.bracket(la.a_basis[i], la.a_basis[j]);
            for (uint32_t a = 0; a < da; ++a) {
                SparseVec lhs = la.lie.bracket(la.a_basis[i],
                                               la.action[a].apply(la.a_basis[j], f));
                SparseVec rhs = la.action[a].apply(dij, f);
                SparseVec dia = di.apply({{a, 1}}, f); // D_i(e_a) in A
                for (const auto& e : la.act(dia, la.a_basis[j])) rhs.push_back(e);
                normalize_sparse(rhs, f);
                if (lhs != rhs)
                    throw validation_error("AModuleLie: Lie-Rinehart compatibility fails");
            }
        }
    }
    return la;
}

// ------------------------------------------------------------------------ witt

AModuleLie witt(uint32_t n, std::span<const uint32_t> m, const Fp& f, uint32_t lie_dim_cap) {
    DividedPowers dp(n, {m.begin(), m.end()}, f, lie_dim_cap);
    const uint32_t da = dp.dim();
    const uint64_t dl64 = static_cast<uint64_t>(n) * da;
    if (dl64 > lie_dim_cap) throw capacity_error("witt: dimension exceeds cap");
    const uint32_t dl = static_cast<uint32_t>(dl64);
    auto ix = [da](uint32_t mono, uint32_t slot) { return slot * da + mono; };

    LieAlgebra::Builder builder(f, dl, lie_dim_cap);
    SparseVec out;
    for (uint32_t u = 0; u < dl; ++u) {
        const uint32_t i = u / da, a = u % da;
        for (uint32_t v = u + 1; v < dl; ++v) {
            const uint32_t j = v / da, b = v % da;
            out.clear();
            // [x^(a) d_i, x^(b) d_j] = x^(a) d_i(x^(b)) d_j - x^(b) d_j(x^(a)) d_i
            if (auto db = dp.partial(i, b)) {
                auto [c, t] = dp.product(a, *db);
                if (c) out.push_back({ix(t, j), c});
            }
            if (auto dda = dp.partial(j, a)) {
                auto [c, t] = dp.product(b, *dda);
                if (c) out.push_back({ix(t, i), f.neg(c)});
            }
            builder.next_pair(std::move(out));
        }
    }
    std::vector<std::string> labels(dl);
    std::vector<int32_t> grading(dl);
    for (uint32_t u = 0; u < dl; ++u) {
        const uint32_t i = u / da, a = u % da;
        labels[u] = (a == 0 ? "" : dp.label(a) + " ") + "d" + std::to_string(i + 1);
        grading[u] = static_cast<int32_t>(dp.total_degree(a)) - 1;
    }
    builder.labels(std::move(labels)).grading(std::move(grading));
    builder.descriptor({{"family", "witt"},
                        {"n", n},
                        {"m", std::vector<uint32_t>(m.begin(), m.end())},
                        {"p", f.p()}});
    LieAlgebra lie = builder.finish();

    CommAlgebra algebra = divided_powers(n, m, f, std::max<uint32_t>(kAlgebraDimCap, da));
    std::vector<SparseVec> a_basis;
    for (uint32_t i = 0; i < n; ++i) a_basis.push_back({{ix(0, i), 1}});
    std::vector<SparseOp> action(da);
    for (uint32_t b = 0; b < da; ++b) {
        SparseOp op{dl, dl, std::vector<SparseVec>(dl)};
        for (uint32_t l = 0; l < dl; ++l) {
            const uint32_t i = l / da, a = l % da;
            auto [c, t] = dp.product(b, a);
            if (c) op.col[l] = {{ix(t, i), c}};
        }
        action[b] = std::move(op);
    }
    std::vector<SparseOp> anchor(dl);
    for (uint32_t l = 0; l < dl; ++l) {
        const uint32_t i = l / da, a = l % da;
        SparseOp op{da, da, std::vector<SparseVec>(da)};
        for (uint32_t b = 0; b < da; ++b) {
            if (auto db = dp.partial(i, b)) {
                auto [c, t] = dp.product(a, *db);
                if (c) op.col[b] = {{t, c}};
            }
        }
        anchor[l] = std::move(op);
    }
    return AModuleLie::make(std::move(lie), std::move(algebra), n, std::move(a_basis),
                            std::move(action), std::move(anchor));
}

// ---------------------------------------------------------- rank-1 A-modules

AModuleLie free_rank1_module(const CommAlgebra& a, const FpMatrix& derivation,
                             const std::string& symbol) {
    const Fp& f = a.field();
    const uint32_t d = a.dim();
    require_same_field(derivation.field(), f, "free_rank1_module");
    if (derivation.rows() != d || derivation.cols() != d)
        throw validation_error("free_rank1_module: derivation shape mismatch");
    // Leibniz check
    auto apply = [&](const SparseVec& v) {
        SparseVec out;
        for (const auto& e : v)
            for (uint32_t r = 0; r < d; ++r) {
                uint32_t c = derivation.at(r, e.idx);
                if (c) out.push_back({r, f.mul(c, e.val)});
            }
        normalize_sparse(out, f);
        return out;
    };
    for (uint32_t i = 0; i < d; ++i)
        for (uint32_t j = i; j < d; ++j) {
            SparseVec lhs = apply(a.mult(i, j));
            SparseVec rhs = a.mulvec(apply({{i, 1}}), {{j, 1}});
            for (const auto& e : a.mulvec({{i, 1}}, apply({{j, 1}}))) rhs.push_back(e);
            normalize_sparse(rhs, f);
            if (lhs != rhs)
                throw validation_error("free_rank1_module: matrix is not a derivation");
        }
    // bracket [e_a E, e_b E] = (e_a E(e_b) - e_b E(e_a)) E
    LieAlgebra::Builder builder(f, d);
    for (uint32_t u = 0; u < d; ++u)
        for (uint32_t v = u + 1; v < d; ++v) {
            SparseVec t = a.mulvec({{u, 1}}, apply({{v, 1}}));
            for (const auto& e : a.mulvec({{v, 1}}, apply({{u, 1}})))
                t.push_back({e.idx, f.neg(e.val)});
            normalize_sparse(t, f);
            builder.next_pair(std::move(t));
        }
    std::vector<std::string> labels;
    for (uint32_t i = 0; i < d; ++i) labels.push_back(a.labels()[i] + " " + symbol);
    builder.labels(std::move(labels));
    builder.descriptor({{"family", "rank1_module"}, {"p", f.p()}});
    LieAlgebra lie = builder.finish();

    std::vector<SparseOp> action(d);
    for (uint32_t b = 0; b < d; ++b) {
        SparseOp op{d, d, std::vector<SparseVec>(d)};
        for (uint32_t l = 0; l < d; ++l) op.col[l] = a.mult(b, l);
        action[b] = std::move(op);
    }
    std::vector<SparseOp> anchor(d);
    for (uint32_t l = 0; l < d; ++l) {
        SparseOp op{d, d, std::vector<SparseVec>(d)};
        for (uint32_t b = 0; b < d; ++b) op.col[b] = a.mulvec({{l, 1}}, apply({{b, 1}}));
        anchor[l] = std::move(op);
    }
    return AModuleLie::make(std::move(lie), a, 1, {{{0, 1}}}, std::move(action),
                            std::move(anchor));
}

// ----------------------------------------------------------------- hamiltonian

LieAlgebra hamiltonian(std::span<const uint32_t> m, const Fp& f, uint32_t lie_dim_cap) {
    if (m.size() % 2 != 0 || m.empty())
        throw validation_error("hamiltonian: exponent tuple length must be even");
    const uint32_t n2 = static_cast<uint32_t>(m.size());
    const uint32_t n = n2 / 2;
    DividedPowers dp(n2, {m.begin(), m.end()}, f, lie_dim_cap);
    const uint32_t d = dp.dim();
    // Poisson bracket on monomials, constants already factored out
    // (basis — monomials with index >= 1; the image's 1-component dropped)
    const uint32_t dq = d - 1;
    LieAlgebra::Builder builder(f, dq, lie_dim_cap);
    SparseVec out;
    for (uint32_t u = 1; u < d; ++u)
        for (uint32_t v = u + 1; v < d; ++v) {
            out.clear();
            for (uint32_t i = 0; i < n; ++i) {
                // d_i f · d_{i+n} g - d_{i+n} f · d_i g
                auto da = dp.partial(i, u);
                auto db = dp.partial(i + n, v);
                if (da && db) {
                    auto [c, t] = dp.product(*da, *db);
                    if (c && t != 0) out.push_back({t - 1, c});
                }
                da = dp.partial(i + n, u);
                db = dp.partial(i, v);
                if (da && db) {
                    auto [c, t] = dp.product(*da, *db);
                    if (c && t != 0) out.push_back({t - 1, f.neg(c)});
                }
            }
            builder.next_pair(std::move(out));
        }
    std::vector<std::string> labels;
    std::vector<int32_t> grading;
    for (uint32_t u = 1; u < d; ++u) {
        labels.push_back(dp.label(u));
        grading.push_back(static_cast<int32_t>(dp.total_degree(u)) - 2);
    }
    builder.labels(std::move(labels)).grading(std::move(grading));
    builder.descriptor({{"family", "poisson_mod_constants"},
                        {"m", std::vector<uint32_t>(m.begin(), m.end())},
                        {"p", f.p()}});
    LieAlgebra quotient = builder.finish();
    auto [der, basis] = derived_subalgebra(quotient);
    nlohmann::json desc{{"family", "hamiltonian"},
                        {"m", std::vector<uint32_t>(m.begin(), m.end())},
                        {"p", f.p()}};
    // keep labels/grading from the derived construction, repack descriptor
    nlohmann::json j = der.to_json();
    j["descriptor"] = desc;
    return LieAlgebra::from_json(j);
}

// --------------------------------------------------------------------- contact

LieAlgebra contact(uint32_t n, std::span<const uint32_t> m, const Fp& f,
                   uint32_t lie_dim_cap) {
    const uint32_t nv = 2 * n + 1;
    if (m.size() != nv)
        throw validation_error("contact: exponent tuple must have one entry per variable "
                               "(length 2n+1)");
    DividedPowers dp(nv, {m.begin(), m.end()}, f, lie_dim_cap);
    const uint32_t d = dp.dim();
    const uint32_t z = nv - 1;
    auto delta_coef = [&](const std::vector<uint32_t>& a) {
        uint32_t s = 0;
        for (uint32_t i = 0; i < 2 * n; ++i) s += a[i];
        return f.reduce(2 - static_cast<int64_t>(s));
    };
    LieAlgebra::Builder builder(f, d, lie_dim_cap);
    SparseVec out;
    std::vector<uint32_t> ea, eb;
    for (uint32_t u = 0; u < d; ++u) {
        ea = dp.exponents(u);
        const uint32_t dca = delta_coef(ea);
        for (uint32_t v = u + 1; v < d; ++v) {
            eb = dp.exponents(v);
            out.clear();
            // Delta(f) dz(g) - Delta(g) dz(f)
            if (auto dzb = dp.partial(z, v)) {
                auto [c, t] = dp.product(u, *dzb);
                c = f.mul(c, dca);
                if (c) out.push_back({t, c});
            }
            if (auto dza = dp.partial(z, u)) {
                auto [c, t] = dp.product(v, *dza);
                c = f.mul(c, delta_coef(eb));
                if (c) out.push_back({t, f.neg(c)});
            }
            // + sum_i (d_i f d_{i+n} g - d_{i+n} f d_i g)
            for (uint32_t i = 0; i < n; ++i) {
                auto da = dp.partial(i, u);
                auto db = dp.partial(i + n, v);
                if (da && db) {
                    auto [c, t] = dp.product(*da, *db);
                    if (c) out.push_back({t, c});
                }
                da = dp.partial(i + n, u);
                db = dp.partial(i, v);
                if (da && db) {
                    auto [c, t] = dp.product(*da, *db);
                    if (c) out.push_back({t, f.neg(c)});
                }
            }
            builder.next_pair(std::move(out));
        }
    }
    std::vector<std::string> labels;
    std::vector<int32_t> grading;
    for (uint32_t u = 0; u < d; ++u) {
        labels.push_back(dp.label(u));
        const auto a = dp.exponents(u);
        int32_t deg = -2 + 2 * static_cast<int32_t>(a[z]);
        for (uint32_t i = 0; i < 2 * n; ++i) deg += static_cast<int32_t>(a[i]);
        grading.push_back(deg);
    }
    builder.labels(std::move(labels)).grading(std::move(grading));
    builder.descriptor({{"family", "contact"},
                        {"n", n},
                        {"m", std::vector<uint32_t>(m.begin(), m.end())},
                        {"p", f.p()}});
    LieAlgebra full = builder.finish();
    if ((2 * n + 1) % f.p() == f.p() - 3) {
        auto [der, basis] = derived_subalgebra(full);
        nlohmann::json j = der.to_json();
        j["descriptor"] = full.descriptor();
        j["descriptor"]["derived"] = true;
        return LieAlgebra::from_json(j);
    }
    return full;
}

// ------------------------------------------------------------- tensor A-module

AModuleLie tensor_amodule(const AModuleLie& la, const CommAlgebra& b, uint32_t lie_dim_cap) {
    const Fp& f = la.algebra.field();
    require_same_field(f, b.field(), "tensor_amodule");
    const uint32_t dA = la.algebra.dim(), dB = b.dim(), dL = la.lie.dim();
    CommAlgebra big_a = tensor(la.algebra, b, std::max<uint32_t>(kAlgebraDimCap,
                                                                  dA * dB));
    LieAlgebra big_l = current(la.lie, b, lie_dim_cap);
    auto ixA = [dB](uint32_t a, uint32_t y) { return a * dB + y; };
    auto ixL = [dB](uint32_t l, uint32_t y) { return l * dB + y; };
    std::vector<SparseVec> a_basis;
    for (const auto& dvec : la.a_basis) {
        SparseVec v;
        for (const auto& e : dvec)
            for (uint32_t y = 0; y < dB; ++y)
                if (b.unit()[y]) v.push_back({ixL(e.idx, y), f.mul(e.val, b.unit()[y])});
        normalize_sparse(v, f);
        a_basis.push_back(std::move(v));
    }
    std::vector<SparseOp> action(dA * dB);
    for (uint32_t a = 0; a < dA; ++a)
        for (uint32_t y = 0; y < dB; ++y) {
            SparseOp op{dL * dB, dL * dB, std::vector<SparseVec>(static_cast<size_t>(dL) * dB)};
            for (uint32_t l = 0; l < dL; ++l)
                for (uint32_t y2 = 0; y2 < dB; ++y2) {
                    SparseVec outv;
                    for (const auto& e : la.action[a].col[l])
                        for (const auto& w : b.mult(y, y2))
                            outv.push_back({ixL(e.idx, w.idx), f.mul(e.val, w.val)});
                    normalize_sparse(outv, f);
                    op.col[ixL(l, y2)] = std::move(outv);
                }
            action[ixA(a, y)] = std::move(op);
        }
    std::vector<SparseOp> anchor(dL * dB);
    for (uint32_t l = 0; l < dL; ++l)
        for (uint32_t y = 0; y < dB; ++y) {
            SparseOp op{dA * dB, dA * dB, std::vector<SparseVec>(static_cast<size_t>(dA) * dB)};
            for (uint32_t a = 0; a < dA; ++a)
                for (uint32_t y2 = 0; y2 < dB; ++y2) {
                    SparseVec outv;
                    for (const auto& e : la.anchor[l].col[a])
                        for (const auto& w : b.mult(y, y2))
                            outv.push_back({ixA(e.idx, w.idx), f.mul(e.val, w.val)});
                    normalize_sparse(outv, f);
                    op.col[ixA(a, y2)] = std::move(outv);
                }
            anchor[ixL(l, y)] = std::move(op);
        }
    return AModuleLie::make(std::move(big_l), std::move(big_a), la.a_rank, std::move(a_basis),
                            std::move(action), std::move(anchor));
}

} // namespace cartan
