#include "cartan/kaehler.hpp"

namespace cartan {

Omega1Report kaehler_omega1(const CommAlgebra& a) {
    const Fp& f = a.field();
    const uint32_t d = a.dim();
    const uint32_t ambient = d * d; // coordinate (coeff basis c, symbol s) = c*d + s
    auto co = [d](uint32_t c, uint32_t s) { return c * d + s; };

    RowEliminator rel(f, ambient);
    SparseVec base, row;
    for (uint32_t i = 0; i < d; ++i) {
        for (uint32_t j = i; j < d; ++j) {
            base.clear();
            // d(e_i e_j) = sum_k mu_ij^k * (unit) de_k
            for (const auto& e : a.mult(i, j))
                for (uint32_t u = 0; u < d; ++u)
                    if (a.unit()[u]) base.push_back({co(u, e.idx), f.mul(a.unit()[u], e.val)});
            base.push_back({co(i, j), f.p() - 1}); // -e_i de_j
            base.push_back({co(j, i), f.p() - 1}); // -e_j de_i
            normalize_sparse(base, f);
            // Leibniz relation itself plus its product with each basis
            // element; one multiplication pass gives the full A-module span.
            rel.absorb(base);
            for (uint32_t m = 0; m < d; ++m) {
                row.clear();
                for (const auto& e : base) {
                    const uint32_t cc = e.idx / d, ss = e.idx % d;
                    for (const auto& pe : a.mult(m, cc))
                        row.push_back({co(pe.idx, ss), f.mul(pe.val, e.val)});
                }
                normalize_sparse(row, f);
                if (!row.empty()) rel.absorb(row);
            }
        }
    }
    const uint32_t r_rel = rel.rank();
    Omega1Report rep;
    rep.dim_omega1 = ambient - r_rel;
    // d e_s = (unit) (x) symbol s, absorbed on top of the relations
    for (uint32_t s = 0; s < d; ++s) {
        row.clear();
        for (uint32_t u = 0; u < d; ++u)
            if (a.unit()[u]) row.push_back({co(u, s), a.unit()[u]});
        normalize_sparse(row, f);
        rel.absorb(row);
    }
    rep.dim_dA = rel.rank() - r_rel;
    rep.dim_quotient = ambient - rel.rank();
    return rep;
}

} // namespace cartan
