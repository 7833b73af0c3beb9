#include "cartan/cyclic.hpp"

#include <string>

namespace cartan {

std::pair<FpMatrix, FpMatrix> cyclic_total_differentials(const CommAlgebra& a,
                                                         uint32_t dim_cap) {
    const Fp& f = a.field();
    const uint64_t d = a.dim();
    if (d > dim_cap)
        throw capacity_error("hc1: dim " + std::to_string(d) + " exceeds cap " +
                             std::to_string(dim_cap));
    const uint32_t d1 = static_cast<uint32_t>(d);
    const uint32_t d2 = static_cast<uint32_t>(d * d);
    const uint32_t d3 = static_cast<uint32_t>(d * d * d);
    auto t2 = [d1](uint32_t i, uint32_t j) { return i * d1 + j; };

    // D2 : A^3 + A^2 + A -> A^2 + A
    std::vector<Triplet> ts;
    for (uint32_t i = 0; i < d1; ++i)
        for (uint32_t j = 0; j < d1; ++j)
            for (uint32_t k = 0; k < d1; ++k) {
                const uint32_t col = (i * d1 + j) * d1 + k;
                // b(a0 (x) a1 (x) a2) = a0a1 (x) a2 - a0 (x) a1a2 + a2a0 (x) a1
                for (const auto& e : a.mult(i, j)) ts.push_back({t2(e.idx, k), col, e.val});
                for (const auto& e : a.mult(j, k))
                    ts.push_back({t2(i, e.idx), col, f.neg(e.val)});
                for (const auto& e : a.mult(k, i)) ts.push_back({t2(e.idx, j), col, e.val});
            }
    for (uint32_t i = 0; i < d1; ++i)
        for (uint32_t j = 0; j < d1; ++j) {
            const uint32_t col = d3 + t2(i, j);
            // (1 - t) with t(a0 (x) a1) = -a1 (x) a0
            ts.push_back({t2(i, j), col, 1});
            ts.push_back({t2(j, i), col, 1});
            // -b'(a0 (x) a1) = -a0a1
            for (const auto& e : a.mult(i, j)) ts.push_back({d2 + e.idx, col, f.neg(e.val)});
        }
    for (uint32_t i = 0; i < d1; ++i) ts.push_back({d2 + i, d3 + d2 + i, 1}); // N = id on A
    FpMatrix D2 = FpMatrix::from_triplets(f, d2 + d1, d3 + d2 + d1, std::move(ts));

    // D1 : A^2 + A -> A; b(a0 (x) a1) = a0a1 - a1a0 (zero for commutative A,
    // kept generic), (1 - t) vanishes on A^{(x)1}.
    std::vector<Triplet> us;
    for (uint32_t i = 0; i < d1; ++i)
        for (uint32_t j = 0; j < d1; ++j) {
            for (const auto& e : a.mult(i, j)) us.push_back({e.idx, t2(i, j), e.val});
            for (const auto& e : a.mult(j, i)) us.push_back({e.idx, t2(i, j), f.neg(e.val)});
        }
    FpMatrix D1 = FpMatrix::from_triplets(f, d1, d2 + d1, std::move(us));
    return {std::move(D2), std::move(D1)};
}

uint32_t hc1(const CommAlgebra& a, uint32_t dim_cap) {
    auto [D2, D1] = cyclic_total_differentials(a, dim_cap);
    const uint32_t tot1 = D2.rows();
    return (tot1 - D1.rank()) - D2.rank();
}

} // namespace cartan
