#include "cartan/invariant_forms.hpp"

#include <algorithm>
#include <map>

namespace cartan {

std::vector<std::pair<uint32_t, std::vector<uint32_t>>> ad_diagonal_elements(
    const LieAlgebra& l) {
    const Fp& f = l.field();
    const uint32_t d = l.dim();
    std::vector<std::pair<uint32_t, std::vector<uint32_t>>> out;
    SparseVec bx;
    for (uint32_t h = 0; h < d; ++h) {
        std::vector<uint32_t> lam(d, 0);
        bool ok = true;
        for (uint32_t x = 0; x < d && ok; ++x) {
            if (x == h) continue;
            bx.clear();
            l.bracket_basis(h, x, bx);
            if (bx.empty()) continue;
            if (bx.size() != 1 || bx[0].idx != x) {
                ok = false;
                break;
            }
            lam[x] = bx[0].val % f.p();
        }
        if (ok) out.emplace_back(h, std::move(lam));
    }
    return out;
}

namespace {

/// Shared assembly of one invariance/coinvariance row for the triple
/// (z, x, y): entries of [z,x] v y + x v [z,y] over the pair unknowns.
/// pair_slot maps a normalized pair to its unknown index, or UINT32_MAX
/// for pairs already known to be zero.
template <typename PairSlot>
void invariance_row(const LieAlgebra& l, uint32_t z, uint32_t x, uint32_t y,
                    PairSlot&& pair_slot, SparseVec& scratch, SparseVec& row) {
    row.clear();
    scratch.clear();
    l.bracket_basis(z, x, scratch);
    for (const auto& e : scratch) {
        const uint32_t slot = pair_slot(std::min(e.idx, y), std::max(e.idx, y));
        if (slot != UINT32_MAX) row.push_back({slot, e.val});
    }
    scratch.clear();
    l.bracket_basis(z, y, scratch);
    for (const auto& e : scratch) {
        const uint32_t slot = pair_slot(std::min(x, e.idx), std::max(x, e.idx));
        if (slot != UINT32_MAX) row.push_back({slot, e.val});
    }
    normalize_sparse(row, l.field());
}

} // namespace

InvariantFormSpace invariant_forms(const LieAlgebra& l, bool use_grading) {
    const Fp& f = l.field();
    const uint32_t d = l.dim();
    const uint64_t npairs = static_cast<uint64_t>(d) * (d + 1) / 2;

    // Diagonal adjoint elements partition the basis into eigenvalue classes;
    // only pairs with componentwise opposite classes can carry a nonzero
    // form entry. Without the flag (or with no diagonal elements) there is
    // one class and the mask is all-allowed.
    std::vector<std::pair<uint32_t, std::vector<uint32_t>>> diag;
    if (use_grading) diag = ad_diagonal_elements(l);
    const uint32_t nh = static_cast<uint32_t>(diag.size());

    std::map<std::vector<uint32_t>, uint32_t> class_id;
    std::vector<uint32_t> elt_class(d, 0);
    std::vector<std::vector<uint32_t>> class_members;
    std::vector<std::vector<uint32_t>> class_vec;
    {
        std::vector<uint32_t> key(nh);
        for (uint32_t x = 0; x < d; ++x) {
            for (uint32_t t = 0; t < nh; ++t) key[t] = diag[t].second[x];
            auto [it, fresh] = class_id.try_emplace(key, static_cast<uint32_t>(class_members.size()));
            if (fresh) {
                class_members.emplace_back();
                class_vec.push_back(key);
            }
            elt_class[x] = it->second;
            class_members[it->second].push_back(x);
        }
    }
    auto pair_allowed = [&](uint32_t i, uint32_t j) {
        for (uint32_t t = 0; t < nh; ++t)
            if (f.add(diag[t].second[i], diag[t].second[j])) return false;
        return true;
    };

    // compact unknown numbering over allowed pairs
    std::vector<uint32_t> slot_of;
    slot_of.assign(npairs, UINT32_MAX);
    uint32_t nunknown = 0;
    for (uint32_t i = 0; i < d; ++i)
        for (uint32_t j = i; j < d; ++j)
            if (pair_allowed(i, j)) slot_of[sym_pair_rank(d, i, j)] = nunknown++;
    auto pair_slot = [&](uint32_t i, uint32_t j) { return slot_of[sym_pair_rank(d, i, j)]; };

    InvariantFormSpace space;
    if (nunknown == 0) return space;

    RowEliminator elim(f, nunknown);
    SparseVec scratch, row;
    std::vector<uint32_t> need(nh);
    std::vector<uint32_t> all(d);
    for (uint32_t y = 0; y < d; ++y) all[y] = y;
    bool saturated = false;
    for (uint32_t z = 0; z < d && !saturated; ++z) {
        for (uint32_t x = 0; x < d && !saturated; ++x) {
            // rows with any surviving entry need class(z)+class(x)+class(y) = 0
            const std::vector<uint32_t>* bucket = &all;
            if (nh > 0) {
                for (uint32_t t = 0; t < nh; ++t)
                    need[t] = f.neg(f.add(diag[t].second[z], diag[t].second[x]));
                auto it = class_id.find(need);
                if (it == class_id.end()) continue;
                bucket = &class_members[it->second];
            }
            for (uint32_t y : *bucket) {
                if (y < x) continue;
                invariance_row(l, z, x, y, pair_slot, scratch, row);
                if (!row.empty()) {
                    elim.absorb(std::move(row));
                    row.clear();
                    if (elim.saturated()) {
                        saturated = true;
                        break;
                    }
                }
            }
        }
    }
    if (saturated) return space; // solution space is exactly zero

    std::vector<std::pair<uint32_t, uint32_t>> pair_of_slot(nunknown);
    for (uint32_t i = 0; i < d; ++i)
        for (uint32_t j = i; j < d; ++j) {
            uint32_t s = slot_of[sym_pair_rank(d, i, j)];
            if (s != UINT32_MAX) pair_of_slot[s] = {i, j};
        }
    for (const auto& v : elim.kernel()) {
        std::vector<Triplet> ts;
        for (const auto& e : v) {
            auto [i, j] = pair_of_slot[e.idx];
            ts.push_back({i, j, e.val});
            if (i != j) ts.push_back({j, i, e.val});
        }
        space.basis.push_back(FpMatrix::from_triplets(f, d, d, std::move(ts)));
    }
    space.dimension = static_cast<uint32_t>(space.basis.size());
    return space;
}

bool form_is_invariant(const LieAlgebra& l, const FpMatrix& w) {
    const Fp& f = l.field();
    const uint32_t d = l.dim();
    SparseVec bx;
    for (uint32_t z = 0; z < d; ++z)
        for (uint32_t x = 0; x < d; ++x)
            for (uint32_t y = x; y < d; ++y) {
                uint32_t acc = 0;
                bx.clear();
                l.bracket_basis(z, x, bx);
                for (const auto& e : bx) acc = f.add(acc, f.mul(e.val, w.at(e.idx, y)));
                bx.clear();
                l.bracket_basis(z, y, bx);
                for (const auto& e : bx) acc = f.add(acc, f.mul(e.val, w.at(x, e.idx)));
                if (acc) return false;
            }
    return true;
}

uint32_t sym_coinvariants_dim(const LieAlgebra& l) {
    const Fp& f = l.field();
    const uint32_t d = l.dim();
    const uint64_t npairs = static_cast<uint64_t>(d) * (d + 1) / 2;
    RowEliminator elim(f, static_cast<uint32_t>(npairs));
    auto slot = [d](uint32_t i, uint32_t j) {
        return static_cast<uint32_t>(sym_pair_rank(d, i, j));
    };
    SparseVec scratch, row;
    for (uint32_t z = 0; z < d; ++z)
        for (uint32_t x = 0; x < d; ++x)
            for (uint32_t y = x; y < d; ++y) {
                invariance_row(l, z, x, y, slot, scratch, row);
                if (!row.empty()) {
                    elim.absorb(std::move(row));
                    row.clear();
                    if (elim.saturated()) return 0;
                }
            }
    return static_cast<uint32_t>(npairs) - elim.rank();
}

bool hom_condition(const AModuleLie& la) {
    const Fp& f = la.algebra.field();
    const uint32_t da = la.algebra.dim();
    const uint32_t r = la.a_rank;
    if (r == 0) return true; // Hom_A(0, A) = 0 is trivially spanned
    std::vector<SparseOp> danch;
    for (const auto& dvec : la.a_basis) danch.push_back(la.anchor_of(dvec));
    RowEliminator elim(f, r * da);
    SparseVec row;
    for (uint32_t a = 0; a < da && !elim.saturated(); ++a) {
        // d(e_a) has slot-i component D_i(e_a)
        std::vector<SparseVec> base(r);
        for (uint32_t i = 0; i < r; ++i) base[i] = danch[i].apply({{a, 1}}, f);
        for (uint32_t b = 0; b < da && !elim.saturated(); ++b) {
            row.clear();
            for (uint32_t i = 0; i < r; ++i) {
                SparseVec prod = la.algebra.mulvec({{b, 1}}, base[i]);
                for (const auto& e : prod) row.push_back({i * da + e.idx, e.val});
            }
            normalize_sparse(row, f);
            if (!row.empty()) elim.absorb(std::move(row));
        }
    }
    return elim.saturated();
}

} // namespace cartan
