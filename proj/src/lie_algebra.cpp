#include "cartan/lie_algebra.hpp"

#include <algorithm>
#include <random>

#include "cartan/comm_algebra.hpp"

namespace cartan {

// -------------------------------------------------------------------- Builder

LieAlgebra::Builder::Builder(const Fp& f, uint32_t dim, uint32_t dim_cap) : field_(f), dim_(dim) {
    if (dim > dim_cap)
        throw capacity_error("LieAlgebra: dim " + std::to_string(dim) + " exceeds cap " +
                             std::to_string(dim_cap));
    offsets_.reserve(pair_count(dim) + 1);
    offsets_.push_back(0);
}

void LieAlgebra::Builder::next_pair(SparseVec entries) {
    if (fed_ >= pair_count(dim_))
        throw validation_error("LieAlgebra::Builder: too many pairs");
    normalize_sparse(entries, field_);
    for (const auto& e : entries)
        if (e.idx >= dim_) throw validation_error("LieAlgebra::Builder: index out of range");
    entries_.insert(entries_.end(), entries.begin(), entries.end());
    offsets_.push_back(entries_.size());
    ++fed_;
}

LieAlgebra::Builder& LieAlgebra::Builder::labels(std::vector<std::string> v) {
    labels_ = std::move(v);
    return *this;
}

LieAlgebra::Builder& LieAlgebra::Builder::grading(std::vector<int32_t> v) {
    grading_ = std::move(v);
    return *this;
}

LieAlgebra::Builder& LieAlgebra::Builder::descriptor(nlohmann::json d) {
    descriptor_ = std::move(d);
    return *this;
}

LieAlgebra LieAlgebra::Builder::finish(JacobiMode mode) {
    if (fed_ != pair_count(dim_))
        throw validation_error("LieAlgebra::Builder: not all pairs fed");
    LieAlgebra l(field_);
    l.dim_ = dim_;
    if (labels_.empty())
        for (uint32_t i = 0; i < dim_; ++i) labels_.push_back("e" + std::to_string(i + 1));
    if (labels_.size() != dim_)
        throw validation_error("LieAlgebra: label count mismatch");
    if (grading_ && grading_->size() != dim_)
        throw validation_error("LieAlgebra: grading length mismatch");
    l.labels_ = std::move(labels_);
    l.grading_ = std::move(grading_);
    l.descriptor_ = std::move(descriptor_);
    l.offsets_ = std::move(offsets_);
    l.entries_ = std::move(entries_);
    l.validate(mode);
    return l;
}

// ------------------------------------------------------------------ LieAlgebra

void LieAlgebra::bracket_basis(uint32_t i, uint32_t j, SparseVec& out) const {
    if (i == j) return;
    if (i < j) {
        const auto v = upper(i, j);
        out.insert(out.end(), v.begin(), v.end());
    } else {
        for (const auto& e : upper(j, i)) out.push_back({e.idx, field_.neg(e.val)});
    }
}

SparseVec LieAlgebra::bracket(const SparseVec& x, const SparseVec& y) const {
    std::vector<uint32_t> acc(dim_, 0);
    SparseVec tmp;
    for (const auto& xe : x)
        for (const auto& ye : y) {
            if (xe.idx == ye.idx) continue;
            tmp.clear();
            bracket_basis(xe.idx, ye.idx, tmp);
            const uint32_t s = field_.mul(xe.val, ye.val);
            for (const auto& e : tmp) acc[e.idx] = field_.add(acc[e.idx], field_.mul(s, e.val));
        }
    SparseVec out;
    for (uint32_t k = 0; k < dim_; ++k)
        if (acc[k]) out.push_back({k, acc[k]});
    return out;
}

void LieAlgebra::check_jacobi(JacobiMode mode) const {
    if (mode == JacobiMode::None || dim_ < 3) return;
    std::vector<int64_t> acc(dim_, 0);
    SparseVec t1, t2;
    auto jac = [&](uint32_t i, uint32_t j, uint32_t k) {
        std::fill(acc.begin(), acc.end(), 0);
        auto add_term = [&](uint32_t a, uint32_t b, uint32_t c) {
            t1.clear();
            bracket_basis(a, b, t1);
            for (const auto& e : t1) {
                if (e.idx == c) continue;
                t2.clear();
                bracket_basis(e.idx, c, t2);
                for (const auto& e2 : t2) acc[e2.idx] += int64_t(e.val) * e2.val;
            }
        };
        add_term(i, j, k);
        add_term(j, k, i);
        add_term(k, i, j);
        for (uint32_t m = 0; m < dim_; ++m)
            if (acc[m] % field_.p())
                throw validation_error("LieAlgebra: Jacobi fails at (" + std::to_string(i) + "," +
                                       std::to_string(j) + "," + std::to_string(k) + ")");
    };
    const bool exhaustive = (mode == JacobiMode::Exhaustive) || dim_ <= 128;
    if (exhaustive) {
        for (uint32_t i = 0; i < dim_; ++i)
            for (uint32_t j = i + 1; j < dim_; ++j)
                for (uint32_t k = j + 1; k < dim_; ++k) jac(i, j, k);
    } else {
        std::mt19937_64 rng(0x5eedULL);
        std::uniform_int_distribution<uint32_t> pick(0, dim_ - 1);
        for (uint32_t t = 0; t < 10000;) {
            uint32_t i = pick(rng), j = pick(rng), k = pick(rng);
            if (i == j || j == k || i == k) continue;
            jac(i, j, k);
            ++t;
        }
    }
}

void LieAlgebra::validate(JacobiMode mode) const {
    if (grading_) {
        const auto& g = *grading_;
        for (uint32_t i = 0; i < dim_; ++i)
            for (uint32_t j = i + 1; j < dim_; ++j)
                for (const auto& e : upper(i, j))
                    if (g[e.idx] != g[i] + g[j])
                        throw validation_error("LieAlgebra: bracket violates grading at (" +
                                               std::to_string(i) + "," + std::to_string(j) + ")");
    }
    check_jacobi(mode);
}

nlohmann::json LieAlgebra::to_json() const {
    nlohmann::json br = nlohmann::json::array();
    for (uint32_t i = 0; i < dim_; ++i)
        for (uint32_t j = i + 1; j < dim_; ++j)
            for (const auto& e : upper(i, j)) br.push_back({i, j, e.idx, e.val});
    nlohmann::json out{{"prime", field_.p()},
                       {"dim", dim_},
                       {"labels", labels_},
                       {"bracket", std::move(br)},
                       {"descriptor", descriptor_}};
    if (grading_) out["grading"] = *grading_;
    return out;
}

LieAlgebra LieAlgebra::from_json(const nlohmann::json& j) {
    Fp f(j.at("prime").get<uint32_t>());
    const uint32_t dim = j.at("dim").get<uint32_t>();
    std::vector<std::vector<Ent>> rows(pair_count(dim));
    for (const auto& row : j.at("bracket")) {
        const uint32_t a = row.at(0), b = row.at(1), k = row.at(2), c = row.at(3);
        if (a >= b) throw validation_error("LieAlgebra::from_json: entries must have i < j");
        if (b >= dim || k >= dim)
            throw validation_error("LieAlgebra::from_json: index out of range");
        rows[pair_rank(dim, a, b)].push_back({k, c});
    }
    Builder builder(f, dim);
    for (auto& r : rows) builder.next_pair(std::move(r));
    builder.labels(j.value("labels", std::vector<std::string>{}));
    if (j.contains("grading")) builder.grading(j.at("grading").get<std::vector<int32_t>>());
    builder.descriptor(j.value("descriptor", nlohmann::json::object()));
    return builder.finish();
}

// -------------------------------------------------------------------- fixtures

LieAlgebra sl2(const Fp& f) {
    LieAlgebra::Builder b(f, 3);
    b.next_pair({{1, 2}});                 // [h,e] = 2e
    b.next_pair({{2, f.neg(2)}});          // [h,f] = -2f
    b.next_pair({{0, 1}});                 // [e,f] = h
    b.labels({"h", "e", "f"}).grading({0, 1, -1});
    b.descriptor({{"family", "sl2"}, {"p", f.p()}});
    return b.finish();
}

LieAlgebra abelian(uint32_t n, const Fp& f) {
    LieAlgebra::Builder b(f, n);
    for (uint64_t t = 0; t < pair_count(n); ++t) b.next_pair({});
    b.descriptor({{"family", "abelian"}, {"n", n}, {"p", f.p()}});
    return b.finish();
}

LieAlgebra heisenberg(const Fp& f) {
    LieAlgebra::Builder b(f, 3);
    b.next_pair({{2, 1}}); // [e1,e2] = e3
    b.next_pair({});
    b.next_pair({});
    b.labels({"e1", "e2", "z"}).grading({1, 1, 2});
    b.descriptor({{"family", "heisenberg"}, {"p", f.p()}});
    return b.finish();
}

// ---------------------------------------------------------------- operations

LieAlgebra current(const LieAlgebra& l, const CommAlgebra& bb, uint32_t dim_cap) {
    require_same_field(l.field(), bb.field(), "current");
    const Fp& f = l.field();
    const uint32_t dl = l.dim(), db = bb.dim();
    const uint64_t dim64 = static_cast<uint64_t>(dl) * db;
    if (dim64 > dim_cap) throw capacity_error("current: dimension exceeds cap");
    const uint32_t dim = static_cast<uint32_t>(dim64);
    LieAlgebra::Builder builder(f, dim, dim_cap);
    SparseVec lb, out;
    for (uint32_t u = 0; u < dim; ++u) {
        const uint32_t l1 = u / db, b1 = u % db;
        for (uint32_t v = u + 1; v < dim; ++v) {
            const uint32_t l2 = v / db, b2 = v % db;
            out.clear();
            if (l1 != l2) {
                lb.clear();
                l.bracket_basis(l1, l2, lb);
                for (const auto& e : lb)
                    for (const auto& m : bb.mult(b1, b2))
                        out.push_back({e.idx * db + m.idx, f.mul(e.val, m.val)});
            }
            builder.next_pair(std::move(out));
        }
    }
    std::vector<std::string> labels;
    for (uint32_t x = 0; x < dl; ++x)
        for (uint32_t y = 0; y < db; ++y)
            labels.push_back(l.labels()[x] + " (x) " + bb.labels()[y]);
    builder.labels(std::move(labels));
    if (l.grading()) {
        std::vector<int32_t> g;
        for (uint32_t x = 0; x < dl; ++x)
            g.insert(g.end(), db, (*l.grading())[x]);
        builder.grading(std::move(g));
    }
    builder.descriptor({{"family", "current"},
                        {"lie", l.descriptor()},
                        {"algebra_dim", db},
                        {"p", f.p()}});
    return builder.finish();
}

LieAlgebra semidirect(const LieAlgebra& s, const LieAlgebra& m,
                      std::span<const FpMatrix> action) {
    require_same_field(s.field(), m.field(), "semidirect");
    const Fp& f = s.field();
    const uint32_t ds = s.dim(), dm = m.dim();
    if (action.size() != ds) throw validation_error("semidirect: one matrix per S basis element");
    for (const auto& a : action) {
        require_same_field(a.field(), f, "semidirect");
        if (a.rows() != dm || a.cols() != dm)
            throw validation_error("semidirect: action matrix shape mismatch");
    }
    auto apply = [&](const FpMatrix& mat, const SparseVec& v) {
        SparseVec out;
        for (const auto& e : v)
            for (uint32_t r = 0; r < dm; ++r) {
                uint32_t c = mat.at(r, e.idx);
                if (c) out.push_back({r, f.mul(c, e.val)});
            }
        normalize_sparse(out, f);
        return out;
    };
    // derivation check: rho(s)[x,y] = [rho(s)x, y] + [x, rho(s)y]
    SparseVec bx;
    for (uint32_t t = 0; t < ds; ++t)
        for (uint32_t i = 0; i < dm; ++i)
            for (uint32_t j = i + 1; j < dm; ++j) {
                bx.clear();
                m.bracket_basis(i, j, bx);
                SparseVec lhs = apply(action[t], bx);
                SparseVec rhs = m.bracket(apply(action[t], {{i, 1}}), {{j, 1}});
                for (const auto& e : m.bracket({{i, 1}}, apply(action[t], {{j, 1}})))
                    rhs.push_back(e);
                normalize_sparse(rhs, f);
                if (lhs != rhs)
                    throw validation_error("semidirect: action is not by derivations");
            }
    // representation check: rho([s,s']) = [rho(s), rho(s')]
    for (uint32_t a = 0; a < ds; ++a)
        for (uint32_t b = a + 1; b < ds; ++b) {
            FpMatrix comm = action[a].times(action[b]);
            FpMatrix ba = action[b].times(action[a]);
            std::vector<Triplet> ts;
            for (uint32_t r = 0; r < dm; ++r)
                for (uint32_t c = 0; c < dm; ++c) {
                    uint32_t v = f.sub(comm.at(r, c), ba.at(r, c));
                    if (v) ts.push_back({r, c, v});
                }
            FpMatrix lhs = FpMatrix::from_triplets(f, dm, dm, std::move(ts));
            SparseVec sb;
            s.bracket_basis(a, b, sb);
            FpMatrix rhs = FpMatrix::zeros(f, dm, dm);
            std::vector<Triplet> rs;
            for (const auto& e : sb)
                for (uint32_t r = 0; r < dm; ++r)
                    for (uint32_t c = 0; c < dm; ++c) {
                        uint32_t v = action[e.idx].at(r, c);
                        if (v) rs.push_back({r, c, f.mul(e.val, v)});
                    }
            rhs = FpMatrix::from_triplets(f, dm, dm, std::move(rs));
            if (!(lhs == rhs))
                throw validation_error("semidirect: action matrices do not represent S");
        }
    const uint32_t dim = dm + ds;
    LieAlgebra::Builder builder(f, dim);
    SparseVec out;
    for (uint32_t u = 0; u < dim; ++u)
        for (uint32_t v = u + 1; v < dim; ++v) {
            out.clear();
            if (v < dm) {
                m.bracket_basis(u, v, out);
            } else if (u >= dm) {
                SparseVec sb;
                s.bracket_basis(u - dm, v - dm, sb);
                for (const auto& e : sb) out.push_back({dm + e.idx, e.val});
            } else {
                // [m, s] = -rho(s) m
                const FpMatrix& mat = action[v - dm];
                for (uint32_t r = 0; r < dm; ++r) {
                    uint32_t c = mat.at(r, u);
                    if (c) out.push_back({r, f.neg(c)});
                }
            }
            builder.next_pair(std::move(out));
        }
    std::vector<std::string> labels;
    for (const auto& t : m.labels()) labels.push_back("m:" + t);
    for (const auto& t : s.labels()) labels.push_back("s:" + t);
    builder.labels(std::move(labels));
    builder.descriptor({{"family", "semidirect"},
                        {"acting", s.descriptor()},
                        {"module", m.descriptor()},
                        {"p", f.p()}});
    return builder.finish();
}

bool is_perfect(const LieAlgebra& l) {
    RowEliminator elim(l.field(), l.dim());
    SparseVec row;
    for (uint32_t i = 0; i < l.dim() && !elim.saturated(); ++i)
        for (uint32_t j = i + 1; j < l.dim() && !elim.saturated(); ++j) {
            const auto v = l.upper(i, j);
            if (v.empty()) continue;
            row.assign(v.begin(), v.end());
            elim.absorb(std::move(row));
        }
    return elim.saturated();
}

std::pair<LieAlgebra, FpMatrix> derived_subalgebra(const LieAlgebra& l) {
    const Fp& f = l.field();
    RowEliminator elim(f, l.dim());
    SparseVec row;
    for (uint32_t i = 0; i < l.dim(); ++i)
        for (uint32_t j = i + 1; j < l.dim(); ++j) {
            const auto v = l.upper(i, j);
            if (v.empty()) continue;
            row.assign(v.begin(), v.end());
            elim.absorb(std::move(row));
        }
    elim.reduce_full();
    const auto rows = elim.echelon_rows();
    const uint32_t d = static_cast<uint32_t>(rows.size());
    std::vector<uint32_t> pivots;
    for (const auto& r : rows) pivots.push_back(r.front().idx);
    // coordinates in the echelon basis: read off the pivot slots, verify
    auto coords = [&](const SparseVec& v) {
        std::vector<uint32_t> co(d, 0);
        for (uint32_t t = 0; t < d; ++t) {
            for (const auto& e : v)
                if (e.idx == pivots[t]) co[t] = e.val;
        }
        std::vector<uint32_t> rec(l.dim(), 0);
        for (uint32_t t = 0; t < d; ++t)
            for (const auto& e : rows[t]) rec[e.idx] = f.add(rec[e.idx], f.mul(co[t], e.val));
        for (const auto& e : v)
            if (rec[e.idx] != e.val)
                throw validation_error("derived_subalgebra: span not bracket-closed");
        uint32_t nz = 0;
        for (const auto& e : v) nz += e.val != 0;
        uint32_t rz = 0;
        for (uint32_t x : rec) rz += x != 0;
        if (nz != rz) throw validation_error("derived_subalgebra: span not bracket-closed");
        return co;
    };
    LieAlgebra::Builder builder(f, d);
    for (uint32_t a = 0; a < d; ++a)
        for (uint32_t b = a + 1; b < d; ++b) {
            SparseVec v = l.bracket(rows[a], rows[b]);
            auto co = coords(v);
            SparseVec out;
            for (uint32_t t = 0; t < d; ++t)
                if (co[t]) out.push_back({t, co[t]});
            builder.next_pair(std::move(out));
        }
    std::vector<std::string> labels;
    std::vector<int32_t> grading;
    bool homogeneous = l.grading().has_value();
    for (uint32_t t = 0; t < d; ++t) {
        if (rows[t].size() == 1 && rows[t][0].val == 1)
            labels.push_back(l.labels()[rows[t][0].idx]);
        else
            labels.push_back("b" + std::to_string(t + 1));
        if (homogeneous) {
            const auto& g = *l.grading();
            int32_t deg = g[rows[t][0].idx];
            for (const auto& e : rows[t])
                if (g[e.idx] != deg) homogeneous = false;
            grading.push_back(deg);
        }
    }
    builder.labels(std::move(labels));
    if (homogeneous) builder.grading(std::move(grading));
    builder.descriptor({{"family", "derived"}, {"of", l.descriptor()}, {"p", f.p()}});
    return {builder.finish(), FpMatrix::from_sparse_rows(f, rows, l.dim())};
}

} // namespace cartan
