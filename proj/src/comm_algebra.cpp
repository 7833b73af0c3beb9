#include "cartan/comm_algebra.hpp"

#include <algorithm>
#include <random>

#include "cartan/divided_powers.hpp"

namespace cartan {

namespace {

void axpy_into(std::vector<uint32_t>& acc, const SparseVec& v, uint32_t scale, const Fp& f) {
    for (const auto& e : v) acc[e.idx] = f.add(acc[e.idx], f.mul(scale, e.val));
}

SparseVec gather(std::vector<uint32_t>& acc) {
    SparseVec out;
    for (uint32_t i = 0; i < acc.size(); ++i) {
        if (acc[i]) {
            out.push_back({i, acc[i]});
            acc[i] = 0;
        }
    }
    return out;
}

} // namespace

SparseVec CommAlgebra::mulvec(const SparseVec& x, const SparseVec& y) const {
    std::vector<uint32_t> acc(dim_, 0);
    for (const auto& xe : x)
        for (const auto& ye : y)
            axpy_into(acc, mult(xe.idx, ye.idx), field_.mul(xe.val, ye.val), field_);
    return gather(acc);
}

FpMatrix CommAlgebra::mult_matrix(const SparseVec& a) const {
    std::vector<Triplet> ts;
    for (uint32_t j = 0; j < dim_; ++j) {
        SparseVec ej{{j, 1}};
        for (const auto& e : mulvec(a, ej)) ts.push_back({e.idx, j, e.val});
    }
    return FpMatrix::from_triplets(field_, dim_, dim_, std::move(ts));
}

bool CommAlgebra::structure_equal(const CommAlgebra& o) const {
    return field_ == o.field_ && dim_ == o.dim_ && unit_ == o.unit_ && mult_ == o.mult_;
}

CommAlgebra CommAlgebra::make(const Fp& f, uint32_t dim, std::vector<std::string> labels,
                              std::vector<uint32_t> unit, MultTable mult) {
    CommAlgebra a(f);
    a.dim_ = dim;
    if (labels.empty()) {
        for (uint32_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i + 1));
    }
    if (labels.size() != dim || unit.size() != dim ||
        mult.size() != static_cast<size_t>(dim) * dim)
        throw validation_error("CommAlgebra: table sizes inconsistent with dim");
    for (auto& u : unit) u %= f.p();
    for (auto& v : mult) normalize_sparse(v, f);
    a.labels_ = std::move(labels);
    a.unit_ = std::move(unit);
    a.mult_ = std::move(mult);
    a.validate();
    return a;
}

void CommAlgebra::validate() const {
    for (uint32_t i = 0; i < dim_; ++i)
        for (uint32_t j = i; j < dim_; ++j)
            if (mult(i, j) != mult(j, i))
                throw validation_error("CommAlgebra: commutativity fails at (" +
                                       std::to_string(i) + "," + std::to_string(j) + ")");
    SparseVec one;
    for (uint32_t i = 0; i < dim_; ++i)
        if (unit_[i]) one.push_back({i, unit_[i]});
    for (uint32_t i = 0; i < dim_; ++i) {
        SparseVec ei{{i, 1}};
        if (mulvec(one, ei) != ei)
            throw validation_error("CommAlgebra: unit law fails at basis " + std::to_string(i));
    }
    auto check_assoc = [&](uint32_t i, uint32_t j, uint32_t k) {
        SparseVec ek{{k, 1}}, ei{{i, 1}};
        if (mulvec(mult(i, j), ek) != mulvec(ei, mult(j, k)))
            throw validation_error("CommAlgebra: associativity fails at (" + std::to_string(i) +
                                   "," + std::to_string(j) + "," + std::to_string(k) + ")");
    };
    if (dim_ <= 64) {
        for (uint32_t i = 0; i < dim_; ++i)
            for (uint32_t j = 0; j < dim_; ++j)
                for (uint32_t k = 0; k < dim_; ++k) check_assoc(i, j, k);
    } else {
        std::mt19937_64 rng(0x5eedULL);
        std::uniform_int_distribution<uint32_t> pick(0, dim_ - 1);
        for (uint32_t t = 0; t < 20000; ++t) check_assoc(pick(rng), pick(rng), pick(rng));
    }
}

nlohmann::json CommAlgebra::to_json() const {
    nlohmann::json mult = nlohmann::json::array();
    for (uint32_t i = 0; i < dim_; ++i)
        for (uint32_t j = i; j < dim_; ++j)
            for (const auto& e : this->mult(i, j))
                mult.push_back({i, j, e.idx, e.val});
    return {{"prime", field_.p()},
            {"dim", dim_},
            {"labels", labels_},
            {"unit", unit_},
            {"mult", std::move(mult)}};
}

CommAlgebra CommAlgebra::from_json(const nlohmann::json& j) {
    Fp f(j.at("prime").get<uint32_t>());
    const auto dim = j.at("dim").get<uint32_t>();
    MultTable table(static_cast<size_t>(dim) * dim);
    for (const auto& row : j.at("mult")) {
        const uint32_t i = row.at(0), jj = row.at(1), k = row.at(2), c = row.at(3);
        if (i >= dim || jj >= dim || k >= dim)
            throw validation_error("CommAlgebra::from_json: index out of range");
        table[size_t(i) * dim + jj].push_back({k, c});
        if (i != jj) table[size_t(jj) * dim + i].push_back({k, c});
    }
    return make(f, dim, j.value("labels", std::vector<std::string>{}),
                j.at("unit").get<std::vector<uint32_t>>(), std::move(table));
}

// ------------------------------------------------------------- constructors

CommAlgebra ground_field(const Fp& f) {
    CommAlgebra::MultTable t(1);
    t[0] = {{0, 1}};
    return CommAlgebra::make(f, 1, {"1"}, {1}, std::move(t));
}

CommAlgebra divided_powers(uint32_t n, std::span<const uint32_t> m, const Fp& f,
                           uint32_t dim_cap) {
    DividedPowers dp(n, {m.begin(), m.end()}, f, dim_cap);
    const uint32_t d = dp.dim();
    CommAlgebra::MultTable table(static_cast<size_t>(d) * d);
    std::vector<std::string> labels;
    for (uint32_t i = 0; i < d; ++i) labels.push_back(dp.label(i));
    for (uint32_t i = 0; i < d; ++i)
        for (uint32_t j = 0; j < d; ++j) {
            auto [c, k] = dp.product(i, j);
            if (c) table[size_t(i) * d + j] = {{k, c}};
        }
    std::vector<uint32_t> unit(d, 0);
    unit[0] = 1;
    return CommAlgebra::make(f, d, std::move(labels), std::move(unit), std::move(table));
}

CommAlgebra truncated_poly(uint32_t n, const Fp& f) {
    if (n == 0) throw validation_error("truncated_poly: n must be >= 1");
    CommAlgebra::MultTable table(static_cast<size_t>(n) * n);
    std::vector<std::string> labels;
    for (uint32_t i = 0; i < n; ++i) {
        labels.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
        for (uint32_t j = 0; j < n; ++j)
            if (i + j < n) table[size_t(i) * n + j] = {{i + j, 1}};
    }
    std::vector<uint32_t> unit(n, 0);
    unit[0] = 1;
    return CommAlgebra::make(f, n, std::move(labels), std::move(unit), std::move(table));
}

CommAlgebra unit_plus_nil(uint32_t k, const Fp& f) {
    const uint32_t d = k + 1;
    CommAlgebra::MultTable table(static_cast<size_t>(d) * d);
    std::vector<std::string> labels{"1"};
    for (uint32_t i = 1; i < d; ++i) labels.push_back("n" + std::to_string(i));
    for (uint32_t i = 0; i < d; ++i) {
        table[i] = {{i, 1}};              // 1 * e_i
        table[size_t(i) * d] = {{i, 1}};  // e_i * 1
    }
    std::vector<uint32_t> unit(d, 0);
    unit[0] = 1;
    return CommAlgebra::make(f, d, std::move(labels), std::move(unit), std::move(table));
}

CommAlgebra tensor(const CommAlgebra& a, const CommAlgebra& b, uint32_t dim_cap) {
    require_same_field(a.field(), b.field(), "tensor");
    const uint64_t d64 = static_cast<uint64_t>(a.dim()) * b.dim();
    if (d64 > dim_cap) throw capacity_error("tensor: product dimension exceeds cap");
    const uint32_t da = a.dim(), db = b.dim(), d = static_cast<uint32_t>(d64);
    auto ix = [db](uint32_t x, uint32_t y) { return x * db + y; };
    CommAlgebra::MultTable table(static_cast<size_t>(d) * d);
    for (uint32_t a1 = 0; a1 < da; ++a1)
        for (uint32_t b1 = 0; b1 < db; ++b1)
            for (uint32_t a2 = 0; a2 < da; ++a2)
                for (uint32_t b2 = 0; b2 < db; ++b2) {
                    SparseVec out;
                    for (const auto& ea : a.mult(a1, a2))
                        for (const auto& eb : b.mult(b1, b2))
                            out.push_back({ix(ea.idx, eb.idx),
                                           a.field().mul(ea.val, eb.val)});
                    normalize_sparse(out, a.field());
                    table[size_t(ix(a1, b1)) * d + ix(a2, b2)] = std::move(out);
                }
    std::vector<std::string> labels;
    for (uint32_t x = 0; x < da; ++x)
        for (uint32_t y = 0; y < db; ++y)
            labels.push_back(a.labels()[x] + " (x) " + b.labels()[y]);
    std::vector<uint32_t> unit(d, 0);
    for (uint32_t x = 0; x < da; ++x)
        for (uint32_t y = 0; y < db; ++y)
            if (a.unit()[x] && b.unit()[y])
                unit[ix(x, y)] = a.field().mul(a.unit()[x], b.unit()[y]);
    return CommAlgebra::make(a.field(), d, std::move(labels), std::move(unit), std::move(table));
}

DerivationBasis derivations(const CommAlgebra& a) {
    const Fp& f = a.field();
    const uint32_t d = a.dim();
    // unknowns x[r*d + b]: D(e_b) = sum_r x[r,b] e_r
    auto un = [d](uint32_t r, uint32_t b) { return r * d + b; };
    RowEliminator elim(f, d * d);
    SparseVec row;
    for (uint32_t i = 0; i < d; ++i)
        for (uint32_t j = i; j < d; ++j)
            for (uint32_t r = 0; r < d; ++r) {
                row.clear();
                for (const auto& e : a.mult(i, j)) row.push_back({un(r, e.idx), e.val});
                for (uint32_t b = 0; b < d; ++b) {
                    uint32_t c1 = 0, c2 = 0;
                    for (const auto& e : a.mult(b, j))
                        if (e.idx == r) c1 = e.val;
                    for (const auto& e : a.mult(i, b))
                        if (e.idx == r) c2 = e.val;
                    if (c1) row.push_back({un(b, i), f.neg(c1)});
                    if (c2) row.push_back({un(b, j), f.neg(c2)});
                }
                normalize_sparse(row, f);
                if (!row.empty()) elim.absorb(row);
            }
    DerivationBasis basis;
    for (const auto& v : elim.kernel()) {
        std::vector<Triplet> ts;
        for (const auto& e : v) ts.push_back({e.idx / d, e.idx % d, e.val});
        basis.matrices.push_back(FpMatrix::from_triplets(f, d, d, std::move(ts)));
    }
    return basis;
}

} // namespace cartan
