#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cartan/fp.hpp"
#include "cartan/fp_matrix.hpp"

using namespace cartan;

TEST_CASE("field construction rejects bad moduli") {
    CHECK_THROWS_AS(Fp(4), validation_error);
    CHECK_THROWS_AS(Fp(2), validation_error);
    CHECK_THROWS_AS(Fp(3), validation_error);
    CHECK_THROWS_AS(Fp(1), validation_error);
    CHECK_NOTHROW(Fp(5));
    CHECK_NOTHROW(Fp(101));
}

TEST_CASE("field axioms on samples") {
    for (uint32_t p : {5u, 7u, 11u}) {
        Fp f(p);
        for (uint32_t a = 1; a < p; ++a) {
            CHECK(f.mul(a, f.inv(a)) == 1);
            CHECK(f.add(a, f.neg(a)) == 0);
        }
        CHECK_THROWS_AS(f.inv(0), validation_error);
    }
}

TEST_CASE("lucas binomials") {
    Fp f5(5);
    CHECK(binom_mod(2, 1, f5) == 2);
    CHECK(binom_mod(5, 1, f5) == 0);  // 5 = 0 mod 5
    CHECK(binom_mod(6, 3, f5) == 0);  // 20 = 0 mod 5
    CHECK(binom_mod(4, 2, f5) == 1);  // 6 = 1 mod 5
    CHECK(binom_mod(3, 5, f5) == 0);  // k > n
    Fp f7(7);
    CHECK(binom_mod(10, 3, f7) == binom_mod(10, 7, f7)); // symmetry digitwise
}

TEST_CASE("rank examples") {
    Fp f5(5), f7(7);
    CHECK(FpMatrix::zeros(f5, 3, 3).rank() == 0);
    CHECK(FpMatrix::identity(f7, 4).rank() == 4);
    CHECK(FpMatrix::from_rows(f5, {{1, 2}, {2, 4}}).rank() == 1);
}

TEST_CASE("kernel examples") {
    Fp f5(5);
    CHECK(FpMatrix::identity(f5, 3).kernel_basis().dim() == 0);
    CHECK(FpMatrix::zeros(f5, 2, 3).kernel_basis().dim() == 3);
    auto k = FpMatrix::from_rows(f5, {{1, 2}, {2, 4}}).kernel_basis();
    REQUIRE(k.dim() == 1);
    // spanned by (3,1) up to scalar: v1 + 2 v2 = 0 and cross product vanishes
    const auto v = k.basis_rows().row(0);
    uint32_t v0 = k.basis_rows().at(0, 0), v1 = k.basis_rows().at(0, 1);
    CHECK(f5.add(v0, f5.mul(2, v1)) == 0);
    CHECK((v0 != 0 || v1 != 0));
    CHECK(f5.sub(f5.mul(v0, 1), f5.mul(v1, 3)) == 0);
}

TEST_CASE("quotient_dim examples and errors") {
    Fp f5(5);
    CHECK(quotient_dim(5, FpMatrix::zeros(f5, 2, 5)) == 5);
    CHECK(quotient_dim(4, FpMatrix::identity(f5, 4)) == 0);
    CHECK(quotient_dim(3, FpMatrix::from_rows(f5, {{1, 2, 0}, {2, 4, 0}})) == 2);
    CHECK_THROWS_AS(quotient_dim(4, FpMatrix::zeros(f5, 2, 5)), validation_error);
}

TEST_CASE("field mismatch is rejected") {
    Fp f5(5), f7(7);
    auto a = FpMatrix::identity(f5, 2);
    auto b = FpMatrix::identity(f7, 2);
    CHECK_THROWS_AS(a.times(b), field_mismatch);
}

TEST_CASE("triplet duplicates merge additively") {
    Fp f5(5);
    auto m = FpMatrix::from_triplets(f5, 2, 2, {{0, 0, 3}, {0, 0, 4}, {1, 1, 5}});
    CHECK(m.at(0, 0) == 2);
    CHECK(m.at(1, 1) == 0);
    CHECK(m.nnz() == 1);
}

namespace {

FpMatrix random_sparse(const Fp& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<uint32_t> dim(1, 40);
    const uint32_t rows = dim(rng), cols = dim(rng);
    std::uniform_int_distribution<uint32_t> val(1, f.p() - 1);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<Triplet> ts;
    for (uint32_t r = 0; r < rows; ++r)
        for (uint32_t c = 0; c < cols; ++c)
            if (coin(rng) < 0.15) ts.push_back({r, c, val(rng)});
    return FpMatrix::from_triplets(f, rows, cols, std::move(ts));
}

} // namespace

TEST_CASE("rank-nullity, shuffle and scale invariance, rref idempotence") {
    for (uint32_t p : {5u, 7u}) {
        Fp f(p);
        std::mt19937_64 rng(0xfeedULL + p);
        for (int iter = 0; iter < 1000; ++iter) {
            FpMatrix m = random_sparse(f, rng);
            const uint32_t r = m.rank();
            CHECK(r + m.kernel_basis().dim() == m.cols());

            // row shuffle + row scaling leaves the rank alone
            std::vector<SparseVec> rows;
            for (uint32_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
            std::shuffle(rows.begin(), rows.end(), rng);
            std::uniform_int_distribution<uint32_t> val(1, p - 1);
            for (auto& row : rows) {
                const uint32_t s = val(rng);
                for (auto& e : row) e.val = f.mul(e.val, s);
            }
            CHECK(FpMatrix::from_sparse_rows(f, rows, m.cols()).rank() == r);

            if (iter % 10 == 0) {
                FpMatrix r1 = m.rref();
                CHECK(r1.rref() == r1);
            }
        }
    }
}

TEST_CASE("kernel vectors are actual solutions") {
    Fp f(7);
    std::mt19937_64 rng(0xabcULL);
    for (int iter = 0; iter < 50; ++iter) {
        FpMatrix m = random_sparse(f, rng);
        auto ker = m.kernel_basis();
        for (uint32_t b = 0; b < ker.dim(); ++b) {
            const auto v = ker.basis_rows().row(b);
            for (uint32_t r = 0; r < m.rows(); ++r) {
                uint32_t acc = 0;
                for (const auto& e : v) acc = f.add(acc, f.mul(e.val, m.at(r, e.idx)));
                CHECK(acc == 0);
            }
        }
    }
}

TEST_CASE("solve_linear consistent and inconsistent") {
    Fp f(5);
    // x + 2y = 3, 2x + 4y = 2 is inconsistent (2*3 = 1 != 2 mod 5)
    std::vector<std::pair<SparseVec, uint32_t>> eqs{
        {{{0, 1}, {1, 2}}, 3},
        {{{0, 2}, {1, 4}}, 2},
    };
    auto bad = solve_linear(f, 2, eqs);
    CHECK_FALSE(bad.consistent);
    CHECK(bad.rank_augmented - bad.rank_a == 1);
    REQUIRE(!bad.certificate.empty());
    // certificate kills the lhs and not the rhs
    uint32_t dot0 = 0, dot1 = 0, dotb = 0;
    for (const auto& e : bad.certificate) {
        dot0 = f.add(dot0, f.mul(e.val, e.idx == 0 ? 1 : 2));
        dot1 = f.add(dot1, f.mul(e.val, e.idx == 0 ? 2 : 4));
        dotb = f.add(dotb, f.mul(e.val, e.idx == 0 ? 3 : 2));
    }
    CHECK(dot0 == 0);
    CHECK(dot1 == 0);
    CHECK(dotb != 0);

    eqs[1].second = 6; // now consistent (second row is twice the first)
    auto good = solve_linear(f, 2, eqs);
    REQUIRE(good.consistent);
    CHECK(f.add(good.particular[0], f.mul(2, good.particular[1])) == 3);
}
