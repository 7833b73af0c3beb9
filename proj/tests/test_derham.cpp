#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cartan/derham.hpp"
#include "cartan/invariant_forms.hpp"

using namespace cartan;

namespace {
const std::vector<uint32_t> m1{1};
const std::vector<uint32_t> m2{2};
const std::vector<uint32_t> m11{1, 1};

AModuleLie counterexample(uint32_t p) {
    Fp f(p);
    CommAlgebra a = truncated_poly(p, f);
    std::vector<Triplet> ts;
    for (uint32_t j = 1; j < p; ++j) ts.push_back({j, j, j});
    return free_rank1_module(a, FpMatrix::from_triplets(f, p, p, std::move(ts)));
}

AModuleLie trivial_amodule(uint32_t p) {
    // A = K, L = 0
    Fp f(p);
    LieAlgebra zero = abelian(0, f);
    return AModuleLie::make(zero, ground_field(f), 0, {}, {SparseOp{0, 0, {}}}, {});
}
} // namespace

TEST_CASE("complex shape and the unit is killed") {
    Fp f(5);
    AModuleLie w = witt(1, m1, f);
    ACochainComplex c = build_complex(w);
    CHECK(c.a_rank == 1);
    CHECK(c.d1.rows() == 0); // r(r-1)/2 = 0, so C^2 = 0
    // d0(1) = 0
    for (uint32_t r = 0; r < c.d0.rows(); ++r) CHECK(c.d0.at(r, 0) == 0);
    auto dims = cohomology_dims(c);
    CHECK(dims.h0 == 1);
    CHECK(dims.h1 == 1);
}

TEST_CASE("d1 after d0 vanishes for rank 2") {
    Fp f(5);
    ACochainComplex c = build_complex(witt(2, m11, f));
    CHECK(c.d1.rows() == c.dim_a);      // one wedge pair, expanded over A
    CHECK(c.d1.times(c.d0).nnz() == 0); // also enforced inside build_complex
    auto dims = cohomology_dims(c);
    CHECK(dims.h0 == 1); // only constants are killed by all derivations
    CHECK(dims.h1 == 2);
}

TEST_CASE("degenerate zero module") {
    auto la = trivial_amodule(5);
    auto dims = cohomology_dims(build_complex(la));
    CHECK(dims.h0 == 1);
    CHECK(dims.h1 == 0);
    CHECK(hom_condition(la)); // vacuously
}

TEST_CASE("compatibility violation is rejected") {
    Fp f(5);
    AModuleLie w = witt(1, m1, f);
    AModuleLie broken = w;
    // corrupt the anchor of the generator so Lie-Rinehart fails at build time
    broken.anchor[0].col[1] = {{3, 1}};
    CHECK_THROWS_AS(build_complex(broken), validation_error);
}

TEST_CASE("skryabin consequence") {
    for (uint32_t p : {5u, 7u}) {
        Fp f(p);
        auto rep = skryabin_check(witt(1, m1, f));
        CHECK(rep.a_rank == 1);
        CHECK(rep.pass);
        CHECK(rep.dim_h2 == rep.h1_derham);
        CHECK(rep.dim_h2 == 1);
    }
    {
        Fp f(5);
        auto rep = skryabin_check(witt(1, m2, f));
        CHECK(rep.pass);
        CHECK(rep.dim_h2 == 1);
    }
    {
        Fp f(5);
        auto rep = skryabin_check(witt(2, m11, f));
        CHECK(rep.a_rank == 2);
        CHECK(rep.pass);
        CHECK(rep.dim_h2 == 0);
    }
    // precondition: the hom condition must hold
    CHECK_THROWS_AS(skryabin_check(counterexample(5)), precondition_error);
}

TEST_CASE("tensor isomorphism dimensions") {
    Fp f(5);
    AModuleLie w = witt(1, m1, f);
    {
        auto rep = lemma_check(w, truncated_poly(2, f));
        CHECK(rep.pass);
        CHECK(rep.small.h0 == 1);
        CHECK(rep.small.h1 == 1);
        CHECK(rep.big.h0 == 2);
        CHECK(rep.big.h1 == 2);
    }
    {
        auto rep = lemma_check(w, unit_plus_nil(2, f));
        CHECK(rep.pass);
        CHECK(rep.big.h1 == 3);
    }
    {
        auto rep = lemma_check(w, ground_field(f));
        CHECK(rep.pass);
        CHECK(rep.big.h0 == rep.small.h0);
    }
    // a rank-2 instance over a 2-dimensional algebra stays within reach
    {
        AModuleLie w2 = witt(2, m11, f);
        auto rep = lemma_check(w2, truncated_poly(2, f));
        CHECK(rep.pass);
    }
}

TEST_CASE("derham reports serialize to json") {
    Fp f(5);
    auto rep = skryabin_check(witt(1, m1, f));
    CHECK(rep.to_json().at("status") == "pass");
    CHECK(rep.to_json().at("lhs") == 1);
    auto lem = lemma_check(witt(1, m1, f), truncated_poly(2, f));
    CHECK(lem.to_json().at("rhs") == nlohmann::json({2, 2}));
}
