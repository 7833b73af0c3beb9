#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cartan/cartan_families.hpp"
#include "cartan/comm_algebra.hpp"
#include "cartan/lie_algebra.hpp"

using namespace cartan;

namespace {
const std::vector<uint32_t> m1{1};
const std::vector<uint32_t> m2{2};
const std::vector<uint32_t> m11{1, 1};
const std::vector<uint32_t> m111{1, 1, 1};
} // namespace

TEST_CASE("fixtures") {
    Fp f(5);
    LieAlgebra s = sl2(f);
    CHECK(s.dim() == 3);
    SparseVec out;
    s.bracket_basis(1, 2, out); // [e,f] = h
    CHECK(out == SparseVec{{0, 1}});
    out.clear();
    s.bracket_basis(2, 1, out);
    CHECK(out == SparseVec{{0, 4}});

    LieAlgebra ab = abelian(4, f);
    for (uint32_t i = 0; i < 4; ++i)
        for (uint32_t j = i + 1; j < 4; ++j) CHECK(ab.upper(i, j).empty());

    LieAlgebra h = heisenberg(f);
    CHECK(h.upper(0, 2).empty()); // [e1, z] = 0
    out.clear();
    h.bracket_basis(0, 1, out);
    CHECK(out == SparseVec{{2, 1}});
}

TEST_CASE("witt algebra structure") {
    Fp f(5);
    AModuleLie w = witt(1, m1, f);
    CHECK(w.lie.dim() == 5);
    REQUIRE(w.lie.grading().has_value());
    CHECK(*w.lie.grading() == std::vector<int32_t>{-1, 0, 1, 2, 3});
    // [x^(1) d, d] = -d   (basis 1 = x^(1) d, basis 0 = d)
    SparseVec out;
    w.lie.bracket_basis(1, 0, out);
    CHECK(out == SparseVec{{0, 4}});

    CHECK(witt(2, m11, f).lie.dim() == 50);          // n p^{sum m}
    CHECK(witt(1, m2, f).lie.dim() == 25);
    Fp f7(7);
    CHECK(witt(2, m11, f7).lie.dim() == 98);
}

TEST_CASE("witt satisfies [D, aD] = D(a) D on the A-basis") {
    // the bracket formula gives [aD, D] = -D(a) D, i.e. [D, aD] = D(a) D;
    // consistent with [x^(1) d, d] = -d above
    Fp f(5);
    AModuleLie w = witt(2, m11, f);
    const uint32_t da = w.algebra.dim();
    for (uint32_t i = 0; i < w.a_rank; ++i) {
        SparseOp di = w.anchor_of(w.a_basis[i]);
        for (uint32_t a = 0; a < da; ++a) {
            SparseVec lhs = w.lie.bracket(w.a_basis[i], w.act({{a, 1}}, w.a_basis[i]));
            SparseVec rhs = w.act(di.apply({{a, 1}}, f), w.a_basis[i]);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("jacobi validation modes") {
    Fp f(5);
    // dim 50 is within the exhaustive band, runs at construction
    CHECK_NOTHROW(witt(2, m11, f).lie.check_jacobi(LieAlgebra::JacobiMode::Exhaustive));
    // a broken table fails: [e1,e2]=e3, [e1,e3]=e1 violates Jacobi
    LieAlgebra::Builder b(f, 3);
    b.next_pair({{2, 1}});
    b.next_pair({{0, 1}});
    b.next_pair({{1, 1}});
    CHECK_THROWS_AS(b.finish(), validation_error);
}

TEST_CASE("hamiltonian algebra") {
    Fp f(5);
    LieAlgebra h = hamiltonian(m11, f);
    CHECK(h.dim() == 23); // p^2 - 2
    REQUIRE(h.grading().has_value());
    CHECK(is_perfect(h));
    // images of x1, x2 bracket to the (removed) constant: in the quotient
    // {x1, x2} = 0. x1 has exponents (1,0) -> quotient index 0; x2 -> ...
    // find the two degree -1 elements and check their bracket vanishes
    std::vector<uint32_t> deg_m1;
    for (uint32_t i = 0; i < h.dim(); ++i)
        if ((*h.grading())[i] == -1) deg_m1.push_back(i);
    REQUIRE(deg_m1.size() == 2);
    CHECK(h.upper(deg_m1[0], deg_m1[1]).empty());
}

TEST_CASE("contact algebra") {
    Fp f(5);
    LieAlgebra k = contact(1, m111, f);
    CHECK(k.dim() == 125); // no derived-subalgebra drop: 3 != -3 mod 5
    CHECK(is_perfect(k));
    REQUIRE(k.grading().has_value());
    CHECK_THROWS_AS(contact(1, m11, f), validation_error); // wrong tuple length
}

TEST_CASE("current algebras") {
    Fp f(5);
    LieAlgebra s = sl2(f);
    // L (x) K = L
    LieAlgebra trivial = current(s, ground_field(f));
    CHECK(trivial.dim() == 3);
    for (uint32_t i = 0; i < 3; ++i)
        for (uint32_t j = i + 1; j < 3; ++j) {
            SparseVec a, b;
            s.bracket_basis(i, j, a);
            trivial.bracket_basis(i, j, b);
            CHECK(a == b);
        }
    CHECK(current(s, truncated_poly(2, f)).dim() == 6);
    // dim 15 current algebra passes exhaustive Jacobi at construction
    AModuleLie w = witt(1, m1, f);
    CHECK_NOTHROW(current(w.lie, unit_plus_nil(2, f)).check_jacobi(
        LieAlgebra::JacobiMode::Exhaustive));
    CHECK_THROWS_AS(current(s, ground_field(Fp(7))), field_mismatch);
}

TEST_CASE("current of perfect by unital is perfect") {
    Fp f(5);
    AModuleLie w = witt(1, m1, f);
    for (const CommAlgebra& b : {truncated_poly(2, f), unit_plus_nil(2, f)}) {
        CHECK(is_perfect(current(sl2(f), b)));
        CHECK(is_perfect(current(w.lie, b)));
    }
}

TEST_CASE("semidirect sums") {
    Fp f(5);
    LieAlgebra m = abelian(2, f);
    LieAlgebra s = abelian(1, f);
    // trivial action: direct sum
    std::vector<FpMatrix> rho0{FpMatrix::zeros(f, 2, 2)};
    LieAlgebra dsum = semidirect(s, m, rho0);
    CHECK(dsum.dim() == 3);
    CHECK(dsum.upper(0, 2).empty());
    // identity action: [s, m_i] = m_i
    std::vector<FpMatrix> rho1{FpMatrix::identity(f, 2)};
    LieAlgebra solv = semidirect(s, m, rho1);
    SparseVec out;
    solv.bracket_basis(2, 0, out); // s before m in bracket = +m
    CHECK(out == SparseVec{{0, 1}});

    // non-derivation action on heisenberg is rejected
    LieAlgebra h = heisenberg(f);
    std::vector<FpMatrix> bad{FpMatrix::from_rows(f, {{1, 0, 0}, {0, 0, 0}, {0, 0, 0}})};
    CHECK_THROWS_AS(semidirect(s, h, bad), validation_error);
    // non-representation: two commuting generators acting by non-commuting maps
    LieAlgebra s2 = abelian(2, f);
    std::vector<FpMatrix> notrep{FpMatrix::from_rows(f, {{0, 1}, {0, 0}}),
                                 FpMatrix::from_rows(f, {{0, 0}, {1, 0}})};
    CHECK_THROWS_AS(semidirect(s2, m, notrep), validation_error);
}

TEST_CASE("perfectness") {
    Fp f(5);
    CHECK(is_perfect(witt(1, m1, f).lie));
    CHECK_FALSE(is_perfect(abelian(3, f)));
    CHECK(is_perfect(sl2(Fp(7))));
    CHECK_FALSE(is_perfect(heisenberg(f)));
}

TEST_CASE("derived subalgebra") {
    Fp f(5);
    auto [dh, basis] = derived_subalgebra(heisenberg(f));
    CHECK(dh.dim() == 1); // span of e3
    CHECK(basis.at(0, 2) == 1);
    auto [ds, basis2] = derived_subalgebra(sl2(f));
    CHECK(ds.dim() == 3);
}

TEST_CASE("grading is respected by constructors") {
    Fp f(5);
    for (const LieAlgebra& l : {witt(1, m2, f).lie, hamiltonian(m11, f), contact(1, m111, f)}) {
        REQUIRE(l.grading().has_value());
        const auto& g = *l.grading();
        for (uint32_t i = 0; i < l.dim(); ++i)
            for (uint32_t j = i + 1; j < l.dim(); ++j)
                for (const auto& e : l.upper(i, j)) CHECK(g[e.idx] == g[i] + g[j]);
    }
}

TEST_CASE("json round trip") {
    Fp f(5);
    LieAlgebra h = heisenberg(f);
    LieAlgebra back = LieAlgebra::from_json(h.to_json());
    CHECK(back.dim() == h.dim());
    CHECK(back.labels() == h.labels());
    CHECK(back.grading() == h.grading());
    for (uint32_t i = 0; i < 3; ++i)
        for (uint32_t j = i + 1; j < 3; ++j) {
            SparseVec a, b;
            h.bracket_basis(i, j, a);
            back.bracket_basis(i, j, b);
            CHECK(a == b);
        }
    // entries with i >= j are rejected
    nlohmann::json bad = h.to_json();
    bad["bracket"].push_back({2, 1, 0, 1});
    CHECK_THROWS_AS(LieAlgebra::from_json(bad), validation_error);
}

TEST_CASE("amodule validation") {
    Fp f(5);
    AModuleLie w = witt(1, m1, f);
    CHECK(w.a_rank == 1);
    CHECK(w.freeness_matrix().rank() == w.lie.dim());
    // breaking the action on the generator breaks validation
    auto broken_action = w.action;
    broken_action[1].col[0] = {{0, 1}}; // x^(1) . d redirected to d
    CHECK_THROWS_AS(AModuleLie::make(w.lie, w.algebra, 1, w.a_basis, broken_action, w.anchor),
                    validation_error);
}

TEST_CASE("capacity errors") {
    Fp f(5);
    const std::vector<uint32_t> m22{2, 2};
    CHECK_THROWS_AS(witt(2, m22, f, 100), capacity_error);
    CHECK_THROWS_AS(current(witt(2, m11, f).lie, truncated_poly(5, f), 100), capacity_error);
    const std::vector<uint32_t> big{3, 3, 3};
    CHECK_THROWS_AS(contact(1, big, f, 1000), capacity_error);
}
