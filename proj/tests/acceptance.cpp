// Acceptance suite: one line per criterion, exact integer equality
// throughout. Exit code = number of failed (non-skipped) criteria.
//
// The long-running contact positive case (criterion 9) is gated: pass
// --stretch or set CARTAN_STRETCH=1 to run it.

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <random>
#include <vector>

#include "cartan/cartan_families.hpp"
#include "cartan/ce_homology.hpp"
#include "cartan/cyclic.hpp"
#include "cartan/deform.hpp"
#include "cartan/derham.hpp"
#include "cartan/invariant_forms.hpp"
#include "cartan/kaehler.hpp"

using namespace cartan;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << name;
    if (!detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << std::endl;
    if (!pass) ++failures;
}

void skip(int id, const std::string& name, const std::string& why) {
    std::cout << "SKIP  criterion " << id << ": " << name << "  [" << why << "]" << std::endl;
}

template <typename F>
void criterion(int id, const std::string& name, F&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    report(id, name, pass, detail + (detail.empty() ? "" : ", ") + std::to_string(ms) + " ms");
}

const std::vector<std::pair<uint32_t, std::vector<uint32_t>>>& witt_params() {
    static const std::vector<std::pair<uint32_t, std::vector<uint32_t>>> v{
        {1, {1}}, {1, {2}}, {2, {1, 1}}};
    return v;
}

std::vector<LieAlgebra> duality_fleet() {
    std::vector<LieAlgebra> fleet;
    Fp f5(5), f7(7);
    fleet.push_back(abelian(3, f5));
    fleet.push_back(heisenberg(f5));
    fleet.push_back(sl2(f5));
    fleet.push_back(sl2(f7));
    for (const auto& [n, m] : witt_params()) fleet.push_back(witt(n, m, f5).lie);
    const std::vector<uint32_t> m11{1, 1};
    fleet.push_back(hamiltonian(m11, f5));
    const std::vector<uint32_t> m111{1, 1, 1};
    fleet.push_back(contact(1, m111, f5));
    return fleet;
}

} // namespace

int main(int argc, char** argv) {
    bool stretch = std::getenv("CARTAN_STRETCH") != nullptr;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--stretch") == 0) stretch = true;

    criterion(1, "invariant forms vanish on W_n(m) over F_5 and F_7", [](std::string& detail) {
        bool ok = true;
        for (uint32_t p : {5u, 7u}) {
            Fp f(p);
            for (const auto& [n, m] : witt_params()) {
                const uint32_t dim = invariant_forms(witt(n, m, f).lie, true).dimension;
                if (dim != 0) {
                    detail += "W(p=" + std::to_string(p) + ") dim=" + std::to_string(dim) + " ";
                    ok = false;
                }
            }
        }
        return ok;
    });

    criterion(2, "coinvariant duality across the fleet", [](std::string& detail) {
        bool ok = true;
        for (const auto& l : duality_fleet()) {
            const uint32_t forms = invariant_forms(l, true).dimension;
            const uint32_t coinv = sym_coinvariants_dim(l);
            if (forms != coinv) {
                detail += l.descriptor().value("family", "?") + ": " + std::to_string(forms) +
                          " vs " + std::to_string(coinv) + " ";
                ok = false;
            }
        }
        return ok;
    });

    criterion(3, "HC1 values and the Omega^1/dA agreement", [](std::string& detail) {
        bool ok = true;
        for (uint32_t p : {5u, 7u}) {
            Fp f(p);
            if (hc1(truncated_poly(p, f)) != 1) {
                detail += "hc1(K[x]/x^p) p=" + std::to_string(p) + " ";
                ok = false;
            }
        }
        Fp f5(5);
        for (uint32_t k : {1u, 2u, 3u}) {
            if (hc1(unit_plus_nil(k, f5)) != k * (k - 1) / 2) {
                detail += "hc1(K1+N_" + std::to_string(k) + ") ";
                ok = false;
            }
        }
        for (uint32_t p : {5u, 7u}) {
            Fp f(p);
            const uint32_t m1[] = {1};
            std::vector<CommAlgebra> fleet;
            fleet.push_back(ground_field(f));
            fleet.push_back(truncated_poly(2, f));
            fleet.push_back(truncated_poly(3, f));
            fleet.push_back(truncated_poly(p, f));
            fleet.push_back(unit_plus_nil(1, f));
            fleet.push_back(unit_plus_nil(2, f));
            fleet.push_back(unit_plus_nil(3, f));
            fleet.push_back(divided_powers(1, m1, f));
            fleet.push_back(tensor(truncated_poly(2, f), unit_plus_nil(1, f)));
            for (const auto& a : fleet)
                if (hc1(a) != kaehler_omega1(a).dim_quotient) {
                    detail += "route disagreement at dim " + std::to_string(a.dim()) + " ";
                    ok = false;
                }
        }
        return ok;
    });

    criterion(4, "current-algebra H2 formula on the (L, B) grid", [](std::string& detail) {
        bool ok = true;
        const std::vector<uint32_t> m1{1};
        for (uint32_t p : {5u, 7u}) {
            Fp f(p);
            for (int which = 0; which < 2; ++which) {
                CommAlgebra b = which ? unit_plus_nil(2, f) : truncated_poly(2, f);
                auto r = verify_current_h2(sl2(f), b);
                if (!r.pass) {
                    detail += "sl2(" + std::to_string(p) + "): " + std::to_string(r.lhs) +
                              "!=" + std::to_string(r.rhs) + " ";
                    ok = false;
                }
            }
        }
        Fp f5(5);
        for (int which = 0; which < 2; ++which) {
            CommAlgebra b = which ? unit_plus_nil(2, f5) : truncated_poly(2, f5);
            auto r = verify_current_h2(witt(1, m1, f5).lie, b);
            if (!r.pass) {
                detail += "W1(1): " + std::to_string(r.lhs) + "!=" + std::to_string(r.rhs) + " ";
                ok = false;
            }
        }
        return ok;
    });

    criterion(5, "H2(W1(1)) = H1(C_A) over F_5, F_7; H2(W2(1,1), F_5) = 0",
              [](std::string& detail) {
                  bool ok = true;
                  const std::vector<uint32_t> m1{1}, m11{1, 1};
                  for (uint32_t p : {5u, 7u}) {
                      Fp f(p);
                      auto rep = skryabin_check(witt(1, m1, f));
                      if (!rep.pass) {
                          detail += "rank1 p=" + std::to_string(p) + " ";
                          ok = false;
                      }
                  }
                  Fp f5(5);
                  auto rep = skryabin_check(witt(2, m11, f5));
                  if (!rep.pass) {
                      detail += "rank2 H2=" + std::to_string(rep.dim_h2);
                      ok = false;
                  }
                  return ok;
              });

    criterion(6, "tensor isomorphism for the A-multilinear complex", [](std::string& detail) {
        bool ok = true;
        Fp f(5);
        const std::vector<uint32_t> m1{1};
        AModuleLie w = witt(1, m1, f);
        for (int which = 0; which < 2; ++which) {
            CommAlgebra b = which ? unit_plus_nil(2, f) : truncated_poly(2, f);
            auto rep = lemma_check(w, b);
            if (!rep.pass) {
                detail += std::string(which ? "upn2" : "trunc2") + " ";
                ok = false;
            }
        }
        return ok;
    });

    criterion(7, "Hamiltonian algebra carries a single form", [](std::string& detail) {
        Fp f(5);
        const std::vector<uint32_t> m11{1, 1};
        const uint32_t dim = invariant_forms(hamiltonian(m11, f), true).dimension;
        detail = "dim=" + std::to_string(dim);
        return dim == 1;
    });

    criterion(8, "contact negative congruence cases over F_5 and F_7",
              [](std::string& detail) {
                  bool ok = true;
                  const std::vector<uint32_t> m111{1, 1, 1};
                  for (uint32_t p : {5u, 7u}) {
                      Fp f(p);
                      const uint32_t dim = invariant_forms(contact(1, m111, f), true).dimension;
                      if (dim != 0) {
                          detail += "p=" + std::to_string(p) + " dim=" + std::to_string(dim) + " ";
                          ok = false;
                      }
                  }
                  return ok;
              });

    if (stretch) {
        criterion(9, "contact positive case K_5 over F_5 (stretch)", [](std::string& detail) {
            Fp f(5);
            const std::vector<uint32_t> m{1, 1, 1, 1, 1};
            const uint32_t dim = invariant_forms(contact(2, m, f), true).dimension;
            detail = "dim=" + std::to_string(dim);
            return dim == 1;
        });
    } else {
        skip(9, "contact positive case K_5 over F_5 (stretch)",
             "pass --stretch or set CARTAN_STRETCH=1");
    }

    criterion(10, "hom condition: true on W instances, false on A(x d/dx)",
              [](std::string& detail) {
                  bool ok = true;
                  for (uint32_t p : {5u, 7u}) {
                      Fp f(p);
                      for (const auto& [n, m] : witt_params())
                          if (!hom_condition(witt(n, m, f))) {
                              detail += "witt p=" + std::to_string(p) + " ";
                              ok = false;
                          }
                  }
                  Fp f5(5);
                  CommAlgebra a = truncated_poly(5, f5);
                  std::vector<Triplet> ts;
                  for (uint32_t j = 1; j < 5; ++j) ts.push_back({j, j, j});
                  FpMatrix e = FpMatrix::from_triplets(f5, 5, 5, std::move(ts));
                  if (hom_condition(free_rank1_module(a, e))) {
                      detail += "counterexample spans";
                      ok = false;
                  }
                  return ok;
              });

    criterion(11, "deformation solver on the ax+b toy", [](std::string& detail) {
        Fp f(5);
        DeformationData d{abelian(2, f), {}};
        Cochain2 phi(f, 2);
        phi.set(0, 1, {{1, 1}});
        d.cochains.push_back(std::move(phi));
        LieAlgebra::Builder b(f, 2);
        b.next_pair({{1, 1}});
        LieAlgebra axb = b.finish();
        const uint32_t cls = classify_prolongable(d, 1).dimension;
        const uint32_t direct = invariant_forms(axb).dimension;
        DeformationData trivial{abelian(2, f), {Cochain2(f, 2)}};
        const uint32_t full = classify_prolongable(trivial, 1).dimension;
        detail = "classified=" + std::to_string(cls) + " direct=" + std::to_string(direct) +
                 " trivial=" + std::to_string(full);
        return cls == 1 && direct == 1 && full == 3;
    });

    criterion(12, "property suites: Jacobi, composites, rank-nullity", [](std::string& detail) {
        bool ok = true;
        const std::vector<uint32_t> m1{1}, m2{2}, m11{1, 1}, m111{1, 1, 1};
        Fp f5(5), f7(7);
        // constructor outputs re-validated (antisymmetry is structural;
        // Jacobi at the stated exhaustiveness level) and composites vanish
        std::vector<LieAlgebra> fleet;
        fleet.push_back(sl2(f5));
        fleet.push_back(heisenberg(f5));
        fleet.push_back(abelian(4, f5));
        fleet.push_back(witt(1, m1, f5).lie);
        fleet.push_back(witt(1, m2, f5).lie);
        fleet.push_back(witt(2, m11, f5).lie);
        fleet.push_back(witt(1, m1, f7).lie);
        fleet.push_back(hamiltonian(m11, f5));
        fleet.push_back(contact(1, m111, f5));
        fleet.push_back(current(sl2(f5), unit_plus_nil(2, f5)));
        for (const auto& l : fleet) {
            try {
                l.check_jacobi(l.dim() <= 128 ? LieAlgebra::JacobiMode::Exhaustive
                                              : LieAlgebra::JacobiMode::Auto);
            } catch (const std::exception&) {
                detail += "jacobi(" + l.descriptor().value("family", "?") + ") ";
                ok = false;
            }
            if (l.dim() <= 30 && !boundary_composite_is_zero(l)) {
                detail += "d2d3(" + l.descriptor().value("family", "?") + ") ";
                ok = false;
            }
        }
        // d1 after d0 vanishes on every constructed complex
        for (const auto& [n, m] : witt_params()) {
            AModuleLie la = witt(n, m, f5);
            ACochainComplex c = build_complex(la);
            if (c.d1.times(c.d0).nnz() != 0) {
                detail += "d1d0 ";
                ok = false;
            }
        }
        // rank + nullity on 1000 random sparse matrices per prime
        for (uint32_t p : {5u, 7u}) {
            Fp f(p);
            std::mt19937_64 rng(0xace0fULL + p);
            std::uniform_int_distribution<uint32_t> dims(1, 40), val(1, p - 1);
            std::uniform_real_distribution<double> coin(0.0, 1.0);
            for (int t = 0; t < 1000; ++t) {
                const uint32_t rows = dims(rng), cols = dims(rng);
                std::vector<Triplet> ts;
                for (uint32_t r = 0; r < rows; ++r)
                    for (uint32_t c = 0; c < cols; ++c)
                        if (coin(rng) < 0.2) ts.push_back({r, c, val(rng)});
                FpMatrix mtx = FpMatrix::from_triplets(f, rows, cols, std::move(ts));
                if (mtx.rank() + mtx.kernel_basis().dim() != cols) {
                    detail += "rank-nullity ";
                    ok = false;
                }
            }
        }
        return ok;
    });

    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: " + std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures;
}
