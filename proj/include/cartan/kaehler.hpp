#ifndef CARTAN_KAEHLER_HPP
#define CARTAN_KAEHLER_HPP

#include "cartan/comm_algebra.hpp"

namespace cartan {

/// Dimensions of the module of Kähler differentials of a commutative
/// unital algebra: Omega^1, the image of d, and Omega^1 / dA. The last
/// number is the commutative-case route to the first cyclic homology.
struct Omega1Report {
    uint32_t dim_omega1 = 0;
    uint32_t dim_dA = 0;
    uint32_t dim_quotient = 0; // dim_omega1 - dim_dA
};

/// Omega^1 as a K-vector space: free module on symbols de_s over A,
/// modulo the A-module closure of the Leibniz relations
/// d(e_i e_j) - e_i de_j - e_j de_i.
Omega1Report kaehler_omega1(const CommAlgebra& a);

} // namespace cartan

#endif
