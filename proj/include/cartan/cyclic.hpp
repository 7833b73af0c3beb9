#ifndef CARTAN_CYCLIC_HPP
#define CARTAN_CYCLIC_HPP

#include "cartan/comm_algebra.hpp"

namespace cartan {

/// Default cap on dim A for hc1 (the total complex holds A^{(x)3}).
inline constexpr uint32_t kHc1DimCap = 30;

/// First cyclic homology of A from the total complex of the cyclic
/// bicomplex in degrees 0..2:
///
///   Tot2 = A^{(x)3} + A^{(x)2} + A  -->  Tot1 = A^{(x)2} + A  -->  Tot0 = A
///
/// with Hochschild boundaries b / -b', the cyclic operator t carrying the
/// sign (-1)^n, and the norm N = sum t^i. Columns alternate b and -b',
/// horizontal maps alternate 1-t and N.
uint32_t hc1(const CommAlgebra& a, uint32_t dim_cap = kHc1DimCap);

/// The two consecutive total differentials of the bicomplex, mainly for the
/// composite-zero structural check: first maps Tot2 -> Tot1, second
/// Tot1 -> Tot0.
std::pair<FpMatrix, FpMatrix> cyclic_total_differentials(const CommAlgebra& a,
                                                         uint32_t dim_cap = kHc1DimCap);

} // namespace cartan

#endif
