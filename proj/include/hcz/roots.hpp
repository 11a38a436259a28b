#pragma once

#include <complex>
#include <vector>

#include "hcz/indpoly.hpp"

namespace hcz {

struct RootResult {
    // All d complex roots, multiplicities repeated, sorted by (re, im).
    std::vector<std::complex<double>> roots;
    // max over roots of |p(root)| / (1 + sum_i |c_i|), evaluated in extended
    // precision on the input polynomial.
    double max_residual = 0.0;
    bool used_fallback = false;
};

// Simultaneous (Aberth-Ehrlich) iteration plus one Newton pass; multiple
// roots are split off beforehand by exact square-free decomposition over Q,
// companion-matrix eigenvalues serve as fallback. Requires degree >= 1.
RootResult poly_roots(const UnivariatePolynomial& p);

}  // namespace hcz
