#pragma once

#include <vector>

#include "bfb/types.hpp"

namespace bfb {

// Gauss-Legendre rule for the uniform probability measure on [-1, 1]:
// classical weights halved so they sum to 1. Nodes ascend.
struct QuadratureRule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
};

QuadratureRule1D gauss_legendre_rule(Index n);

// sqrt(2j + 1) P_j(p): orthonormal under the uniform measure on [-1, 1].
double normalized_legendre(Index j, double p);

// psi_0(p), ..., psi_degree(p) in one recurrence pass.
std::vector<double> normalized_legendre_all(Index degree, double p);

}  // namespace bfb
