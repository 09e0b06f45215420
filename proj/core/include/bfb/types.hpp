#pragma once

#include <Eigen/Dense>

namespace bfb {

using Index = Eigen::Index;

// Dense row-major storage; row gathers dominate the sketching workloads.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;

}  // namespace bfb
