#pragma once

#include <Eigen/Dense>

#include "bicsim/errors.hpp"

namespace bicsim {

/// Eigendecomposition of a Hermitian matrix: H v_j = values[j] v_j with
/// vectors.col(j) = v_j, values ascending.
struct HermitianEigen {
    Eigen::VectorXd values;
    Eigen::MatrixXcd vectors;
};

// Full decomposition (LAPACK zheevd). Throws NumericalError on failure.
HermitianEigen eigh(const Eigen::MatrixXcd& H);

// Eigenvalues only, ascending.
Eigen::VectorXd eigh_values(const Eigen::MatrixXcd& H);

// Eigenpairs with values in (lo, hi] (LAPACK zheevr range selection).
HermitianEigen eigh_window(const Eigen::MatrixXcd& H, double lo, double hi);

} // namespace bicsim
