#include "bicsim/eigensolve.hpp"

#include <string>
#include <vector>

#include <lapacke.h>

namespace bicsim {

namespace {

lapack_complex_double* lp(Eigen::MatrixXcd& m) {
    return reinterpret_cast<lapack_complex_double*>(m.data());
}

void check(int info, const char* routine) {
    if (info != 0)
        throw NumericalError(std::string(routine) + " failed with info=" + std::to_string(info));
}

} // namespace

HermitianEigen eigh(const Eigen::MatrixXcd& H) {
    const int n = static_cast<int>(H.rows());
    HermitianEigen out;
    out.vectors = H;  // overwritten with eigenvectors
    out.values.resize(n);
    check(LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'L', n, lp(out.vectors), n, out.values.data()),
          "zheevd");
    return out;
}

Eigen::VectorXd eigh_values(const Eigen::MatrixXcd& H) {
    const int n = static_cast<int>(H.rows());
    Eigen::MatrixXcd work = H;
    Eigen::VectorXd values(n);
    check(LAPACKE_zheevd(LAPACK_COL_MAJOR, 'N', 'L', n, lp(work), n, values.data()), "zheevd");
    return values;
}

HermitianEigen eigh_window(const Eigen::MatrixXcd& H, double lo, double hi) {
    const int n = static_cast<int>(H.rows());
    Eigen::MatrixXcd work = H;
    Eigen::VectorXd values(n);
    Eigen::MatrixXcd vectors(n, n);
    std::vector<int> isuppz(static_cast<std::size_t>(2 * n));
    int found = 0;
    check(LAPACKE_zheevr(LAPACK_COL_MAJOR, 'V', 'V', 'L', n, lp(work), n, lo, hi, 0, 0,
                         0.0 /* abstol: default */, &found, values.data(),
                         reinterpret_cast<lapack_complex_double*>(vectors.data()), n,
                         isuppz.data()),
          "zheevr");
    HermitianEigen out;
    out.values = values.head(found);
    out.vectors = vectors.leftCols(found);
    return out;
}

} // namespace bicsim
