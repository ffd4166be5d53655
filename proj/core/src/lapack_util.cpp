#include "lapack_util.hpp"

#include <complex>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace sfn::detail {

void generalized_eigs(Eigen::MatrixXcd A, Eigen::MatrixXcd B,
                      std::vector<cplx>& alpha, std::vector<cplx>& beta) {
    const lapack_int n = static_cast<lapack_int>(A.rows());
    alpha.assign(n, {});
    beta.assign(n, {});
    if (n == 0) return;
    lapack_int info = LAPACKE_zggev(
        LAPACK_COL_MAJOR, 'N', 'N', n, A.data(), n, B.data(), n,
        alpha.data(), beta.data(), nullptr, 1, nullptr, 1);
    if (info != 0)
        throw std::runtime_error("zggev failed, info=" + std::to_string(info));
}

Eigen::VectorXcd smallest_right_singvec(const Eigen::MatrixXcd& A,
                                        double* sigma_min) {
    const lapack_int rows = static_cast<lapack_int>(A.rows());
    const lapack_int cols = static_cast<lapack_int>(A.cols());
    const lapack_int k = std::min(rows, cols);
    Eigen::MatrixXcd work = A;
    std::vector<double> sigma(std::max<lapack_int>(k, 1));
    // 'S' only yields the leading min(rows,cols) rows of V^H; a wide
    // matrix needs the full V to expose the nullspace direction.
    const char jobz = rows >= cols ? 'S' : 'A';
    Eigen::MatrixXcd u(rows, jobz == 'S' ? k : rows);
    Eigen::MatrixXcd vt(jobz == 'S' ? k : cols, cols);
    lapack_int info = LAPACKE_zgesdd(
        LAPACK_COL_MAJOR, jobz, rows, cols, work.data(), rows, sigma.data(),
        u.data(), rows, vt.data(), static_cast<lapack_int>(vt.rows()));
    if (info != 0)
        throw std::runtime_error("zgesdd failed, info=" + std::to_string(info));
    // Smallest singular value pairs with the last row of V^H when V is
    // complete; a wide 'A' call has cols - rows exact-nullspace rows
    // beyond row k-1, and the last one still works.
    const lapack_int last = static_cast<lapack_int>(vt.rows()) - 1;
    Eigen::VectorXcd v = vt.row(last).conjugate().transpose();
    if (sigma_min) *sigma_min = (last < k) ? sigma[last] : 0.0;
    return v;
}

}  // namespace sfn::detail
