#ifndef SFN_LAPACK_UTIL_HPP
#define SFN_LAPACK_UTIL_HPP

#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

namespace sfn::detail {

using cplx = std::complex<double>;

/// Generalized eigenvalues of the dense pencil (A, B) via QZ (zggev).
/// Returns (alpha, beta) pairs; eigenvalue = alpha/beta, infinite when
/// beta vanishes.
void generalized_eigs(Eigen::MatrixXcd A, Eigen::MatrixXcd B,
                      std::vector<cplx>& alpha, std::vector<cplx>& beta);

/// Right singular vector of the smallest singular value of A (zgesdd).
/// sigma_min, if given, receives the smallest singular value.
Eigen::VectorXcd smallest_right_singvec(const Eigen::MatrixXcd& A,
                                        double* sigma_min = nullptr);

}  // namespace sfn::detail

#endif
