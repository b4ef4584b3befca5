#pragma once

#include <complex>

#include <Eigen/Dense>

namespace homtest {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

/// Squared Hilbert-Schmidt norm, tr(A*A).
inline double hs_norm2(const Mat& a) { return a.squaredNorm(); }

/// Largest singular value.
double op_norm(const Mat& a);

/// Sum of singular values.
double trace_norm(const Mat& a);

Eigen::VectorXd singular_values(const Mat& a);

/// Unitary (or partial isometry) factor U V* of the SVD A = U S V*.
Mat polar_factor(const Mat& a);

Mat kron(const Mat& a, const Mat& b);

/// exp(iH) for Hermitian H.
Mat expi_hermitian(const Mat& h);

/// Hermitian matrices: eigenvalues ascending with orthonormal eigenvectors.
struct HermitianEig {
  Eigen::VectorXd values;
  Mat vectors;
};
HermitianEig eig_hermitian(const Mat& a);

}  // namespace homtest
