#pragma once

#include <Eigen/Dense>
#include <complex>

namespace eapm {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

namespace linalg {

// Named tolerance defaults. Every comparison in the tests references these
// rather than ad-hoc literals.
namespace tol {
inline constexpr double hermitian = 1e-10;       // max-entry deviation |a - a^dag|
inline constexpr double reconstruction = 1e-10;  // relative Frobenius error of sum(lambda_k v_k v_k^dag)
inline constexpr double orthonormality = 1e-10;  // |v_i^dag v_j - delta_ij|
inline constexpr double trace = 1e-12;
inline constexpr double positivity = -1e-9;      // smallest admissible eigenvalue
}  // namespace tol

// Hard cap on any dimension produced by kron. Requests beyond this are not
// desk-scale and are rejected instead of ground through.
inline constexpr Eigen::Index kron_dimension_limit = 4096;

enum class Subsystem { first, second };

struct HermitianEig {
  RealVector eigenvalues;      // non-decreasing
  ComplexMatrix eigenvectors;  // orthonormal columns, col(k) pairs with eigenvalues(k)
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   Eigen::Index dimension_limit = kron_dimension_limit);

// Hermitian eigendecomposition. Inputs within tol::hermitian of Hermitian are
// symmetrized first; anything worse is rejected.
HermitianEig eig_hermitian(const ComplexMatrix& a);

ComplexMatrix partial_trace(const ComplexMatrix& m, Eigen::Index dim_a,
                            Eigen::Index dim_b, Subsystem keep);

double hermiticity_error(const ComplexMatrix& a);  // max entry of |a - a^dag|
double min_eigenvalue(const ComplexMatrix& a);     // smallest eigenvalue of (a + a^dag)/2
double operator_norm(const ComplexMatrix& a);      // largest |eigenvalue|, Hermitian input

}  // namespace linalg
}  // namespace eapm
