#include "eapm/linalg.hpp"

#include <stdexcept>
#include <string>

namespace eapm::linalg {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   Eigen::Index dimension_limit) {
  if (a.rows() < 1 || a.cols() < 1 || b.rows() < 1 || b.cols() < 1) {
    throw std::invalid_argument("kron: operands must be non-empty");
  }
  const Eigen::Index rows = a.rows() * b.rows();
  const Eigen::Index cols = a.cols() * b.cols();
  if (rows > dimension_limit || cols > dimension_limit) {
    throw std::invalid_argument("kron: result " + std::to_string(rows) + "x" +
                                std::to_string(cols) +
                                " exceeds the dimension limit " +
                                std::to_string(dimension_limit));
  }
  ComplexMatrix out(rows, cols);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

double hermiticity_error(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("hermiticity_error: matrix is not square");
  }
  return (a - a.adjoint().eval()).cwiseAbs().maxCoeff();
}

HermitianEig eig_hermitian(const ComplexMatrix& a) {
  const double dev = hermiticity_error(a);
  if (dev > tol::hermitian) {
    throw std::invalid_argument("eig_hermitian: input deviates from Hermitian by " +
                                std::to_string(dev));
  }
  const ComplexMatrix sym = 0.5 * (a + a.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eig_hermitian: eigensolver did not converge");
  }
  return HermitianEig{solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix partial_trace(const ComplexMatrix& m, Eigen::Index dim_a,
                            Eigen::Index dim_b, Subsystem keep) {
  if (dim_a < 1 || dim_b < 1 || m.rows() != dim_a * dim_b ||
      m.cols() != dim_a * dim_b) {
    throw std::invalid_argument("partial_trace: matrix is not (dim_a*dim_b)-square");
  }
  if (keep == Subsystem::first) {
    ComplexMatrix out = ComplexMatrix::Zero(dim_a, dim_a);
    for (Eigen::Index i = 0; i < dim_a; ++i) {
      for (Eigen::Index j = 0; j < dim_a; ++j) {
        for (Eigen::Index k = 0; k < dim_b; ++k) {
          out(i, j) += m(i * dim_b + k, j * dim_b + k);
        }
      }
    }
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim_b, dim_b);
  for (Eigen::Index k = 0; k < dim_b; ++k) {
    for (Eigen::Index l = 0; l < dim_b; ++l) {
      for (Eigen::Index i = 0; i < dim_a; ++i) {
        out(k, l) += m(i * dim_b + k, i * dim_b + l);
      }
    }
  }
  return out;
}

double min_eigenvalue(const ComplexMatrix& a) {
  const ComplexMatrix sym = 0.5 * (a + a.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("min_eigenvalue: eigensolver did not converge");
  }
  return solver.eigenvalues()(0);
}

double operator_norm(const ComplexMatrix& a) {
  const HermitianEig eig = eig_hermitian(a);
  return eig.eigenvalues.cwiseAbs().maxCoeff();
}

}  // namespace eapm::linalg
