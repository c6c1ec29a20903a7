#pragma once

// Cyclic Jacobi eigensolver for real symmetric and complex Hermitian matrices.

#include "polyspec/errors.hpp"

#include <Eigen/Dense>
#include <Eigen/Jacobi>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace polyspec {

struct JacobiOptions {
  /// Stop once the off-diagonal Frobenius norm is below tol * ||M||_F.
  double tol = 1e-14;
  int max_sweeps = 100;
  bool compute_vectors = false;
  /// Inputs farther than this from (Hermitian) symmetric are rejected.
  double symmetry_tol = 1e-12;
};

template <class Scalar>
struct JacobiResult {
  using Real = typename Eigen::NumTraits<Scalar>::Real;
  /// Ascending.
  Eigen::Matrix<Real, Eigen::Dynamic, 1> values;
  /// Columns match `values`; empty unless requested.
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> vectors;
  int sweeps = 0;
  Real off_norm = 0;
  /// Largest |Im| left on the diagonal (zero for real input).
  Real max_imag_diagonal = 0;
};

namespace detail {

template <class Derived>
typename Derived::RealScalar off_diagonal_norm(const Eigen::MatrixBase<Derived>& a) {
  typename Derived::RealScalar s = 0;
  for (Eigen::Index q = 0; q < a.cols(); ++q) {
    for (Eigen::Index p = 0; p < q; ++p) s += Eigen::numext::abs2(a(p, q));
  }
  return std::sqrt(2 * s);
}

}  // namespace detail

/// Diagonalizes a self-adjoint matrix by cyclic two-sided Jacobi rotations.
/// Throws PreconditionError on non-self-adjoint input and NumericError when
/// max_sweeps is exhausted.
template <class Derived>
JacobiResult<typename Derived::Scalar> jacobi_eigen(const Eigen::MatrixBase<Derived>& m,
                                                    const JacobiOptions& opts = {}) {
  using Scalar = typename Derived::Scalar;
  using Real = typename Eigen::NumTraits<Scalar>::Real;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  if (m.rows() != m.cols()) throw PreconditionError("jacobi_eigen: matrix is not square");
  const Eigen::Index n = m.rows();
  Matrix a = m;
  const Real scale = std::max<Real>(1, a.cwiseAbs().maxCoeff());
  if ((a - a.adjoint()).cwiseAbs().maxCoeff() > opts.symmetry_tol * scale) {
    throw PreconditionError("jacobi_eigen: matrix is not self-adjoint");
  }
  a = (a + a.adjoint()) / Real(2);

  JacobiResult<Scalar> out;
  if (opts.compute_vectors) out.vectors = Matrix::Identity(n, n);
  const Real fro = a.norm();
  const Real target = static_cast<Real>(opts.tol) * fro;
  out.off_norm = detail::off_diagonal_norm(a);

  while (out.off_norm > target) {
    if (out.sweeps == opts.max_sweeps) throw NumericError("jacobi_eigen: no convergence");
    // Rutishauser's threshold: skip small entries in the first sweeps.
    const Real threshold = out.sweeps < 3 ? Real(0.2) * out.off_norm / Real(n * n) : Real(0);
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Real apq = std::abs(a(p, q));
        if (apq == 0 || apq <= threshold) continue;
        Eigen::JacobiRotation<Scalar> rot;
        rot.makeJacobi(Eigen::numext::real(a(p, p)), a(p, q), Eigen::numext::real(a(q, q)));
        a.applyOnTheLeft(p, q, rot.adjoint());
        a.applyOnTheRight(p, q, rot);
        a(p, q) = 0;
        a(q, p) = 0;
        if (opts.compute_vectors) out.vectors.applyOnTheRight(p, q, rot);
      }
    }
    ++out.sweeps;
    out.off_norm = detail::off_diagonal_norm(a);
  }

  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
    return Eigen::numext::real(a(x, x)) < Eigen::numext::real(a(y, y));
  });
  out.values.resize(n);
  for (Eigen::Index t = 0; t < n; ++t) {
    out.values(t) = Eigen::numext::real(a(order[t], order[t]));
    out.max_imag_diagonal = std::max<Real>(out.max_imag_diagonal, std::abs(Eigen::numext::imag(a(order[t], order[t]))));
  }
  if (opts.compute_vectors) {
    Matrix sorted(n, n);
    for (Eigen::Index t = 0; t < n; ++t) sorted.col(t) = out.vectors.col(order[t]);
    out.vectors = std::move(sorted);
  }
  return out;
}

}  // namespace polyspec
