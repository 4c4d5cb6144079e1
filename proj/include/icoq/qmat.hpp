// Copyright 2026 The icoq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace icoq {

/*
 * Dense complex linear algebra for the small (<= 16x16) operators used by the
 * simulator. Algorithms are templated on the real scalar so that they accept
 * any Eigen complex matrix expression; the rest of the library works in
 * double precision through the ComplexMatrix alias.
 */

template <typename Real>
using CMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real>
using RVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using ComplexMatrix = CMatrix<double>;
using Complex = std::complex<double>;

/// Raised when a numerical object fails a physical validity check
/// (Hermiticity, positivity, trace, CPTP completeness).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Tolerances {
  double validation = 1e-10;
  double reconstruction = 1e-9;
};

inline constexpr Tolerances kDefaultTolerances{};

template <typename Derived>
typename Derived::RealScalar max_abs(const Eigen::MatrixBase<Derived>& m) {
  using Real = typename Derived::RealScalar;
  if (m.size() == 0) return Real(0);
  return m.cwiseAbs().maxCoeff();
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  return m.allFinite();
}

/// Largest entrywise deviation between m and its adjoint.
template <typename Derived>
typename Derived::RealScalar hermiticity_error(const Eigen::MatrixBase<Derived>& m) {
  return max_abs(m.derived() - m.adjoint());
}

/// (M + M^dagger) / 2, with exactly real diagonal.
template <typename Derived>
CMatrix<typename Derived::RealScalar> hermitian_part(const Eigen::MatrixBase<Derived>& m) {
  using Real = typename Derived::RealScalar;
  CMatrix<Real> h = (m.derived() + m.adjoint()) * Real(0.5);
  for (Eigen::Index i = 0; i < h.rows(); ++i) h(i, i) = std::complex<Real>(h(i, i).real(), Real(0));
  return h;
}

/// Tensor product with row index i_a * dim(b) + i_b.
template <typename DerivedA, typename DerivedB>
CMatrix<typename DerivedA::RealScalar> kron(const Eigen::MatrixBase<DerivedA>& a,
                                            const Eigen::MatrixBase<DerivedB>& b) {
  using Real = typename DerivedA::RealScalar;
  const Eigen::Index ar = a.rows(), ac = a.cols(), br = b.rows(), bc = b.cols();
  CMatrix<Real> out(ar * br, ac * bc);
  for (Eigen::Index i = 0; i < ar; ++i)
    for (Eigen::Index j = 0; j < ac; ++j) out.block(i * br, j * bc, br, bc) = a(i, j) * b;
  return out;
}

template <typename Real>
struct HermitianEig {
  RVector<Real> values;    // descending
  CMatrix<Real> vectors;   // columns are eigenvectors
};

/*
 * Cyclic complex Jacobi eigendecomposition.
 *
 * Each (p, q) rotation first removes the phase of a_pq with diag(1, e^{-i alpha})
 * and then applies the real symmetric Jacobi rotation to the resulting block.
 * Sweeps stop when the off-diagonal Frobenius norm drops below machine
 * precision relative to the full norm.
 */
template <typename Derived>
HermitianEig<typename Derived::RealScalar> hermitian_eig(const Eigen::MatrixBase<Derived>& m,
                                                         const Tolerances& tol = kDefaultTolerances) {
  using Real = typename Derived::RealScalar;
  using C = std::complex<Real>;
  if (m.rows() != m.cols() || m.rows() == 0)
    throw std::invalid_argument("hermitian_eig: matrix must be square and nonempty");
  if (!m.allFinite()) throw ValidationError("hermitian_eig: non-finite entries");
  if (hermiticity_error(m) > Real(tol.validation))
    throw ValidationError("hermitian_eig: matrix is not Hermitian within tolerance");

  const Eigen::Index n = m.rows();
  CMatrix<Real> a = hermitian_part(m);
  CMatrix<Real> v = CMatrix<Real>::Identity(n, n);

  const Real eps = std::numeric_limits<Real>::epsilon();
  const Real scale = std::max(a.norm(), std::numeric_limits<Real>::min());
  constexpr int kMaxSweeps = 100;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    Real off = 0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (std::sqrt(off) <= eps * scale) break;

    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Real mag = std::abs(a(p, q));
        if (mag <= eps * eps * scale) continue;
        const C phase = a(p, q) / mag;  // e^{i alpha}
        const Real app = a(p, p).real();
        const Real aqq = a(q, q).real();
        const Real theta = (aqq - app) / (Real(2) * mag);
        const Real t = (theta >= 0 ? Real(1) : Real(-1)) /
                       (std::abs(theta) + std::sqrt(theta * theta + Real(1)));
        const Real c = Real(1) / std::sqrt(t * t + Real(1));
        const Real s = t * c;

        // Block of the rotation G: [[g_pp, g_pq], [g_qp, g_qq]].
        const C g_pp(c);
        const C g_pq(s);
        const C g_qp = -s * std::conj(phase);
        const C g_qq = c * std::conj(phase);

        // a <- a G
        for (Eigen::Index k = 0; k < n; ++k) {
          const C ak_p = a(k, p), ak_q = a(k, q);
          a(k, p) = ak_p * g_pp + ak_q * g_qp;
          a(k, q) = ak_p * g_pq + ak_q * g_qq;
        }
        // a <- G^dagger a
        for (Eigen::Index k = 0; k < n; ++k) {
          const C ap_k = a(p, k), aq_k = a(q, k);
          a(p, k) = std::conj(g_pp) * ap_k + std::conj(g_qp) * aq_k;
          a(q, k) = std::conj(g_pq) * ap_k + std::conj(g_qq) * aq_k;
        }
        a(p, q) = C(0);
        a(q, p) = C(0);
        a(p, p) = C(a(p, p).real(), 0);
        a(q, q) = C(a(q, q).real(), 0);
        // v <- v G
        for (Eigen::Index k = 0; k < n; ++k) {
          const C vk_p = v(k, p), vk_q = v(k, q);
          v(k, p) = vk_p * g_pp + vk_q * g_qp;
          v(k, q) = vk_p * g_pq + vk_q * g_qq;
        }
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index(0));
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index x, Eigen::Index y) { return a(x, x).real() > a(y, y).real(); });

  HermitianEig<Real> out{RVector<Real>(n), CMatrix<Real>(n, n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = a(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k)]).real();
    out.vectors.col(k) = v.col(order[static_cast<std::size_t>(k)]);
  }
  return out;
}

/// Hermitian PSD square root. Eigenvalues in [-tol, 0) are clamped to zero,
/// and eigenvalues below the round-off floor n * eps * max|lambda| are taken
/// as exact zeros (their square roots would otherwise be ~sqrt(eps) noise).
template <typename Derived>
CMatrix<typename Derived::RealScalar> psd_sqrt(const Eigen::MatrixBase<Derived>& m,
                                               const Tolerances& tol = kDefaultTolerances) {
  using Real = typename Derived::RealScalar;
  const auto eig = hermitian_eig(m, tol);
  if (eig.values.minCoeff() < -Real(tol.validation))
    throw ValidationError("psd_sqrt: matrix has a negative eigenvalue");
  const Real floor = Real(m.rows()) * std::numeric_limits<Real>::epsilon() * eig.values.cwiseAbs().maxCoeff();
  RVector<Real> roots = eig.values.unaryExpr([floor](Real x) { return x > floor ? std::sqrt(x) : Real(0); });
  CMatrix<Real> r = eig.vectors * roots.template cast<std::complex<Real>>().asDiagonal() *
                    eig.vectors.adjoint();
  return hermitian_part(r);
}

/// Hermitian, unit-trace, positive semidefinite state on a register of
/// subsystems whose dimensions multiply to the matrix size.
class DensityMatrix {
 public:
  /// Validates and symmetrizes. Throws ValidationError on failure.
  DensityMatrix(ComplexMatrix mat, std::vector<int> factors,
                const Tolerances& tol = kDefaultTolerances);

  /// Single register of qubits inferred from the dimension (must be 2^n).
  explicit DensityMatrix(ComplexMatrix mat);

  static DensityMatrix pure(const Eigen::VectorXcd& psi);
  static DensityMatrix maximally_mixed(int n_qubits);

  const ComplexMatrix& matrix() const { return mat_; }
  const std::vector<int>& factors() const { return factors_; }
  Eigen::Index dim() const { return mat_.rows(); }
  Complex operator()(Eigen::Index i, Eigen::Index j) const { return mat_(i, j); }

 private:
  ComplexMatrix mat_;
  std::vector<int> factors_;
};

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Reduced state on the factors listed in `keep` (any order; kept factors
/// retain their original relative order).
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

/// Uhlmann fidelity (Tr sqrt(sqrt(a) b sqrt(a)))^2.
double fidelity(const DensityMatrix& a, const DensityMatrix& b,
                const Tolerances& tol = kDefaultTolerances);

/// Validity check without construction; returns an empty string when valid.
std::string density_matrix_defect(const ComplexMatrix& m, const Tolerances& tol = kDefaultTolerances);

}  // namespace icoq
