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

#include "icoq/qmat.hpp"

#include <set>

namespace icoq {

namespace {

std::vector<int> qubit_factors_for(Eigen::Index dim) {
  std::vector<int> f;
  Eigen::Index d = dim;
  while (d > 1 && d % 2 == 0) {
    f.push_back(2);
    d /= 2;
  }
  if (d != 1) throw std::invalid_argument("DensityMatrix: dimension is not a power of two");
  if (f.empty()) f.push_back(1);
  return f;
}

}  // namespace

std::string density_matrix_defect(const ComplexMatrix& m, const Tolerances& tol) {
  if (m.rows() != m.cols() || m.rows() == 0) return "matrix is not square and nonempty";
  if (!m.allFinite()) return "non-finite entries";
  if (hermiticity_error(m) > tol.validation) return "not Hermitian";
  if (std::abs(m.trace() - Complex(1.0)) > tol.validation) return "trace differs from 1";
  const auto eig = hermitian_eig(m, tol);
  if (eig.values.minCoeff() < -tol.validation) return "not positive semidefinite";
  return {};
}

DensityMatrix::DensityMatrix(ComplexMatrix mat, std::vector<int> factors, const Tolerances& tol)
    : mat_(std::move(mat)), factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("DensityMatrix: empty factor list");
  long long prod = 1;
  for (int f : factors_) {
    if (f <= 0) throw std::invalid_argument("DensityMatrix: factor dimensions must be positive");
    prod *= f;
  }
  if (prod != mat_.rows())
    throw std::invalid_argument("DensityMatrix: factor dimensions do not multiply to matrix size");
  if (auto defect = density_matrix_defect(mat_, tol); !defect.empty())
    throw ValidationError("DensityMatrix: " + defect);
  mat_ = hermitian_part(mat_);
}

DensityMatrix::DensityMatrix(ComplexMatrix mat)
    : DensityMatrix(mat, qubit_factors_for(mat.rows())) {}

DensityMatrix DensityMatrix::pure(const Eigen::VectorXcd& psi) {
  const double n = psi.norm();
  if (!(n > 0)) throw std::invalid_argument("DensityMatrix::pure: zero vector");
  const Eigen::VectorXcd u = psi / n;
  return DensityMatrix(u * u.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
  if (n_qubits < 1) throw std::invalid_argument("maximally_mixed: need at least one qubit");
  const Eigen::Index d = Eigen::Index(1) << n_qubits;
  return DensityMatrix(ComplexMatrix::Identity(d, d) / static_cast<double>(d));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  std::vector<int> f = a.factors();
  f.insert(f.end(), b.factors().begin(), b.factors().end());
  return DensityMatrix(kron(a.matrix(), b.matrix()), std::move(f));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
  const auto& factors = rho.factors();
  const int n = static_cast<int>(factors.size());
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");
  std::set<int> kept;
  for (int k : keep) {
    if (k < 0 || k >= n) throw std::invalid_argument("partial_trace: factor index out of range");
    if (!kept.insert(k).second) throw std::invalid_argument("partial_trace: duplicate factor index");
  }

  // Strides of the row-major multi-index (factor 0 is most significant).
  std::vector<Eigen::Index> stride(static_cast<std::size_t>(n));
  Eigen::Index s = 1;
  for (int k = n - 1; k >= 0; --k) {
    stride[static_cast<std::size_t>(k)] = s;
    s *= factors[static_cast<std::size_t>(k)];
  }

  std::vector<int> kept_factors, traced;
  Eigen::Index d_keep = 1, d_trace = 1;
  for (int k = 0; k < n; ++k) {
    if (kept.count(k)) {
      kept_factors.push_back(factors[static_cast<std::size_t>(k)]);
      d_keep *= factors[static_cast<std::size_t>(k)];
    } else {
      traced.push_back(k);
      d_trace *= factors[static_cast<std::size_t>(k)];
    }
  }
  const std::vector<int> kept_list(kept.begin(), kept.end());

  // Offset into the full index for a multi-index over the given factor list.
  auto offset = [&](const std::vector<int>& which, Eigen::Index flat) {
    Eigen::Index off = 0;
    for (int idx = static_cast<int>(which.size()) - 1; idx >= 0; --idx) {
      const int k = which[static_cast<std::size_t>(idx)];
      const int f = factors[static_cast<std::size_t>(k)];
      off += (flat % f) * stride[static_cast<std::size_t>(k)];
      flat /= f;
    }
    return off;
  };

  ComplexMatrix out = ComplexMatrix::Zero(d_keep, d_keep);
  for (Eigen::Index i = 0; i < d_keep; ++i) {
    const Eigen::Index oi = offset(kept_list, i);
    for (Eigen::Index j = 0; j < d_keep; ++j) {
      const Eigen::Index oj = offset(kept_list, j);
      Complex acc(0);
      for (Eigen::Index t = 0; t < d_trace; ++t) {
        const Eigen::Index ot = offset(traced, t);
        acc += rho(oi + ot, oj + ot);
      }
      out(i, j) = acc;
    }
  }
  return DensityMatrix(std::move(out), std::move(kept_factors));
}

double fidelity(const DensityMatrix& a, const DensityMatrix& b, const Tolerances& tol) {
  if (a.dim() != b.dim()) throw std::invalid_argument("fidelity: dimension mismatch");
  const ComplexMatrix ra = psd_sqrt(a.matrix(), tol);
  const ComplexMatrix inner = hermitian_part(ra * b.matrix() * ra);
  const auto eig = hermitian_eig(inner, tol);
  double tr = 0.0;
  for (Eigen::Index k = 0; k < eig.values.size(); ++k) tr += std::sqrt(std::max(eig.values(k), 0.0));
  return std::clamp(tr * tr, 0.0, 1.0);
}

}  // namespace icoq
