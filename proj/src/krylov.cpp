// Copyright 2026 The q2sat-adiabatic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "q2sat/krylov.hpp"

#include <algorithm>
#include <cmath>

#include "q2sat/error.hpp"

namespace q2sat {

namespace {

struct LanczosBasis {
  Eigen::MatrixXcd v;       // orthonormal columns
  Eigen::VectorXd alpha;    // diagonal
  Eigen::VectorXd beta;     // off-diagonal, beta[j] couples j and j+1
  double next_beta = 0.0;   // coupling to the first vector left out
  bool invariant = false;   // the basis spans an invariant subspace
};

LanczosBasis lanczos(const LinearOperator& g, const StateVector& start, int max_dim,
                     int& applications) {
  const Eigen::Index n = start.size();
  const Eigen::Index m = std::min<Eigen::Index>(max_dim, n);
  LanczosBasis b;
  b.v.resize(n, m);
  b.alpha.resize(m);
  b.beta.resize(std::max<Eigen::Index>(m - 1, 0));
  b.v.col(0) = start / start.norm();
  StateVector w(n);
  Eigen::Index j = 0;
  for (;; ++j) {
    g(b.v.col(j), w);
    ++applications;
    b.alpha[j] = b.v.col(j).dot(w).real();
    // Full reorthogonalization, two passes.
    for (int pass = 0; pass < 2; ++pass) {
      const auto basis = b.v.leftCols(j + 1);
      w.noalias() -= basis * (basis.adjoint() * w);
    }
    const double nb = w.norm();
    const double scale = std::max(std::abs(b.alpha[j]), 1.0);
    if (nb <= 1e-13 * scale) {
      b.invariant = true;
      b.next_beta = 0.0;
      break;
    }
    if (j + 1 == m) {
      b.next_beta = nb;
      break;
    }
    b.beta[j] = nb;
    b.v.col(j + 1) = w / nb;
  }
  const Eigen::Index used = j + 1;
  b.v.conservativeResize(n, used);
  b.alpha.conservativeResize(used);
  b.beta.conservativeResize(std::max<Eigen::Index>(used - 1, 0));
  return b;
}

}  // namespace

StateVector expm_multiply_hermitian(const LinearOperator& g, const StateVector& v, double tau,
                                    const KrylovOptions& options, KrylovStats* stats) {
  if (!std::isfinite(tau)) throw ParameterError("expm_multiply_hermitian: non-finite time");
  if (options.krylov_dim < 2) throw ParameterError("expm_multiply_hermitian: krylov_dim < 2");
  KrylovStats local;
  const double total = std::abs(tau);
  const double sign = tau < 0 ? -1.0 : 1.0;
  const double v_norm = v.norm();
  StateVector x = v;
  if (total == 0.0 || v_norm == 0.0) {
    if (stats) *stats = local;
    return x;
  }

  double done = 0.0;
  double h = std::min(total, 8.0 / std::max(options.norm_estimate, 1e-300));
  while (done < total) {
    const double xn = x.norm();
    const LanczosBasis basis = lanczos(g, x, options.krylov_dim, local.operator_applications);
    const Eigen::Index k = basis.alpha.size();
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(k, k);
    t.diagonal() = basis.alpha;
    for (Eigen::Index j = 0; j + 1 < k; ++j) t(j, j + 1) = t(j + 1, j) = basis.beta[j];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(t);
    const Eigen::VectorXd lam = eig.eigenvalues();
    const Eigen::MatrixXd& q = eig.eigenvectors();

    auto small_exp = [&](double step) {
      Eigen::VectorXcd phase(k);
      for (Eigen::Index i = 0; i < k; ++i)
        phase[i] = std::exp(cplx(0.0, -sign * step * lam[i])) * q(0, i);
      return Eigen::VectorXcd(q.cast<cplx>() * phase);
    };

    const double remaining = total - done;
    h = std::min(h, remaining);
    Eigen::VectorXcd y;
    double err = 0.0;
    if (basis.invariant) {
      h = remaining;
      y = small_exp(h);
    } else {
      for (int shrink = 0;; ++shrink) {
        y = small_exp(h);
        err = basis.next_beta * std::abs(y[k - 1]) * xn;
        const double budget = options.tolerance * v_norm * h / total;
        if (err <= budget || shrink > 60) break;
        h *= 0.5;
      }
    }
    x = xn * (basis.v * y);
    done = (h == remaining) ? total : done + h;
    local.error_estimate += err;
    ++local.substeps;
    // Grow the next substep when the estimate had plenty of headroom.
    if (!basis.invariant && err < 0.01 * options.tolerance * v_norm * h / total) h *= 2.0;
    if (local.substeps > 1000000)
      throw NumericalError("expm_multiply_hermitian: substep limit exceeded");
  }
  if (stats) *stats = local;
  return x;
}

}  // namespace q2sat
