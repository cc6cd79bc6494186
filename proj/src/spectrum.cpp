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


#include "q2sat/spectrum.hpp"

#include <algorithm>
#include <initializer_list>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "q2sat/error.hpp"
#include "q2sat/parallel.hpp"

namespace q2sat {

// ---------------------------------------------------------------- GroundBasis

GroundBasis GroundBasis::from_columns(int n_qubits, const Eigen::MatrixXcd& columns) {
  GroundBasis basis(n_qubits);
  for (Eigen::Index k = 0; k < columns.cols(); ++k) {
    std::vector<std::uint64_t> idx;
    std::vector<cplx> val;
    for (Eigen::Index i = 0; i < columns.rows(); ++i)
      if (columns(i, k) != cplx{}) {
        idx.push_back(static_cast<std::uint64_t>(i));
        val.push_back(columns(i, k));
      }
    basis.push_back(std::move(idx), std::move(val));
  }
  return basis;
}

void GroundBasis::push_back(std::vector<std::uint64_t> indices, std::vector<cplx> values) {
  if (indices.size() != values.size())
    throw ParameterError("GroundBasis: index/value length mismatch");
  indices_.insert(indices_.end(), indices.begin(), indices.end());
  values_.insert(values_.end(), values.begin(), values.end());
  offsets_.push_back(indices_.size());
}

int GroundBasis::sector(std::size_t k) const {
  int s = -2;
  for (std::size_t p = offsets_[k]; p < offsets_[k + 1]; ++p) {
    const int here = std::popcount(indices_[p]);
    if (s == -2)
      s = here;
    else if (s != here)
      return -1;
  }
  return s == -2 ? -1 : s;
}

StateVector GroundBasis::vector(std::size_t k) const {
  StateVector v = StateVector::Zero(Eigen::Index{1} << n_qubits_);
  for (std::size_t p = offsets_[k]; p < offsets_[k + 1]; ++p)
    v[static_cast<Eigen::Index>(indices_[p])] = values_[p];
  return v;
}

Eigen::MatrixXcd GroundBasis::dense() const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(Eigen::Index{1} << n_qubits_,
                                              static_cast<Eigen::Index>(size()));
  for (std::size_t k = 0; k < size(); ++k)
    for (std::size_t p = offsets_[k]; p < offsets_[k + 1]; ++p)
      m(static_cast<Eigen::Index>(indices_[p]), static_cast<Eigen::Index>(k)) = values_[p];
  return m;
}

Eigen::VectorXcd GroundBasis::coefficients(const StateVector& psi) const {
  if (psi.size() != (Eigen::Index{1} << n_qubits_))
    throw ParameterError("GroundBasis: state dimension mismatch");
  Eigen::VectorXcd c(static_cast<Eigen::Index>(size()));
  for (std::size_t k = 0; k < size(); ++k) {
    cplx acc{};
    for (std::size_t p = offsets_[k]; p < offsets_[k + 1]; ++p)
      acc += std::conj(values_[p]) * psi[static_cast<Eigen::Index>(indices_[p])];
    c[static_cast<Eigen::Index>(k)] = acc;
  }
  return c;
}

StateVector GroundBasis::combine(const Eigen::VectorXcd& coefficients) const {
  if (coefficients.size() != static_cast<Eigen::Index>(size()))
    throw ParameterError("GroundBasis: coefficient count mismatch");
  StateVector v = StateVector::Zero(Eigen::Index{1} << n_qubits_);
  for (std::size_t k = 0; k < size(); ++k) {
    const cplx c = coefficients[static_cast<Eigen::Index>(k)];
    for (std::size_t p = offsets_[k]; p < offsets_[k + 1]; ++p)
      v[static_cast<Eigen::Index>(indices_[p])] += c * values_[p];
  }
  return v;
}

GroundBasis GroundBasis::transformed(const Eigen::MatrixXcd& v) const {
  if (v.rows() != static_cast<Eigen::Index>(size()))
    throw ParameterError("GroundBasis: transformation has wrong row count");
  GroundBasis out(n_qubits_);
  for (Eigen::Index j = 0; j < v.cols(); ++j) {
    const StateVector col = combine(v.col(j));
    std::vector<std::uint64_t> idx;
    std::vector<cplx> val;
    for (Eigen::Index i = 0; i < col.size(); ++i)
      if (col[i] != cplx{}) {
        idx.push_back(static_cast<std::uint64_t>(i));
        val.push_back(col[i]);
      }
    out.push_back(std::move(idx), std::move(val));
  }
  return out;
}

double GroundBasis::orthonormality_error() const {
  double worst = 0.0;
  for (std::size_t k = 0; k < size(); ++k) {
    const StateVector vk = vector(k);
    for (std::size_t l = k; l < size(); ++l) {
      cplx acc{};
      for (std::size_t p = offsets_[l]; p < offsets_[l + 1]; ++p)
        acc += std::conj(vk[static_cast<Eigen::Index>(indices_[p])]) * values_[p];
      worst = std::max(worst, std::abs(acc - (k == l ? 1.0 : 0.0)));
    }
  }
  return worst;
}

std::string to_string(SpectrumMethod method) {
  return method == SpectrumMethod::Dense ? "dense" : "iterative";
}

// ------------------------------------------------------------- dense oracle

DenseSpectrum dense_spectrum(const SparseHamiltonian& h, std::size_t max_dimension) {
  if (h.dimension() > max_dimension)
    throw ParameterError("dense_spectrum: dimension " + std::to_string(h.dimension()) +
                         " exceeds the dense limit " + std::to_string(max_dimension) +
                         "; use the iterative solver");
  Eigen::MatrixXcd m = Eigen::MatrixXcd(h.matrix());
  m = 0.5 * (m + m.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(m);
  if (eig.info() != Eigen::Success) throw NumericalError("dense_spectrum: eigensolver failed");
  return {eig.eigenvalues(), eig.eigenvectors()};
}

SpectrumResult spectrum_from_dense(const SparseHamiltonian& h, const SpectrumOptions& options,
                                   std::size_t max_dimension) {
  const DenseSpectrum ds = dense_spectrum(h, max_dimension);
  const double tol = options.degeneracy_tol * options.energy_unit;
  SpectrumResult res;
  res.method = SpectrumMethod::Dense;
  res.degeneracy_tol = tol;
  res.residual_tol = options.residual_tol * options.energy_unit;
  res.ground_energy = ds.values[0];
  Eigen::Index g = 0;
  while (g < ds.values.size() && ds.values[g] < res.ground_energy + tol) ++g;
  res.degeneracy = static_cast<std::uint64_t>(g);
  if (g < ds.values.size()) {
    res.gap_delta = ds.values[g] - res.ground_energy;
    res.ambiguous = *res.gap_delta < 100.0 * tol;
  }
  if (options.keep_basis)
    res.ground_basis = GroundBasis::from_columns(h.n_qubits(), ds.vectors.leftCols(g));
  else
    res.ground_basis = GroundBasis(h.n_qubits());
  res.sectors_solved = 1;
  return res;
}

// ------------------------------------------------------------ sector solver

namespace {

using Matrix = SparseHamiltonian::Matrix;

void multiply(const Matrix& a, const Eigen::MatrixXcd& x, Eigen::MatrixXcd& y) {
  y.resize(a.rows(), x.cols());
  const int* outer = a.outerIndexPtr();
  const int* inner = a.innerIndexPtr();
  const cplx* values = a.valuePtr();
  for (Eigen::Index c = 0; c < x.cols(); ++c)
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      cplx acc{};
      for (int k = outer[r]; k < outer[r + 1]; ++k) acc += values[k] * x(inner[k], c);
      y(r, c) = acc;
    }
}

struct Span {
  const Eigen::MatrixXcd* basis;
  Eigen::Index cols;
};

// Orthonormalizes the columns of v against the given spans and against each
// other, one column at a time. A column is reorthogonalized while a pass
// removes more than half of its norm, and dropped once it has lost all but
// a 1e-8 fraction of its starting norm.
Eigen::MatrixXcd orthonormal_extension(const Eigen::MatrixXcd& v, std::initializer_list<Span> spans) {
  Eigen::MatrixXcd out(v.rows(), v.cols());
  Eigen::Index kept = 0;
  for (Eigen::Index c = 0; c < v.cols(); ++c) {
    Eigen::VectorXcd x = v.col(c);
    const double start = x.norm();
    if (!(start > 0.0)) continue;
    double nrm = start;
    bool ok = false;
    for (int pass = 0; pass < 4; ++pass) {
      for (const Span& sp : spans)
        if (sp.cols > 0) {
          const auto b = sp.basis->leftCols(sp.cols);
          x.noalias() -= b * (b.adjoint() * x);
        }
      if (kept > 0) {
        const auto b = out.leftCols(kept);
        x.noalias() -= b * (b.adjoint() * x);
      }
      const double after = x.norm();
      if (after <= 1e-8 * start) break;
      if (after > 0.5 * nrm) {
        ok = true;
        nrm = after;
        break;
      }
      nrm = after;
    }
    if (ok) out.col(kept++) = x / nrm;
  }
  return out.leftCols(kept);
}

Eigen::MatrixXcd random_block(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c)
    for (Eigen::Index r = 0; r < rows; ++r) {
      const double re = 2.0 * unit_uniform(rng()) - 1.0;
      const double im = 2.0 * unit_uniform(rng()) - 1.0;
      m(r, c) = cplx(re, im);
    }
  return m;
}

double max_row_sum(const Matrix& a) {
  double best = 0.0;
  for (Eigen::Index r = 0; r < a.outerSize(); ++r) {
    double row = 0.0;
    for (Matrix::InnerIterator it(a, r); it; ++it) row += std::abs(it.value());
    best = std::max(best, row);
  }
  return best;
}

// Orthonormal start block of b columns, orthogonal to the locked vectors.
Eigen::MatrixXcd prepare_block(Eigen::MatrixXcd block, const Eigen::MatrixXcd& locked,
                               Eigen::Index n_locked, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    Eigen::MatrixXcd q = orthonormal_extension(block, {{&locked, n_locked}});
    if (q.cols() > 0) return q;
    block = random_block(block.rows(), std::max<Eigen::Index>(1, block.cols()), rng);
  }
  throw NumericalError("solve_sector: could not build a start block");
}

}  // namespace

SectorSolve solve_sector(const Matrix& a, const SpectrumOptions& options, std::uint64_t seed) {
  const Eigen::Index n = a.rows();
  if (n == 0) throw ParameterError("solve_sector: empty block");
  const double scale = std::max(1.0, max_row_sum(a));
  const double tol = options.degeneracy_tol * options.energy_unit;
  const double rtol = options.residual_tol * std::max(options.energy_unit, scale);
  const Eigen::Index block_size = std::max(1, options.block_size);
  const Eigen::Index max_subspace = std::max<Eigen::Index>(options.max_subspace, 2 * block_size);

  std::mt19937_64 rng(seed);
  Eigen::MatrixXcd locked(n, 0);
  Eigen::Index n_locked = 0;
  std::optional<double> level;
  SectorSolve out;

  auto lock = [&](const Eigen::MatrixXcd& cols) {
    if (cols.cols() == 0) return;
    Eigen::MatrixXcd q = orthonormal_extension(cols, {{&locked, n_locked}});
    locked.conservativeResize(n, n_locked + q.cols());
    locked.rightCols(q.cols()) = q;
    n_locked += q.cols();
  };

  Eigen::MatrixXcd start = random_block(n, std::min(block_size, n), rng);
  std::vector<double> last_residuals;

  for (int restart = 0; restart <= options.max_restarts; ++restart) {
    const Eigen::Index free_dim = n - n_locked;
    if (free_dim == 0) {
      // Every state of the block is ground; nothing lies above.
      out.lowest = *level;
      out.ground_vectors = locked;
      return out;
    }
    const Eigen::Index kmax = std::min(free_dim, max_subspace);
    Eigen::MatrixXcd q(n, kmax), aq(n, kmax);
    Eigen::Index k = 0;

    Eigen::MatrixXcd block =
        prepare_block(start.leftCols(std::min(start.cols(), free_dim)), locked, n_locked, rng);
    Eigen::MatrixXcd ablock;
    for (;;) {
      const Eigen::Index take = std::min(block.cols(), kmax - k);
      q.middleCols(k, take) = block.leftCols(take);
      multiply(a, block.leftCols(take), ablock);
      aq.middleCols(k, take) = ablock;
      k += take;
      if (k >= kmax) break;
      block = orthonormal_extension(ablock, {{&locked, n_locked}, {&q, k}});
      if (block.cols() == 0) break;  // invariant subspace
    }
    const bool full_span = (k == free_dim);

    Eigen::MatrixXcd t = q.leftCols(k).adjoint() * aq.leftCols(k);
    t = 0.5 * (t + t.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(t);
    if (eig.info() != Eigen::Success) throw NumericalError("solve_sector: Ritz problem failed");
    const Eigen::VectorXd theta = eig.eigenvalues();
    const double lvl = level.value_or(theta[0]);

    Eigen::Index n_ground = 0;
    while (n_ground < k && theta[n_ground] < lvl + tol) ++n_ground;
    const Eigen::Index wanted =
        full_span ? std::min(k, n_ground + 1)
                  : std::min(k, std::max(n_ground + 1, std::min(block_size, k)));
    const Eigen::MatrixXcd y = eig.eigenvectors().leftCols(wanted);
    const Eigen::MatrixXcd x = q.leftCols(k) * y;
    Eigen::MatrixXcd r = aq.leftCols(k) * y;
    r -= x * theta.head(wanted).asDiagonal();
    const Eigen::VectorXd res = r.colwise().norm().transpose();
    last_residuals.assign(res.data(), res.data() + res.size());

    if (!level && (full_span || res[0] <= rtol)) level = theta[0];

    if (full_span) {
      for (Eigen::Index i = 0; i < n_ground; ++i)
        out.max_residual = std::max(out.max_residual, res[i]);
      lock(x.leftCols(n_ground));
      out.lowest = *level;
      out.ground_vectors = locked;
      if (n_ground < k) {
        out.first_excited = theta[n_ground];
        out.max_residual = std::max(out.max_residual, res[n_ground]);
        out.ambiguous = theta[n_ground] < *level + 100.0 * tol;
      }
      return out;
    }

    if (level) {
      std::vector<Eigen::Index> newly;
      for (Eigen::Index i = 0; i < n_ground; ++i)
        if (res[i] <= rtol) newly.push_back(i);
      if (newly.empty() && n_ground == 0 && res[0] <= rtol) {
        out.lowest = *level;
        out.ground_vectors = locked;
        out.first_excited = theta[0];
        out.max_residual = std::max(out.max_residual, res[0]);
        out.ambiguous = theta[0] < *level + 100.0 * tol;
        return out;
      }
      Eigen::MatrixXcd accepted(n, static_cast<Eigen::Index>(newly.size()));
      for (std::size_t j = 0; j < newly.size(); ++j) {
        accepted.col(static_cast<Eigen::Index>(j)) = x.col(newly[j]);
        out.max_residual = std::max(out.max_residual, res[newly[j]]);
      }
      lock(accepted);
    }

    // Restart from the lowest unlocked Ritz vectors plus one fresh direction.
    const Eigen::Index b = std::min(block_size, n - n_locked);
    if (b == 0) continue;
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < wanted && static_cast<Eigen::Index>(keep.size()) < b; ++i) {
      const bool was_locked = level && i < n_ground && res[i] <= rtol;
      if (!was_locked) keep.push_back(i);
    }
    start.resize(n, b);
    Eigen::Index c = 0;
    for (; c < static_cast<Eigen::Index>(keep.size()) && c < b - (b > 1 ? 1 : 0); ++c)
      start.col(c) = x.col(keep[static_cast<std::size_t>(c)]);
    if (c < b) start.rightCols(b - c) = random_block(n, b - c, rng);
  }
  throw NumericalError("solve_sector: no convergence within the restart cap",
                       last_residuals);
}

// ------------------------------------------------------------ ground_and_gap

namespace {

struct SparseVec {
  std::vector<std::uint64_t> idx;  // local basis indices, ascending
  std::vector<cplx> val;
};

struct GroupResult {
  std::vector<int> qubits;
  double ground = 0.0;
  std::optional<double> gap;
  std::uint64_t degeneracy = 0;
  std::vector<SparseVec> vectors;
  bool ambiguous = false;
  double max_residual = 0.0;
};

struct SectorTask {
  std::size_t group = 0;
  std::vector<std::uint64_t> states;
  Matrix block;
  std::uint64_t seed = 0;
};

std::vector<std::vector<int>> qubit_groups(const SparseHamiltonian& h) {
  const int n = h.n_qubits();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const LocalTerm& t : h.terms()) {
    const int ra = root(t.a), rb = root(t.b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::vector<std::vector<int>> groups;
  std::vector<int> slot(n, -1);
  for (int q = 0; q < n; ++q) {
    const int r = root(q);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[slot[r]].push_back(q);
  }
  return groups;
}

Matrix extract_block(const Matrix& m, const std::vector<std::uint64_t>& states,
                     const std::vector<int>& position) {
  std::vector<Eigen::Triplet<cplx>> triplets;
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (Matrix::InnerIterator it(m, static_cast<Eigen::Index>(states[i])); it; ++it) {
      const int j = position[static_cast<std::size_t>(it.col())];
      if (j < 0) throw ParameterError("sector block is not closed under the operator");
      triplets.emplace_back(static_cast<int>(i), j, it.value());
    }
  }
  const auto dim = static_cast<Eigen::Index>(states.size());
  Matrix block(dim, dim);
  block.setFromTriplets(triplets.begin(), triplets.end());
  block.makeCompressed();
  return block;
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = base ^ (a * 0x9e3779b97f4a7c15ULL) ^ (b * 0xbf58476d1ce4e5b9ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

SpectrumResult ground_and_gap(const SparseHamiltonian& h, const SpectrumOptions& options) {
  const int n = h.n_qubits();
  const double tol = options.degeneracy_tol * options.energy_unit;

  std::vector<std::vector<int>> groups;
  std::vector<SparseHamiltonian> operators;
  if (options.factorize_components && h.has_terms()) {
    groups = qubit_groups(h);
    std::vector<int> group_of(n), local_of(n);
    for (std::size_t g = 0; g < groups.size(); ++g)
      for (std::size_t i = 0; i < groups[g].size(); ++i) {
        group_of[groups[g][i]] = static_cast<int>(g);
        local_of[groups[g][i]] = static_cast<int>(i);
      }
    std::vector<std::vector<LocalTerm>> local_terms(groups.size());
    for (const LocalTerm& t : h.terms())
      local_terms[group_of[t.a]].push_back({local_of[t.a], local_of[t.b], t.matrix});
    if (groups.size() == 1) {
      operators.push_back(h);
    } else {
      for (std::size_t g = 0; g < groups.size(); ++g)
        operators.emplace_back(static_cast<int>(groups[g].size()), std::move(local_terms[g]));
    }
  } else {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    groups.push_back(all);
    operators.push_back(h);
  }

  // One task per (group, sector).
  std::vector<SectorTask> tasks;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const SparseHamiltonian& op = operators[g];
    const std::uint64_t dim = op.dimension();
    const bool sectored = op.conserves_magnetization();
    const int n_sectors = sectored ? op.n_qubits() + 1 : 1;
    std::vector<std::vector<std::uint64_t>> states(n_sectors);
    std::vector<int> position(dim, -1);
    for (std::uint64_t s = 0; s < dim; ++s) {
      const int sec = sectored ? std::popcount(s) : 0;
      position[s] = static_cast<int>(states[sec].size());
      states[sec].push_back(s);
    }
    for (int sec = 0; sec < n_sectors; ++sec) {
      // Positions are only valid within one sector; rebuild per sector.
      std::vector<int> local(dim, -1);
      for (std::size_t i = 0; i < states[sec].size(); ++i)
        local[states[sec][i]] = static_cast<int>(i);
      SectorTask task;
      task.group = g;
      task.block = extract_block(op.matrix(), states[sec], local);
      task.states = std::move(states[sec]);
      task.seed = mix_seed(options.seed, g, static_cast<std::uint64_t>(sec));
      tasks.push_back(std::move(task));
    }
  }

  std::vector<SectorSolve> solves(tasks.size());
  parallel_for(tasks.size(), options.parallelism, [&](std::size_t i) {
    SectorSolve s = solve_sector(tasks[i].block, options, tasks[i].seed);
    const bool tight = s.ambiguous;
    if (tight) {
      SpectrumOptions tighter = options;
      tighter.residual_tol *= 1e-2;
      tighter.max_subspace *= 2;
      tighter.max_restarts *= 2;
      s = solve_sector(tasks[i].block, tighter, tasks[i].seed ^ 0x5555555555555555ULL);
    }
    solves[i] = std::move(s);
  });

  // Merge sectors within each group.
  std::vector<GroupResult> results(groups.size());
  for (std::size_t g = 0; g < groups.size(); ++g) {
    results[g].qubits = groups[g];
    results[g].ground = std::numeric_limits<double>::infinity();
  }
  for (std::size_t i = 0; i < tasks.size(); ++i)
    results[tasks[i].group].ground = std::min(results[tasks[i].group].ground, solves[i].lowest);
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    GroupResult& gr = results[tasks[i].group];
    const SectorSolve& s = solves[i];
    gr.max_residual = std::max(gr.max_residual, s.max_residual);
    std::optional<double> candidate;
    if (s.lowest < gr.ground + tol) {
      gr.degeneracy += static_cast<std::uint64_t>(s.ground_vectors.cols());
      candidate = s.first_excited;
      gr.ambiguous = gr.ambiguous || s.ambiguous;
      if (options.keep_basis)
        for (Eigen::Index c = 0; c < s.ground_vectors.cols(); ++c) {
          SparseVec v;
          for (Eigen::Index r = 0; r < s.ground_vectors.rows(); ++r)
            if (s.ground_vectors(r, c) != cplx{}) {
              v.idx.push_back(tasks[i].states[static_cast<std::size_t>(r)]);
              v.val.push_back(s.ground_vectors(r, c));
            }
          gr.vectors.push_back(std::move(v));
        }
    } else {
      candidate = s.lowest;
      if (s.lowest < gr.ground + 100.0 * tol) gr.ambiguous = true;
    }
    if (candidate) {
      const double gap = *candidate - gr.ground;
      gr.gap = gr.gap ? std::min(*gr.gap, gap) : gap;
    }
  }

  SpectrumResult res;
  res.method = SpectrumMethod::Iterative;
  res.degeneracy_tol = tol;
  res.residual_tol = options.residual_tol * options.energy_unit;
  res.components = static_cast<int>(groups.size());
  res.sectors_solved = static_cast<int>(tasks.size());
  res.degeneracy = 1;
  for (const GroupResult& gr : results) {
    res.ground_energy += gr.ground;
    res.degeneracy *= gr.degeneracy;
    if (gr.gap) res.gap_delta = res.gap_delta ? std::min(*res.gap_delta, *gr.gap) : *gr.gap;
    res.ambiguous = res.ambiguous || gr.ambiguous;
    res.max_residual = std::max(res.max_residual, gr.max_residual);
  }
  if (res.gap_delta && *res.gap_delta < 100.0 * tol) res.ambiguous = true;

  res.ground_basis = GroundBasis(n);
  if (options.keep_basis) {
    // Tensor products of group ground vectors, last group varying fastest.
    std::vector<std::size_t> choice(results.size(), 0);
    for (;;) {
      std::vector<std::uint64_t> idx{0};
      std::vector<cplx> val{1.0};
      for (std::size_t g = 0; g < results.size(); ++g) {
        const SparseVec& v = results[g].vectors[choice[g]];
        std::vector<std::uint64_t> nidx;
        std::vector<cplx> nval;
        nidx.reserve(idx.size() * v.idx.size());
        nval.reserve(idx.size() * v.idx.size());
        for (std::size_t p = 0; p < idx.size(); ++p)
          for (std::size_t q = 0; q < v.idx.size(); ++q) {
            std::uint64_t full = idx[p];
            for (std::size_t b = 0; b < results[g].qubits.size(); ++b)
              if (v.idx[q] & (std::uint64_t{1} << b))
                full |= std::uint64_t{1} << results[g].qubits[b];
            nidx.push_back(full);
            nval.push_back(val[p] * v.val[q]);
          }
        idx = std::move(nidx);
        val = std::move(nval);
      }
      std::vector<std::size_t> order(idx.size());
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return idx[l] < idx[r]; });
      std::vector<std::uint64_t> sidx(idx.size());
      std::vector<cplx> sval(idx.size());
      for (std::size_t p = 0; p < order.size(); ++p) {
        sidx[p] = idx[order[p]];
        sval[p] = val[order[p]];
      }
      res.ground_basis.push_back(std::move(sidx), std::move(sval));

      std::size_t g = results.size();
      while (g > 0) {
        --g;
        if (++choice[g] < results[g].vectors.size()) break;
        choice[g] = 0;
        if (g == 0) return res;
      }
      if (results.empty()) return res;
    }
  }
  return res;
}

double inverse_square_gap(const SpectrumResult& res) {
  if (!res.gap_delta) throw NumericalError("inverse_square_gap: operator has no excited level");
  const double d = *res.gap_delta;
  if (!(d > 0.0)) throw NumericalError("inverse_square_gap: zero gap");
  return 1.0 / (d * d);
}

}  // namespace q2sat
