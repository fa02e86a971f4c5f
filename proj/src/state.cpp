// Copyright 2026 The sre-purity Authors
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

#include "sre/state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "sre/errors.hpp"

namespace sre {

namespace {

uint64_t pow2(int k) { return uint64_t{1} << k; }

int bit_of(int num_qubits, int qubit) { return num_qubits - 1 - qubit; }

void check_qubits(int num_qubits, std::span<const int> qubits, const char* what) {
  uint64_t seen = 0;
  for (int q : qubits) {
    if (q < 0 || q >= num_qubits) {
      throw DimensionError(std::string(what) + ": qubit index " + std::to_string(q) +
                           " out of range for " + std::to_string(num_qubits) + " qubits");
    }
    if (seen & pow2(q)) {
      throw DimensionError(std::string(what) + ": repeated qubit index " + std::to_string(q));
    }
    seen |= pow2(q);
  }
}

// offsets[v] scatters the bits of v (most significant = qubits[0]) onto the
// register positions of `qubits`.
std::vector<uint64_t> scatter_table(int num_qubits, std::span<const int> qubits) {
  const int k = static_cast<int>(qubits.size());
  std::vector<uint64_t> offsets(pow2(k), 0);
  for (uint64_t v = 0; v < offsets.size(); ++v) {
    uint64_t off = 0;
    for (int i = 0; i < k; ++i) {
      if ((v >> (k - 1 - i)) & 1) off |= pow2(bit_of(num_qubits, qubits[i]));
    }
    offsets[v] = off;
  }
  return offsets;
}

std::vector<int> complement(int num_qubits, std::span<const int> qubits) {
  std::vector<int> rest;
  for (int q = 0; q < num_qubits; ++q) {
    if (std::find(qubits.begin(), qubits.end(), q) == qubits.end()) rest.push_back(q);
  }
  return rest;
}

}  // namespace

void check_qubit_count(int num_qubits, int limit, const char* what) {
  if (num_qubits < 1) {
    throw SizeError(std::string(what) + ": need at least one qubit");
  }
  if (num_qubits > limit) {
    throw SizeError(std::string(what) + ": " + std::to_string(num_qubits) +
                    " qubits exceeds the limit of " + std::to_string(limit));
  }
}

// ---------------------------------------------------------------------------

StateVector::StateVector(int num_qubits, Eigen::VectorXcd amps)
    : num_qubits_(num_qubits), amps_(std::move(amps)) {
  check_qubit_count(num_qubits, kMaxStateQubits, "StateVector");
  if (static_cast<uint64_t>(amps_.size()) != pow2(num_qubits)) {
    throw DimensionError("StateVector: expected " + std::to_string(pow2(num_qubits)) +
                         " amplitudes, got " + std::to_string(amps_.size()));
  }
  const double norm2 = amps_.squaredNorm();
  if (!(std::abs(norm2 - 1.0) <= kNormTolerance)) {
    throw std::invalid_argument("StateVector: squared norm " + std::to_string(norm2) +
                                " is not 1");
  }
}

StateVector StateVector::normalized(int num_qubits, Eigen::VectorXcd amps) {
  const double norm = amps.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw std::invalid_argument("StateVector: cannot normalize a zero or non-finite vector");
  }
  amps /= norm;
  return StateVector(num_qubits, std::move(amps));
}

StateVector StateVector::basis(int num_qubits, uint64_t index) {
  check_qubit_count(num_qubits, kMaxStateQubits, "StateVector");
  if (index >= pow2(num_qubits)) throw DimensionError("StateVector: basis index out of range");
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(pow2(num_qubits)));
  amps[static_cast<Eigen::Index>(index)] = 1.0;
  return StateVector(num_qubits, std::move(amps));
}

DensityMatrix StateVector::projector() const {
  check_qubit_count(num_qubits_, kMaxDensityQubits, "projector");
  return DensityMatrix(num_qubits_, amps_ * amps_.adjoint());
}

// ---------------------------------------------------------------------------

DensityMatrix::DensityMatrix(int num_qubits, Eigen::MatrixXcd entries)
    : num_qubits_(num_qubits), entries_(std::move(entries)) {
  check_qubit_count(num_qubits, kMaxDensityQubits, "DensityMatrix");
  const auto dim = static_cast<Eigen::Index>(pow2(num_qubits));
  if (entries_.rows() != dim || entries_.cols() != dim) {
    throw DimensionError("DensityMatrix: expected a " + std::to_string(dim) + " x " +
                         std::to_string(dim) + " matrix");
  }
  const double herm = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  if (!(herm <= kDensityTolerance)) {
    throw std::invalid_argument("DensityMatrix: not Hermitian (residual " +
                                std::to_string(herm) + ")");
  }
  const cplx tr = entries_.trace();
  if (!(std::abs(tr - cplx(1.0, 0.0)) <= kDensityTolerance)) {
    throw std::invalid_argument("DensityMatrix: trace is " + std::to_string(tr.real()) +
                                ", expected 1");
  }
}

DensityMatrix DensityMatrix::maximally_mixed(int num_qubits) {
  check_qubit_count(num_qubits, kMaxDensityQubits, "DensityMatrix");
  const auto dim = static_cast<Eigen::Index>(pow2(num_qubits));
  return DensityMatrix(num_qubits,
                       Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim));
}

std::vector<double> DensityMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(entries_, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

bool DensityMatrix::is_positive(double tol) const {
  const auto ev = eigenvalues();
  return ev.empty() || ev.front() >= -tol;
}

// ---------------------------------------------------------------------------

BipartiteSplit::BipartiteSplit(int num_qubits, std::vector<int> subsystem_a)
    : num_qubits_(num_qubits), a_(std::move(subsystem_a)) {
  check_qubit_count(num_qubits, kMaxStateQubits, "BipartiteSplit");
  check_qubits(num_qubits, a_, "BipartiteSplit");
  b_ = complement(num_qubits, a_);
  if (a_.empty() || b_.empty()) {
    throw DimensionError("BipartiteSplit: both sides must be nonempty");
  }
}

int RegisterLayout::total_qubits() const {
  int total = static_cast<int>(ancilla.size());
  for (const auto& b : blocks) total += static_cast<int>(b.size());
  return total;
}

RegisterLayout RegisterLayout::standard(int n, int alpha) {
  RegisterLayout layout;
  int q = 0;
  for (int i = 0; i < 2 * n; ++i) layout.ancilla.push_back(q++);
  for (int b = 0; b < alpha; ++b) {
    std::vector<int> block;
    for (int i = 0; i < n; ++i) block.push_back(q++);
    layout.blocks.push_back(std::move(block));
  }
  return layout;
}

// ---------------------------------------------------------------------------

StateVector tensor(const StateVector& a, const StateVector& b) {
  const int n = a.num_qubits() + b.num_qubits();
  check_qubit_count(n, kMaxStateQubits, "tensor");
  const auto& va = a.amplitudes();
  const auto& vb = b.amplitudes();
  Eigen::VectorXcd out(va.size() * vb.size());
  for (Eigen::Index i = 0; i < va.size(); ++i) out.segment(i * vb.size(), vb.size()) = va[i] * vb;
  return StateVector(n, std::move(out));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  const int n = a.num_qubits() + b.num_qubits();
  check_qubit_count(n, kMaxDensityQubits, "tensor");
  const auto& ma = a.matrix();
  const auto& mb = b.matrix();
  const Eigen::Index db = mb.rows();
  Eigen::MatrixXcd out(ma.rows() * db, ma.cols() * db);
  for (Eigen::Index r = 0; r < ma.rows(); ++r) {
    for (Eigen::Index c = 0; c < ma.cols(); ++c) out.block(r * db, c * db, db, db) = ma(r, c) * mb;
  }
  return DensityMatrix(n, std::move(out));
}

StateVector tensor_power(const StateVector& psi, int alpha) {
  if (alpha < 1) throw std::invalid_argument("tensor_power: alpha must be positive");
  check_qubit_count(psi.num_qubits() * alpha, kMaxStateQubits, "tensor_power");
  StateVector out = psi;
  for (int k = 1; k < alpha; ++k) out = tensor(out, psi);
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  const int n = rho.num_qubits();
  check_qubits(n, keep, "partial_trace");
  if (keep.empty()) throw DimensionError("partial_trace: nothing to keep");
  const auto traced = complement(n, keep);
  const auto keep_off = scatter_table(n, keep);
  const auto trace_off = scatter_table(n, traced);
  const auto& m = rho.matrix();
  const auto dk = static_cast<Eigen::Index>(keep_off.size());
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dk, dk);
  for (Eigen::Index r = 0; r < dk; ++r) {
    for (Eigen::Index c = 0; c < dk; ++c) {
      cplx acc = 0.0;
      for (uint64_t t : trace_off) {
        acc += m(static_cast<Eigen::Index>(keep_off[r] | t), static_cast<Eigen::Index>(keep_off[c] | t));
      }
      out(r, c) = acc;
    }
  }
  return DensityMatrix(static_cast<int>(keep.size()), std::move(out));
}

DensityMatrix reduced_state(const StateVector& psi, std::span<const int> keep) {
  const int n = psi.num_qubits();
  check_qubits(n, keep, "reduced_state");
  if (keep.empty()) throw DimensionError("reduced_state: nothing to keep");
  check_qubit_count(static_cast<int>(keep.size()), kMaxDensityQubits, "reduced_state");
  const auto traced = complement(n, keep);
  const auto keep_off = scatter_table(n, keep);
  const auto trace_off = scatter_table(n, traced);
  Eigen::MatrixXcd mat(static_cast<Eigen::Index>(keep_off.size()),
                       static_cast<Eigen::Index>(trace_off.size()));
  for (std::size_t k = 0; k < keep_off.size(); ++k) {
    for (std::size_t t = 0; t < trace_off.size(); ++t) {
      mat(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(t)) = psi[keep_off[k] | trace_off[t]];
    }
  }
  Eigen::MatrixXcd rho = mat * mat.adjoint();
  // Exact Hermitian symmetrization removes rounding asymmetry.
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(static_cast<int>(keep.size()), std::move(rho));
}

double purity(const DensityMatrix& rho) { return rho.matrix().squaredNorm(); }

double overlap(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.num_qubits() != sigma.num_qubits()) throw DimensionError("overlap: size mismatch");
  // tr[rho sigma] = sum_ij rho_ij sigma_ji = sum_ij rho_ij conj(sigma_ij).
  return rho.matrix().cwiseProduct(sigma.matrix().conjugate()).sum().real();
}

double overlap(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) throw DimensionError("overlap: size mismatch");
  return std::norm(a.amplitudes().dot(b.amplitudes()));
}

SchmidtSpectrum schmidt_spectrum(const StateVector& psi, const BipartiteSplit& split) {
  if (split.num_qubits() != psi.num_qubits()) {
    throw DimensionError("schmidt_spectrum: split and state sizes differ");
  }
  const auto& smaller = split.a().size() <= split.b().size() ? split.a() : split.b();
  const auto ev = reduced_state(psi, smaller).eigenvalues();
  SchmidtSpectrum spectrum;
  spectrum.lambdas.reserve(ev.size());
  for (auto it = ev.rbegin(); it != ev.rend(); ++it) spectrum.lambdas.push_back(std::clamp(*it, 0.0, 1.0));
  return spectrum;
}

double renyi_entanglement(const SchmidtSpectrum& spectrum, double beta) {
  if (!(beta > 0.0) || beta == 1.0) {
    throw std::invalid_argument("renyi_entanglement: beta must be positive and != 1");
  }
  double sum = 0.0;
  for (double l : spectrum.lambdas) {
    if (l > 0.0) sum += std::pow(l, beta);
  }
  return std::log(sum) / (1.0 - beta);
}

StateVector hadamard_layer(const StateVector& psi, std::span<const int> targets) {
  const int n = psi.num_qubits();
  check_qubits(n, targets, "hadamard_layer");
  Eigen::VectorXcd amps = psi.amplitudes();
  const double h = std::numbers::sqrt2 / 2.0;
  const uint64_t dim = psi.dim();
  for (int q : targets) {
    const uint64_t stride = pow2(bit_of(n, q));
    for (uint64_t i = 0; i < dim; ++i) {
      if (i & stride) continue;
      const auto lo = static_cast<Eigen::Index>(i);
      const auto hi = static_cast<Eigen::Index>(i | stride);
      const cplx a = amps[lo];
      const cplx b = amps[hi];
      amps[lo] = h * (a + b);
      amps[hi] = h * (a - b);
    }
  }
  return StateVector(n, std::move(amps));
}

StateVector apply_operator(const StateVector& psi, const Eigen::MatrixXcd& op,
                           std::span<const int> qubits) {
  const int n = psi.num_qubits();
  check_qubits(n, qubits, "apply_operator");
  const auto k = static_cast<Eigen::Index>(pow2(static_cast<int>(qubits.size())));
  if (op.rows() != k || op.cols() != k) throw DimensionError("apply_operator: operator size mismatch");
  const auto rest = complement(n, qubits);
  const auto local_off = scatter_table(n, qubits);
  const auto rest_off = scatter_table(n, rest);
  const auto& in = psi.amplitudes();
  Eigen::VectorXcd out(in.size());
  Eigen::VectorXcd block(k);
  for (uint64_t base : rest_off) {
    for (Eigen::Index v = 0; v < k; ++v) block[v] = in[static_cast<Eigen::Index>(base | local_off[v])];
    const Eigen::VectorXcd mapped = op * block;
    for (Eigen::Index v = 0; v < k; ++v) out[static_cast<Eigen::Index>(base | local_off[v])] = mapped[v];
  }
  return StateVector(n, std::move(out));
}

StateVector controlled_pauli_power(const StateVector& psi, const RegisterLayout& layout) {
  const int total = psi.num_qubits();
  check_qubit_count(total, kMaxStateQubits, "controlled_pauli_power");
  const int n = layout.block_qubits();
  if (n < 1 || layout.ancilla.size() != static_cast<std::size_t>(2 * n)) {
    throw DimensionError("controlled_pauli_power: ancilla must hold 2n qubits with n >= 1");
  }
  if (layout.blocks.empty()) throw DimensionError("controlled_pauli_power: no target blocks");
  std::vector<int> all = layout.ancilla;
  for (const auto& b : layout.blocks) {
    if (b.size() != static_cast<std::size_t>(n)) {
      throw DimensionError("controlled_pauli_power: every block must hold n qubits");
    }
    all.insert(all.end(), b.begin(), b.end());
  }
  check_qubits(total, all, "controlled_pauli_power");

  const int alpha = static_cast<int>(layout.blocks.size());
  const uint64_t strings = pow2(2 * n);
  const uint64_t block_dim = pow2(n);
  const auto ancilla_off = scatter_table(total, layout.ancilla);
  std::vector<std::vector<uint64_t>> block_off;
  for (const auto& b : layout.blocks) block_off.push_back(scatter_table(total, b));

  // Per ancilla value j: the register-wide X flip mask, Z sign mask, and the
  // i^{alpha * #Y} phase of P_j^{(x) alpha}. Block mask bit i is the block's
  // index bit i.
  std::vector<uint64_t> flip(strings), zsign(strings), anc_bits(strings);
  std::vector<cplx> phase(strings);
  static constexpr cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (uint64_t j = 0; j < strings; ++j) {
    const uint64_t x = j & (block_dim - 1);
    const uint64_t z = j >> n;
    uint64_t f = 0, s = 0;
    for (const auto& off : block_off) {
      f |= off[x];
      s |= off[z];
    }
    flip[j] = f;
    zsign[j] = s;
    phase[j] = kIPow[(alpha * std::popcount(x & z)) & 3];
    anc_bits[j] = ancilla_off[j];
  }
  const auto rest_off = scatter_table(total, complement(total, layout.ancilla));

  const auto& in = psi.amplitudes();
  Eigen::VectorXcd out(in.size());
  for (uint64_t j = 0; j < strings; ++j) {
    for (uint64_t r : rest_off) {
      const uint64_t s = anc_bits[j] | r;
      const double sign = (std::popcount(s & zsign[j]) & 1) ? -1.0 : 1.0;
      out[static_cast<Eigen::Index>(s ^ flip[j])] = phase[j] * sign * in[static_cast<Eigen::Index>(s)];
    }
  }
  return StateVector(total, std::move(out));
}

}  // namespace sre
