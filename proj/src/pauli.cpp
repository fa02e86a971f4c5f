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

#include "sre/pauli.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "sre/errors.hpp"

namespace sre {

namespace {

constexpr cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

uint64_t low_mask(int n) { return n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1; }

void check_same_size(const PauliString& a, const PauliString& b, const char* what) {
  if (a.num_qubits() != b.num_qubits()) {
    throw DimensionError(std::string(what) + ": Pauli strings act on " +
                         std::to_string(a.num_qubits()) + " and " + std::to_string(b.num_qubits()) +
                         " qubits");
  }
}

void check_state(const PauliString& p, const StateVector& psi, const char* what) {
  if (p.num_qubits() != psi.num_qubits()) {
    throw DimensionError(std::string(what) + ": string acts on " + std::to_string(p.num_qubits()) +
                         " qubits but the state has " + std::to_string(psi.num_qubits()));
  }
}

// In-place Walsh-Hadamard transform (unnormalized).
void walsh_hadamard(std::vector<cplx>& v) {
  for (std::size_t h = 1; h < v.size(); h <<= 1) {
    for (std::size_t i = 0; i < v.size(); i += h << 1) {
      for (std::size_t k = i; k < i + h; ++k) {
        const cplx a = v[k];
        const cplx b = v[k + h];
        v[k] = a + b;
        v[k + h] = a - b;
      }
    }
  }
}

}  // namespace

PauliString::PauliString(int num_qubits, uint64_t x_bits, uint64_t z_bits, int phase_exp)
    : num_qubits_(num_qubits), x_(x_bits), z_(z_bits), phase_(((phase_exp % 4) + 4) % 4) {
  check_qubit_count(num_qubits, kMaxPauliQubits, "PauliString");
  if ((x_bits | z_bits) & ~low_mask(num_qubits)) {
    throw DimensionError("PauliString: mask does not fit in " + std::to_string(num_qubits) +
                         " qubits");
  }
}

PauliString PauliString::from_index(int num_qubits, uint64_t index) {
  check_qubit_count(num_qubits, kMaxPauliQubits, "PauliString");
  if (index >> (2 * num_qubits)) throw DimensionError("PauliString: index out of range");
  const uint64_t x = index & low_mask(num_qubits);
  const uint64_t z = index >> num_qubits;
  return {num_qubits, x, z, std::popcount(x & z)};
}

PauliString PauliString::from_label(std::string_view label) {
  int phase = 0;
  if (!label.empty() && (label.front() == '+' || label.front() == '-')) {
    if (label.front() == '-') phase += 2;
    label.remove_prefix(1);
  }
  if (!label.empty() && label.front() == 'i') {
    phase += 1;
    label.remove_prefix(1);
  }
  const int n = static_cast<int>(label.size());
  check_qubit_count(n, kMaxPauliQubits, "PauliString");
  uint64_t x = 0, z = 0;
  for (int q = 0; q < n; ++q) {
    const uint64_t bit = uint64_t{1} << (n - 1 - q);
    switch (label[q]) {
      case 'I':
      case '_':
        break;
      case 'X':
        x |= bit;
        break;
      case 'Z':
        z |= bit;
        break;
      case 'Y':
        x |= bit;
        z |= bit;
        phase += 1;
        break;
      default:
        throw std::invalid_argument("PauliString: bad character '" + std::string(1, label[q]) +
                                    "' in label");
    }
  }
  return {n, x, z, phase};
}

int PauliString::hermitian_phase() const { return ((phase_ - std::popcount(x_ & z_)) % 4 + 4) % 4; }

cplx PauliString::phase() const { return kIPow[phase_]; }

std::string PauliString::letters() const {
  std::string out;
  for (int q = 0; q < num_qubits_; ++q) {
    const int b = num_qubits_ - 1 - q;
    const bool xb = (x_ >> b) & 1;
    const bool zb = (z_ >> b) & 1;
    out += xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
  }
  return out;
}

std::string PauliString::str() const {
  static constexpr const char* kPrefix[4] = {"+", "+i", "-", "-i"};
  return kPrefix[hermitian_phase()] + letters();
}

Eigen::MatrixXcd PauliString::to_dense() const {
  const auto dim = static_cast<Eigen::Index>(uint64_t{1} << num_qubits_);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (uint64_t c = 0; c < static_cast<uint64_t>(dim); ++c) {
    const double sign = (std::popcount(z_ & c) & 1) ? -1.0 : 1.0;
    m(static_cast<Eigen::Index>(c ^ x_), static_cast<Eigen::Index>(c)) = phase() * sign;
  }
  return m;
}

PauliString PauliString::repeated(int copies) const {
  if (copies < 1) throw std::invalid_argument("PauliString::repeated: copies must be positive");
  const int total = num_qubits_ * copies;
  check_qubit_count(total, kMaxPauliQubits, "PauliString::repeated");
  uint64_t x = 0, z = 0;
  for (int b = 0; b < copies; ++b) {
    x |= x_ << (b * num_qubits_);
    z |= z_ << (b * num_qubits_);
  }
  return {total, x, z, phase_ * copies};
}

std::vector<PauliString> enumerate_paulis(int num_qubits) {
  check_qubit_count(num_qubits, kMaxPauliQubits, "enumerate_paulis");
  const uint64_t count = uint64_t{1} << (2 * num_qubits);
  std::vector<PauliString> out;
  out.reserve(count);
  for (uint64_t j = 0; j < count; ++j) out.push_back(PauliString::from_index(num_qubits, j));
  return out;
}

PauliString pauli_mul(const PauliString& a, const PauliString& b) {
  check_same_size(a, b, "pauli_mul");
  // X^xa Z^za X^xb Z^zb = (-1)^{|za & xb|} X^{xa ^ xb} Z^{za ^ zb}.
#ifdef SRE_FAULT_FLIP_PRODUCT_SIGN
  const int swap_phase = 0;
#else
  const int swap_phase = 2 * std::popcount(a.z_bits() & b.x_bits());
#endif
  return {a.num_qubits(), a.x_bits() ^ b.x_bits(), a.z_bits() ^ b.z_bits(),
          a.phase_exp() + b.phase_exp() + swap_phase};
}

bool commutes(const PauliString& a, const PauliString& b) {
  check_same_size(a, b, "commutes");
  return ((std::popcount(a.x_bits() & b.z_bits()) + std::popcount(a.z_bits() & b.x_bits())) & 1) == 0;
}

StateVector apply_pauli(const PauliString& p, const StateVector& psi) {
  check_state(p, psi, "apply_pauli");
  const auto& in = psi.amplitudes();
  Eigen::VectorXcd out(in.size());
  const cplx ph = p.phase();
  const cplx neg = -ph;
  for (uint64_t c = 0; c < psi.dim(); ++c) {
    out[static_cast<Eigen::Index>(c ^ p.x_bits())] =
        ((std::popcount(p.z_bits() & c) & 1) ? neg : ph) * in[static_cast<Eigen::Index>(c)];
  }
  return StateVector(psi.num_qubits(), std::move(out));
}

cplx expectation(const PauliString& p, const StateVector& psi) {
  check_state(p, psi, "expectation");
  cplx acc = 0.0;
  for (uint64_t c = 0; c < psi.dim(); ++c) {
    const cplx term = std::conj(psi[c ^ p.x_bits()]) * psi[c];
    acc += (std::popcount(p.z_bits() & c) & 1) ? -term : term;
  }
  return p.phase() * acc;
}

double expval(const PauliString& p, const StateVector& psi) {
  if (!p.is_hermitian()) throw std::invalid_argument("expval: string " + p.str() + " is not Hermitian");
  const cplx e = expectation(p, psi);
  if (std::abs(e.imag()) > kExactTolerance) {
    throw ConsistencyError("expval: imaginary residual " + std::to_string(e.imag()) + " for " +
                           p.str());
  }
  return e.real();
}

std::vector<cplx> raw_expectation_table(const StateVector& psi) {
  const int n = psi.num_qubits();
  check_qubit_count(n, kMaxPauliQubits, "raw_expectation_table");
  const uint64_t d = psi.dim();
  std::vector<cplx> table(d * d);
  std::vector<cplx> v(d);
  for (uint64_t x = 0; x < d; ++x) {
    for (uint64_t c = 0; c < d; ++c) v[c] = std::conj(psi[c ^ x]) * psi[c];
    walsh_hadamard(v);
    for (uint64_t z = 0; z < d; ++z) table[x | (z << n)] = v[z];
  }
  return table;
}

std::vector<double> pauli_expectations(const StateVector& psi) {
  const int n = psi.num_qubits();
  const auto raw = raw_expectation_table(psi);
  const uint64_t d = psi.dim();
  std::vector<double> out(raw.size());
  for (uint64_t j = 0; j < raw.size(); ++j) {
    const uint64_t x = j & (d - 1);
    const uint64_t z = j >> n;
    const cplx e = kIPow[std::popcount(x & z) & 3] * raw[j];
    if (std::abs(e.imag()) > kExactTolerance) {
      throw ConsistencyError("pauli_expectations: imaginary residual " + std::to_string(e.imag()));
    }
    out[j] = e.real();
  }
  return out;
}

}  // namespace sre
