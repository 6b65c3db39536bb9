#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "qcount/gates.hpp"
#include "qcount/rng.hpp"
#include "qcount/state.hpp"
#include "qcount/unitary.hpp"

namespace qcount::testing {

inline double gaussian(Rng& rng) {
  const double u1 = std::max(rng.next_double(), 1e-300);
  const double u2 = rng.next_double();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

inline StateVector random_state(HilbertDims dims, Rng& rng) {
  std::vector<Complex> amps(dims.total());
  for (Complex& a : amps) a = Complex{gaussian(rng), gaussian(rng)};
  return StateVector(std::move(dims), std::move(amps)).normalized();
}

// Haar-ish unitary by Gram-Schmidt on a random complex matrix; independent of
// the library's structural builders.
inline DenseUnitary random_unitary(HilbertDims dims, Rng& rng) {
  const std::size_t n = dims.total();
  std::vector<std::vector<Complex>> cols(n, std::vector<Complex>(n));
  for (auto& col : cols)
    for (Complex& x : col) x = Complex{gaussian(rng), gaussian(rng)};
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      Complex proj{0.0, 0.0};
      for (std::size_t i = 0; i < n; ++i) proj += std::conj(cols[k][i]) * cols[j][i];
      for (std::size_t i = 0; i < n; ++i) cols[j][i] -= proj * cols[k][i];
    }
    double norm = 0.0;
    for (const Complex& x : cols[j]) norm += std::norm(x);
    norm = std::sqrt(norm);
    for (Complex& x : cols[j]) x /= norm;
  }
  std::vector<Complex> entries(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) entries[r * n + c] = cols[c][r];
  return DenseUnitary::from_entries(std::move(dims), std::move(entries));
}

// Random plan over the full gate set.
inline CircuitPlan random_plan(int qubits, std::size_t gates, Rng& rng) {
  CircuitPlan plan(qubits);
  for (std::size_t g = 0; g < gates; ++g) {
    const int q = static_cast<int>(rng.next_u64() % qubits);
    int other = static_cast<int>(rng.next_u64() % qubits);
    if (other == q) other = (other + 1) % qubits;
    switch (rng.next_u64() % 5) {
      case 0: plan.append(GateSpec::hadamard(q)); break;
      case 1: plan.append(GateSpec::pauli_x(q)); break;
      case 2: plan.append(GateSpec::phase_rf(1 + static_cast<int>(rng.next_u64() % 4), q)); break;
      case 3:
        if (qubits > 1) plan.append(GateSpec::controlled_rf(2, other, q));
        break;
      default:
        if (qubits > 1) plan.append(GateSpec::swap(q, other));
        break;
    }
  }
  return plan;
}

}  // namespace qcount::testing
