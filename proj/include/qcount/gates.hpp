#pragma once

#include <array>
#include <vector>

#include "qcount/unitary.hpp"

namespace qcount {

// Qubit indices are 0-based with qubit 0 as the most significant bit, so the
// basis label of |d> reads left to right: qubit 0 holds d_1, qubit p-1 holds
// d_p.
struct GateSpec {
  enum class Kind { H, X, RF, ControlledU, Swap };

  Kind kind;
  int target = 0;   // acted-on qubit (H, X, RF, ControlledU); first qubit for Swap
  int control = -1; // control qubit (ControlledU); second qubit for Swap
  int k = 0;        // RF exponent
  bool conjugated = false;              // RF dagger flag
  std::array<Complex, 4> u2{};          // row-major 2x2 for ControlledU

  static GateSpec hadamard(int q);
  static GateSpec pauli_x(int q);
  static GateSpec phase_rf(int k, int q, bool conjugated = false);
  static GateSpec controlled(const std::array<Complex, 4>& u2, int control, int target);
  static GateSpec controlled_rf(int k, int control, int target, bool conjugated = false);
  static GateSpec swap(int a, int b);

  GateSpec dagger() const;
};

// 2x2 matrix of a single-qubit kind, 4x4 for ControlledU / Swap on the
// ordered pair (control|first, target|second).
DenseUnitary gate_matrix(const GateSpec& g);

// Ordered list of gate applications on a p-qubit register.  Gates are stored
// in application order (index 0 acts first).
class CircuitPlan {
 public:
  explicit CircuitPlan(int qubit_count);

  int qubit_count() const { return qubit_count_; }
  const std::vector<GateSpec>& gates() const { return gates_; }
  std::size_t gate_count() const { return gates_.size(); }

  CircuitPlan& append(GateSpec gate);
  CircuitPlan& append(const CircuitPlan& other);

  // Reversed plan with each gate daggered.
  CircuitPlan dagger() const;

  StateVector apply(const StateVector& s) const;
  // Dense 2^p x 2^p matrix of the whole plan.
  DenseUnitary matrix() const;

 private:
  void validate(const GateSpec& gate) const;

  int qubit_count_;
  std::vector<GateSpec> gates_;
};

// Qubit-reversal network: SWAP of qubit t with qubit p-1-t for t < p/2.
// Sends basis label b_1...b_p to b_p...b_1.  Requires p >= 2.
CircuitPlan swap_prime(int p);

// Recursive pre-swap Fourier circuit: H on qubit 0, controlled-RF(k) with
// control qubit k-1 and target qubit 0 for k = 2..p, then the (p-1)-qubit
// circuit on qubits 1..p-1.  For p = 1 the plan is a single H.
CircuitPlan qft_rec(int p);

// Full transform as a circuit: swap_prime(p) after qft_rec(p).
CircuitPlan qft_circuit(int p);
// Inverse transform as a circuit: dagger of qft_circuit (daggered recursion
// after the qubit reversal).
CircuitPlan qft_inverse_circuit(int p);

// Analytic transform matrix: <l|QFT|d> = e^{2 pi i d l / P} / sqrt(P).
DenseUnitary qft(int p);
// Conjugate transpose of qft(p).
DenseUnitary qft_inverse(int p);

}  // namespace qcount
