#include "qcount/gates.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qcount/errors.hpp"

namespace qcount {

namespace {

constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Complex rf_phase(int k, bool conjugated) {
  const double angle = 2.0 * kPi / static_cast<double>(1ULL << k);
  return std::polar(1.0, conjugated ? -angle : angle);
}

std::array<Complex, 4> dagger2(const std::array<Complex, 4>& u) {
  return {std::conj(u[0]), std::conj(u[2]), std::conj(u[1]), std::conj(u[3])};
}

}  // namespace

GateSpec GateSpec::hadamard(int q) { return GateSpec{Kind::H, q}; }

GateSpec GateSpec::pauli_x(int q) { return GateSpec{Kind::X, q}; }

GateSpec GateSpec::phase_rf(int k, int q, bool conjugated) {
  if (k < 1) throw DomainError("phase_rf: k must be >= 1");
  GateSpec g{Kind::RF, q};
  g.k = k;
  g.conjugated = conjugated;
  return g;
}

GateSpec GateSpec::controlled(const std::array<Complex, 4>& u2, int control, int target) {
  if (control == target) throw DomainError("controlled: control equals target");
  GateSpec g{Kind::ControlledU, target, control};
  g.u2 = u2;
  return g;
}

GateSpec GateSpec::controlled_rf(int k, int control, int target, bool conjugated) {
  if (k < 1) throw DomainError("controlled_rf: k must be >= 1");
  const Complex w = rf_phase(k, conjugated);
  return controlled({Complex{1.0, 0.0}, {}, {}, w}, control, target);
}

GateSpec GateSpec::swap(int a, int b) {
  if (a == b) throw DomainError("swap: identical qubits");
  return GateSpec{Kind::Swap, a, b};
}

GateSpec GateSpec::dagger() const {
  GateSpec g = *this;
  switch (kind) {
    case Kind::H:
    case Kind::X:
    case Kind::Swap:
      break;  // self-adjoint
    case Kind::RF:
      g.conjugated = !conjugated;
      break;
    case Kind::ControlledU:
      g.u2 = dagger2(u2);
      break;
  }
  return g;
}

DenseUnitary gate_matrix(const GateSpec& g) {
  switch (g.kind) {
    case GateSpec::Kind::H:
      return DenseUnitary::from_entries_unchecked(
          HilbertDims::qubits(1),
          {Complex{kInvSqrt2, 0.0}, Complex{kInvSqrt2, 0.0}, Complex{kInvSqrt2, 0.0},
           Complex{-kInvSqrt2, 0.0}});
    case GateSpec::Kind::X:
      return DenseUnitary::from_entries_unchecked(
          HilbertDims::qubits(1), {Complex{}, Complex{1.0, 0.0}, Complex{1.0, 0.0}, Complex{}});
    case GateSpec::Kind::RF:
      return DenseUnitary::diagonal(HilbertDims::qubits(1),
                                    {Complex{1.0, 0.0}, rf_phase(g.k, g.conjugated)});
    case GateSpec::Kind::ControlledU: {
      std::vector<Complex> entries(16, Complex{0.0, 0.0});
      entries[0 * 4 + 0] = Complex{1.0, 0.0};
      entries[1 * 4 + 1] = Complex{1.0, 0.0};
      entries[2 * 4 + 2] = g.u2[0];
      entries[2 * 4 + 3] = g.u2[1];
      entries[3 * 4 + 2] = g.u2[2];
      entries[3 * 4 + 3] = g.u2[3];
      return DenseUnitary::from_entries(HilbertDims::qubits(2), std::move(entries));
    }
    case GateSpec::Kind::Swap:
      return DenseUnitary::permutation(HilbertDims::qubits(2), {0, 2, 1, 3});
  }
  throw DomainError("gate_matrix: unknown gate kind");
}

CircuitPlan::CircuitPlan(int qubit_count) : qubit_count_(qubit_count) {
  if (qubit_count < 1) throw DomainError("CircuitPlan: qubit count must be >= 1");
}

void CircuitPlan::validate(const GateSpec& gate) const {
  auto check = [&](int q) {
    if (q < 0 || q >= qubit_count_)
      throw DimensionError("CircuitPlan: qubit index " + std::to_string(q) +
                           " out of range for " + std::to_string(qubit_count_) + " qubits");
  };
  check(gate.target);
  if (gate.kind == GateSpec::Kind::ControlledU || gate.kind == GateSpec::Kind::Swap)
    check(gate.control);
}

CircuitPlan& CircuitPlan::append(GateSpec gate) {
  validate(gate);
  gates_.push_back(gate);
  return *this;
}

CircuitPlan& CircuitPlan::append(const CircuitPlan& other) {
  if (other.qubit_count_ != qubit_count_)
    throw DimensionError("CircuitPlan::append: qubit counts differ");
  for (const GateSpec& g : other.gates_) gates_.push_back(g);
  return *this;
}

CircuitPlan CircuitPlan::dagger() const {
  CircuitPlan out(qubit_count_);
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) out.append(it->dagger());
  return out;
}

namespace {

// In-place statevector update; bit of qubit q sits at weight 2^(p-1-q).
void apply_in_place(const GateSpec& g, std::vector<Complex>& amps, int p) {
  const std::size_t n = amps.size();
  auto bit_mask = [&](int q) { return std::size_t{1} << (p - 1 - q); };
  switch (g.kind) {
    case GateSpec::Kind::H: {
      const std::size_t m = bit_mask(g.target);
      for (std::size_t i = 0; i < n; ++i) {
        if (i & m) continue;
        const Complex a = amps[i];
        const Complex b = amps[i | m];
        amps[i] = (a + b) * kInvSqrt2;
        amps[i | m] = (a - b) * kInvSqrt2;
      }
      break;
    }
    case GateSpec::Kind::X: {
      const std::size_t m = bit_mask(g.target);
      for (std::size_t i = 0; i < n; ++i)
        if (!(i & m)) std::swap(amps[i], amps[i | m]);
      break;
    }
    case GateSpec::Kind::RF: {
      const std::size_t m = bit_mask(g.target);
      const Complex w = rf_phase(g.k, g.conjugated);
      for (std::size_t i = 0; i < n; ++i)
        if (i & m) amps[i] *= w;
      break;
    }
    case GateSpec::Kind::ControlledU: {
      const std::size_t mc = bit_mask(g.control);
      const std::size_t mt = bit_mask(g.target);
      for (std::size_t i = 0; i < n; ++i) {
        if (!(i & mc) || (i & mt)) continue;
        const Complex a = amps[i];
        const Complex b = amps[i | mt];
        amps[i] = g.u2[0] * a + g.u2[1] * b;
        amps[i | mt] = g.u2[2] * a + g.u2[3] * b;
      }
      break;
    }
    case GateSpec::Kind::Swap: {
      const std::size_t ma = bit_mask(g.target);
      const std::size_t mb = bit_mask(g.control);
      for (std::size_t i = 0; i < n; ++i)
        if ((i & ma) && !(i & mb)) std::swap(amps[i], amps[(i & ~ma) | mb]);
      break;
    }
  }
}

}  // namespace

StateVector CircuitPlan::apply(const StateVector& s) const {
  if (s.size() != (std::size_t{1} << qubit_count_))
    throw DimensionError("CircuitPlan::apply: state dimension mismatch");
  std::vector<Complex> amps = s.amplitudes();
  for (const GateSpec& g : gates_) apply_in_place(g, amps, qubit_count_);
  return StateVector(s.dims(), std::move(amps));
}

DenseUnitary CircuitPlan::matrix() const {
  const std::size_t n = std::size_t{1} << qubit_count_;
  std::vector<Complex> entries(n * n, Complex{0.0, 0.0});
  std::vector<Complex> column(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(column.begin(), column.end(), Complex{0.0, 0.0});
    column[j] = Complex{1.0, 0.0};
    for (const GateSpec& g : gates_) apply_in_place(g, column, qubit_count_);
    for (std::size_t r = 0; r < n; ++r) entries[r * n + j] = column[r];
  }
  return DenseUnitary::from_entries_unchecked(HilbertDims::qubits(qubit_count_),
                                              std::move(entries));
}

CircuitPlan swap_prime(int p) {
  if (p < 2) throw DomainError("swap_prime: requires p >= 2");
  CircuitPlan plan(p);
  for (int t = 0; t < p / 2; ++t) plan.append(GateSpec::swap(t, p - 1 - t));
  return plan;
}

CircuitPlan qft_rec(int p) {
  if (p < 1) throw DomainError("qft_rec: requires p >= 1");
  CircuitPlan plan(p);
  plan.append(GateSpec::hadamard(0));
  if (p == 1) return plan;
  for (int k = 2; k <= p; ++k) plan.append(GateSpec::controlled_rf(k, k - 1, 0));
  // recurse on qubits 1..p-1
  const CircuitPlan inner = qft_rec(p - 1);
  for (const GateSpec& g : inner.gates()) {
    GateSpec shifted = g;
    shifted.target += 1;
    if (shifted.kind == GateSpec::Kind::ControlledU || shifted.kind == GateSpec::Kind::Swap)
      shifted.control += 1;
    plan.append(shifted);
  }
  return plan;
}

CircuitPlan qft_circuit(int p) {
  CircuitPlan plan = qft_rec(p);
  if (p >= 2) plan.append(swap_prime(p));
  return plan;
}

CircuitPlan qft_inverse_circuit(int p) { return qft_circuit(p).dagger(); }

DenseUnitary qft(int p) {
  if (p < 1) throw DomainError("qft: requires p >= 1");
  const std::size_t n = std::size_t{1} << p;
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<Complex> entries(n * n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t d = 0; d < n; ++d) {
      const double angle =
          2.0 * kPi * static_cast<double>(d) * static_cast<double>(l) / static_cast<double>(n);
      entries[l * n + d] = std::polar(scale, angle);
    }
  return DenseUnitary::from_entries_unchecked(HilbertDims::qubits(p), std::move(entries));
}

DenseUnitary qft_inverse(int p) { return qft(p).dagger(); }

}  // namespace qcount
