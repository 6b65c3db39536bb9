#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "qcount/errors.hpp"
#include "qcount/fourier.hpp"
#include "qcount/gates.hpp"
#include "qcount/grover.hpp"
#include "qcount/phase.hpp"

using namespace qcount;

namespace {

constexpr double kPi = std::numbers::pi;

std::size_t reverse_bits(std::size_t x, int p) {
  std::size_t out = 0;
  for (int i = 0; i < p; ++i)
    if (x & (std::size_t{1} << i)) out |= std::size_t{1} << (p - 1 - i);
  return out;
}

DenseUnitary bit_reversal_permutation(int p) {
  const std::size_t n = std::size_t{1} << p;
  std::vector<std::size_t> image(n);
  for (std::size_t x = 0; x < n; ++x) image[x] = reverse_bits(x, p);
  return DenseUnitary::permutation(HilbertDims::qubits(p), image);
}

}  // namespace

TEST_CASE("RF gate matrices") {
  const DenseUnitary rf1 = gate_matrix(GateSpec::phase_rf(1, 0));
  CHECK(rf1.at(1, 1).real() == doctest::Approx(-1.0));
  CHECK(std::abs(rf1.at(1, 1).imag()) < 1e-15);

  const DenseUnitary rf2 = gate_matrix(GateSpec::phase_rf(2, 0));
  CHECK(std::abs(rf2.at(1, 1) - Complex{0.0, 1.0}) < 1e-15);

  const DenseUnitary h = gate_matrix(GateSpec::hadamard(0));
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(h.at(0, 0).real() == doctest::Approx(r));
  CHECK(h.at(1, 1).real() == doctest::Approx(-r));

  CHECK_THROWS_AS(GateSpec::phase_rf(0, 0), DomainError);
}

TEST_CASE("swap_prime reverses the qubit order") {
  CHECK_THROWS_AS(swap_prime(1), DomainError);

  // p=2: one SWAP, |01> -> |10>
  const CircuitPlan s2 = swap_prime(2);
  CHECK(s2.gate_count() == 1);
  const StateVector swapped = s2.apply(StateVector::basis(HilbertDims::qubits(2), 1));
  CHECK(std::abs(swapped[2]) == doctest::Approx(1.0));

  // p=3: only SWAP(0,2); |011> -> |110>
  const CircuitPlan s3 = swap_prime(3);
  CHECK(s3.gate_count() == 1);
  const StateVector flipped = s3.apply(StateVector::basis(HilbertDims::qubits(3), 3));
  CHECK(std::abs(flipped[6]) == doctest::Approx(1.0));

  CHECK(swap_prime(7).gate_count() == 3);

  for (int p = 2; p <= 6; ++p)
    CHECK(max_abs_diff(swap_prime(p).matrix(), bit_reversal_permutation(p)) == 0.0);
}

TEST_CASE("qft_rec structure and matrix") {
  // p=1 is a single H
  CHECK(qft_rec(1).gate_count() == 1);
  CHECK(max_abs_diff(qft_rec(1).matrix(), gate_matrix(GateSpec::hadamard(0))) < 1e-15);

  // p=3: 1 H + 2 cRF, then the p=2 recursion (2 gates) and p=1 (1 gate)
  CHECK(qft_rec(3).gate_count() == 6);

  // matrix action equals the tensor-product closed form
  for (int p = 1; p <= 5; ++p) {
    const std::size_t n = std::size_t{1} << p;
    const DenseUnitary m = qft_rec(p).matrix();
    for (std::size_t d = 0; d < n; ++d) {
      // closed form: 2^{-p/2} (x)_j (|0> + e^{2 pi i d / 2^{p-j}} |1>)
      std::vector<Complex> expected = {Complex{1.0, 0.0}};
      for (int j = 0; j < p; ++j) {
        const double angle =
            2.0 * kPi * static_cast<double>(d) / static_cast<double>(std::size_t{1} << (p - j));
        std::vector<Complex> next(expected.size() * 2);
        for (std::size_t i = 0; i < expected.size(); ++i) {
          next[2 * i] = expected[i];
          next[2 * i + 1] = expected[i] * std::polar(1.0, angle);
        }
        expected = std::move(next);
      }
      const double scale = 1.0 / std::sqrt(static_cast<double>(n));
      for (std::size_t l = 0; l < n; ++l)
        CHECK(std::abs(m.at(l, d) - expected[l] * scale) <= 1e-12);
    }
  }

  // DFT-then-bit-reversal oracle: qft_rec = SWAP' . QFT
  for (int p = 2; p <= 5; ++p) {
    const DenseUnitary oracle = multiply(bit_reversal_permutation(p), qft(p));
    CHECK(max_abs_diff(qft_rec(p).matrix(), oracle) <= 1e-12);
  }
}

TEST_CASE("plans over the gate set evaluate to unitary matrices") {
  Rng rng(271828);
  for (int trial = 0; trial < 10; ++trial) {
    const CircuitPlan plan = testing::random_plan(4, 25, rng);
    CHECK(plan.matrix().is_unitary(1e-10));
  }
}

TEST_CASE("controlled-RF gates within one recursion level commute") {
  for (int p : {3, 5}) {
    CircuitPlan permuted(p);
    permuted.append(GateSpec::hadamard(0));
    for (int k = p; k >= 2; --k) permuted.append(GateSpec::controlled_rf(k, k - 1, 0));
    const CircuitPlan tail = qft_rec(p - 1);
    for (const GateSpec& g : tail.gates()) {
      GateSpec shifted = g;
      shifted.target += 1;
      if (shifted.kind == GateSpec::Kind::ControlledU || shifted.kind == GateSpec::Kind::Swap)
        shifted.control += 1;
      permuted.append(shifted);
    }
    CHECK(max_abs_diff(permuted.matrix(), qft_rec(p).matrix()) <= 1e-14);
  }
}

TEST_CASE("qft matrix matches its circuit and inverts correctly") {
  // p=1: QFT|0> = |+>
  const StateVector f0 = apply(qft(1), StateVector::basis(HilbertDims::qubits(1), 0));
  CHECK(f0[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(f0[1].real() == doctest::Approx(1.0 / std::sqrt(2.0)));

  // p=2: QFT|1> = (|0> + i|1> - |2> - i|3>)/2
  const StateVector f1 = apply(qft(2), StateVector::basis(HilbertDims::qubits(2), 1));
  CHECK(std::abs(f1[0] - Complex{0.5, 0.0}) < 1e-15);
  CHECK(std::abs(f1[1] - Complex{0.0, 0.5}) < 1e-15);
  CHECK(std::abs(f1[2] - Complex{-0.5, 0.0}) < 1e-15);
  CHECK(std::abs(f1[3] - Complex{0.0, -0.5}) < 1e-15);

  for (int p = 1; p <= 6; ++p) {
    CHECK(max_abs_diff(qft_circuit(p).matrix(), qft(p)) <= 1e-12);
    CHECK(max_abs_diff(multiply(qft_inverse(p), qft(p)),
                       DenseUnitary::identity(HilbertDims::qubits(p))) <= 1e-12);
  }
}

TEST_CASE("qft_inverse circuit path agrees with the dagger path") {
  CHECK(max_abs_diff(qft_inverse_circuit(1).matrix(), gate_matrix(GateSpec::hadamard(0))) <
        1e-15);
  for (int p = 1; p <= 6; ++p)
    CHECK(max_abs_diff(qft_inverse_circuit(p).matrix(), qft_inverse(p)) <= 1e-12);

  // QFT^-1 |F_P(j)> = |j>
  for (int p : {2, 3}) {
    const std::size_t n = std::size_t{1} << p;
    for (std::size_t j = 0; j < n; ++j) {
      const StateVector back =
          apply(qft_inverse(p).with_dims(HilbertDims::single(n)), fourier_state(n, j));
      CHECK(std::abs(back[j]) == doctest::Approx(1.0));
    }
  }

  // round trip on random states
  Rng rng(23);
  const StateVector psi = testing::random_state(HilbertDims::qubits(3), rng);
  const StateVector round = apply(qft_inverse(3), apply(qft(3), psi));
  for (std::size_t i = 0; i < psi.size(); ++i) CHECK(std::abs(round[i] - psi[i]) <= 1e-12);
}

TEST_CASE("controlled powers: definition, circuit route, and kickback") {
  // b = 0 block is the identity
  Rng rng(31);
  const DenseUnitary u = testing::random_unitary(HilbertDims::single(3), rng);
  const DenseUnitary lambda = controlled_powers(u, 2);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      CHECK(std::abs(lambda.at(r, c) - (r == c ? Complex{1.0, 0.0} : Complex{})) < 1e-15);

  // X^3 = X: |3>|0> -> |3>|1>
  const DenseUnitary x = gate_matrix(GateSpec::pauli_x(0));
  const DenseUnitary lx = controlled_powers(x, 2);
  const StateVector in = tensor(StateVector::basis(HilbertDims::single(4), 3),
                                StateVector::basis(HilbertDims::single(2), 0));
  const StateVector out = apply(lx, in);
  CHECK(std::abs(out[3 * 2 + 1]) == doctest::Approx(1.0));

  // phase kickback on an eigenvector: Lambda |b>|lambda> = e^{2 pi i b l}|b>|lambda>
  const double l = 0.3;
  const DenseUnitary phase = DenseUnitary::diagonal(
      HilbertDims::single(2), {Complex{1.0, 0.0}, std::polar(1.0, 2.0 * kPi * l)});
  const DenseUnitary lp = controlled_powers(phase, 3);
  const StateVector eigen = StateVector::basis(HilbertDims::single(2), 1);
  for (std::size_t b = 0; b < 8; ++b) {
    const StateVector s = apply(lp, tensor(StateVector::basis(HilbertDims::single(8), b), eigen));
    const Complex expected = std::polar(1.0, 2.0 * kPi * l * static_cast<double>(b));
    CHECK(std::abs(s[b * 2 + 1] - expected) <= 1e-12);
  }

  // binary-controlled circuit equals the block-diagonal definition
  for (int p = 1; p <= 4; ++p) {
    for (std::size_t dim : {2u, 5u, 8u}) {
      const DenseUnitary v = testing::random_unitary(HilbertDims::single(dim), rng);
      CHECK(max_abs_diff(controlled_powers(v, p), controlled_powers_circuit(v, p)) <= 1e-12);
    }
  }
}

TEST_CASE("phase estimation distributions") {
  // exact eigenphase j/P gives a point mass
  const int p = 4;
  const std::size_t big_p = 16;
  for (std::size_t j : {0u, 1u, 7u, 15u}) {
    const double l = static_cast<double>(j) / static_cast<double>(big_p);
    const DenseUnitary u = DenseUnitary::diagonal(
        HilbertDims::single(2), {Complex{1.0, 0.0}, std::polar(1.0, 2.0 * kPi * l)});
    const auto dist = phase_estimate_distribution(u, StateVector::basis(HilbertDims::single(2), 1), p);
    CHECK(std::abs(dist[j] - 1.0) <= 1e-10);
  }

  // identity operator: vartheta = 0 always
  Rng rng(5);
  const StateVector any = testing::random_state(HilbertDims::single(3), rng);
  const auto dist0 =
      phase_estimate_distribution(DenseUnitary::identity(HilbertDims::single(3)), any, 3);
  CHECK(std::abs(dist0[0] - 1.0) <= 1e-12);
  Rng sampler(9);
  const PhaseEstimate pe =
      phase_estimate(DenseUnitary::identity(HilbertDims::single(3)), any, 3, sampler);
  CHECK(pe.raw_outcome == 0);
  CHECK(pe.vartheta == 0.0);

  // non-integer P lambda: floor/ceil outcomes carry at least 8/pi^2
  const double l = 4.0 / 3.0 / 16.0;  // P lambda = 1.333...
  const DenseUnitary u = DenseUnitary::diagonal(
      HilbertDims::single(2), {Complex{1.0, 0.0}, std::polar(1.0, 2.0 * kPi * l)});
  const auto dist = phase_estimate_distribution(u, StateVector::basis(HilbertDims::single(2), 1), p);
  CHECK(dist[1] + dist[2] >= 8.0 / (kPi * kPi) - 1e-10);

  // superposition of eigenvectors mixes with weights |alpha|^2
  const DenseUnitary u2 = DenseUnitary::diagonal(
      HilbertDims::single(2), {Complex{1.0, 0.0}, std::polar(1.0, 2.0 * kPi * 5.0 / 16.0)});
  const StateVector sup = StateVector::unit(
      HilbertDims::single(2), {Complex{std::sqrt(0.25), 0.0}, Complex{std::sqrt(0.75), 0.0}});
  const auto mixed = phase_estimate_distribution(u2, sup, p);
  CHECK(mixed[0] == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(mixed[5] == doctest::Approx(0.75).epsilon(1e-10));

  // marginals always sum to 1
  double total = 0.0;
  for (double q : mixed) total += q;
  CHECK(std::abs(total - 1.0) <= 1e-12);

  // the H^p shortcut and the literal QFT preparation coincide
  PhaseEstimationOptions full;
  full.use_full_qft_prep = true;
  const auto mixed_qft = phase_estimate_distribution(u2, sup, p, full);
  for (std::size_t i = 0; i < mixed.size(); ++i)
    CHECK(std::abs(mixed[i] - mixed_qft[i]) <= 1e-12);
}

TEST_CASE("phase estimation of the search evolution on the uniform state") {
  const MarkedSet marked = MarkedSet::first_k(16, 4);
  const StateVector uniform = StateVector::uniform(HilbertDims::single(16));
  const int p = 4;
  const auto dist = phase_estimate_distribution(grover_step(marked), uniform, p);
  // theta = pi/6: P lambda in {16/6, 16 - 16/6}
  const double pl = 16.0 / 6.0;
  const double mass = dist[2] + dist[3] + dist[13] + dist[14];
  CHECK(pl > 2.0);
  CHECK(mass >= 8.0 / (kPi * kPi) - 1e-10);

  // PhaseEstimate invariant: raw_outcome = round(vartheta P)
  Rng rng(77);
  const PhaseEstimator estimator(grover_step(marked), uniform, p);
  for (int i = 0; i < 50; ++i) {
    const PhaseEstimate pe = estimator.sample(rng);
    CHECK(pe.raw_outcome ==
          static_cast<std::size_t>(std::llround(pe.vartheta * static_cast<double>(16))));
    CHECK(pe.vartheta >= 0.0);
    CHECK(pe.vartheta < 1.0);
  }
}
