#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "qcount/errors.hpp"
#include "qcount/state.hpp"
#include "qcount/unitary.hpp"

using namespace qcount;

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

StateVector plus_state() {
  return StateVector::unit(HilbertDims::qubits(1), {Complex{kInvSqrt2, 0.0}, {kInvSqrt2, 0.0}});
}
}  // namespace

TEST_CASE("mixed-radix index maps are bijective") {
  const HilbertDims dims({2, 3, 4});
  CHECK(dims.total() == 24);
  for (std::size_t flat = 0; flat < dims.total(); ++flat) {
    const auto digits = dims.digits(flat);
    CHECK(dims.flat_index(digits) == flat);
    for (std::size_t r = 0; r < dims.rank(); ++r) CHECK(dims.digit(flat, r) == digits[r]);
  }
  // most significant factor first: digits (1,0,0) -> 12
  CHECK(dims.flat_index(std::vector<std::size_t>{1, 0, 0}) == 12);
  CHECK_THROWS_AS(HilbertDims({2, 0}), DimensionError);
}

TEST_CASE("tensor of basis states composes indices") {
  const StateVector zero = StateVector::basis(HilbertDims::qubits(1), 0);
  const StateVector one = StateVector::basis(HilbertDims::qubits(1), 1);
  const StateVector composed = tensor(zero, one);
  CHECK(composed.dims() == HilbertDims::qubits(2));
  CHECK(composed[1].real() == doctest::Approx(1.0));
  for (std::size_t i : {0u, 2u, 3u}) CHECK(std::abs(composed[i]) == 0.0);
}

TEST_CASE("tensor of identities is the identity") {
  const DenseUnitary i2 = DenseUnitary::identity(HilbertDims::qubits(1));
  const DenseUnitary i4 = tensor(i2, i2);
  CHECK(max_abs_diff(i4, DenseUnitary::identity(HilbertDims::qubits(2))) == 0.0);
}

TEST_CASE("H (x) I on |00> spreads the first qubit") {
  const DenseUnitary h = gate_matrix(GateSpec::hadamard(0));
  const DenseUnitary i2 = DenseUnitary::identity(HilbertDims::qubits(1));
  const StateVector s = apply(tensor(h, i2), StateVector::basis(HilbertDims::qubits(2), 0));
  CHECK(s[0].real() == doctest::Approx(kInvSqrt2));
  CHECK(s[2].real() == doctest::Approx(kInvSqrt2));
  CHECK(std::abs(s[1]) == 0.0);
  CHECK(std::abs(s[3]) == 0.0);
}

TEST_CASE("apply: X|0> = |1>, I|psi> = |psi>, H|0> = |+>") {
  const StateVector zero = StateVector::basis(HilbertDims::qubits(1), 0);
  const StateVector x0 = apply(gate_matrix(GateSpec::pauli_x(0)), zero);
  CHECK(x0[1].real() == doctest::Approx(1.0));

  Rng rng(7);
  const StateVector psi = testing::random_state(HilbertDims::qubits(2), rng);
  const StateVector same = apply(DenseUnitary::identity(HilbertDims::qubits(2)), psi);
  for (std::size_t i = 0; i < psi.size(); ++i) CHECK(std::abs(same[i] - psi[i]) < 1e-15);

  const StateVector h0 = apply(gate_matrix(GateSpec::hadamard(0)), zero);
  CHECK(h0[0].real() == doctest::Approx(kInvSqrt2));
  CHECK(h0[1].real() == doctest::Approx(kInvSqrt2));

  CHECK_THROWS_AS(apply(DenseUnitary::identity(HilbertDims::qubits(2)), zero), DimensionError);
}

TEST_CASE("norm preservation under random gate-set unitaries") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const StateVector psi = testing::random_state(HilbertDims::qubits(3), rng);
    const DenseUnitary u = testing::random_plan(3, 12, rng).matrix();
    CHECK(std::abs(apply(u, psi).norm() - 1.0) <= 1e-10);
  }
}

TEST_CASE("inner products") {
  const StateVector zero = StateVector::basis(HilbertDims::qubits(1), 0);
  const StateVector one = StateVector::basis(HilbertDims::qubits(1), 1);
  CHECK(std::abs(inner(zero, one)) == 0.0);
  CHECK(inner(plus_state(), zero).real() == doctest::Approx(kInvSqrt2));
  // conjugate linearity in the first argument
  const Complex i{0.0, 1.0};
  const StateVector scaled = plus_state().scaled(i);
  CHECK(std::abs(inner(scaled, zero) - std::conj(i) * inner(plus_state(), zero)) < 1e-15);
  CHECK_THROWS_AS(inner(zero, StateVector::basis(HilbertDims::qubits(2), 0)), DimensionError);
}

TEST_CASE("direct sum concatenates amplitudes without renormalizing") {
  const StateVector zero = StateVector::basis(HilbertDims::qubits(1), 0);
  const StateVector cat = direct_sum(zero, zero);
  CHECK(cat.size() == 4);
  CHECK(cat[0].real() == 1.0);
  CHECK(cat[2].real() == 1.0);
  CHECK(cat.norm() == doctest::Approx(std::sqrt(2.0)));

  const StateVector null2(HilbertDims::qubits(1), {Complex{}, Complex{}});
  const StateVector lower = direct_sum(null2, StateVector::basis(HilbertDims::qubits(1), 1));
  CHECK(std::abs(lower[0]) == 0.0);
  CHECK(std::abs(lower[1]) == 0.0);
  CHECK(lower[3].real() == 1.0);
}

TEST_CASE("tensor associativity") {
  Rng rng(13);
  const StateVector a = testing::random_state(HilbertDims::single(2), rng);
  const StateVector b = testing::random_state(HilbertDims::single(3), rng);
  const StateVector c = testing::random_state(HilbertDims::single(2), rng);
  const StateVector left = tensor(tensor(a, b), c);
  const StateVector right = tensor(a, tensor(b, c));
  for (std::size_t i = 0; i < left.size(); ++i) CHECK(std::abs(left[i] - right[i]) <= 1e-14);
}

TEST_CASE("measurement of |+> and |1>") {
  const auto probs = outcome_distribution(plus_state(), 0);
  CHECK(probs[0] == doctest::Approx(0.5));
  CHECK(probs[1] == doctest::Approx(0.5));

  Rng rng(3);
  const auto outcome =
      measure_register(StateVector::basis(HilbertDims::qubits(1), 1), 0, rng);
  CHECK(outcome.outcome_index == 1);
  CHECK(outcome.probability == doctest::Approx(1.0));
}

TEST_CASE("measuring one half of a Bell pair collapses the other") {
  const std::vector<Complex> bell = {Complex{kInvSqrt2, 0.0}, {}, {}, Complex{kInvSqrt2, 0.0}};
  const StateVector pair = StateVector::unit(HilbertDims::qubits(2), bell);
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    Rng rng(seed);
    const auto outcome = measure_register(pair, 0, rng);
    CHECK(outcome.probability == doctest::Approx(0.5));
    if (outcome.outcome_index == 0) {
      CHECK(std::abs(outcome.post_state[0]) == doctest::Approx(1.0));
    } else {
      CHECK(std::abs(outcome.post_state[3]) == doctest::Approx(1.0));
    }
    // repeatability: measuring again returns the same outcome with certainty
    Rng rng2(seed + 100);
    const auto again = measure_register(outcome.post_state, 0, rng2);
    CHECK(again.outcome_index == outcome.outcome_index);
    CHECK(again.probability == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("outcome distributions are complete") {
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const StateVector psi = testing::random_state(HilbertDims({4, 3, 2}), rng);
    for (std::size_t reg = 0; reg < 3; ++reg) {
      double sum = 0.0;
      for (double p : outcome_distribution(psi, reg)) sum += p;
      CHECK(std::abs(sum - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("global phase never changes outcome distributions") {
  Rng rng(19);
  const StateVector psi = testing::random_state(HilbertDims({4, 2}), rng);
  const auto base = outcome_distribution(psi, 0);
  // axis phases commute with |.|^2 exactly in floating point
  for (const Complex phase : {Complex{-1.0, 0.0}, Complex{0.0, 1.0}, Complex{0.0, -1.0}}) {
    const auto rotated = outcome_distribution(psi.scaled(phase), 0);
    for (std::size_t i = 0; i < base.size(); ++i) CHECK(rotated[i] == base[i]);
  }
  const auto rotated = outcome_distribution(psi.scaled(std::polar(1.0, 0.7)), 0);
  for (std::size_t i = 0; i < base.size(); ++i)
    CHECK(std::abs(rotated[i] - base[i]) <= 1e-15);
}

TEST_CASE("rng streams are reproducible and substreams independent") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
  Rng parent(42);
  parent.next_u64();
  Rng s1 = Rng(42).substream(5);
  Rng s2 = parent.substream(5);  // consuming the parent must not shift substreams
  for (int i = 0; i < 10; ++i) CHECK(s1.next_u64() == s2.next_u64());
}

TEST_CASE("unit factory rejects unnormalized amplitudes") {
  CHECK_THROWS_AS(
      StateVector::unit(HilbertDims::qubits(1), {Complex{1.0, 0.0}, Complex{1.0, 0.0}}),
      InvariantError);
  CHECK_THROWS_AS(DenseUnitary::from_entries(
                      HilbertDims::qubits(1),
                      {Complex{1.0, 0.0}, Complex{1.0, 0.0}, Complex{0.0, 0.0}, Complex{1.0, 0.0}}),
                  InvariantError);
}
