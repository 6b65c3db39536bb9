#include "qcount/fourier.hpp"

#include <cmath>
#include <numbers>

#include "qcount/errors.hpp"
#include "qcount/tolerances.hpp"

namespace qcount {

namespace {

constexpr double kPi = std::numbers::pi;
const double kEightOverPiSq = 8.0 / (kPi * kPi);

void check_omega(std::size_t dim, double omega, const char* who) {
  if (dim < 1) throw DomainError(std::string(who) + ": dimension must be >= 1");
  if (!(omega >= 0.0) || !(omega <= static_cast<double>(dim)))
    throw DomainError(std::string(who) + ": omega outside [0, P]");
}

}  // namespace

StateVector fourier_state(std::size_t dim, double omega) {
  check_omega(dim, omega, "fourier_state");
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  std::vector<Complex> amps(dim);
  for (std::size_t l = 0; l < dim; ++l) {
    const double angle = 2.0 * kPi * omega * static_cast<double>(l) / static_cast<double>(dim);
    amps[l] = std::polar(scale, angle);
  }
  return StateVector(HilbertDims::single(dim), std::move(amps));
}

double overlap_sq(std::size_t dim, double omega, double omega_prime) {
  check_omega(dim, omega, "overlap_sq");
  check_omega(dim, omega_prime, "overlap_sq");
  if (omega == omega_prime) return 1.0;
  const double p = static_cast<double>(dim);
  const double wd = omega_prime - omega;
  const double denom_angle = std::sin(wd * kPi / p);
  if (std::abs(denom_angle) < tol::angle_singular) {
    // wd is (numerically) a multiple of P.  Exactly aliased states coincide;
    // otherwise fall back to the small-angle denominator.
    const double m = std::round(wd / p);
    const double delta = wd - m * p;
    if (delta == 0.0) return 1.0;
    const double num = std::sin(delta * kPi);
    return (num * num) / (delta * kPi * delta * kPi);
  }
  const double num = std::sin(wd * kPi);
  return (num * num) / (p * p * denom_angle * denom_angle);
}

double boundary_prob(std::size_t dim, double omega) {
  check_omega(dim, omega, "boundary_prob");
  const double lo = std::floor(omega);
  const double hi = std::ceil(omega);
  if (lo == hi) return 1.0;
  // floor and ceil label the same outcome only in the one-dimensional space
  // (|P> aliases |0> and P = 1 collapses everything onto it).
  if (dim == 1) return overlap_sq(dim, omega, lo);
  return overlap_sq(dim, omega, lo) + overlap_sq(dim, omega, hi);
}

double f_of_w(std::size_t dim, double w) {
  if (dim < 1) throw DomainError("f_of_w: dimension must be >= 1");
  if (!(w > 0.0) || !(w < 1.0)) throw DomainError("f_of_w: w outside (0, 1)");
  const double p = static_cast<double>(dim);
  auto term = [&](double x) {
    const double s = std::sin(kPi * x);
    const double d = std::sin(kPi * x / p);
    return (s * s) / (p * p * d * d);
  };
  return term(w) + term(1.0 - w);
}

double f_pi(std::size_t dim, double theta) {
  if (dim < 1) throw DomainError("f_pi: dimension must be >= 1");
  if (!(std::abs(theta) < kPi / 2.0)) throw DomainError("f_pi: theta outside (-pi/2, pi/2)");
  const double p = static_cast<double>(dim);
  const double c = std::cos(theta);
  auto csc_sq = [](double x) {
    const double s = std::sin(x);
    return 1.0 / (s * s);
  };
  return c * c * (csc_sq(kPi / (2.0 * p) + theta / p) + csc_sq(kPi / (2.0 * p) - theta / p));
}

double f_pi_lower_bound(std::size_t dim) {
  const double s = std::sin(kPi / (2.0 * static_cast<double>(dim)));
  return 2.0 / (s * s);
}

FunctionMinimumReport f_minimum_suite(const std::vector<std::size_t>& dims,
                                             double resolution) {
  if (!(resolution > 0.0) || resolution > 1e-3)
    throw DomainError("f_minimum_suite: resolution must be in (0, 1e-3]");
  FunctionMinimumReport report;
  report.resolution = resolution;
  const double slack = 1e-12;

  for (std::size_t dim : dims) {
    if (dim < 1) throw DomainError("f_minimum_suite: dimension must be >= 1");
    const double p = static_cast<double>(dim);
    const auto steps = static_cast<std::size_t>(std::llround(1.0 / resolution));

    // f(w) scan over the open interval (0, 1)
    double best_w = 0.0, best_f = 0.0, flat_min = 0.0, flat_max = 0.0;
    bool first = true;
    for (std::size_t i = 1; i < steps; ++i) {
      const double w = static_cast<double>(i) * resolution;
      const double fw = f_of_w(dim, w);
      const double fmirror = f_of_w(dim, 1.0 - w);
      if (std::abs(fw - fmirror) > slack)
        report.violations.push_back({dim, "f-symmetry", w, fw, fmirror});
      if (first || fw < best_f) {
        best_f = fw;
        best_w = w;
      }
      flat_min = first ? fw : std::min(flat_min, fw);
      flat_max = first ? fw : std::max(flat_max, fw);
      first = false;
    }

    MinimumCheck check;
    check.dim = dim;
    check.argmin = best_w;
    check.min_value = f_of_w(dim, 0.5);
    check.lower_bound = kEightOverPiSq;
    check.argmin_checked = dim >= 3;
    if (dim >= 3) {
      check.pass = std::abs(best_w - 0.5) <= resolution + slack &&
                   check.min_value >= kEightOverPiSq - slack;
    } else {
      // f is constant for P = 1 (value 2) and P = 2 (value 1); any point is a
      // minimum, so only flatness and the bound are checked.
      check.pass = (flat_max - flat_min) <= slack && flat_min >= kEightOverPiSq - slack;
    }
    report.minima.push_back(check);

    if (dim < 3) continue;

    // f_pi lower bound over (-pi/2, pi/2)
    const double bound = f_pi_lower_bound(dim);
    for (std::size_t i = 1; i < steps; ++i) {
      const double theta = (static_cast<double>(i) * resolution - 0.5) * kPi;
      const double value = f_pi(dim, theta);
      if (value < bound - slack)
        report.violations.push_back({dim, "f_pi-lower-bound", theta, value, bound});
    }

    // auxiliary inequalities on [0, pi/2)
    const double pi_sq = kPi * kPi;
    const double pi_4 = pi_sq * pi_sq;
    for (std::size_t i = 0; i < steps / 2; ++i) {
      const double theta = static_cast<double>(i) * resolution * kPi;
      const double sin_lhs = std::sin(theta / p);
      const double sin_rhs = (2.0 * theta / kPi) * std::sin(kPi / (2.0 * p));
      if (sin_lhs < sin_rhs - slack)
        report.violations.push_back({dim, "sin-line-bound", theta, sin_lhs, sin_rhs});

      const double c = std::cos(theta);
      const double den = pi_sq - 4.0 * theta * theta;
      const double cos_lhs =
          (2.0 * std::sqrt(2.0) * pi_sq * theta * theta + pi_4) / (den * den) * c * c;
      if (cos_lhs < 1.0 - slack)
        report.violations.push_back({dim, "cos-rational-bound", theta, cos_lhs, 1.0});
    }
  }

  bool all_minima = true;
  for (const MinimumCheck& m : report.minima) all_minima = all_minima && m.pass;
  report.pass = all_minima && report.violations.empty();
  return report;
}

}  // namespace qcount
