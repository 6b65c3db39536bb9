#pragma once

#include <string>
#include <vector>

#include "qcount/state.hpp"

namespace qcount {

// |F_P(omega)> = (1/sqrt(P)) sum_l e^{2 pi i omega l / P} |l> for real omega
// in [0, P].  omega = 0 and omega = P realize the same vector.
StateVector fourier_state(std::size_t dim, double omega);

// Squared overlap |<F_P(omega)|F_P(omega')>|^2 via the closed form
// sin^2(wd pi) / (P^2 sin^2(wd pi / P)), wd = omega' - omega.  At aliased
// points (wd a multiple of P) the 0/0 limit is 1; near-singular inputs use
// the small-angle form of the denominator.
double overlap_sq(std::size_t dim, double omega, double omega_prime);

// Probability that measuring QFT^-1 |F_P(omega)> lands on floor(omega) or
// ceil(omega); outcome P aliases to 0.  Equals 1 for integer omega.
double boundary_prob(std::size_t dim, double omega);

// f(w) = sin^2(pi w)/(P^2 sin^2(pi w/P)) + sin^2(pi(1-w))/(P^2 sin^2(pi(1-w)/P)),
// the two-neighbor probability as a function of the fractional part w in (0,1).
double f_of_w(std::size_t dim, double w);

// Recentered, unnormalized variant used by the minimum analysis:
// f_pi(theta) = cos^2(theta) (csc^2(pi/2P + theta/P) + csc^2(pi/2P - theta/P))
// on (-pi/2, pi/2).  Note f_pi(theta) = P^2 f(theta/pi + 1/2): the P^2
// normalization is deliberately absent here.
double f_pi(std::size_t dim, double theta);

// Lower bound 2 csc^2(pi / 2P) that f_pi attains at theta = 0.
double f_pi_lower_bound(std::size_t dim);

struct MinimumCheck {
  std::size_t dim;
  double argmin;       // grid argmin of f(w)
  double min_value;    // f at the argmin
  double lower_bound;  // 8/pi^2
  bool argmin_checked; // false for dim <= 2 where f is constant
  bool pass;
};

struct InequalityViolation {
  std::size_t dim;
  std::string check;  // which inequality failed
  double x;           // grid point (w or theta)
  double lhs;
  double rhs;
};

struct FunctionMinimumReport {
  double resolution = 0.0;
  std::vector<MinimumCheck> minima;
  std::vector<InequalityViolation> violations;
  bool pass = false;
};

// Grid verification of the f(w) minimum and the supporting inequalities for
// each requested dimension:
//   - f symmetric about w = 1/2;
//   - grid argmin at 1/2 (dims >= 3; f is constant for dims 1 and 2);
//   - f(1/2) >= 8/pi^2;
//   - f_pi(theta) >= 2 csc^2(pi/2P) on (-pi/2, pi/2);
//   - sin(theta/P) >= (2 theta/pi) sin(pi/2P) and the rational cos^2 bound
//     on [0, pi/2).
// resolution must be <= 1e-3.
FunctionMinimumReport f_minimum_suite(const std::vector<std::size_t>& dims,
                                             double resolution = 1e-4);

}  // namespace qcount
