#pragma once

// Shared numeric tolerances. Every module validates against these instead of
// scattering magic constants.

namespace qcount::tol {

inline constexpr double unit_norm = 1e-10;       // state normalization
inline constexpr double unitarity = 1e-10;       // ||U'U - I||_max on checked constructors
inline constexpr double prob_sum = 1e-10;        // completeness of measurement distributions
inline constexpr double angle_singular = 1e-12;  // near-singular guard in overlap formulas

}  // namespace qcount::tol
