#pragma once

namespace arb::tol {

// Shared numeric thresholds. Every module uses these; do not redefine locally.
inline constexpr double kPivot = 1e-10;        // smallest usable pivot magnitude
inline constexpr double kFeasibility = 1e-9;   // absolute slack per row / bound
inline constexpr double kReducedCost = 1e-9;   // optimality test on reduced costs
inline constexpr double kCycleNegative = 1e-12;  // summed log-weight must be below -this

}  // namespace arb::tol
