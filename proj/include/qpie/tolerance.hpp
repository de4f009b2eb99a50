#pragma once

namespace qpie::tol {

/// Algebraic identities: norms, codec round-trips, single-gate checks.
inline constexpr double kAlgebraic = 1e-12;

/// End-to-end: simulated circuit output versus target state.
inline constexpr double kEndToEnd = 1e-9;

/// Default threshold below which a rotation is treated as identity.
inline constexpr double kPrune = 1e-12;

}  // namespace qpie::tol
