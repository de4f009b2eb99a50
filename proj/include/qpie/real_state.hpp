#pragma once

// Real unit statevectors and their hyperspherical half-angle parameterization.
//
// A state c of length N = 2^n is written as
//   c_k     = sin(a_0/2) ... sin(a_{k-1}/2) cos(a_k/2)     for k < N-1
//   c_{N-1} = sin(a_0/2) ... sin(a_{N-2}/2)
// with N-1 angles a_k. Every angle but the last lies in [0, 2pi]; the last
// lies in (-2pi, 2pi] and carries the sign of the final component.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qpie/error.hpp"
#include "qpie/tolerance.hpp"

namespace qpie {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

[[nodiscard]] constexpr bool is_power_of_two(std::size_t n) noexcept { return std::has_single_bit(n); }

/// Number of qubits addressing `dim` amplitudes. `dim` must be a power of two.
[[nodiscard]] constexpr unsigned qubits_for_dimension(std::size_t dim) noexcept {
  return static_cast<unsigned>(std::countr_zero(dim));
}

class RealState {
 public:
  /// Takes ownership of `amplitudes`; throws unless the length is a power of
  /// two >= 2, every entry is finite, and the squared norm is 1 within 1e-12.
  explicit RealState(std::vector<double> amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() < 2 || !is_power_of_two(amplitudes_.size())) {
      throw Error(ErrorCode::NotPowerOfTwo,
                  "state length " + std::to_string(amplitudes_.size()) + " is not a power of two >= 2");
    }
    double sum = 0.0;
    for (double a : amplitudes_) {
      if (!std::isfinite(a)) throw Error(ErrorCode::NonFiniteValue, "state amplitude is not finite");
      sum += a * a;
    }
    if (std::abs(sum - 1.0) > tol::kAlgebraic) {
      throw Error(ErrorCode::NotUnitNorm, "squared norm deviates from 1 by " + std::to_string(sum - 1.0));
    }
    n_qubits_ = qubits_for_dimension(amplitudes_.size());
  }

  /// The computational basis state |0...0> on `n_qubits` qubits.
  static RealState ground(unsigned n_qubits) {
    std::vector<double> amps(std::size_t{1} << n_qubits, 0.0);
    amps[0] = 1.0;
    return RealState(std::move(amps));
  }

  [[nodiscard]] unsigned n_qubits() const noexcept { return n_qubits_; }
  [[nodiscard]] std::size_t dimension() const noexcept { return amplitudes_.size(); }
  [[nodiscard]] std::span<const double> amplitudes() const noexcept { return amplitudes_; }
  [[nodiscard]] double operator[](std::size_t k) const { return amplitudes_[k]; }

  friend bool operator==(const RealState&, const RealState&) = default;

 private:
  unsigned n_qubits_ = 0;
  std::vector<double> amplitudes_;
};

class AngleList {
 public:
  explicit AngleList(std::vector<double> angles) : angles_(std::move(angles)) {
    const std::size_t dim = angles_.size() + 1;
    if (angles_.empty() || !is_power_of_two(dim)) {
      throw Error(ErrorCode::InvalidAngleList,
                  "angle count " + std::to_string(angles_.size()) + " is not 2^n - 1 for n >= 1");
    }
    for (std::size_t k = 0; k + 1 < angles_.size(); ++k) {
      if (!(angles_[k] >= 0.0 && angles_[k] <= kTwoPi)) {
        throw Error(ErrorCode::InvalidAngleList, "angle " + std::to_string(k) + " outside [0, 2pi]");
      }
    }
    const double last = angles_.back();
    if (!(last > -kTwoPi && last <= kTwoPi)) {
      throw Error(ErrorCode::InvalidAngleList, "last angle outside (-2pi, 2pi]");
    }
  }

  [[nodiscard]] unsigned n_qubits() const noexcept { return qubits_for_dimension(angles_.size() + 1); }
  [[nodiscard]] std::size_t size() const noexcept { return angles_.size(); }
  [[nodiscard]] std::span<const double> values() const noexcept { return angles_; }
  [[nodiscard]] double operator[](std::size_t k) const { return angles_[k]; }

  friend bool operator==(const AngleList&, const AngleList&) = default;

 private:
  std::vector<double> angles_;
};

/// Scales `values` to unit Euclidean norm.
[[nodiscard]] inline RealState normalize(std::span<const double> values) {
  if (values.size() < 2 || !is_power_of_two(values.size())) {
    throw Error(ErrorCode::NotPowerOfTwo,
                "input length " + std::to_string(values.size()) + " is not a power of two >= 2");
  }
  double scale = 0.0;
  for (double v : values) {
    if (!std::isfinite(v)) throw Error(ErrorCode::NonFiniteValue, "input value is not finite");
    scale = std::max(scale, std::abs(v));
  }
  if (scale == 0.0) throw Error(ErrorCode::AllZeroInput, "all input values are zero; no state exists");

  // Pre-scaling by the largest magnitude keeps the sum of squares in range.
  double sum = 0.0;
  for (double v : values) sum += (v / scale) * (v / scale);
  const double norm = scale * std::sqrt(sum);

  std::vector<double> amps(values.size());
  std::transform(values.begin(), values.end(), amps.begin(), [norm](double v) { return v / norm; });
  return RealState(std::move(amps));
}

/// Spherical half-angles of `state`. Angles whose amplitude suffix is
/// entirely zero come out as exactly 0.
[[nodiscard]] inline AngleList to_angles(const RealState& state) {
  const std::size_t dim = state.dimension();
  std::vector<double> c(dim);
  // Adding +0.0 maps -0.0 to +0.0 so atan2 never sees a signed zero.
  std::transform(state.amplitudes().begin(), state.amplitudes().end(), c.begin(),
                 [](double a) { return a + 0.0; });

  // suffix[k] = ||c[k..]||
  std::vector<double> suffix(dim + 1, 0.0);
  for (std::size_t k = dim; k-- > 0;) suffix[k] = std::hypot(c[k], suffix[k + 1]);

  std::vector<double> angles(dim - 1, 0.0);
  for (std::size_t k = 0; k + 1 < dim; ++k) {
    if (suffix[k] == 0.0) break;
    const bool last = (k + 2 == dim);
    double a = last ? 2.0 * std::atan2(c[k + 1], c[k]) : 2.0 * std::atan2(suffix[k + 1], c[k]);
    if (a <= -kTwoPi) a += 2.0 * kTwoPi;
    angles[k] = a;
  }
  return AngleList(std::move(angles));
}

/// Expands spherical half-angles back into amplitudes.
[[nodiscard]] inline RealState from_angles(const AngleList& angles) {
  const std::size_t dim = angles.size() + 1;
  std::vector<double> amps(dim);
  double sine_product = 1.0;
  for (std::size_t k = 0; k + 1 < dim; ++k) {
    const double half = angles[k] / 2.0;
    amps[k] = sine_product * std::cos(half);
    sine_product *= std::sin(half);
  }
  amps[dim - 1] = sine_product;
  return RealState(std::move(amps));
}

}  // namespace qpie
