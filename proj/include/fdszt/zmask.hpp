#pragma once

#include <array>
#include <complex>
#include <cstdint>

namespace fdszt {

// One 2x2 cover block flattened row-major:
// x[0]=top-left, x[1]=top-right, x[2]=bottom-left, x[3]=bottom-right.
using Mask2x2 = std::array<std::uint8_t, 4>;

// Frequency coefficients X(0..3) of one mask, index k <-> omega = k*pi/2.
using ZCoeffs = std::array<std::complex<double>, 4>;

// Raw inverse-transform outputs before rounding/clamping.
using QuadReal = std::array<double, 4>;

// X(k) = sum_m x(m) * e^{-j(k*pi/2)*m}, k = 0..3. The twiddles are exact
// units (+-1, -+j), so integer inputs give exactly integer-valued real and
// imaginary parts, and X(1)/X(3) are conjugates.
ZCoeffs forward_zt(const Mask2x2& mask);

// y(m) = (1/4) sum_k X(k) * e^{+j(k*pi/2)*m}; returns the real parts.
// Throws NonRealReconstruction if any imaginary residue exceeds 1e-6,
// which signals an asymmetric coefficient edit by the caller.
QuadReal inverse_zt(const ZCoeffs& coeffs);

struct QuantizeResult {
  Mask2x2 mask;
  std::array<bool, 4> clamped;

  bool any_clamped() const { return clamped[0] || clamped[1] || clamped[2] || clamped[3]; }
};

// Round half away from zero, then clamp to [0, 255]. Clamping is reported
// per entry, never thrown.
QuantizeResult quantize(const QuadReal& values);

}  // namespace fdszt
