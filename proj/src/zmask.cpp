#include "fdszt/zmask.hpp"

#include <cmath>
#include <string>

#include "fdszt/errors.hpp"

namespace fdszt {

namespace {

// e^{-j(pi/2)t} for t = 0..3: 1, -j, -1, +j. Exact units so that integer
// pixel inputs transform to exactly integer-valued coefficients.
constexpr std::complex<double> kTwiddle[4] = {
    {1.0, 0.0}, {0.0, -1.0}, {-1.0, 0.0}, {0.0, 1.0}};

constexpr double kImagTolerance = 1e-6;

}  // namespace

ZCoeffs forward_zt(const Mask2x2& mask) {
  ZCoeffs out{};
  for (int k = 0; k < 4; ++k) {
    std::complex<double> sum{0.0, 0.0};
    for (int m = 0; m < 4; ++m) {
      sum += static_cast<double>(mask[m]) * kTwiddle[(k * m) % 4];
    }
    out[k] = sum;
  }
  return out;
}

QuadReal inverse_zt(const ZCoeffs& coeffs) {
  QuadReal out{};
  for (int m = 0; m < 4; ++m) {
    std::complex<double> sum{0.0, 0.0};
    for (int k = 0; k < 4; ++k) {
      // conj(e^{-j(pi/2)km}) = e^{+j(pi/2)km}
      sum += coeffs[k] * std::conj(kTwiddle[(k * m) % 4]);
    }
    sum *= 0.25;
    if (std::abs(sum.imag()) > kImagTolerance) {
      throw NonRealReconstruction(
          "inverse transform left imaginary residue " + std::to_string(sum.imag()) +
          " at position " + std::to_string(m) + "; coefficients were modified asymmetrically");
    }
    out[m] = sum.real();
  }
  return out;
}

QuantizeResult quantize(const QuadReal& values) {
  QuantizeResult result{};
  for (int i = 0; i < 4; ++i) {
    long long rounded = std::llround(values[i]);  // half away from zero
    long long clamped = rounded;
    if (clamped < 0) clamped = 0;
    if (clamped > 255) clamped = 255;
    result.mask[i] = static_cast<std::uint8_t>(clamped);
    result.clamped[i] = clamped != rounded;
  }
  return result;
}

}  // namespace fdszt
