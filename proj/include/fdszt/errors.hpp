#pragma once

#include <stdexcept>
#include <string>

namespace fdszt {

// Base class for every error this library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// --- image I/O ---

class MalformedHeader : public Error {
 public:
  using Error::Error;
};

class TruncatedRaster : public Error {
 public:
  using Error::Error;
};

class UnsupportedMaxval : public Error {
 public:
  using Error::Error;
};

// --- transform ---

// Inverse transform produced a significant imaginary residue. This means the
// caller modified the coefficients asymmetrically; it is a bug upstream, not
// bad input data.
class NonRealReconstruction : public Error {
 public:
  using Error::Error;
};

// --- per-mask embedding ---

// No candidate in the adjustment schedule survives quantization and
// re-extracts the requested bit.
class EmbedFailed : public Error {
 public:
  using Error::Error;
};

// --- whole-image codec ---

class HeaderOutOfRange : public Error {
 public:
  using Error::Error;
};

class ZeroDimension : public Error {
 public:
  using Error::Error;
};

class PayloadExceedsCapacity : public Error {
 public:
  using Error::Error;
};

class InsufficientCapacity : public Error {
 public:
  InsufficientCapacity(long long required_bits, long long available_bits)
      : Error("insufficient capacity: required=" + std::to_string(required_bits) +
              " bits available=" + std::to_string(available_bits)),
        required_bits(required_bits),
        available_bits(available_bits) {}

  long long required_bits;
  long long available_bits;
};

// --- metrics ---

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class UndefinedPeak : public Error {
 public:
  using Error::Error;
};

class ZeroDenominator : public Error {
 public:
  using Error::Error;
};

}  // namespace fdszt
