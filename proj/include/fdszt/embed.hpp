#pragma once

#include "fdszt/zmask.hpp"

namespace fdszt {

// The coefficient chosen to carry the bit: the lowest index whose rounded
// real part equals the lower median (2nd-smallest) of the four rounded
// real parts.
struct CoeffSelection {
  int index;                // 0..3
  long long median_value;   // rounded real part of the selected coefficient
};

CoeffSelection select_coeff(const ZCoeffs& coeffs);

// Sign-magnitude write/read of bit 3 (weight 8) of an integer coefficient
// real part. |write_bit(v, b) - v| is 0 or 8.
long long write_bit(long long value, int bit);
int read_bit(long long value);

struct EmbedOutcome {
  Mask2x2 stego_mask;
  long long offset_used;  // adjustment beyond the plain bit write, in coefficient units
  bool verified;          // always true on success
};

// Embeds one bit into a mask and verifies it survives quantization: the
// returned stego mask always re-extracts to `bit`. Throws EmbedFailed when
// no candidate in the adjustment schedule verifies without clamping.
EmbedOutcome embed_bit_in_mask(const Mask2x2& mask, int bit);

// forward_zt, select_coeff, read_bit. Total over masks.
int extract_bit_from_mask(const Mask2x2& mask);

}  // namespace fdszt
