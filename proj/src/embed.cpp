#include "fdszt/embed.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "fdszt/errors.hpp"

namespace fdszt {

CoeffSelection select_coeff(const ZCoeffs& coeffs) {
  std::array<long long, 4> reals{};
  for (int i = 0; i < 4; ++i) {
    reals[i] = std::llround(coeffs[i].real());
  }
  std::array<long long, 4> sorted = reals;
  std::sort(sorted.begin(), sorted.end());
  const long long median = sorted[1];  // lower median of four
  for (int i = 0; i < 4; ++i) {
    if (reals[i] == median) {
      return CoeffSelection{i, median};
    }
  }
  return CoeffSelection{0, median};  // unreachable
}

long long write_bit(long long value, int bit) {
  long long magnitude = std::llabs(value);
  magnitude = bit ? (magnitude | 8LL) : (magnitude & ~8LL);
  return value < 0 ? -magnitude : magnitude;
}

int read_bit(long long value) {
  return static_cast<int>((std::llabs(value) >> 3) & 1LL);
}

int extract_bit_from_mask(const Mask2x2& mask) {
  const ZCoeffs coeffs = forward_zt(mask);
  const CoeffSelection sel = select_coeff(coeffs);
  return read_bit(sel.median_value);
}

namespace {

// Writes `target` into the real part of the selected coefficient. X(1) and
// X(3) are a conjugate pair, so a real-part edit to either is mirrored onto
// both; otherwise the inverse transform would go complex.
ZCoeffs apply_candidate(const ZCoeffs& coeffs, int index, long long target) {
  ZCoeffs out = coeffs;
  const double value = static_cast<double>(target);
  if (index == 1 || index == 3) {
    out[1].real(value);
    out[3].real(value);
  } else {
    out[index].real(value);
  }
  return out;
}

std::string mask_to_string(const Mask2x2& mask) {
  return "[" + std::to_string(mask[0]) + "," + std::to_string(mask[1]) + "," +
         std::to_string(mask[2]) + "," + std::to_string(mask[3]) + "]";
}

}  // namespace

EmbedOutcome embed_bit_in_mask(const Mask2x2& mask, int bit) {
  const ZCoeffs coeffs = forward_zt(mask);
  const CoeffSelection sel = select_coeff(coeffs);
  const long long v0 = write_bit(sel.median_value, bit);

  // Fixed adjustment schedule. +-16/+-32 keep bit 3 of the magnitude away
  // from zero crossings, the sign flip keeps it always; the re-extraction
  // check below is the actual gate for every candidate.
  long long candidates[6];
  int count = 0;
  candidates[count++] = v0;
  candidates[count++] = v0 + 16;
  candidates[count++] = v0 - 16;
  if (read_bit(-v0) == bit) {
    candidates[count++] = -v0;
  }
  candidates[count++] = v0 + 32;
  candidates[count++] = v0 - 32;

  for (int i = 0; i < count; ++i) {
    const long long target = candidates[i];
    const ZCoeffs modified = apply_candidate(coeffs, sel.index, target);
    const QuadReal reconstructed = inverse_zt(modified);
    const QuantizeResult quantized = quantize(reconstructed);
    if (quantized.any_clamped()) {
      continue;
    }
    if (extract_bit_from_mask(quantized.mask) == bit) {
      return EmbedOutcome{quantized.mask, target - v0, true};
    }
  }

  throw EmbedFailed("no adjustment candidate verifies for mask " + mask_to_string(mask) +
                    " bit " + std::to_string(bit));
}

}  // namespace fdszt
