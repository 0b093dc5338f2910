#include "fdszt/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fdszt/errors.hpp"

namespace fdszt {

namespace {

void require_same_dims(const GrayImage& ref, const GrayImage& test) {
  if (ref.width != test.width || ref.height != test.height) {
    throw DimensionMismatch("images are " + std::to_string(ref.width) + "x" +
                            std::to_string(ref.height) + " vs " + std::to_string(test.width) +
                            "x" + std::to_string(test.height));
  }
}

double sum_squared_diff(const GrayImage& ref, const GrayImage& test) {
  double sum = 0.0;
  for (std::size_t i = 0; i < ref.pixels.size(); ++i) {
    const double d = static_cast<double>(ref.pixels[i]) - static_cast<double>(test.pixels[i]);
    sum += d * d;
  }
  return sum;
}

}  // namespace

double mse(const GrayImage& ref, const GrayImage& test) {
  require_same_dims(ref, test);
  return sum_squared_diff(ref, test) / static_cast<double>(ref.pixel_count());
}

double psnr(const GrayImage& ref, const GrayImage& test, PeakMode mode) {
  const double error = mse(ref, test);
  if (error == 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  double peak = 255.0;
  if (mode == PeakMode::ObservedMax) {
    peak = static_cast<double>(*std::max_element(ref.pixels.begin(), ref.pixels.end()));
    if (peak == 0.0) {
      throw UndefinedPeak("reference image is all zero; observed-max peak is undefined");
    }
  }
  return 10.0 * std::log10(peak * peak / error);
}

double image_fidelity(const GrayImage& ref, const GrayImage& test) {
  require_same_dims(ref, test);
  double denom = 0.0;
  for (std::uint8_t p : test.pixels) {
    denom += static_cast<double>(p) * static_cast<double>(p);
  }
  if (denom == 0.0) {
    throw ZeroDenominator("test image is all zero; fidelity denominator is zero");
  }
  return 1.0 - sum_squared_diff(ref, test) / denom;
}

MetricsReport compute_metrics(const GrayImage& ref, const GrayImage& test, PeakMode mode) {
  MetricsReport report;
  report.mse = mse(ref, test);
  report.psnr_db = psnr(ref, test, mode);
  report.image_fidelity = image_fidelity(ref, test);
  report.peak_mode = mode;
  return report;
}

const char* peak_mode_name(PeakMode mode) {
  return mode == PeakMode::Fixed255 ? "255" : "max";
}

}  // namespace fdszt
