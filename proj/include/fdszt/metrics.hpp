#pragma once

#include <string>

#include "fdszt/image.hpp"

namespace fdszt {

enum class PeakMode {
  Fixed255,     // peak = 255 (default)
  ObservedMax,  // peak = max pixel of the reference image
};

struct MetricsReport {
  double mse = 0.0;
  double psnr_db = 0.0;  // +infinity when mse == 0
  double image_fidelity = 1.0;
  PeakMode peak_mode = PeakMode::Fixed255;
};

// Mean of squared differences over all pixels. Throws DimensionMismatch.
double mse(const GrayImage& ref, const GrayImage& test);

// 10*log10(peak^2 / mse); +infinity when mse == 0. ObservedMax mode with an
// all-zero reference and mse > 0 throws UndefinedPeak.
double psnr(const GrayImage& ref, const GrayImage& test, PeakMode mode = PeakMode::Fixed255);

// IF = 1 - sum((ref-test)^2) / sum(test^2). The denominator uses the test
// image; throws ZeroDenominator when it is zero.
double image_fidelity(const GrayImage& ref, const GrayImage& test);

MetricsReport compute_metrics(const GrayImage& ref, const GrayImage& test,
                              PeakMode mode = PeakMode::Fixed255);

const char* peak_mode_name(PeakMode mode);  // "255" / "max", the CLI tokens

}  // namespace fdszt
