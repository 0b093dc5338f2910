#include <cmath>
#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fdszt/codec.hpp"
#include "fdszt/errors.hpp"
#include "fdszt/image.hpp"
#include "fdszt/metrics.hpp"

// Exit codes:
//   0 success            3 embed failed (degenerate mask; message names row/col)
//   1 I/O or format      4 no valid payload (extract)
//   2 insufficient capacity   5 verify mismatch
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json metrics_json(const fdszt::MetricsReport& report) {
  ordered_json j;
  j["mse"] = report.mse;
  if (std::isinf(report.psnr_db)) {
    j["psnr_db"] = "inf";
  } else {
    j["psnr_db"] = report.psnr_db;
  }
  j["if"] = report.image_fidelity;
  j["peak_mode"] = fdszt::peak_mode_name(report.peak_mode);
  return j;
}

fdszt::PeakMode parse_peak(const std::string& peak) {
  return peak == "max" ? fdszt::PeakMode::ObservedMax : fdszt::PeakMode::Fixed255;
}

int run_embed(const std::string& cover_path, const std::string& secret_path,
              const std::string& out_path, const std::string& peak) {
  const fdszt::GrayImage cover = fdszt::load_image(cover_path);
  const fdszt::GrayImage secret = fdszt::load_image(secret_path);
  const fdszt::GrayImage stego = fdszt::embed_image(cover, secret);
  fdszt::save_image(out_path, stego);

  ordered_json j;
  j["capacity_bits"] = fdszt::capacity_bits(cover);
  j["used_bits"] = fdszt::kHeaderBits + 8LL * secret.pixel_count();
  const auto report = fdszt::compute_metrics(cover, stego, parse_peak(peak));
  j.update(metrics_json(report));
  std::cout << j.dump() << "\n";
  return 0;
}

int run_extract(const std::string& stego_path, const std::string& out_path) {
  const fdszt::GrayImage stego = fdszt::load_image(stego_path);
  const fdszt::GrayImage secret = fdszt::extract_image(stego);
  fdszt::save_image(out_path, secret);

  ordered_json j;
  j["secret_height"] = secret.height;
  j["secret_width"] = secret.width;
  std::cout << j.dump() << "\n";
  return 0;
}

int run_capacity(const std::string& cover_path) {
  const fdszt::GrayImage cover = fdszt::load_image(cover_path);
  const long long bits = fdszt::capacity_bits(cover);
  const long long max_pixels = bits >= fdszt::kHeaderBits ? (bits - fdszt::kHeaderBits) / 8 : 0;
  std::cout << "bits=" << bits << " max_secret_pixels=" << max_pixels << "\n";
  return 0;
}

int run_metrics(const std::string& ref_path, const std::string& test_path,
                const std::string& peak) {
  const fdszt::GrayImage ref = fdszt::load_image(ref_path);
  const fdszt::GrayImage test = fdszt::load_image(test_path);
  const auto report = fdszt::compute_metrics(ref, test, parse_peak(peak));
  std::cout << metrics_json(report).dump() << "\n";
  return 0;
}

int run_verify(const std::string& cover_path, const std::string& secret_path,
               const std::string& peak) {
  const fdszt::GrayImage cover = fdszt::load_image(cover_path);
  const fdszt::GrayImage secret = fdszt::load_image(secret_path);
  const fdszt::GrayImage stego = fdszt::embed_image(cover, secret);
  const fdszt::GrayImage recovered = fdszt::extract_image(stego);
  const bool pass = recovered == secret;

  ordered_json j;
  j["result"] = pass ? "PASS" : "FAIL";
  const auto report = fdszt::compute_metrics(cover, stego, parse_peak(peak));
  j.update(metrics_json(report));
  std::cout << j.dump() << "\n";
  return pass ? 0 : 5;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grayscale image steganography in the Z-transform (frequency) domain"};
  app.require_subcommand(1);

  std::string cover, secret, stego, out, ref, test;
  std::string peak = "255";

  CLI::App* cmd_embed = app.add_subcommand("embed", "Hide a secret image inside a cover image");
  cmd_embed->add_option("--cover", cover, "Cover image (PGM or PNG)")->required();
  cmd_embed->add_option("--secret", secret, "Secret image to hide")->required();
  cmd_embed->add_option("--out", out, "Output stego image path")->required();
  cmd_embed->add_option("--peak", peak, "PSNR peak: 255 or max")
      ->check(CLI::IsMember({"255", "max"}));

  CLI::App* cmd_extract = app.add_subcommand("extract", "Recover the secret from a stego image");
  cmd_extract->add_option("--stego", stego, "Stego image")->required();
  cmd_extract->add_option("--out", out, "Output path for the recovered secret")->required();

  CLI::App* cmd_capacity = app.add_subcommand("capacity", "Report how many bits a cover can hold");
  cmd_capacity->add_option("--cover", cover, "Cover image")->required();

  CLI::App* cmd_metrics = app.add_subcommand("metrics", "MSE / PSNR / IF between two images");
  cmd_metrics->add_option("--ref", ref, "Reference image")->required();
  cmd_metrics->add_option("--test", test, "Test image")->required();
  cmd_metrics->add_option("--peak", peak, "PSNR peak: 255 or max")
      ->check(CLI::IsMember({"255", "max"}));

  CLI::App* cmd_verify =
      app.add_subcommand("verify", "Embed, extract and compare in memory; PASS only if bit-exact");
  cmd_verify->add_option("--cover", cover, "Cover image")->required();
  cmd_verify->add_option("--secret", secret, "Secret image")->required();
  cmd_verify->add_option("--peak", peak, "PSNR peak: 255 or max")
      ->check(CLI::IsMember({"255", "max"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (cmd_embed->parsed()) return run_embed(cover, secret, out, peak);
    if (cmd_extract->parsed()) return run_extract(stego, out);
    if (cmd_capacity->parsed()) return run_capacity(cover);
    if (cmd_metrics->parsed()) return run_metrics(ref, test, peak);
    if (cmd_verify->parsed()) return run_verify(cover, secret, peak);
  } catch (const fdszt::InsufficientCapacity& e) {
    std::cerr << "error: required=" << e.required_bits << " bits available=" << e.available_bits
              << "\n";
    return 2;
  } catch (const fdszt::EmbedFailed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const fdszt::ZeroDimension& e) {
    std::cerr << "error: no valid payload: " << e.what() << "\n";
    return 4;
  } catch (const fdszt::PayloadExceedsCapacity& e) {
    std::cerr << "error: no valid payload: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
