#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "fdszt/codec.hpp"
#include "fdszt/embed.hpp"
#include "fdszt/errors.hpp"
#include "fdszt/image.hpp"
#include "fdszt/metrics.hpp"
#include "fdszt/zmask.hpp"

namespace py = pybind11;
using namespace fdszt;

namespace {

GrayImage image_from_array(const py::array_t<std::uint8_t, py::array::c_style>& array) {
  if (array.ndim() != 2) {
    throw py::value_error("expected a 2-D uint8 array (height x width)");
  }
  GrayImage image;
  image.height = static_cast<int>(array.shape(0));
  image.width = static_cast<int>(array.shape(1));
  const auto* data = array.data();
  image.pixels.assign(data, data + array.size());
  return image;
}

py::array_t<std::uint8_t> image_to_array(const GrayImage& image) {
  py::array_t<std::uint8_t> array({image.height, image.width});
  std::copy(image.pixels.begin(), image.pixels.end(), array.mutable_data());
  return array;
}

std::vector<std::uint8_t> bytes_to_vector(const py::bytes& data) {
  const std::string_view view = data;
  return std::vector<std::uint8_t>(view.begin(), view.end());
}

py::bytes vector_to_bytes(const std::vector<std::uint8_t>& data) {
  return py::bytes(reinterpret_cast<const char*>(data.data()), data.size());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Z-transform domain grayscale image steganography";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<EmbedFailed>(m, "EmbedFailedError", base);
  py::register_exception<InsufficientCapacity>(m, "InsufficientCapacityError", base);
  py::register_exception<ZeroDimension>(m, "ZeroDimensionError", base);
  py::register_exception<PayloadExceedsCapacity>(m, "PayloadExceedsCapacityError", base);

  py::class_<GrayImage>(m, "GrayImage")
      .def(py::init(&image_from_array), py::arg("array"))
      .def_readonly("width", &GrayImage::width)
      .def_readonly("height", &GrayImage::height)
      .def("to_numpy", &image_to_array)
      .def("__eq__", [](const GrayImage& a, const GrayImage& b) { return a == b; })
      .def("__repr__", [](const GrayImage& img) {
        return "GrayImage(" + std::to_string(img.width) + "x" + std::to_string(img.height) + ")";
      });

  m.def("parse_pgm", [](const py::bytes& data) { return parse_pgm(bytes_to_vector(data)); });
  m.def("write_pgm", [](const GrayImage& img) { return vector_to_bytes(write_pgm(img)); });
  m.def("parse_png", [](const py::bytes& data) { return parse_png(bytes_to_vector(data)); });
  m.def("write_png", [](const GrayImage& img) { return vector_to_bytes(write_png(img)); });
  m.def("load_image", &load_image, py::arg("path"));
  m.def("save_image", &save_image, py::arg("path"), py::arg("image"));

  m.def("forward_zt", &forward_zt, py::arg("mask"));
  m.def("inverse_zt", &inverse_zt, py::arg("coeffs"));
  m.def("quantize", [](const QuadReal& values) {
    const QuantizeResult r = quantize(values);
    return py::make_tuple(r.mask, r.clamped);
  });

  py::class_<CoeffSelection>(m, "CoeffSelection")
      .def_readonly("index", &CoeffSelection::index)
      .def_readonly("median_value", &CoeffSelection::median_value);
  m.def("select_coeff", &select_coeff, py::arg("coeffs"));
  m.def("write_bit", &write_bit, py::arg("value"), py::arg("bit"));
  m.def("read_bit", &read_bit, py::arg("value"));

  py::class_<EmbedOutcome>(m, "EmbedOutcome")
      .def_readonly("stego_mask", &EmbedOutcome::stego_mask)
      .def_readonly("offset_used", &EmbedOutcome::offset_used)
      .def_readonly("verified", &EmbedOutcome::verified);
  m.def("embed_bit_in_mask", &embed_bit_in_mask, py::arg("mask"), py::arg("bit"));
  m.def("extract_bit_from_mask", &extract_bit_from_mask, py::arg("mask"));

  m.def("capacity_bits", &capacity_bits, py::arg("cover"));
  m.def("embed_image", &embed_image, py::arg("cover"), py::arg("secret"));
  m.def("extract_image", &extract_image, py::arg("stego"));

  py::enum_<PeakMode>(m, "PeakMode")
      .value("FIXED_255", PeakMode::Fixed255)
      .value("OBSERVED_MAX", PeakMode::ObservedMax);
  py::class_<MetricsReport>(m, "MetricsReport")
      .def_readonly("mse", &MetricsReport::mse)
      .def_readonly("psnr_db", &MetricsReport::psnr_db)
      .def_readonly("image_fidelity", &MetricsReport::image_fidelity)
      .def_readonly("peak_mode", &MetricsReport::peak_mode);
  m.def("mse", &mse, py::arg("ref"), py::arg("test"));
  m.def("psnr", &psnr, py::arg("ref"), py::arg("test"), py::arg("mode") = PeakMode::Fixed255);
  m.def("image_fidelity", &image_fidelity, py::arg("ref"), py::arg("test"));
  m.def("compute_metrics", &compute_metrics, py::arg("ref"), py::arg("test"),
        py::arg("mode") = PeakMode::Fixed255);

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}
