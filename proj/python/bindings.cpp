#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "llf/errors.hpp"
#include "llf/hwsim.hpp"
#include "llf/image_io.hpp"
#include "llf/local_laplacian.hpp"
#include "llf/metrics.hpp"
#include "llf/pyramid.hpp"
#include "llf/remap.hpp"
#include "llf/test_card.hpp"

namespace py = pybind11;
using namespace llf;

namespace {

using ArrayD = py::array_t<double, py::array::c_style | py::array::forcecast>;
using ArrayI = py::array_t<int32_t, py::array::c_style | py::array::forcecast>;
using ArrayU8 = py::array_t<uint8_t, py::array::c_style | py::array::forcecast>;

Plane plane_from(const ArrayD& arr) {
  if (arr.ndim() != 2) throw ValidationError("expected a 2-D array (h, w)");
  Plane p(static_cast<int>(arr.shape(1)), static_cast<int>(arr.shape(0)));
  std::copy(arr.data(), arr.data() + arr.size(), p.samples.begin());
  return p;
}

py::array_t<double> plane_to(const Plane& p) {
  py::array_t<double> arr({p.height, p.width});
  std::copy(p.samples.begin(), p.samples.end(), arr.mutable_data());
  return arr;
}

PlaneQ plane_q_from(const ArrayI& arr) {
  if (arr.ndim() != 2) throw ValidationError("expected a 2-D array (h, w)");
  PlaneQ p(static_cast<int>(arr.shape(1)), static_cast<int>(arr.shape(0)));
  std::copy(arr.data(), arr.data() + arr.size(), p.samples.begin());
  return p;
}

py::array_t<int32_t> plane_q_to(const PlaneQ& p) {
  py::array_t<int32_t> arr({p.height, p.width});
  std::copy(p.samples.begin(), p.samples.end(), arr.mutable_data());
  return arr;
}

std::array<Plane, 3> rgb_from(const ArrayD& arr) {
  if (arr.ndim() != 3 || arr.shape(2) != 3) throw ValidationError("expected an (h, w, 3) array");
  const int h = static_cast<int>(arr.shape(0));
  const int w = static_cast<int>(arr.shape(1));
  std::array<Plane, 3> rgb{Plane(w, h), Plane(w, h), Plane(w, h)};
  const double* data = arr.data();
  for (size_t i = 0; i < static_cast<size_t>(w) * h; ++i) {
    for (int c = 0; c < 3; ++c) rgb[c].samples[i] = data[i * 3 + c];
  }
  return rgb;
}

py::array_t<double> rgb_to(const std::array<Plane, 3>& rgb) {
  py::array_t<double> arr({rgb[0].height, rgb[0].width, 3});
  double* data = arr.mutable_data();
  for (size_t i = 0; i < rgb[0].samples.size(); ++i) {
    for (int c = 0; c < 3; ++c) data[i * 3 + c] = rgb[c].samples[i];
  }
  return arr;
}

ImageU8 image_from(const ArrayU8& arr) {
  if (arr.ndim() != 3 || arr.shape(2) != 3) throw ValidationError("expected an (h, w, 3) array");
  ImageU8 img{static_cast<int>(arr.shape(1)), static_cast<int>(arr.shape(0)), 3, {}};
  img.data.assign(arr.data(), arr.data() + arr.size());
  return img;
}

}  // namespace

PYBIND11_MODULE(_llf, m) {
  m.doc() = "Local Laplacian filtering: reference path, fixed-point accelerator model, "
            "dataflow simulator and quality metrics";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  m.def("gaussian_pyramid", [](const ArrayD& image, int n_levels) {
    std::vector<py::array_t<double>> out;
    for (const Plane& level : gaussian_pyramid(plane_from(image), n_levels).levels) {
      out.push_back(plane_to(level));
    }
    return out;
  }, py::arg("image"), py::arg("n_levels"));

  m.def("laplacian_pyramid", [](const ArrayD& image, int n_bands) {
    std::vector<py::array_t<double>> out;
    for (const Plane& level : laplacian_pyramid(plane_from(image), n_bands).levels) {
      out.push_back(plane_to(level));
    }
    return out;
  }, py::arg("image"), py::arg("n_bands"));

  m.def("collapse", [](const std::vector<ArrayD>& levels) {
    Pyramid pyr{PyramidKind::laplacian, {}};
    for (const ArrayD& level : levels) pyr.levels.push_back(plane_from(level));
    return plane_to(collapse(pyr));
  }, py::arg("levels"));

  m.def("conv3_ref", [](const ArrayD& image) { return plane_to(conv3_ref(plane_from(image), Kernel3())); },
        py::arg("image"));

  m.def("conv3_shift_add", [](const ArrayI& image) { return plane_q_to(conv3_shift_add(plane_q_from(image))); },
        py::arg("image_q8"), "Bit-exact shift-add convolution on Q8 samples");

  m.def("sau", &sau, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("shift") = 4);

  m.def("remap_pixel", [](double i, double g, double alpha, double beta, double sigma) {
    return remap_pixel(i, g, RemapParams(alpha, beta, sigma));
  }, py::arg("i"), py::arg("g"), py::arg("alpha"), py::arg("beta"), py::arg("sigma"));

  py::class_<RemapLut>(m, "RemapLut")
      .def_property_readonly("table", [](const RemapLut& lut) {
        py::array_t<int32_t> arr(256);
        std::copy(lut.table.begin(), lut.table.end(), arr.mutable_data());
        return arr;
      })
      .def_readonly("sigma_index", &RemapLut::sigma_index);

  m.def("build_lut", [](double alpha, double beta, double sigma) {
    return build_lut(RemapParams(alpha, beta, sigma));
  }, py::arg("alpha"), py::arg("beta"), py::arg("sigma"));

  m.def("remap_lut_apply", &remap_lut_apply, py::arg("i"), py::arg("g"), py::arg("lut"));

  m.def("llf_reference", [](const ArrayD& image, double alpha, double beta, double sigma,
                            int n_bands, int threads) {
    return plane_to(llf_reference(plane_from(image), RemapParams(alpha, beta, sigma), n_bands,
                                  threads));
  }, py::arg("image"), py::arg("alpha"), py::arg("beta"), py::arg("sigma"),
     py::arg("n_bands") = 3, py::arg("threads") = 1);

  m.def("llf_accel_model", [](const ArrayD& rgb, double alpha, double beta, double sigma,
                              int threads) {
    return rgb_to(llf_accel_model(rgb_from(rgb), RemapParams(alpha, beta, sigma), threads));
  }, py::arg("rgb"), py::arg("alpha"), py::arg("beta"), py::arg("sigma"), py::arg("threads") = 1);

  m.def("psnr", [](const ArrayU8& a, const ArrayU8& b) {
    const QualityReport q = psnr(image_from(a), image_from(b));
    py::dict out;
    out["mse"] = q.mse;
    out["psnr_db"] = q.psnr_db;
    out["identical"] = q.identical;
    return out;
  }, py::arg("a"), py::arg("b"));

  m.def("load_image", [](const std::string& path) {
    const LoadedImage img = load_image(path);
    return rgb_to(img.planes);
  }, py::arg("path"), "Returns the image as an (h, w, 3) float array in [0,1]");

  m.def("save_image", [](const ArrayD& rgb, const std::string& path) {
    save_image(rgb_from(rgb), path);
  }, py::arg("rgb"), py::arg("path"));

  m.def("make_test_card", [](int width, int height) { return rgb_to(make_test_card(width, height)); },
        py::arg("width"), py::arg("height"));

  m.def("simulate_lpus", [](int width, int height, int64_t bandwidth_bits) {
    StreamConfig cfg;
    cfg.total_bandwidth_bits = bandwidth_bits <= 0 ? kUnlimitedBandwidth : bandwidth_bits;
    std::vector<py::dict> rows;
    for (const LpuStats& s : simulate_lpus(width, height, cfg)) {
      py::dict row;
      row["channel"] = s.channel;
      row["level"] = s.level;
      row["active"] = s.cycles.active;
      row["inactive"] = s.cycles.inactive;
      row["efficiency"] = s.cycles.efficiency;
      rows.push_back(row);
    }
    return rows;
  }, py::arg("width"), py::arg("height"), py::arg("bandwidth_bits"),
     "bandwidth_bits <= 0 simulates unlimited delivery");

  m.def("simulate_replication", [](int width, int height, int n_instances) {
    const ReplicationReport r = simulate_replication(width, height, ReplicationPlan{n_instances, 1.28});
    py::dict out;
    out["n_instances"] = r.n_instances;
    out["latency_cycles"] = r.latency_cycles;
    out["resource_pct"] = r.resource_pct;
    return out;
  }, py::arg("width"), py::arg("height"), py::arg("n_instances"));
}
