#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "emdstego/bound.hpp"
#include "emdstego/codec.hpp"
#include "emdstego/cubic.hpp"
#include "emdstego/error.hpp"
#include "emdstego/image.hpp"
#include "emdstego/metrics.hpp"
#include "emdstego/rng.hpp"
#include "emdstego/scheme.hpp"

namespace py = pybind11;
using namespace emdstego;

namespace {

py::int_ to_py(const BigInt& v) {
  std::ostringstream os;
  os << v;
  return py::int_(py::str(os.str()));
}

BitStream to_bits(const std::vector<int>& bits) {
  BitStream b;
  b.bits.reserve(bits.size());
  for (int v : bits) {
    if (v != 0 && v != 1) throw py::value_error("bits must be 0 or 1");
    b.bits.push_back(static_cast<std::uint8_t>(v));
  }
  return b;
}

std::vector<int> from_bits(const BitStream& b) { return {b.bits.begin(), b.bits.end()}; }

py::bytes image_bytes(const GrayImage& img) {
  return py::bytes(reinterpret_cast<const char*>(img.pixels.data()), img.pixels.size());
}

GrayImage image_from(int width, int height, const py::bytes& data) {
  const std::string s = data;
  return GrayImage(width, height, std::vector<std::uint8_t>(s.begin(), s.end()));
}

py::dict point_dict(const BoundPoint& p) {
  py::dict d;
  d["n"] = p.query.n;
  d["z"] = p.query.z;
  d["q"] = p.query.q;
  d["alpha"] = p.alpha;
  d["inv_alpha"] = p.inv_alpha;
  d["eff_standard"] = p.eff_standard;
  d["eff_proposed"] = p.eff_proposed;
  d["efficiency"] = p.efficiency();
  d["metric"] = std::string(metric_name(p.metric));
  d["normalization"] = std::string(normalization_name(p.normalization));
  return d;
}

py::object opt(const std::optional<double>& v) { return v ? py::cast(*v) : py::none(); }

PayloadMode payload_mode(bool exact) { return exact ? PayloadMode::Exact : PayloadMode::Operational; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "EMD-family steganography: schemes, metrics and embedding bounds";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  py::class_<GrayImage>(m, "GrayImage")
      .def(py::init(&image_from), py::arg("width"), py::arg("height"), py::arg("pixels"))
      .def_static("filled", &GrayImage::filled, py::arg("width"), py::arg("height"), py::arg("value"))
      .def_readonly("width", &GrayImage::width)
      .def_readonly("height", &GrayImage::height)
      .def_property_readonly("pixels", &image_bytes)
      .def("__eq__", [](const GrayImage& a, const GrayImage& b) { return a == b; })
      .def("__repr__", [](const GrayImage& g) {
        return "GrayImage(" + std::to_string(g.width) + "x" + std::to_string(g.height) + ")";
      });

  m.def("load_pgm", [](const py::bytes& data) {
    const std::string s = data;
    return load_pgm(std::span(reinterpret_cast<const std::uint8_t*>(s.data()), s.size()));
  });
  m.def("save_pgm", [](const GrayImage& img) {
    const auto out = save_pgm(img);
    return py::bytes(reinterpret_cast<const char*>(out.data()), out.size());
  });
  m.def("clamp_for_scheme", &clamp_for_scheme, py::arg("image"), py::arg("z"));
  m.def("seeded_interior_image", &seeded_interior_image, py::arg("width"), py::arg("height"), py::arg("seed"));
  m.def("seeded_bits", [](std::uint64_t seed, std::size_t count) { return from_bits(seeded_bits(seed, count)); },
        py::arg("seed"), py::arg("count"));
  m.def("pack_bits", [](const std::vector<int>& bits) {
    const auto out = pack_bits(to_bits(bits));
    return py::bytes(reinterpret_cast<const char*>(out.data()), out.size());
  });

  py::class_<SchemeSpec>(m, "Scheme")
      .def_readonly("id", &SchemeSpec::id)
      .def_readonly("params", &SchemeSpec::params)
      .def_readonly("n", &SchemeSpec::n)
      .def_readonly("base", &SchemeSpec::base)
      .def_readonly("modulus", &SchemeSpec::modulus)
      .def_readonly("key", &SchemeSpec::key)
      .def_property_readonly("per_pixel_max", [](const SchemeSpec& s) { return s.constraint.per_pixel_max; })
      .def_property_readonly("max_changed_pixels",
                             [](const SchemeSpec& s) { return s.constraint.max_changed_pixels; })
      .def_property_readonly("payload_bits", &SchemeSpec::payload_bits_exact)
      .def_property_readonly("payload_bits_operational", &SchemeSpec::payload_bits_operational)
      .def("__repr__", [](const SchemeSpec& s) { return "Scheme(" + s.id + ", " + s.param_string() + ")"; });

  m.def("make_scheme", &make_scheme, py::arg("name"), py::arg("params") = ParamMap{});
  m.def("scheme_names", &scheme_names);
  m.def("extraction_value", &extraction_value, py::arg("scheme"), py::arg("group"));
  m.def("embed_group", &embed_group, py::arg("scheme"), py::arg("group"), py::arg("symbol"));
  m.def(
      "embed_message",
      [](const GrayImage& img, const SchemeSpec& spec, const std::vector<int>& bits) {
        auto r = embed_message(img, spec, to_bits(bits));
        return py::make_tuple(std::move(r.stego), r.used_groups);
      },
      py::arg("image"), py::arg("scheme"), py::arg("bits"));
  m.def(
      "extract_message",
      [](const GrayImage& img, const SchemeSpec& spec, std::size_t n) {
        return from_bits(extract_message(img, spec, n));
      },
      py::arg("image"), py::arg("scheme"), py::arg("bit_length"));

  m.def("mse", &mse, py::arg("cover"), py::arg("stego"));
  m.def("psnr", &psnr, py::arg("mse"));
  m.def("mse_from_psnr", &mse_from_psnr, py::arg("psnr_db"));
  m.def(
      "relative_payload", [](const SchemeSpec& s, bool exact) { return relative_payload(s, payload_mode(exact)); },
      py::arg("scheme"), py::arg("exact") = true);
  m.def(
      "capacity",
      [](const GrayImage& img, const SchemeSpec& s, bool exact) { return capacity(img, s, payload_mode(exact)); },
      py::arg("image"), py::arg("scheme"), py::arg("exact") = false);
  m.def("max_change_units", &max_change_units, py::arg("scheme"));
  m.def("standard_efficiency", &standard_efficiency, py::arg("payload_bits"), py::arg("rho"));
  m.def("proposed_efficiency", &proposed_efficiency, py::arg("alpha"), py::arg("mse"));
  m.def("theoretical_distortion", [](const SchemeSpec& s) {
    const auto d = theoretical_distortion(s);
    py::dict out;
    out["expected_abs_per_pixel"] = d.expected_abs_per_pixel;
    out["expected_sq_per_pixel"] = d.expected_sq_per_pixel;
    out["max_group_change"] = d.max_group_change;
    return out;
  });
  m.def("analyze_pair", [](const GrayImage& cover, const GrayImage& stego, const SchemeSpec& s) {
    const auto r = analyze_pair(cover, stego, s);
    py::dict out;
    out["scheme"] = r.scheme_id;
    out["params"] = r.params;
    out["alpha"] = opt(r.alpha);
    out["mse"] = opt(r.mse);
    out["psnr_db"] = opt(r.psnr_db);
    out["eff_standard"] = opt(r.efficiency_standard);
    out["eff_proposed"] = opt(r.efficiency_proposed);
    return out;
  });

  m.def("count_states", [](int n, int z, int q) { return to_py(count_states({n, z, q})); });
  m.def("sum_changes_linear", [](int n, int z, int q) { return to_py(sum_changes_linear({n, z, q})); });
  m.def("sum_changes_squared", [](int n, int z, int q) { return to_py(sum_changes_squared({n, z, q})); });
  m.def("enumerate_oracle", [](int n, int z, int q) {
    const auto r = enumerate_oracle({n, z, q});
    return py::make_tuple(to_py(r.state_count), to_py(r.change_sum_linear), to_py(r.change_sum_squared));
  });
  m.def(
      "bound_point",
      [](int n, int z, int q, const std::string& metric, const std::string& normalization) {
        return point_dict(bound_point({n, z, q}, parse_metric(metric), parse_normalization(normalization)));
      },
      py::arg("n"), py::arg("z"), py::arg("q"), py::arg("metric") = "proposed",
      py::arg("normalization") = "mean-per-pixel");
  m.def(
      "frontier",
      [](int max_n, int max_z, const std::string& metric, const std::string& normalization) {
        py::list out;
        for (const auto& p : frontier({1, max_n}, {1, max_z}, parse_metric(metric), parse_normalization(normalization))) {
          out.append(point_dict(p));
        }
        return out;
      },
      py::arg("max_n"), py::arg("max_z"), py::arg("metric") = "proposed", py::arg("normalization") = "mean-per-pixel");

  py::class_<CubicPoly>(m, "CubicPoly")
      .def(py::init<double, double, double, double>(), py::arg("c3"), py::arg("c2"), py::arg("c1"), py::arg("c0"))
      .def_readonly("c3", &CubicPoly::c3)
      .def_readonly("c2", &CubicPoly::c2)
      .def_readonly("c1", &CubicPoly::c1)
      .def_readonly("c0", &CubicPoly::c0);
  m.attr("REFERENCE_BOUND_CURVE") = kReferenceBoundCurve;
  m.def("cubic_eval", &cubic_eval, py::arg("poly"), py::arg("x"));
  m.def("cubic_fit", [](const std::vector<std::pair<double, double>>& points) {
    std::vector<Sample> samples;
    for (const auto& [x, y] : points) samples.push_back({x, y});
    const auto fit = cubic_fit(samples);
    return py::make_tuple(fit.poly, fit.residual);
  });
  m.def(
      "distance_to_curve",
      [](const CubicPoly& p, double x, double y, const std::string& mode, double lo, double hi) {
        return distance_to_curve(p, {x, y}, parse_distance_mode(mode), lo, hi);
      },
      py::arg("poly"), py::arg("x"), py::arg("y"), py::arg("mode") = "euclidean", py::arg("lo") = 0.0,
      py::arg("hi") = 3.0);
}
