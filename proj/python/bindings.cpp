#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "orbimap/cli.hpp"
#include "orbimap/fixtures.hpp"
#include "orbimap/io.hpp"

namespace py = pybind11;
using namespace orbimap;

namespace {

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string group_json(const std::string& chart) {
  const auto c = chart_from_json(parse_json(chart), "group");
  return dump(group_report(*c.group, c.group));
}

std::vector<std::vector<std::size_t>> homomorphisms(const std::string& src, const std::string& dst) {
  const auto s = chart_from_json(parse_json(src), "src");
  const auto t = chart_from_json(parse_json(dst), "dst");
  std::vector<std::vector<std::size_t>> out;
  for (const auto& h : enumerate_homomorphisms(s.group, t.group)) out.push_back(h.images());
  return out;
}

std::string lifts_json(const std::string& map) {
  const MapInput in = map_from_json(parse_json(map));
  Json list = Json::array();
  for (const auto& m : complete_lifts_over(in.map)) list.push_back(complete_map_to_json(m));
  return dump(list);
}

std::string strata_export(const std::string& map, unsigned degree, const std::string& format, std::uint64_t seed) {
  if (format != "json" && format != "dot") fail(ErrorCode::MalformedInput, "format must be json or dot");
  StrataOptions options;
  options.seed = seed;
  const auto p = strata_poset(map_from_json(parse_json(map)).map, degree, options);
  return export_poset(p, format == "dot" ? PosetFormat::Dot : PosetFormat::Json);
}

std::string pullbacks_json(const std::string& map) {
  const MapInput in = map_from_json(parse_json(map));
  Json list = Json::array();
  for (const auto& m : complete_lifts_over(in.map)) list.push_back(bundle_to_json(pullback(m)));
  return dump(list);
}

std::string idgroup_json(const std::string& chart) {
  const auto id = identity_lift_group(chart_from_json(parse_json(chart), "chart"));
  return dump(idgroup_to_json(id, sequence_check(id)));
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_orbimap, m) {
  m.doc() = "Exact finite data of orbifold maps on global-quotient charts";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object cls = py::module_::import("orbimap.errors").attr("OrbimapError");
      py::object value = cls(std::string(to_string(e.code())), e.what());
      PyErr_SetObject(cls.ptr(), value.ptr());
    }
  });

  m.def("group", &group_json, py::arg("chart_json"));
  m.def("homomorphisms", &homomorphisms, py::arg("src_json"), py::arg("dst_json"));
  m.def("complete_lifts", &lifts_json, py::arg("map_json"));
  m.def("strata", &strata_export, py::arg("map_json"), py::arg("degree") = 3, py::arg("format") = "json",
        py::arg("seed") = 0);
  m.def("pullbacks", &pullbacks_json, py::arg("map_json"));
  m.def("identity_lifts", &idgroup_json, py::arg("chart_json"));
  m.def("example_names", &fixtures::example_names);
  m.def("run", &run_cli, py::arg("args"));
}
