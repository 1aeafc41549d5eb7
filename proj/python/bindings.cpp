#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "motifsets/cluster_mk.hpp"
#include "motifsets/core.hpp"
#include "motifsets/discovery.hpp"
#include "motifsets/eval.hpp"
#include "motifsets/io.hpp"
#include "motifsets/pair_finder.hpp"
#include "motifsets/scan_mk.hpp"
#include "motifsets/set_finder.hpp"
#include "motifsets/synth.hpp"

namespace py = pybind11;
using namespace motifsets;

namespace {

DiscoveryParams make_params(std::size_t n, double r, std::size_t q, std::uint64_t seed) {
  DiscoveryParams p{n, r, q, seed};
  p.validate();
  return p;
}

py::dict truth_to_dict(const GroundTruth& truth) {
  py::list shapes;
  for (const auto& shape : truth.shapes) {
    py::dict entry;
    entry["kind"] = std::string(to_string(shape.kind));
    entry["starts"] = shape.starts;
    shapes.append(entry);
  }
  py::dict out;
  out["n"] = truth.shape_length;
  out["shapes"] = shapes;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact discovery of time-series motif sets (window starts are 0-based)";

  py::register_exception<InvalidParameter>(m, "InvalidParameter", PyExc_ValueError);
  py::register_exception<GenerationError>(m, "GenerationError", PyExc_RuntimeError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  py::class_<MotifSet>(m, "MotifSet")
      .def_readonly("members", &MotifSet::members)
      .def_readonly("representative", &MotifSet::representative)
      .def_readonly("pair_distance", &MotifSet::pair_distance)
      .def_property_readonly("cardinality", &MotifSet::cardinality)
      .def("__repr__", [](const MotifSet& s) {
        return "<MotifSet cardinality=" + std::to_string(s.cardinality()) + ">";
      });

  py::class_<BestPair>(m, "BestPair")
      .def_readonly("first", &BestPair::first)
      .def_readonly("second", &BestPair::second)
      .def_readonly("distance", &BestPair::distance);

  py::class_<Cluster>(m, "Cluster")
      .def(py::init([](std::vector<double> centroid, std::size_t weight, std::vector<std::size_t> members) {
             return Cluster{std::move(centroid), weight, std::move(members)};
           }),
           py::arg("centroid"), py::arg("weight"), py::arg("members"))
      .def_readonly("centroid", &Cluster::centroid)
      .def_readonly("weight", &Cluster::weight)
      .def_readonly("members", &Cluster::members);

  py::class_<ScoreReport>(m, "ScoreReport")
      .def_readonly("tp", &ScoreReport::tp)
      .def_readonly("fp", &ScoreReport::fp)
      .def_readonly("fn", &ScoreReport::fn)
      .def_readonly("precision", &ScoreReport::precision)
      .def_readonly("sensitivity", &ScoreReport::sensitivity)
      .def_readonly("precision_defined", &ScoreReport::precision_defined)
      .def_readonly("sensitivity_defined", &ScoreReport::sensitivity_defined);

  py::class_<TTestResult>(m, "TTestResult")
      .def_readonly("t", &TTestResult::t)
      .def_readonly("degrees_of_freedom", &TTestResult::degrees_of_freedom)
      .def_readonly("p_value", &TTestResult::p_value)
      .def_readonly("significant", &TTestResult::significant);

  m.def("distance", [](std::vector<double> a, std::vector<double> b) { return distance(a, b); });
  m.def(
      "distance_with_abandon",
      [](std::vector<double> a, std::vector<double> b, double cutoff) { return distance_with_abandon(a, b, cutoff); },
      "Distance, or None when it exceeds the cutoff");
  m.def("trivial_match", &trivial_match, py::arg("a"), py::arg("b"), py::arg("n"));
  m.def(
      "sliding_window",
      [](std::vector<double> values, std::size_t n) {
        const TimeSeries series(std::move(values));
        std::vector<std::vector<double>> out;
        for (const auto& w : sliding_window(series, n)) out.emplace_back(w.values.begin(), w.values.end());
        return out;
      },
      py::arg("values"), py::arg("n"));

  m.def(
      "brute_force_pair",
      [](std::vector<double> values, std::vector<std::size_t> starts, std::size_t n) {
        return brute_force_pair(TimeSeries(std::move(values)), starts, n);
      },
      py::arg("values"), py::arg("starts"), py::arg("n"));
  m.def(
      "mk_pair",
      [](std::vector<double> values, std::vector<std::size_t> starts, std::size_t n, std::size_t q,
         std::uint64_t seed) { return mk_pair(TimeSeries(std::move(values)), starts, n, MkOptions{q, seed}); },
      py::arg("values"), py::arg("starts"), py::arg("n"), py::arg("q") = 8, py::arg("seed") = 0);

  m.def(
      "scan_mk",
      [](std::vector<double> values, std::size_t n, double r, std::size_t q, std::uint64_t seed) {
        return scan_mk(TimeSeries(std::move(values)), make_params(n, r, q, seed));
      },
      py::arg("values"), py::arg("n"), py::arg("r"), py::arg("q") = 8, py::arg("seed") = 0);
  m.def(
      "condense",
      [](std::vector<double> values, std::size_t n, std::vector<std::size_t> members, double r) {
        return condense(TimeSeries(std::move(values)), n, members, r);
      },
      py::arg("values"), py::arg("n"), py::arg("members"), py::arg("r"));
  m.def(
      "cluster_mk",
      [](std::vector<double> values, std::size_t n, double r, std::size_t q, std::uint64_t seed) {
        return cluster_mk(TimeSeries(std::move(values)), make_params(n, r, q, seed));
      },
      py::arg("values"), py::arg("n"), py::arg("r"), py::arg("q") = 8, py::arg("seed") = 0);
  m.def("merge", &merge, py::arg("a"), py::arg("b"));
  m.def(
      "set_finder",
      [](std::vector<double> values, std::size_t n, double r) { return set_finder(TimeSeries(std::move(values)), n, r); },
      py::arg("values"), py::arg("n"), py::arg("r"));
  m.def(
      "count_matches",
      [](std::vector<double> values, std::size_t n, double r, bool early_abandon) {
        return count_matches(TimeSeries(std::move(values)), n, r, early_abandon);
      },
      py::arg("values"), py::arg("n"), py::arg("r"), py::arg("early_abandon") = true);
  m.def(
      "discover",
      [](const std::string& algorithm, std::vector<double> values, std::size_t n, double r, std::size_t q,
         std::uint64_t seed) {
        return discover(algorithm_from_string(algorithm), TimeSeries(std::move(values)), make_params(n, r, q, seed));
      },
      py::arg("algorithm"), py::arg("values"), py::arg("n"), py::arg("r"), py::arg("q") = 8, py::arg("seed") = 0);

  m.def(
      "shape_values",
      [](const std::string& kind, std::size_t length, double amplitude) {
        return shape_values({shape_kind_from_string(kind), length, amplitude});
      },
      py::arg("kind"), py::arg("length"), py::arg("amplitude"));
  m.def(
      "generate",
      [](std::size_t shape_count, std::size_t min_length, std::size_t max_length, std::size_t min_instances,
         std::size_t max_instances, std::size_t shape_length, double amplitude, std::uint64_t seed) {
        const auto data = generate(SynthConfig{min_length, max_length, shape_count, min_instances, max_instances,
                                               shape_length, amplitude, seed});
        const auto values = data.series.values();
        return py::make_tuple(std::vector<double>(values.begin(), values.end()), truth_to_dict(data.truth));
      },
      py::arg("shape_count") = 1, py::arg("min_length") = 500, py::arg("max_length") = 1000,
      py::arg("min_instances") = 3, py::arg("max_instances") = 5, py::arg("shape_length") = 29,
      py::arg("amplitude") = 10.0, py::arg("seed") = 0);

  m.def(
      "score_single",
      [](std::vector<std::size_t> found, std::vector<std::size_t> truth, std::size_t n) {
        return score_single(found, truth, n);
      },
      py::arg("found"), py::arg("truth"), py::arg("n"));
  m.def("matching_score", &matching_score, py::arg("found"), py::arg("truth"), py::arg("n"));
  m.def(
      "t_test", [](std::vector<double> a, std::vector<double> b, double alpha) { return t_test(a, b, alpha); },
      py::arg("a"), py::arg("b"), py::arg("alpha") = 0.05);

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}
