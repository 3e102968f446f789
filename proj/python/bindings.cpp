#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nltrace/choquet.hpp"
#include "nltrace/errors.hpp"
#include "nltrace/fuzzy.hpp"
#include "nltrace/harness.hpp"
#include "nltrace/json_io.hpp"
#include "nltrace/spectral.hpp"
#include "nltrace/stepops.hpp"
#include "nltrace/sugeno.hpp"
#include "nltrace/weights.hpp"

namespace py = pybind11;
using namespace nltrace;

namespace {

// Python objects cross as JSON text so the readers in json_io stay the only
// parsers of weights, measures and step operators.
Json to_json_value(const py::handle& obj) {
  const auto dumps = py::module_::import("json").attr("dumps");
  return Json::parse(dumps(obj).cast<std::string>());
}

py::object from_json_value(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

ComplexMatrix matrix_arg(const std::vector<std::vector<Complex>>& rows) {
  const std::size_t n = rows.size();
  std::vector<Complex> entries;
  entries.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw InputError("matrix must be square");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return ComplexMatrix(n, std::move(entries));
}

StepOperator step_arg(const std::vector<std::pair<double, double>>& segs) {
  std::vector<Segment> s;
  for (const auto& [v, m] : segs) s.push_back({v, m});
  return StepOperator(std::move(s));
}

DiscreteWeight dweight(const py::handle& w) { return discrete_weight_from_json(to_json_value(w)); }
ContinuousWeight cweight(const py::handle& w) {
  return continuous_weight_from_json(to_json_value(w));
}

}  // namespace

PYBIND11_MODULE(nltrace, m) {
  m.doc() = "Choquet and Sugeno type traces, fuzzy integrals and property suites.";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ShapeError>(m, "ShapeError", base.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());
  py::register_exception<ConsistencyError>(m, "ConsistencyError", base.ptr());
  py::register_exception<UndefinedRatioError>(m, "UndefinedRatioError", base.ptr());
  py::register_exception<HypothesisError>(m, "HypothesisError", base.ptr());
  py::register_exception<InputError>(m, "InputError", base.ptr());

  // Spectral
  m.def("eigenvalues", [](const std::vector<std::vector<Complex>>& a) {
    return hermitian_eigenvalues(matrix_arg(a)).values();
  }, py::arg("a"), "Descending eigenvalues of a Hermitian matrix.");
  m.def("singular_values", [](const std::vector<std::vector<Complex>>& a) {
    return singular_values(matrix_arg(a)).values();
  }, py::arg("a"));

  // Weights
  m.def("doubling_sup", [](const py::dict& w, bool continuous) {
    const DoublingSup d = continuous ? doubling_sup(cweight(w)) : doubling_sup(dweight(w));
    return py::make_tuple(d.value, d.exact);
  }, py::arg("weight"), py::arg("continuous") = false,
     "(sup alpha(2n)/alpha(n), exact flag).");
  m.def("is_concave", [](const py::dict& w, bool continuous) {
    return continuous ? is_concave(cweight(w)) : is_concave(dweight(w));
  }, py::arg("weight"), py::arg("continuous") = false);

  // Choquet type on matrices
  m.def("choquet_trace", [](const std::vector<double>& spectrum, const py::dict& w) {
    return choquet_trace(SpectrumDesc::from_unsorted(spectrum), dweight(w));
  }, py::arg("spectrum"), py::arg("weight"));
  m.def("weighted_p_norm", [](const std::vector<std::vector<Complex>>& a, const py::dict& w,
                              double p) {
    return weighted_p_norm(matrix_arg(a), WeightedPNorm(dweight(w), p));
  }, py::arg("a"), py::arg("weight"), py::arg("p"));
  m.def("triangle_ratio", [](const std::vector<std::vector<Complex>>& a,
                             const std::vector<std::vector<Complex>>& b, const py::dict& w,
                             double p) {
    return triangle_ratio(matrix_arg(a), matrix_arg(b), WeightedPNorm(dweight(w), p));
  }, py::arg("a"), py::arg("b"), py::arg("weight"), py::arg("p"));

  // Sugeno type on matrices
  m.def("sugeno_trace", [](const std::vector<std::vector<Complex>>& a, const py::dict& w) {
    return sugeno_trace(matrix_arg(a), SugenoTrace{dweight(w)});
  }, py::arg("a"), py::arg("weight"));
  m.def("sugeno_metric", [](const std::vector<std::vector<Complex>>& a,
                            const std::vector<std::vector<Complex>>& b, const py::dict& w,
                            bool allow_nonconcave) {
    return sugeno_metric(matrix_arg(a), matrix_arg(b), SugenoTrace{dweight(w)},
                         allow_nonconcave);
  }, py::arg("a"), py::arg("b"), py::arg("weight"), py::arg("allow_nonconcave") = false);
  m.def("sugeno_extend", [](const std::vector<std::vector<Complex>>& a, const py::dict& w) {
    return sugeno_extend(matrix_arg(a), SugenoTrace{dweight(w)});
  }, py::arg("a"), py::arg("weight"));

  // Step operators, given as [(value, mass), ...]
  using Segs = std::vector<std::pair<double, double>>;
  m.def("lambda_t", [](const Segs& a, double t) { return lambda_t(step_arg(a), t); },
        py::arg("segments"), py::arg("t"));
  m.def("choquet_spectral", [](const Segs& a, const py::dict& w) {
    return choquet_spectral(step_arg(a), cweight(w));
  }, py::arg("segments"), py::arg("weight"));
  m.def("choquet_stieltjes", [](const Segs& a, const py::dict& w) {
    return choquet_stieltjes(step_arg(a), cweight(w));
  }, py::arg("segments"), py::arg("weight"));
  m.def("sugeno_trace_step", [](const Segs& a, const py::dict& w) {
    return sugeno_trace_step(step_arg(a), cweight(w));
  }, py::arg("segments"), py::arg("weight"));
  m.def("max_type_value", [](const Segs& a, const py::dict& w) {
    return max_type_value(step_arg(a), cweight(w));
  }, py::arg("segments"), py::arg("weight"));
  m.def("partition_approx", [](const Segs& a, const py::dict& w, std::size_t M) {
    return partition_approx(step_arg(a), cweight(w), M);
  }, py::arg("segments"), py::arg("weight"), py::arg("M"));
  m.def("add", [](const Segs& a, const Segs& b) {
    const StepOperator sum = add(step_arg(a), step_arg(b));
    Segs out;
    for (const auto& s : sum.segments()) out.emplace_back(s.value, s.mass);
    return out;
  }, py::arg("a"), py::arg("b"));

  // Fuzzy integrals; the measure is {"n": .., "mu": {"0b01": ..}}
  m.def("choquet_integral", [](const std::vector<double>& f, const py::dict& mu) {
    return choquet_integral(SimpleFunction(f), measure_from_json(to_json_value(mu)));
  }, py::arg("f"), py::arg("measure"));
  m.def("sugeno_integral", [](const std::vector<double>& f, const py::dict& mu) {
    return sugeno_integral(SimpleFunction(f), measure_from_json(to_json_value(mu)));
  }, py::arg("f"), py::arg("measure"));
  m.def("is_comonotone", [](const std::vector<double>& f, const std::vector<double>& g) {
    return is_comonotone(SimpleFunction(f), SimpleFunction(g));
  }, py::arg("f"), py::arg("g"));

  // Harness
  m.def("suite_ids", &suite_ids);
  m.def("run_suite", [](const std::string& id, std::uint64_t trials, std::uint64_t seed,
                        unsigned workers, std::vector<std::size_t> dims) {
    SuiteConfig cfg{trials, seed, workers, std::move(dims)};
    Report r;
    {
      py::gil_scoped_release release;
      r = run_suite(id, cfg);
    }
    return from_json_value(r.to_json());
  }, py::arg("id"), py::arg("trials") = 1000, py::arg("seed") = 0, py::arg("workers") = 1,
     py::arg("dims") = std::vector<std::size_t>{});
  m.def("falsify_triangle", [](const py::dict& w, double p, std::vector<std::size_t> dims,
                               std::uint64_t trials, std::uint64_t seed, double bound) {
    FalsifyConfig cfg;
    cfg.weight = dweight(w);
    cfg.p = p;
    cfg.dims = std::move(dims);
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.bound = bound;
    Report r;
    {
      py::gil_scoped_release release;
      r = falsify_triangle(cfg);
    }
    return from_json_value(r.to_json());
  }, py::arg("weight"), py::arg("p") = 1.0,
     py::arg("dims") = std::vector<std::size_t>{2, 3, 4, 5, 6, 7, 8},
     py::arg("trials") = 1000, py::arg("seed") = 0, py::arg("bound") = 1.0);
}
