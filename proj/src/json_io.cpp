#include "nltrace/json_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "nltrace/errors.hpp"

namespace nltrace {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

double number(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number()) throw InputError(std::string("field \"") + key + "\" must be a number");
  return v.get<double>();
}

std::vector<double> numbers(const Json& v, const char* key) {
  if (!v.is_array()) throw InputError(std::string("field \"") + key + "\" must be an array");
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.is_number())
      throw InputError(std::string("field \"") + key + "\" must hold numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

std::string kind_of(const Json& j) {
  const Json& k = field(j, "kind");
  if (!k.is_string()) throw InputError("weight \"kind\" must be a string");
  return k.get<std::string>();
}

WeightDomain domain_of(const Json& j) {
  if (!j.contains("domain") || j.at("domain").is_null()) return WeightDomain::half_line;
  const Json& d = j.at("domain");
  if (d == "unit") return WeightDomain::unit;
  if (d == "half_line") return WeightDomain::half_line;
  throw InputError("weight \"domain\" must be \"unit\" or \"half_line\"");
}

std::uint32_t parse_mask(const std::string& key, std::size_t n) {
  std::uint64_t m = 0;
  try {
    std::size_t pos = 0;
    if (key.rfind("0b", 0) == 0) {
      if (key.size() == 2) throw InputError("empty mask");
      m = std::stoull(key.substr(2), &pos, 2);
      pos += 2;
    } else {
      m = std::stoull(key, &pos, 10);
    }
    if (pos != key.size()) throw InputError("trailing characters");
  } catch (const std::logic_error&) {
    throw InputError("measure key \"" + key + "\" is not a subset mask");
  } catch (const InputError&) {
    throw InputError("measure key \"" + key + "\" is not a subset mask");
  }
  if (m >> n) throw InputError("measure key \"" + key + "\" lies outside the ground set");
  return static_cast<std::uint32_t>(m);
}

}  // namespace

Json load_json_arg(const std::string& arg) {
  std::size_t i = 0;
  while (i < arg.size() && std::isspace(static_cast<unsigned char>(arg[i]))) ++i;
  try {
    if (i < arg.size() && arg[i] == '{') return Json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw InputError("cannot open \"" + arg + "\"");
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

DiscreteWeight discrete_weight_from_json(const Json& j) {
  const std::string kind = kind_of(j);
  if (kind == "power") return DiscreteWeight::power(number(j, "theta"));
  if (kind == "explicit") {
    auto values = numbers(field(j, "values"), "values");
    const Json& tail = field(j, "tail");
    const Json& mode = field(tail, "mode");
    if (mode == "constant")
      return DiscreteWeight::explicit_constant(std::move(values), number(tail, "value"));
    if (mode == "arithmetic")
      return DiscreteWeight::explicit_arithmetic(std::move(values),
                                                 number(tail, "increment"));
    throw InputError("tail \"mode\" must be \"constant\" or \"arithmetic\"");
  }
  throw InputError("unknown discrete weight kind \"" + kind + "\"");
}

Json to_json(const DiscreteWeight& w) {
  using K = DiscreteWeight::Kind;
  switch (w.kind()) {
    case K::power:
      return {{"kind", "power"}, {"theta", w.theta()}};
    case K::explicit_constant:
      return {{"kind", "explicit"},
              {"values", w.values()},
              {"tail", {{"mode", "constant"}, {"value", w.tail()}}}};
    case K::explicit_arithmetic:
      return {{"kind", "explicit"},
              {"values", w.values()},
              {"tail", {{"mode", "arithmetic"}, {"increment", w.tail()}}}};
  }
  return {};
}

ContinuousWeight continuous_weight_from_json(const Json& j) {
  const std::string kind = kind_of(j);
  const WeightDomain d = domain_of(j);
  if (kind == "power") return ContinuousWeight::power(number(j, "theta"), d);
  if (kind == "cap") return ContinuousWeight::cap(number(j, "t"), d);
  if (kind == "indicator") return ContinuousWeight::indicator(d);
  if (kind == "pwl") {
    const double slope = j.contains("final_slope") ? number(j, "final_slope") : 0.0;
    return ContinuousWeight::pwl(numbers(field(j, "x"), "x"),
                                 numbers(field(j, "y"), "y"), slope, d);
  }
  if (kind == "step")
    return ContinuousWeight::step(numbers(field(j, "x"), "x"),
                                  numbers(field(j, "y"), "y"), d);
  throw InputError("unknown continuous weight kind \"" + kind + "\"");
}

Json to_json(const ContinuousWeight& w) {
  using K = ContinuousWeight::Kind;
  Json j;
  switch (w.kind()) {
    case K::power:
      j = {{"kind", "power"}, {"theta", w.theta()}};
      break;
    case K::cap:
      j = {{"kind", "cap"}, {"t", w.cap_point()}};
      break;
    case K::indicator:
      j = {{"kind", "indicator"}};
      break;
    case K::pwl:
      j = {{"kind", "pwl"}, {"x", w.xs()}, {"y", w.ys()}, {"final_slope", w.final_slope()}};
      break;
    case K::step:
      j = {{"kind", "step"}, {"x", w.xs()}, {"y", w.ys()}};
      break;
  }
  if (w.domain() == WeightDomain::unit) j["domain"] = "unit";
  return j;
}

ComplexMatrix matrix_from_json(const Json& j) {
  const Json& nj = field(j, "n");
  if (!nj.is_number_integer() || nj.get<std::int64_t>() < 0) throw InputError("matrix \"n\" must be a non-negative integer");
  const auto n = nj.get<std::size_t>();
  auto rows = [&](const char* key) {
    std::vector<double> flat;
    const Json& r = field(j, key);
    if (!r.is_array() || r.size() != n)
      throw InputError(std::string("matrix \"") + key + "\" must have n rows");
    for (const auto& row : r) {
      auto v = numbers(row, key);
      if (v.size() != n)
        throw InputError(std::string("matrix \"") + key + "\" rows must have n entries");
      flat.insert(flat.end(), v.begin(), v.end());
    }
    return flat;
  };
  const auto re = rows("re");
  const auto im = j.contains("im") && !j.at("im").is_null() ? rows("im")
                                                            : std::vector<double>(n * n);
  std::vector<Complex> entries(n * n);
  for (std::size_t k = 0; k < n * n; ++k) entries[k] = {re[k], im[k]};
  return ComplexMatrix(n, std::move(entries));
}

Json to_json(const ComplexMatrix& a) {
  const std::size_t n = a.size();
  Json re = Json::array(), im = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json rr = Json::array(), ri = Json::array();
    for (std::size_t k = 0; k < n; ++k) {
      rr.push_back(a(i, k).real());
      ri.push_back(a(i, k).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  return {{"n", n}, {"re", std::move(re)}, {"im", std::move(im)}};
}

std::vector<Segment> signed_segments_from_json(const Json& j) {
  const Json& segs = field(j, "segments");
  if (!segs.is_array()) throw InputError("\"segments\" must be an array");
  std::vector<Segment> out;
  for (const auto& s : segs) out.push_back({number(s, "value"), number(s, "mass")});
  return out;
}

StepOperator step_operator_from_json(const Json& j) {
  std::optional<double> cap;
  if (j.contains("cap") && !j.at("cap").is_null()) cap = number(j, "cap");
  return StepOperator(signed_segments_from_json(j), cap);
}

Json to_json(const StepOperator& a) {
  Json segs = Json::array();
  for (const auto& s : a.segments()) segs.push_back({{"value", s.value}, {"mass", s.mass}});
  Json j = {{"segments", std::move(segs)}, {"cap", nullptr}};
  if (a.cap()) j["cap"] = *a.cap();
  return j;
}

MonotoneMeasure measure_from_json(const Json& j) {
  const Json& nj = field(j, "n");
  if (!nj.is_number_integer() || nj.get<std::int64_t>() < 0) throw InputError("measure \"n\" must be a non-negative integer");
  const auto n = nj.get<std::size_t>();
  if (n > kMaxGroundSize) throw InputError("measure ground set exceeds 20 points");
  const Json& mu = field(j, "mu");
  if (!mu.is_object()) throw InputError("measure \"mu\" must be an object");
  std::vector<std::optional<double>> v(std::size_t{1} << n);
  for (const auto& [key, val] : mu.items()) {
    if (!val.is_number()) throw InputError("measure values must be numbers");
    v[parse_mask(key, n)] = val.get<double>();
  }
  return MonotoneMeasure::partial(n, std::move(v));
}

SimpleFunction function_from_json(const Json& j) {
  return SimpleFunction(numbers(field(j, "f"), "f"));
}

}  // namespace nltrace
