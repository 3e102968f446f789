#pragma once

#include <string>

#include "nltrace/fuzzy.hpp"
#include "nltrace/report.hpp"
#include "nltrace/spectral.hpp"
#include "nltrace/stepops.hpp"
#include "nltrace/weights.hpp"

namespace nltrace {

// Every reader throws InputError on malformed or out-of-range data.

/// Text starting with '{' (after blanks) is parsed inline; anything else is a
/// path to a JSON file.
Json load_json_arg(const std::string& arg);

/// {"kind":"power","theta":..} or
/// {"kind":"explicit","values":[..],"tail":{"mode":"constant","value":..}}
/// or tail {"mode":"arithmetic","increment":..}.
DiscreteWeight discrete_weight_from_json(const Json& j);
Json to_json(const DiscreteWeight& w);

/// power, cap ("t"), indicator, pwl ("x","y","final_slope"), step ("x","y");
/// optional "domain": "unit" | "half_line".
ContinuousWeight continuous_weight_from_json(const Json& j);
Json to_json(const ContinuousWeight& w);

/// {"n":..,"re":[[..]],"im":[[..]]}; "im" may be omitted.
ComplexMatrix matrix_from_json(const Json& j);
Json to_json(const ComplexMatrix& a);

/// {"segments":[{"value":..,"mass":..}],"cap":null}.
StepOperator step_operator_from_json(const Json& j);
Json to_json(const StepOperator& a);
/// Segments of any sign (Lorentz norms of self-adjoint step functions).
std::vector<Segment> signed_segments_from_json(const Json& j);

/// {"n":..,"mu":{"0b01":..}}. Keys are binary masks with "0b" prefix (bit i
/// is point i+1) or decimal masks. Absent subsets stay undefined.
MonotoneMeasure measure_from_json(const Json& j);
/// {"f":[..]}.
SimpleFunction function_from_json(const Json& j);

}  // namespace nltrace
