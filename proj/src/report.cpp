#include "nltrace/report.hpp"

namespace nltrace {

Json Report::to_json(bool include_timing) const {
  Json j{{"suite", suite},     {"trials", trials},   {"passed", passed},
         {"metric", metric},   {"worst", worst},     {"seed", seed},
         {"witness", witness}};
  if (include_timing) j["elapsed_ms"] = elapsed_ms;
  return j;
}

}  // namespace nltrace
