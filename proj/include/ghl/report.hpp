#pragma once

#include "ghl/geometry.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace ghl {

using Json = nlohmann::json; // std::map objects: keys come out sorted

// How a report was produced; echoed into the JSON so `check` can redo it.
struct ReportContext {
    std::string backend = "exact";            // exact | numeric
    std::map<std::string, Rational> assignment; // --params or the frame-metric sample
};

// Full geometry report. Scalars are canonical text, matrices row-major
// arrays, indices use the global labels of the input file (e<q+i>).
template <class K>
Json geometry_report(const Geometry<K>& g, const ValidationReport& v, const ReportContext& ctx);

Json validation_json(const ValidationReport& v);

// text rendering of any report object: nonzero entries only
std::string report_text(const Json& report);

// Deterministic: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

struct Mismatch {
    std::string path;
    std::string expected;
    std::string actual;
};

// Walks the expected tree. Strings that both parse as scalars over the
// given names are compared with are_equal (exact) or within tol (numeric);
// anything else must match literally. Keys absent from `expected` are not
// checked.
std::vector<Mismatch> compare_reports(const Json& expected, const Json& actual, bool numeric, double tol,
                                      const std::vector<std::string>& names);

} // namespace ghl
