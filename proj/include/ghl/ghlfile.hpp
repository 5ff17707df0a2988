#pragma once

#include "ghl/spec.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ghl {

// Input error with file:line context.
struct GhlError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GhlFile {
    enum Kind { Algebra, FrameMetric };
    struct Entry {
        int a = 0, b = 0;
        std::string expr;
        int line = 0;
    };

    Kind kind = Algebra;
    std::string origin;
    std::string name;
    int q = 0;
    int m = 1;
    std::vector<std::string> params;
    std::string backend = "exact";
    std::vector<Entry> brackets;
    // frame-metric only
    std::vector<std::vector<long>> J; // rows
    std::vector<Entry> metric;        // a <= b
    std::vector<std::pair<std::string, std::map<std::string, Rational>>> samples;

    int dim() const { return q + 2 * m; }
};

GhlFile parse_ghl(std::string_view text, const std::string& origin = "<input>");
GhlFile read_ghl(const std::string& path);

// "p=v, q=w" with rational or decimal values
std::map<std::string, Rational> parse_assignment(std::string_view text);

// Bracket file -> spec over K (throws GhlError on bad expressions)
template <class K>
BracketSpec<K> build_spec(const GhlFile& f);

// Frame-metric file at a full parameter assignment: Gram-Schmidt in the
// metric, then structure constants of the unitary frame.
BracketSpec<Numeric> build_frame_metric(const GhlFile& f, const std::map<std::string, Rational>& at);

template <class K>
std::string write_ghl(const BracketSpec<K>& spec, const std::string& backend);

} // namespace ghl
