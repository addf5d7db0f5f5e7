#ifndef HCENT_REPORT_HPP
#define HCENT_REPORT_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hcent/families.hpp"
#include "hcent/graph.hpp"
#include "hcent/harmonic.hpp"

namespace hcent {

enum class ReportFormat { text, json, csv };

struct ReportRow {
    VertexId id;
    std::string label;
    std::string role; // empty for graphs outside the family catalog
    Rational raw;
    Rational normalized;
};

// Rendering-ready centrality report. Rationals are serialized lowest-terms
// "p/q"; the decimal column is advisory (12 significant digits).
struct ReportDocument {
    std::uint32_t order;
    std::optional<std::string> family; // spec string, when known
    std::vector<ReportRow> rows;
    std::vector<VertexId> ranking;
};

ReportDocument build_report(const Graph &g);
ReportDocument build_report(const LabeledGraph &labeled);

// Deterministic output: identical documents render to identical bytes.
// include_raw toggles the raw R column/field in all three formats.
void write_report(const ReportDocument &doc, ReportFormat format, bool include_raw,
                  std::ostream &out);

} // namespace hcent

#endif // HCENT_REPORT_HPP
