#ifndef HCENT_EDGE_LIST_HPP
#define HCENT_EDGE_LIST_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "hcent/families.hpp"
#include "hcent/graph.hpp"

namespace hcent {

// Edge-list text format:
//   - lines starting with '#' are comments, blank lines are skipped;
//   - an optional first data line "order N" fixes the vertex count;
//   - every other data line is "u v", two whitespace-separated vertex ids.
// Without the header the order is 1 + the largest id seen. Loops are
// rejected (SelfLoop), ids at or above a declared order are rejected
// (InvalidVertex), anything else malformed is a ParseError; all three
// carry the 1-based line number.
Graph parse_edge_list(std::istream &in);
Graph parse_edge_list(const std::string &text);

// parse_edge_list plus recovery of the "# family: <spec>" header that
// write_edge_list emits. The family is attached only when the spec
// round-trips to exactly the parsed graph, so hand-edited files fall back
// to a plain graph.
struct ParsedDocument {
    Graph graph;
    std::optional<FamilySpec> family;
};

ParsedDocument parse_edge_list_document(std::istream &in);

// Emits the graph with "# family:" and "# label:" header comments, the
// "order N" line, and one "u v" line per edge (u < v, lexicographic).
void write_edge_list(const LabeledGraph &labeled, std::ostream &out);

// DOT rendering with the family's display labels.
void write_dot(const LabeledGraph &labeled, std::ostream &out);

} // namespace hcent

#endif // HCENT_EDGE_LIST_HPP
