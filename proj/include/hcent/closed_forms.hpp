#ifndef HCENT_CLOSED_FORMS_HPP
#define HCENT_CLOSED_FORMS_HPP

#include <cstdint>
#include <string>

#include "hcent/families.hpp"
#include "hcent/rational.hpp"

namespace hcent {

// Closed-form normalized harmonic centrality per family, catalogued as
// theorems 3.4 through 3.14. Each evaluator takes the family parameters
// and (where values differ by position) the 1-based index or role from
// the construction; none of them touches a Graph.
//
// Parameters outside the family's accepted range are rejected rather than
// extrapolated, even where a formula would happen to extend.

Rational path_formula(std::uint32_t m, std::uint32_t i);   // i in [1, m]
Rational cycle_formula(std::uint32_t m);                   // all vertices equal
Rational fan_formula(std::uint32_t m, std::uint32_t i);    // i in [0, m], 0 = hub
Rational wheel_formula(std::uint32_t m, std::uint32_t i);  // i in [0, m], 0 = hub
Rational complete_bipartite_formula(std::uint32_t m, std::uint32_t n,
                                    RoleKind side);        // partition_u | partition_v
Rational ladder_formula(std::uint32_t m, std::uint32_t i); // i in [1, m], both rails equal
Rational crown_formula(std::uint32_t m);                   // all vertices equal
Rational prism_formula(std::uint32_t m);                   // all vertices equal
Rational star_formula(std::uint32_t m, std::uint32_t i);   // i in [0, m], 0 = hub
Rational book_formula(std::uint32_t m, RoleKind role);     // book_center | book_page
Rational helm_formula(std::uint32_t m, RoleKind role);     // helm_center | helm_rim | helm_pendant

struct FormulaQuery {
    FamilySpec spec;
    VertexId vertex; // canonical index per the family's index map
};

struct FormulaResult {
    Rational value;
    VertexRole role;
    std::string theorem; // "3.4" .. "3.14"
};

// Routes the query through the canonical index map to the family's
// evaluator and records which theorem produced the value.
FormulaResult evaluate(const FormulaQuery &query);

} // namespace hcent

#endif // HCENT_CLOSED_FORMS_HPP
