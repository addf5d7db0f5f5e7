#ifndef HCENT_FAMILIES_HPP
#define HCENT_FAMILIES_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hcent/graph.hpp"

namespace hcent {

enum class FamilyKind {
    path,
    cycle,
    fan,
    wheel,
    complete_bipartite,
    ladder,
    crown,
    prism,
    star,
    book,
    helm,
};

// Name used in the spec-string grammar ("path", ..., "kbipartite").
std::string_view family_name(FamilyKind kind);

// Tagged choice of family plus its size parameters. n is only meaningful
// for complete_bipartite.
struct FamilySpec {
    FamilyKind kind;
    std::uint32_t m = 0;
    std::uint32_t n = 0;

    static FamilySpec path(std::uint32_t m) { return {FamilyKind::path, m, 0}; }
    static FamilySpec cycle(std::uint32_t m) { return {FamilyKind::cycle, m, 0}; }
    static FamilySpec fan(std::uint32_t m) { return {FamilyKind::fan, m, 0}; }
    static FamilySpec wheel(std::uint32_t m) { return {FamilyKind::wheel, m, 0}; }
    static FamilySpec complete_bipartite(std::uint32_t m, std::uint32_t n) {
        return {FamilyKind::complete_bipartite, m, n};
    }
    static FamilySpec ladder(std::uint32_t m) { return {FamilyKind::ladder, m, 0}; }
    static FamilySpec crown(std::uint32_t m) { return {FamilyKind::crown, m, 0}; }
    static FamilySpec prism(std::uint32_t m) { return {FamilyKind::prism, m, 0}; }
    static FamilySpec star(std::uint32_t m) { return {FamilyKind::star, m, 0}; }
    static FamilySpec book(std::uint32_t m) { return {FamilyKind::book, m, 0}; }
    static FamilySpec helm(std::uint32_t m) { return {FamilyKind::helm, m, 0}; }

    friend bool operator==(const FamilySpec &, const FamilySpec &) = default;
};

// Spec-string grammar: "name:m" or "kbipartite:m,n", no spaces.
std::string to_string(const FamilySpec &spec);
FamilySpec parse_family_spec(std::string_view text); // ParseError on bad grammar

// Smallest accepted m for the family (complete_bipartite: bound on both m and n).
std::uint32_t family_minimum(FamilyKind kind);

// Throws InvalidFamilyParameter (carrying the violated bound) when a
// parameter is below its family minimum.
void validate_spec(const FamilySpec &spec);

// Order of the generated graph: path m, cycle m, fan m+1, wheel m+1,
// kbipartite m+n, ladder 2m, crown 2m, prism 2m, star m+1, book 2(m+1),
// helm 2m+1.
std::uint32_t family_order(const FamilySpec &spec);

// Closed-form edge count, used as a generator self-check.
std::size_t edge_count(const FamilySpec &spec);

enum class RoleKind {
    hub,
    path_end,
    path_interior,
    cycle_vertex,
    fan_path_end,
    fan_path_interior,
    wheel_rim,
    partition_u,
    partition_v,
    ladder_end,
    ladder_interior,
    crown_vertex,
    prism_vertex,
    star_leaf,
    book_center,
    book_page,
    helm_center,
    helm_rim,
    helm_pendant,
};

// Structural role of a vertex within its family. index carries the path
// position i for path_interior and ladder_interior, 0 otherwise.
struct VertexRole {
    RoleKind kind;
    std::uint32_t index = 0;

    friend bool operator==(const VertexRole &, const VertexRole &) = default;
};

std::string to_string(const VertexRole &role); // e.g. "hub", "path_interior(3)"

// Role of the vertex at canonical index `v`; pure function of (spec, v).
VertexRole role_of(const FamilySpec &spec, VertexId v);

// Display label of the vertex at canonical index `v` (e.g. "u3", "u2v1").
std::string label_of(const FamilySpec &spec, VertexId v);

struct LabeledGraph {
    Graph graph;
    FamilySpec spec;
    std::vector<VertexRole> roles;
    std::vector<std::string> labels;
};

// Builds the family instance under the canonical indexing:
//   path/cycle          u_i -> i-1
//   fan/wheel/star      u_0 -> 0, u_i -> i
//   kbipartite          u_i -> i-1, v_j -> m+j-1
//   ladder/prism        (u_i,v_1) -> i-1, (u_i,v_2) -> m+i-1
//   crown               u_i -> i-1, v_j -> m+j-1
//   book                (u_0,v_1) -> 0, (u_0,v_2) -> 1, (u_i,v_1) -> 2i, (u_i,v_2) -> 2i+1
//   helm                u_0 -> 0, u_i -> i, v_j -> m+j
LabeledGraph generate(const FamilySpec &spec);

} // namespace hcent

#endif // HCENT_FAMILIES_HPP
