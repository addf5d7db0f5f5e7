#include "hcent/families.hpp"

#include <array>
#include <charconv>

#include "hcent/errors.hpp"

namespace hcent {

namespace {

struct FamilyInfo {
    FamilyKind kind;
    std::string_view name;
    std::uint32_t minimum;
};

// Minimums follow the theorem preconditions; crown additionally needs
// m >= 3 so the instance is connected, ladder m >= 2 so end and interior
// roles stay distinct.
constexpr std::array<FamilyInfo, 11> kFamilies = {{
    {FamilyKind::path, "path", 2},
    {FamilyKind::cycle, "cycle", 3},
    {FamilyKind::fan, "fan", 3},
    {FamilyKind::wheel, "wheel", 4},
    {FamilyKind::complete_bipartite, "kbipartite", 1},
    {FamilyKind::ladder, "ladder", 2},
    {FamilyKind::crown, "crown", 3},
    {FamilyKind::prism, "prism", 3},
    {FamilyKind::star, "star", 2},
    {FamilyKind::book, "book", 1},
    {FamilyKind::helm, "helm", 3},
}};

const FamilyInfo &info_for(FamilyKind kind) {
    for (const auto &info : kFamilies)
        if (info.kind == kind)
            return info;
    throw Error("unknown family kind");
}

std::uint32_t parse_u32(std::string_view text, std::string_view whole) {
    std::uint32_t value = 0;
    const char *end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        throw ParseError("invalid family spec '" + std::string(whole) +
                         "': bad integer '" + std::string(text) + "'");
    return value;
}

void check_vertex_in_range(const FamilySpec &spec, VertexId v) {
    if (v >= family_order(spec))
        throw InvalidVertex("vertex " + std::to_string(v) + " outside [0, " +
                            std::to_string(family_order(spec)) + ") for " + to_string(spec));
}

} // namespace

std::string_view family_name(FamilyKind kind) {
    return info_for(kind).name;
}

std::string to_string(const FamilySpec &spec) {
    std::string s(family_name(spec.kind));
    s += ':';
    s += std::to_string(spec.m);
    if (spec.kind == FamilyKind::complete_bipartite) {
        s += ',';
        s += std::to_string(spec.n);
    }
    return s;
}

FamilySpec parse_family_spec(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw ParseError("invalid family spec '" + std::string(text) + "': expected 'name:m'");
    const std::string_view name = text.substr(0, colon);
    const std::string_view params = text.substr(colon + 1);

    const FamilyInfo *info = nullptr;
    for (const auto &candidate : kFamilies)
        if (candidate.name == name)
            info = &candidate;
    if (info == nullptr)
        throw ParseError("unknown family '" + std::string(name) + "'");

    if (info->kind == FamilyKind::complete_bipartite) {
        const auto comma = params.find(',');
        if (comma == std::string_view::npos)
            throw ParseError("invalid family spec '" + std::string(text) +
                             "': kbipartite takes 'm,n'");
        return FamilySpec::complete_bipartite(parse_u32(params.substr(0, comma), text),
                                              parse_u32(params.substr(comma + 1), text));
    }
    if (params.find(',') != std::string_view::npos)
        throw ParseError("invalid family spec '" + std::string(text) +
                         "': " + std::string(name) + " takes a single parameter");
    return FamilySpec{info->kind, parse_u32(params, text), 0};
}

std::uint32_t family_minimum(FamilyKind kind) {
    return info_for(kind).minimum;
}

void validate_spec(const FamilySpec &spec) {
    const auto &info = info_for(spec.kind);
    const auto reject = [&](std::string_view param, std::uint32_t got) {
        throw InvalidFamilyParameter(std::string(info.name) + " requires " + std::string(param) +
                                         " >= " + std::to_string(info.minimum) + " (got " +
                                         std::to_string(got) + ")",
                                     info.minimum);
    };
    if (spec.m < info.minimum)
        reject("m", spec.m);
    if (spec.kind == FamilyKind::complete_bipartite && spec.n < info.minimum)
        reject("n", spec.n);
}

std::uint32_t family_order(const FamilySpec &spec) {
    switch (spec.kind) {
    case FamilyKind::path:
    case FamilyKind::cycle:
        return spec.m;
    case FamilyKind::fan:
    case FamilyKind::wheel:
    case FamilyKind::star:
        return spec.m + 1;
    case FamilyKind::complete_bipartite:
        return spec.m + spec.n;
    case FamilyKind::ladder:
    case FamilyKind::crown:
    case FamilyKind::prism:
        return 2 * spec.m;
    case FamilyKind::book:
        return 2 * (spec.m + 1);
    case FamilyKind::helm:
        return 2 * spec.m + 1;
    }
    throw Error("unknown family kind");
}

std::size_t edge_count(const FamilySpec &spec) {
    validate_spec(spec);
    const std::size_t m = spec.m;
    const std::size_t n = spec.n;
    switch (spec.kind) {
    case FamilyKind::path:
        return m - 1;
    case FamilyKind::cycle:
        return m;
    case FamilyKind::fan:
        return 2 * m - 1;
    case FamilyKind::wheel:
        return 2 * m;
    case FamilyKind::complete_bipartite:
        return m * n;
    case FamilyKind::ladder:
        return 3 * m - 2;
    case FamilyKind::crown:
        return m * (m - 1);
    case FamilyKind::prism:
        return 3 * m;
    case FamilyKind::star:
        return m;
    case FamilyKind::book:
        return 3 * m + 1;
    case FamilyKind::helm:
        return 3 * m;
    }
    throw Error("unknown family kind");
}

std::string to_string(const VertexRole &role) {
    switch (role.kind) {
    case RoleKind::hub:
        return "hub";
    case RoleKind::path_end:
        return "path_end";
    case RoleKind::path_interior:
        return "path_interior(" + std::to_string(role.index) + ")";
    case RoleKind::cycle_vertex:
        return "cycle_vertex";
    case RoleKind::fan_path_end:
        return "fan_path_end";
    case RoleKind::fan_path_interior:
        return "fan_path_interior";
    case RoleKind::wheel_rim:
        return "wheel_rim";
    case RoleKind::partition_u:
        return "partition_u";
    case RoleKind::partition_v:
        return "partition_v";
    case RoleKind::ladder_end:
        return "ladder_end";
    case RoleKind::ladder_interior:
        return "ladder_interior(" + std::to_string(role.index) + ")";
    case RoleKind::crown_vertex:
        return "crown_vertex";
    case RoleKind::prism_vertex:
        return "prism_vertex";
    case RoleKind::star_leaf:
        return "star_leaf";
    case RoleKind::book_center:
        return "book_center";
    case RoleKind::book_page:
        return "book_page";
    case RoleKind::helm_center:
        return "helm_center";
    case RoleKind::helm_rim:
        return "helm_rim";
    case RoleKind::helm_pendant:
        return "helm_pendant";
    }
    throw Error("unknown role kind");
}

VertexRole role_of(const FamilySpec &spec, VertexId v) {
    validate_spec(spec);
    check_vertex_in_range(spec, v);
    const std::uint32_t m = spec.m;
    switch (spec.kind) {
    case FamilyKind::path: {
        const std::uint32_t i = v + 1;
        if (i == 1 || i == m)
            return {RoleKind::path_end};
        return {RoleKind::path_interior, i};
    }
    case FamilyKind::cycle:
        return {RoleKind::cycle_vertex};
    case FamilyKind::fan:
        if (v == 0)
            return {RoleKind::hub};
        if (v == 1 || v == m)
            return {RoleKind::fan_path_end};
        return {RoleKind::fan_path_interior};
    case FamilyKind::wheel:
        return v == 0 ? VertexRole{RoleKind::hub} : VertexRole{RoleKind::wheel_rim};
    case FamilyKind::complete_bipartite:
        return v < m ? VertexRole{RoleKind::partition_u} : VertexRole{RoleKind::partition_v};
    case FamilyKind::ladder: {
        const std::uint32_t i = (v < m ? v : v - m) + 1;
        if (i == 1 || i == m)
            return {RoleKind::ladder_end};
        return {RoleKind::ladder_interior, i};
    }
    case FamilyKind::crown:
        return {RoleKind::crown_vertex};
    case FamilyKind::prism:
        return {RoleKind::prism_vertex};
    case FamilyKind::star:
        return v == 0 ? VertexRole{RoleKind::hub} : VertexRole{RoleKind::star_leaf};
    case FamilyKind::book:
        return v < 2 ? VertexRole{RoleKind::book_center} : VertexRole{RoleKind::book_page};
    case FamilyKind::helm:
        if (v == 0)
            return {RoleKind::helm_center};
        return v <= m ? VertexRole{RoleKind::helm_rim} : VertexRole{RoleKind::helm_pendant};
    }
    throw Error("unknown family kind");
}

std::string label_of(const FamilySpec &spec, VertexId v) {
    validate_spec(spec);
    check_vertex_in_range(spec, v);
    const std::uint32_t m = spec.m;
    const auto u = [](std::uint32_t i) { return "u" + std::to_string(i); };
    const auto vv = [](std::uint32_t j) { return "v" + std::to_string(j); };
    switch (spec.kind) {
    case FamilyKind::path:
    case FamilyKind::cycle:
        return u(v + 1);
    case FamilyKind::fan:
    case FamilyKind::wheel:
    case FamilyKind::star:
        return u(v);
    case FamilyKind::complete_bipartite:
    case FamilyKind::crown:
        return v < m ? u(v + 1) : vv(v - m + 1);
    case FamilyKind::ladder:
    case FamilyKind::prism:
        return v < m ? u(v + 1) + "v1" : u(v - m + 1) + "v2";
    case FamilyKind::book:
        return u(v / 2) + (v % 2 == 0 ? "v1" : "v2");
    case FamilyKind::helm:
        return v <= m ? u(v) : vv(v - m);
    }
    throw Error("unknown family kind");
}

LabeledGraph generate(const FamilySpec &spec) {
    validate_spec(spec);
    const std::uint32_t m = spec.m;
    const std::uint32_t n = spec.n;
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(edge_count(spec));

    switch (spec.kind) {
    case FamilyKind::path:
        for (VertexId i = 0; i + 1 < m; ++i)
            edges.emplace_back(i, i + 1);
        break;
    case FamilyKind::cycle:
        for (VertexId i = 0; i + 1 < m; ++i)
            edges.emplace_back(i, i + 1);
        edges.emplace_back(m - 1, 0);
        break;
    case FamilyKind::fan:
        for (VertexId i = 1; i < m; ++i)
            edges.emplace_back(i, i + 1);
        for (VertexId i = 1; i <= m; ++i)
            edges.emplace_back(0, i);
        break;
    case FamilyKind::wheel:
        for (VertexId i = 1; i < m; ++i)
            edges.emplace_back(i, i + 1);
        edges.emplace_back(m, 1);
        for (VertexId i = 1; i <= m; ++i)
            edges.emplace_back(0, i);
        break;
    case FamilyKind::complete_bipartite:
        for (VertexId i = 0; i < m; ++i)
            for (VertexId j = 0; j < n; ++j)
                edges.emplace_back(i, m + j);
        break;
    case FamilyKind::ladder:
        for (VertexId i = 0; i + 1 < m; ++i) {
            edges.emplace_back(i, i + 1);
            edges.emplace_back(m + i, m + i + 1);
        }
        for (VertexId i = 0; i < m; ++i)
            edges.emplace_back(i, m + i);
        break;
    case FamilyKind::crown:
        for (VertexId i = 0; i < m; ++i)
            for (VertexId j = 0; j < m; ++j)
                if (i != j)
                    edges.emplace_back(i, m + j);
        break;
    case FamilyKind::prism:
        for (VertexId i = 0; i < m; ++i) {
            edges.emplace_back(i, (i + 1) % m);
            edges.emplace_back(m + i, m + (i + 1) % m);
            edges.emplace_back(i, m + i);
        }
        break;
    case FamilyKind::star:
        for (VertexId i = 1; i <= m; ++i)
            edges.emplace_back(0, i);
        break;
    case FamilyKind::book:
        edges.emplace_back(0, 1);
        for (VertexId i = 1; i <= m; ++i) {
            edges.emplace_back(0, 2 * i);
            edges.emplace_back(1, 2 * i + 1);
            edges.emplace_back(2 * i, 2 * i + 1);
        }
        break;
    case FamilyKind::helm:
        for (VertexId i = 1; i < m; ++i)
            edges.emplace_back(i, i + 1);
        edges.emplace_back(m, 1);
        for (VertexId i = 1; i <= m; ++i) {
            edges.emplace_back(0, i);
            edges.emplace_back(i, m + i);
        }
        break;
    }

    const std::uint32_t order = family_order(spec);
    LabeledGraph labeled{Graph::from_edge_list(order, edges), spec, {}, {}};
    labeled.roles.reserve(order);
    labeled.labels.reserve(order);
    for (VertexId v = 0; v < order; ++v) {
        labeled.roles.push_back(role_of(spec, v));
        labeled.labels.push_back(label_of(spec, v));
    }
    return labeled;
}

} // namespace hcent
