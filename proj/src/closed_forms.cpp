#include "hcent/closed_forms.hpp"

#include "hcent/errors.hpp"
#include "hcent/harmonic.hpp"

namespace hcent {

namespace {

void require_minimum(FamilyKind kind, std::uint32_t m) {
    const std::uint32_t minimum = family_minimum(kind);
    if (m < minimum)
        throw InvalidFamilyParameter(std::string(family_name(kind)) + " formula requires m >= " +
                                         std::to_string(minimum) + " (got " + std::to_string(m) +
                                         ")",
                                     minimum);
}

void require_index(std::uint32_t i, std::uint32_t lo, std::uint32_t hi) {
    if (i < lo || i > hi)
        throw InvalidFamilyParameter("index " + std::to_string(i) + " outside [" +
                                     std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

Rational frac(long num, long den) {
    return Rational(num, den);
}

} // namespace

Rational path_formula(std::uint32_t m, std::uint32_t i) {
    require_minimum(FamilyKind::path, m);
    require_index(i, 1, m);
    const Rational normalizer(static_cast<long>(m) - 1);
    if (i == 1 || i == m)
        return harmonic_number(m - 1) / normalizer;
    return (harmonic_number(i - 1) + harmonic_number(m - i)) / normalizer;
}

Rational cycle_formula(std::uint32_t m) {
    require_minimum(FamilyKind::cycle, m);
    const Rational scale = frac(2, static_cast<long>(m) - 1);
    if (m % 2 == 1)
        return scale * harmonic_number((m - 1) / 2);
    return scale * (harmonic_number((m - 2) / 2) + frac(1, m));
}

Rational fan_formula(std::uint32_t m, std::uint32_t i) {
    require_minimum(FamilyKind::fan, m);
    require_index(i, 0, m);
    if (i == 0)
        return Rational(1);
    if (i == 1 || i == m)
        return frac(static_cast<long>(m) + 2, 2L * m);
    return frac(static_cast<long>(m) + 3, 2L * m);
}

Rational wheel_formula(std::uint32_t m, std::uint32_t i) {
    require_minimum(FamilyKind::wheel, m);
    require_index(i, 0, m);
    if (i == 0)
        return Rational(1);
    return frac(static_cast<long>(m) + 3, 2L * m);
}

Rational complete_bipartite_formula(std::uint32_t m, std::uint32_t n, RoleKind side) {
    require_minimum(FamilyKind::complete_bipartite, m);
    require_minimum(FamilyKind::complete_bipartite, n);
    const long den = 2L * (static_cast<long>(m) + n - 1);
    switch (side) {
    case RoleKind::partition_u:
        return frac(static_cast<long>(m) + 2L * n - 1, den);
    case RoleKind::partition_v:
        return frac(2L * m + static_cast<long>(n) - 1, den);
    default:
        throw InvalidFamilyParameter("kbipartite formula takes partition_u or partition_v");
    }
}

Rational ladder_formula(std::uint32_t m, std::uint32_t i) {
    require_minimum(FamilyKind::ladder, m);
    require_index(i, 1, m);
    const Rational normalizer(2L * m - 1);
    if (i == 1 || i == m)
        return (Rational(2) * harmonic_number(m - 1) + frac(1, m)) / normalizer;
    return (Rational(2) * (harmonic_number(i - 1) + harmonic_number(m - i)) + frac(1, i) +
            frac(1, static_cast<long>(m) - i + 1) - Rational(1)) /
           normalizer;
}

Rational crown_formula(std::uint32_t m) {
    require_minimum(FamilyKind::crown, m);
    return frac(9L * m - 7, 12L * m - 6);
}

Rational prism_formula(std::uint32_t m) {
    require_minimum(FamilyKind::prism, m);
    const Rational normalizer(2L * m - 1);
    if (m % 2 == 1)
        return (Rational(4) * harmonic_number((m - 1) / 2) -
                frac(static_cast<long>(m) - 3, static_cast<long>(m) + 1)) /
               normalizer;
    return (Rational(4) * harmonic_number(m / 2) + frac(2, static_cast<long>(m) + 2) -
            frac(static_cast<long>(m) + 2, m)) /
           normalizer;
}

Rational star_formula(std::uint32_t m, std::uint32_t i) {
    require_minimum(FamilyKind::star, m);
    require_index(i, 0, m);
    if (i == 0)
        return Rational(1);
    return frac(static_cast<long>(m) + 1, 2L * m);
}

Rational book_formula(std::uint32_t m, RoleKind role) {
    require_minimum(FamilyKind::book, m);
    switch (role) {
    case RoleKind::book_center:
        return frac(3L * m + 2, 4L * m + 2);
    case RoleKind::book_page:
        return frac(5L * (static_cast<long>(m) + 2), 6L * (2L * m + 1));
    default:
        throw InvalidFamilyParameter("book formula takes book_center or book_page");
    }
}

Rational helm_formula(std::uint32_t m, RoleKind role) {
    require_minimum(FamilyKind::helm, m);
    switch (role) {
    case RoleKind::helm_center:
        return frac(3, 4);
    case RoleKind::helm_rim:
        return frac(5L * m + 15, 12L * m);
    case RoleKind::helm_pendant:
        return frac(7L * m + 17, 24L * m);
    default:
        throw InvalidFamilyParameter("helm formula takes helm_center, helm_rim or helm_pendant");
    }
}

FormulaResult evaluate(const FormulaQuery &query) {
    const FamilySpec &spec = query.spec;
    validate_spec(spec);
    const VertexId v = query.vertex;
    if (v >= family_order(spec))
        throw InvalidVertex("vertex " + std::to_string(v) + " outside [0, " +
                            std::to_string(family_order(spec)) + ") for " + to_string(spec));

    const VertexRole role = role_of(spec, v);
    const std::uint32_t m = spec.m;
    switch (spec.kind) {
    case FamilyKind::path:
        return {path_formula(m, v + 1), role, "3.4"};
    case FamilyKind::cycle:
        return {cycle_formula(m), role, "3.5"};
    case FamilyKind::fan:
        return {fan_formula(m, v), role, "3.6"};
    case FamilyKind::wheel:
        return {wheel_formula(m, v), role, "3.7"};
    case FamilyKind::complete_bipartite:
        return {complete_bipartite_formula(m, spec.n, role.kind), role, "3.8"};
    case FamilyKind::ladder:
        return {ladder_formula(m, (v < m ? v : v - m) + 1), role, "3.9"};
    case FamilyKind::crown:
        return {crown_formula(m), role, "3.10"};
    case FamilyKind::prism:
        return {prism_formula(m), role, "3.11"};
    case FamilyKind::star:
        return {star_formula(m, v), role, "3.12"};
    case FamilyKind::book:
        return {book_formula(m, role.kind), role, "3.13"};
    case FamilyKind::helm:
        return {helm_formula(m, role.kind), role, "3.14"};
    }
    throw Error("unknown family kind");
}

} // namespace hcent
