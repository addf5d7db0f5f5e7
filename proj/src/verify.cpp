#include "hcent/verify.hpp"

#include <gmpxx.h>

#include "hcent/closed_forms.hpp"
#include "hcent/errors.hpp"
#include "hcent/harmonic.hpp"

namespace hcent {

namespace {

std::string range_descriptor(FamilyKind kind, SweepRange m_range, SweepRange n_range) {
    std::string desc(family_name(kind));
    if (kind == FamilyKind::complete_bipartite)
        return desc + " m,n in [" + std::to_string(m_range.lo) + "," +
               std::to_string(m_range.hi) + "]x[" + std::to_string(n_range.lo) + "," +
               std::to_string(n_range.hi) + "]";
    return desc + " m in [" + std::to_string(m_range.lo) + "," + std::to_string(m_range.hi) + "]";
}

void check_range(FamilyKind kind, SweepRange range) {
    if (range.hi < range.lo)
        throw InvalidFamilyParameter("empty sweep range [" + std::to_string(range.lo) + ", " +
                                     std::to_string(range.hi) + "]");
    if (range.lo < family_minimum(kind))
        throw InvalidFamilyParameter(std::string(family_name(kind)) +
                                         " sweep must start at or above " +
                                         std::to_string(family_minimum(kind)),
                                     family_minimum(kind));
}

void sweep_instance(const FamilySpec &spec, SweepReport &report) {
    const LabeledGraph labeled = generate(spec);
    ++report.instances_checked;
    for (VertexId v = 0; v < labeled.graph.order(); ++v) {
        ++report.vertices_checked;
        Rational formula = evaluate({spec, v}).value;
        Rational oracle = normalized_harmonic(labeled.graph, v);
        if (!(formula == oracle))
            report.mismatches.push_back({spec, v, std::move(formula), std::move(oracle)});
    }
}

} // namespace

SweepRange default_sweep_range(FamilyKind kind) {
    switch (kind) {
    case FamilyKind::path:
        return {2, 60};
    case FamilyKind::cycle:
        return {3, 60};
    case FamilyKind::fan:
        return {3, 60};
    case FamilyKind::wheel:
        return {4, 60};
    case FamilyKind::complete_bipartite:
        return {1, 30};
    case FamilyKind::ladder:
        return {2, 60};
    case FamilyKind::crown:
        return {3, 40};
    case FamilyKind::prism:
        return {3, 60};
    case FamilyKind::star:
        return {2, 60};
    case FamilyKind::book:
        return {1, 60};
    case FamilyKind::helm:
        return {3, 60};
    }
    throw Error("unknown family kind");
}

SweepReport sweep_family(FamilyKind kind, SweepRange m_range, std::optional<SweepRange> n_range) {
    check_range(kind, m_range);
    SweepReport report;
    if (kind == FamilyKind::complete_bipartite) {
        const SweepRange nr = n_range.value_or(m_range);
        check_range(kind, nr);
        report.family_range = range_descriptor(kind, m_range, nr);
        for (std::uint32_t m = m_range.lo; m <= m_range.hi; ++m)
            for (std::uint32_t n = nr.lo; n <= nr.hi; ++n)
                sweep_instance(FamilySpec::complete_bipartite(m, n), report);
        return report;
    }
    report.family_range = range_descriptor(kind, m_range, m_range);
    for (std::uint32_t m = m_range.lo; m <= m_range.hi; ++m)
        sweep_instance(FamilySpec{kind, m, 0}, report);
    return report;
}

Graph random_graph(const RandomGraphSpec &spec) {
    if (spec.edge_probability.sign() < 0 || Rational(1) < spec.edge_probability)
        throw Error("edge probability must lie in [0, 1]");

    const mpz_class num = spec.edge_probability.numerator();
    const mpz_class den = spec.edge_probability.denominator();
    const mpz_class num_shifted = num << 64; // include iff draw * den < num * 2^64

    SplitMix64 rng(spec.seed);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < spec.order; ++u) {
        for (VertexId v = u + 1; v < spec.order; ++v) {
            const std::uint64_t draw = rng.next();
            mpz_class lhs;
            mpz_import(lhs.get_mpz_t(), 1, 1, sizeof draw, 0, 0, &draw);
            if (lhs * den < num_shifted)
                edges.emplace_back(u, v);
        }
    }
    return Graph::from_edge_list(spec.order, edges);
}

bool check_bounds(const Graph &g) {
    const Rational zero(0);
    const Rational one(1);
    for (VertexId v = 0; v < g.order(); ++v) {
        const Rational h = normalized_harmonic(g, v);
        if (h < zero || one < h)
            return false;
    }
    return true;
}

bool check_degree_characterization(const Graph &g) {
    const Rational one(1);
    for (VertexId v = 0; v < g.order(); ++v) {
        const bool value_is_one = normalized_harmonic(g, v) == one;
        const bool full_degree = g.degree(v) == g.order() - 1;
        if (value_is_one != full_degree)
            return false;
    }
    return true;
}

bool check_complete_characterization(const Graph &g) {
    if (g.order() < 2)
        throw TrivialGraph("characterization is stated for nontrivial graphs");
    if (!g.is_connected())
        throw DisconnectedInput("characterization is stated for connected graphs");

    const Rational one(1);
    bool all_ones = true;
    for (VertexId v = 0; v < g.order() && all_ones; ++v)
        all_ones = normalized_harmonic(g, v) == one;

    const std::size_t order = g.order();
    const bool complete = g.edge_count() == order * (order - 1) / 2;
    return all_ones == complete;
}

std::vector<ErrataRecord> errata_report() {
    std::vector<ErrataRecord> records;

    // Path endpoints: the proof's closing display reads H_m/(m-1) where the
    // statement has H_{m-1}/(m-1). The statement matches the oracle for
    // every order; the proof reading matches none.
    {
        ErrataRecord rec{"path-endpoint-proof-reading",
                         "", 0, true};
        std::size_t statement_hits = 0;
        std::size_t variant_hits = 0;
        for (std::uint32_t m = 2; m <= 60; ++m) {
            ++rec.instances_checked;
            const Graph g = generate(FamilySpec::path(m)).graph;
            const Rational oracle = normalized_harmonic(g, 0);
            const Rational statement = path_formula(m, 1);
            const Rational variant = harmonic_number(m) / Rational(static_cast<long>(m) - 1);
            if (statement == oracle)
                ++statement_hits;
            if (variant == oracle)
                ++variant_hits;
        }
        rec.confirmed = statement_hits == rec.instances_checked && variant_hits == 0;
        {
            const Rational oracle = normalized_harmonic(generate(FamilySpec::path(5)).graph, 0);
            rec.detail = "endpoint value: statement H_{m-1}/(m-1) matches the oracle for all m in "
                         "[2,60] (m=5: " +
                         path_formula(5, 1).to_string() + " = " + oracle.to_string() +
                         "); proof reading H_m/(m-1) matches none (m=5: " +
                         (harmonic_number(5) / Rational(4)).to_string() + ")";
        }
        records.push_back(std::move(rec));
    }

    // Path interiors: the proof's sum collapses to "H_{i-1} + H_{m-1}",
    // read as H_{i-1} + H_{m-i} in the statement. Only the statement
    // reading matches the oracle at interior vertices.
    {
        ErrataRecord rec{"path-interior-proof-reading", "", 0, true};
        std::size_t statement_hits = 0;
        std::size_t variant_hits = 0;
        for (std::uint32_t m = 3; m <= 60; ++m) {
            const Graph g = generate(FamilySpec::path(m)).graph;
            for (std::uint32_t i = 2; i < m; ++i) {
                ++rec.instances_checked;
                const Rational oracle = normalized_harmonic(g, i - 1);
                const Rational statement = path_formula(m, i);
                const Rational variant = (harmonic_number(i - 1) + harmonic_number(m - 1)) /
                                         Rational(static_cast<long>(m) - 1);
                if (statement == oracle)
                    ++statement_hits;
                if (variant == oracle)
                    ++variant_hits;
            }
        }
        rec.confirmed = statement_hits == rec.instances_checked && variant_hits == 0;
        rec.detail = "interior value: statement H_{i-1}+H_{m-i} matches the oracle at every "
                     "interior vertex for m in [3,60]; the proof line H_{i-1}+H_{m-1} matches " +
                     std::to_string(variant_hits) + " of " +
                     std::to_string(rec.instances_checked);
        records.push_back(std::move(rec));
    }

    // Complete bipartite bounds: the construction section asks for m, n >= 2
    // while the theorem states m, n > 0. The formula agrees with the oracle
    // on the whole boundary m = 1 or n = 1, so the wider bound is adopted.
    {
        ErrataRecord rec{"kbipartite-bound-discrepancy", "", 0, true};
        std::size_t hits = 0;
        std::vector<FamilySpec> boundary;
        for (std::uint32_t k = 1; k <= 30; ++k)
            boundary.push_back(FamilySpec::complete_bipartite(1, k));
        for (std::uint32_t k = 2; k <= 30; ++k)
            boundary.push_back(FamilySpec::complete_bipartite(k, 1));
        for (const auto &spec : boundary) {
            ++rec.instances_checked;
            const Graph g = generate(spec).graph;
            bool all_match = true;
            for (VertexId v = 0; v < g.order(); ++v)
                all_match = all_match && evaluate({spec, v}).value == normalized_harmonic(g, v);
            if (all_match)
                ++hits;
        }
        rec.confirmed = hits == rec.instances_checked;
        rec.detail = "construction bound m,n >= 2 vs theorem bound m,n >= 1: the formula matches "
                     "the oracle on every boundary instance K_{1,k}, K_{k,1} for k in [1,30]; "
                     "the theorem bound is adopted";
        records.push_back(std::move(rec));
    }

    // Prism, odd case: the theorem prints -(m-3)/(m+1), the consolidated
    // display +(3-m)/(m+1). The two are algebraically identical; confirmed
    // by direct evaluation.
    {
        ErrataRecord rec{"prism-odd-sign-forms", "", 0, true};
        std::size_t agree = 0;
        for (std::uint32_t m = 3; m <= 60; m += 2) {
            ++rec.instances_checked;
            const Rational normalizer(2L * m - 1);
            const Rational first = (Rational(4) * harmonic_number((m - 1) / 2) -
                                    Rational(static_cast<long>(m) - 3, static_cast<long>(m) + 1)) /
                                   normalizer;
            const Rational second = (Rational(4) * harmonic_number((m - 1) / 2) +
                                     Rational(3L - static_cast<long>(m), static_cast<long>(m) + 1)) /
                                    normalizer;
            if (first == second && first == prism_formula(m))
                ++agree;
        }
        rec.confirmed = agree == rec.instances_checked;
        rec.detail = "odd-order value printed as -(m-3)/(m+1) and as +(3-m)/(m+1): both forms "
                     "evaluate identically for every odd m in [3,60]";
        records.push_back(std::move(rec));
    }

    return records;
}

} // namespace hcent
