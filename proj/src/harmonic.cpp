#include "hcent/harmonic.hpp"

#include <algorithm>
#include <numeric>

#include "hcent/errors.hpp"

namespace hcent {

namespace {

void require_nontrivial(const Graph &g) {
    if (g.order() < 2)
        throw TrivialGraph("harmonic centrality is undefined on an order-1 graph");
}

} // namespace

Rational harmonic_number(std::uint32_t n) {
    Rational sum;
    for (std::uint32_t k = 1; k <= n; ++k)
        sum += Rational(1, static_cast<long>(k));
    return sum;
}

Rational raw_harmonic(const Graph &g, VertexId u) {
    require_nontrivial(g);
    const DistanceVector dist = g.bfs_distances(u);

    // Group reciprocals by distance: sum of count[d]/d needs one rational
    // addition per distinct distance instead of one per vertex.
    std::vector<std::uint32_t> count_at;
    for (VertexId x = 0; x < g.order(); ++x) {
        const auto d = dist[x];
        if (!d || *d == 0)
            continue;
        if (*d >= count_at.size())
            count_at.resize(*d + 1, 0);
        ++count_at[*d];
    }

    Rational sum;
    for (std::uint32_t d = 1; d < count_at.size(); ++d)
        if (count_at[d] > 0)
            sum += Rational(static_cast<long>(count_at[d]), static_cast<long>(d));
    return sum;
}

Rational normalized_harmonic(const Graph &g, VertexId u) {
    return raw_harmonic(g, u) / Rational(static_cast<long>(g.order()) - 1);
}

CentralityReport centrality_report(const Graph &g) {
    require_nontrivial(g);
    const Rational normalizer(static_cast<long>(g.order()) - 1);

    CentralityReport report{g.order(), {}, {}};
    report.values.reserve(g.order());
    for (VertexId v = 0; v < g.order(); ++v) {
        Rational raw = raw_harmonic(g, v);
        Rational normalized = raw / normalizer;
        report.values.push_back({v, std::move(raw), std::move(normalized)});
    }

    report.ranking.resize(g.order());
    std::iota(report.ranking.begin(), report.ranking.end(), 0);
    std::stable_sort(report.ranking.begin(), report.ranking.end(), [&](VertexId a, VertexId b) {
        return report.values[b].normalized < report.values[a].normalized;
    });
    return report;
}

} // namespace hcent
