#ifndef HCENT_HARMONIC_HPP
#define HCENT_HARMONIC_HPP

#include <cstdint>
#include <vector>

#include "hcent/graph.hpp"
#include "hcent/rational.hpp"

namespace hcent {

// n-th harmonic number, sum of reciprocals of the first n naturals; H_0 = 0.
Rational harmonic_number(std::uint32_t n);

// Sum over x != u of 1/d(x,u); unreachable vertices contribute 0.
// Throws TrivialGraph on an order-1 graph.
Rational raw_harmonic(const Graph &g, VertexId u);

// raw_harmonic(g, u) / (order - 1).
Rational normalized_harmonic(const Graph &g, VertexId u);

struct CentralityValue {
    VertexId vertex;
    Rational raw;
    Rational normalized;
};

struct CentralityReport {
    std::uint32_t order;
    std::vector<CentralityValue> values; // one per vertex, by ascending id
    std::vector<VertexId> ranking;       // descending normalized value, ties by ascending id
};

// One BFS per vertex; exact values throughout.
CentralityReport centrality_report(const Graph &g);

} // namespace hcent

#endif // HCENT_HARMONIC_HPP
