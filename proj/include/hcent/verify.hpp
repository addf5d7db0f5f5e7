#ifndef HCENT_VERIFY_HPP
#define HCENT_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hcent/families.hpp"
#include "hcent/graph.hpp"
#include "hcent/rational.hpp"

namespace hcent {

struct SweepRange {
    std::uint32_t lo;
    std::uint32_t hi;
};

struct SweepMismatch {
    FamilySpec spec;
    VertexId vertex;
    Rational formula_value;
    Rational oracle_value;
};

struct SweepReport {
    std::string family_range; // e.g. "path m in [2,60]"
    std::size_t instances_checked = 0;
    std::size_t vertices_checked = 0;
    std::vector<SweepMismatch> mismatches;

    bool passed() const { return mismatches.empty(); }
};

// Parameter range each family's closed form is verified over by default.
SweepRange default_sweep_range(FamilyKind kind);

// Compares the closed form against the BFS oracle at every vertex of every
// instance in the range; exact rational equality, mismatches collected
// exhaustively (never short-circuited). For complete_bipartite the sweep is
// the product range m_range x n_range (n_range defaults to m_range).
SweepReport sweep_family(FamilyKind kind, SweepRange m_range,
                         std::optional<SweepRange> n_range = std::nullopt);

// SplitMix64 pseudorandom bit generator (Steele, Lea & Flood's published
// constants). Fixed here so that seeded graphs reproduce exactly across
// runs and reimplementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

struct RandomGraphSpec {
    std::uint32_t order;       // >= 2
    Rational edge_probability; // in [0, 1]
    std::uint64_t seed;
};

// Erdos-Renyi style graph: each unordered pair {u, v}, visited with u
// ascending and v ascending above u, is included iff draw * q.den < q.num
// * 2^64 where draw is the next SplitMix64 output. Identical spec, identical
// edge set; may be disconnected.
Graph random_graph(const RandomGraphSpec &spec);

// Every vertex value lies in [0, 1].
bool check_bounds(const Graph &g);

// Value 1 exactly at vertices of degree order-1, in both directions.
bool check_degree_characterization(const Graph &g);

// All values are 1 iff the graph is complete. Requires a connected input
// (DisconnectedInput otherwise).
bool check_complete_characterization(const Graph &g);

// One machine-checked record per known internal inconsistency in the
// theorem catalog's write-up. `confirmed` means the mechanical evidence
// supports the record's claim.
struct ErrataRecord {
    std::string id;
    std::string detail;
    std::size_t instances_checked = 0;
    bool confirmed = false;
};

std::vector<ErrataRecord> errata_report();

} // namespace hcent

#endif // HCENT_VERIFY_HPP
