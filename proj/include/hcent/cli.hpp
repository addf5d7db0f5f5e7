#ifndef HCENT_CLI_HPP
#define HCENT_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hcent/families.hpp"
#include "hcent/graph.hpp"
#include "hcent/report.hpp"
#include "hcent/verify.hpp"

namespace hcent::cli {

// Exit codes shared by every subcommand:
//   0 success, 1 verification mismatch, 2 usage/parse error, 3 trivial graph.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitTrivial = 3;

// Inputs containing ':' are family spec strings; everything else is read
// as an edge-list file (family metadata recovered from its header when the
// recorded spec still matches the parsed graph).
std::variant<Graph, LabeledGraph> load_input(const std::string &input);

int cmd_generate(const std::string &spec_string, bool dot, std::ostream &out, std::ostream &err);
int cmd_compute(const std::string &input, ReportFormat format, bool include_raw,
                std::ostream &out, std::ostream &err);
int cmd_rank(const std::string &input, std::optional<std::uint32_t> top, std::ostream &out,
             std::ostream &err);

struct VerifyOptions {
    std::string filter = "all"; // family name or "all"
    std::optional<SweepRange> range_override; // single-family filters only
    std::uint32_t random_graphs = 100;
    std::uint64_t seed = 0x48435630u; // corpus seed for the random property checks
    ReportFormat format = ReportFormat::text;
};

// Everything cmd_verify computed, separated from rendering so the
// failure-path output and exit code can be exercised directly.
struct VerifyOutcome {
    std::vector<SweepReport> sweeps;
    bool ran_property_checks = false;
    std::size_t random_graphs = 0;
    std::size_t disconnected_seen = 0;
    bool bounds_ok = true;
    bool degree_ok = true;
    std::vector<ErrataRecord> errata;

    bool ok() const;
};

VerifyOutcome run_verify(const VerifyOptions &options);

// Prints the outcome (text or json) and returns kExitOk or kExitMismatch.
int render_verify_outcome(const VerifyOutcome &outcome, ReportFormat format, std::ostream &out);

int cmd_verify(const VerifyOptions &options, std::ostream &out, std::ostream &err);

} // namespace hcent::cli

#endif // HCENT_CLI_HPP
