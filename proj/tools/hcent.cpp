#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "hcent/cli.hpp"

namespace {

hcent::ReportFormat parse_format(const std::string &name) {
    if (name == "text")
        return hcent::ReportFormat::text;
    if (name == "json")
        return hcent::ReportFormat::json;
    if (name == "csv")
        return hcent::ReportFormat::csv;
    throw CLI::ValidationError("--format", "expected text, json or csv");
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"harmonic centrality of graphs: family generators, exact "
                 "BFS-based values, closed-form evaluation and verification"};
    app.require_subcommand(1);

    std::string generate_spec;
    std::string generate_output;
    bool generate_dot = false;
    auto *generate = app.add_subcommand("generate", "write a family instance as an edge list");
    generate->add_option("spec", generate_spec, "family spec, e.g. cycle:5 or kbipartite:3,4")
        ->required();
    generate->add_option("-o,--output", generate_output, "output file (default stdout)");
    generate->add_flag("--dot", generate_dot, "emit DOT instead of an edge list");

    std::string compute_input;
    std::string compute_format = "text";
    bool compute_raw = false;
    auto *compute = app.add_subcommand("compute", "compute centrality for every vertex");
    compute->add_option("input", compute_input, "family spec or edge-list file")->required();
    compute->add_option("--format", compute_format, "text, json or csv (default text)");
    compute->add_flag("--raw", compute_raw, "include the raw reciprocal-distance sums");

    std::string rank_input;
    std::optional<std::uint32_t> rank_top;
    auto *rank = app.add_subcommand("rank", "list vertices by descending centrality");
    rank->add_option("input", rank_input, "family spec or edge-list file")->required();
    rank->add_option("--top", rank_top, "show only the top K vertices");

    hcent::cli::VerifyOptions verify_options;
    std::string verify_format = "text";
    std::optional<std::uint32_t> verify_min, verify_max;
    auto *verify = app.add_subcommand("verify",
                                      "sweep closed forms against the exact oracle");
    verify->add_option("filter", verify_options.filter, "family name or 'all' (default all)");
    verify->add_option("--min", verify_min, "override sweep lower bound (single family only)");
    verify->add_option("--max", verify_max, "override sweep upper bound (single family only)");
    verify->add_option("--random", verify_options.random_graphs,
                       "random graphs for the property checks (default 100)");
    verify->add_option("--seed", verify_options.seed, "seed for the random-graph corpus");
    verify->add_option("--format", verify_format, "text or json (default text)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? hcent::cli::kExitOk : hcent::cli::kExitUsage;
    }

    try {
        if (generate->parsed()) {
            if (!generate_output.empty()) {
                std::ofstream file(generate_output);
                if (!file) {
                    std::cerr << "error: cannot write '" << generate_output << "'\n";
                    return hcent::cli::kExitUsage;
                }
                return hcent::cli::cmd_generate(generate_spec, generate_dot, file, std::cerr);
            }
            return hcent::cli::cmd_generate(generate_spec, generate_dot, std::cout, std::cerr);
        }
        if (compute->parsed())
            return hcent::cli::cmd_compute(compute_input, parse_format(compute_format),
                                           compute_raw, std::cout, std::cerr);
        if (rank->parsed())
            return hcent::cli::cmd_rank(rank_input, rank_top, std::cout, std::cerr);
        if (verify->parsed()) {
            if (verify_min || verify_max) {
                hcent::SweepRange range{verify_min.value_or(0), verify_max.value_or(0)};
                if (!verify_min || !verify_max) {
                    std::cerr << "error: --min and --max must be given together\n";
                    return hcent::cli::kExitUsage;
                }
                verify_options.range_override = range;
            }
            verify_options.format = parse_format(verify_format);
            return hcent::cli::cmd_verify(verify_options, std::cout, std::cerr);
        }
    } catch (const CLI::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return hcent::cli::kExitUsage;
    }
    return hcent::cli::kExitUsage;
}
