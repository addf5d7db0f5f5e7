#include "hcent/cli.hpp"

#include <fstream>
#include <ostream>

#include "json.hpp"

#include "hcent/edge_list.hpp"
#include "hcent/errors.hpp"
#include "hcent/harmonic.hpp"

namespace hcent::cli {

namespace {

template <typename Fn> int run_guarded(std::ostream &err, Fn &&fn) {
    try {
        return fn();
    } catch (const TrivialGraph &e) {
        err << "error: " << e.what() << "\n";
        return kExitTrivial;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

ReportDocument report_for(const std::variant<Graph, LabeledGraph> &input) {
    if (const auto *labeled = std::get_if<LabeledGraph>(&input))
        return build_report(*labeled);
    return build_report(std::get<Graph>(input));
}

} // namespace

std::variant<Graph, LabeledGraph> load_input(const std::string &input) {
    if (input.find(':') != std::string::npos)
        return generate(parse_family_spec(input));

    std::ifstream file(input);
    if (!file)
        throw Error("cannot open '" + input + "'");
    ParsedDocument doc = parse_edge_list_document(file);
    if (doc.family)
        return generate(*doc.family);
    return std::move(doc.graph);
}

int cmd_generate(const std::string &spec_string, bool dot, std::ostream &out, std::ostream &err) {
    return run_guarded(err, [&] {
        const LabeledGraph labeled = generate(parse_family_spec(spec_string));
        if (dot)
            write_dot(labeled, out);
        else
            write_edge_list(labeled, out);
        return kExitOk;
    });
}

int cmd_compute(const std::string &input, ReportFormat format, bool include_raw,
                std::ostream &out, std::ostream &err) {
    return run_guarded(err, [&] {
        write_report(report_for(load_input(input)), format, include_raw, out);
        return kExitOk;
    });
}

int cmd_rank(const std::string &input, std::optional<std::uint32_t> top, std::ostream &out,
             std::ostream &err) {
    return run_guarded(err, [&] {
        const ReportDocument doc = report_for(load_input(input));
        const std::size_t shown = top ? std::min<std::size_t>(*top, doc.ranking.size())
                                      : doc.ranking.size();
        out << "order: " << doc.order << "\n";
        if (doc.family)
            out << "family: " << *doc.family << "\n";
        for (std::size_t r = 0; r < shown; ++r) {
            const ReportRow &row = doc.rows[doc.ranking[r]];
            out << (r + 1) << ". id " << row.id << " label " << row.label << " normalized "
                << row.normalized.to_string() << " = " << row.normalized.to_decimal() << "\n";
        }
        return kExitOk;
    });
}

bool VerifyOutcome::ok() const {
    for (const auto &sweep : sweeps)
        if (!sweep.passed())
            return false;
    if (ran_property_checks && !(bounds_ok && degree_ok))
        return false;
    for (const auto &rec : errata)
        if (!rec.confirmed)
            return false;
    return true;
}

VerifyOutcome run_verify(const VerifyOptions &options) {
    static constexpr FamilyKind kAllKinds[] = {
        FamilyKind::path,   FamilyKind::cycle, FamilyKind::fan,
        FamilyKind::wheel,  FamilyKind::complete_bipartite,
        FamilyKind::ladder, FamilyKind::crown, FamilyKind::prism,
        FamilyKind::star,   FamilyKind::book,  FamilyKind::helm,
    };

    VerifyOutcome outcome;
    if (options.filter == "all") {
        if (options.range_override)
            throw Error("range overrides need a single family filter");
        for (FamilyKind kind : kAllKinds)
            outcome.sweeps.push_back(sweep_family(kind, default_sweep_range(kind)));

        outcome.ran_property_checks = true;
        outcome.random_graphs = options.random_graphs;
        const Rational probabilities[] = {Rational(1, 10), Rational(1, 4), Rational(1, 2),
                                          Rational(9, 10)};
        SplitMix64 corpus(options.seed);
        for (std::uint32_t i = 0; i < options.random_graphs; ++i) {
            const RandomGraphSpec spec{2 + static_cast<std::uint32_t>(corpus.next() % 99),
                                       probabilities[i % 4], corpus.next()};
            const Graph g = random_graph(spec);
            if (!g.is_connected())
                ++outcome.disconnected_seen;
            outcome.bounds_ok = outcome.bounds_ok && check_bounds(g);
            outcome.degree_ok = outcome.degree_ok && check_degree_characterization(g);
        }

        outcome.errata = errata_report();
        return outcome;
    }

    FamilyKind kind{};
    bool found = false;
    for (FamilyKind candidate : kAllKinds)
        if (family_name(candidate) == options.filter) {
            kind = candidate;
            found = true;
        }
    if (!found)
        throw Error("unknown family filter '" + options.filter + "' (expected a family name or 'all')");

    const SweepRange range = options.range_override.value_or(default_sweep_range(kind));
    outcome.sweeps.push_back(sweep_family(kind, range));
    return outcome;
}

int render_verify_outcome(const VerifyOutcome &outcome, ReportFormat format, std::ostream &out) {
    if (format == ReportFormat::json) {
        nlohmann::ordered_json j;
        j["sweeps"] = nlohmann::ordered_json::array();
        for (const auto &sweep : outcome.sweeps) {
            nlohmann::ordered_json s;
            s["range"] = sweep.family_range;
            s["instances"] = sweep.instances_checked;
            s["vertices"] = sweep.vertices_checked;
            s["mismatches"] = nlohmann::ordered_json::array();
            for (const auto &mismatch : sweep.mismatches) {
                s["mismatches"].push_back({{"spec", to_string(mismatch.spec)},
                                           {"vertex", mismatch.vertex},
                                           {"formula", mismatch.formula_value.to_string()},
                                           {"oracle", mismatch.oracle_value.to_string()}});
            }
            j["sweeps"].push_back(std::move(s));
        }
        if (outcome.ran_property_checks) {
            j["random_checks"] = {{"graphs", outcome.random_graphs},
                                  {"disconnected", outcome.disconnected_seen},
                                  {"bounds_ok", outcome.bounds_ok},
                                  {"degree_characterization_ok", outcome.degree_ok}};
        }
        if (!outcome.errata.empty()) {
            j["errata"] = nlohmann::ordered_json::array();
            for (const auto &rec : outcome.errata)
                j["errata"].push_back({{"id", rec.id},
                                       {"instances", rec.instances_checked},
                                       {"confirmed", rec.confirmed},
                                       {"detail", rec.detail}});
        }
        j["ok"] = outcome.ok();
        out << j.dump(2) << "\n";
        return outcome.ok() ? kExitOk : kExitMismatch;
    }

    for (const auto &sweep : outcome.sweeps) {
        out << "sweep " << sweep.family_range << ": " << sweep.instances_checked << " instances, "
            << sweep.vertices_checked << " vertices, " << sweep.mismatches.size()
            << " mismatches\n";
        for (const auto &mismatch : sweep.mismatches)
            out << "  mismatch: " << to_string(mismatch.spec) << " vertex " << mismatch.vertex
                << " formula " << mismatch.formula_value.to_string() << " oracle "
                << mismatch.oracle_value.to_string() << "\n";
    }
    if (outcome.ran_property_checks) {
        out << "random graphs: " << outcome.random_graphs << " checked ("
            << outcome.disconnected_seen << " disconnected), bounds "
            << (outcome.bounds_ok ? "ok" : "FAILED") << ", degree characterization "
            << (outcome.degree_ok ? "ok" : "FAILED") << "\n";
    }
    for (const auto &rec : outcome.errata)
        out << "errata " << rec.id << ": " << (rec.confirmed ? "confirmed" : "NOT CONFIRMED")
            << " over " << rec.instances_checked << " instances\n";
    out << (outcome.ok() ? "ok\n" : "FAILED\n");
    return outcome.ok() ? kExitOk : kExitMismatch;
}

int cmd_verify(const VerifyOptions &options, std::ostream &out, std::ostream &err) {
    return run_guarded(err, [&] {
        if (options.format == ReportFormat::csv)
            throw Error("verify renders text or json, not csv");
        return render_verify_outcome(run_verify(options), options.format, out);
    });
}

} // namespace hcent::cli
