#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "json.hpp"

#include "hcent/report.hpp"
#include "test_support.hpp"

using namespace hcent;

namespace {

std::string render(const ReportDocument &doc, ReportFormat format, bool raw) {
    std::ostringstream out;
    write_report(doc, format, raw, out);
    return out.str();
}

} // namespace

TEST_CASE("json report carries exact fractions and ranking") {
    const ReportDocument doc = build_report(generate(FamilySpec::star(3)));
    const auto j = nlohmann::json::parse(render(doc, ReportFormat::json, false));

    CHECK(j["order"] == 4);
    CHECK(j["family"] == "star:3");
    REQUIRE(j["values"].size() == 4);
    CHECK(j["values"][0]["label"] == "u0");
    CHECK(j["values"][0]["role"] == "hub");
    CHECK(j["values"][0]["normalized"] == "1/1");
    CHECK(j["values"][1]["normalized"] == "2/3");
    CHECK(j["values"][1]["decimal"] == "0.666666666667");
    CHECK_FALSE(j["values"][0].contains("raw"));
    CHECK(j["ranking"] == nlohmann::json::array({0, 1, 2, 3}));

    const auto with_raw =
        nlohmann::json::parse(render(doc, ReportFormat::json, true));
    CHECK(with_raw["values"][1]["raw"] == "2/1");
}

TEST_CASE("plain graphs have id labels and no family or role") {
    const ReportDocument doc = build_report(test::caterpillar());
    const auto j = nlohmann::json::parse(render(doc, ReportFormat::json, false));
    CHECK_FALSE(j.contains("family"));
    CHECK(j["values"][2]["label"] == "2");
    CHECK_FALSE(j["values"][2].contains("role"));
    CHECK(j["values"][2]["normalized"] == "2/3");
}

TEST_CASE("report rationals parse back to themselves") {
    const ReportDocument doc = build_report(generate(FamilySpec::helm(4)));
    for (const auto &row : doc.rows) {
        CHECK(Rational::parse(row.normalized.to_string()) == row.normalized);
        CHECK(Rational::parse(row.raw.to_string()) == row.raw);
    }
}

TEST_CASE("csv has the fixed column order") {
    const ReportDocument doc = build_report(generate(FamilySpec::star(3)));
    const std::string csv = render(doc, ReportFormat::csv, true);
    CHECK(csv.substr(0, csv.find('\n')) == "id,label,role,raw,normalized,decimal");
    CHECK(csv.find("0,u0,hub,3/1,1/1,1\n") != std::string::npos);

    const std::string without_raw = render(doc, ReportFormat::csv, false);
    CHECK(without_raw.substr(0, without_raw.find('\n')) == "id,label,role,normalized,decimal");
    CHECK(without_raw.find("1,u1,star_leaf,2/3,0.666666666667\n") != std::string::npos);
}

TEST_CASE("text report mentions every column and the ranking") {
    const ReportDocument doc = build_report(generate(FamilySpec::wheel(4)));
    const std::string text = render(doc, ReportFormat::text, false);
    CHECK(text.find("order: 5") != std::string::npos);
    CHECK(text.find("family: wheel:4") != std::string::npos);
    CHECK(text.find("7/8") != std::string::npos);
    CHECK(text.find("ranking: 0 1 2 3 4") != std::string::npos);
}

TEST_CASE("rendering is byte-deterministic") {
    const ReportDocument doc = build_report(generate(FamilySpec::prism(5)));
    for (ReportFormat format : {ReportFormat::text, ReportFormat::json, ReportFormat::csv}) {
        CHECK(render(doc, format, true) == render(doc, format, true));
        CHECK(render(build_report(generate(FamilySpec::prism(5))), format, false) ==
              render(doc, format, false));
    }
}
