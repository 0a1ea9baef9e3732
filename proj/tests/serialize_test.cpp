#include <doctest.h>

#include <fstream>

#include "schema_check.hpp"
#include "stacksort/enumeration.hpp"
#include "stacksort/serialize.hpp"

using namespace stacksort;
using nlohmann::json;

namespace {

json load_schema(const std::string& name) {
    std::ifstream in(std::string(STACKSORT_SCHEMA_DIR) + "/" + name);
    REQUIRE(in.good());
    return json::parse(in);
}

void check_schema(const std::string& doc, const std::string& schema_name) {
    std::string why;
    bool ok = stacksort::testing::conforms(json::parse(doc), load_schema(schema_name), &why);
    INFO(schema_name, ": ", why);
    CHECK(ok);
}

} // namespace

TEST_CASE("configuration JSON") {
    Permutation p = Permutation::parse("2.7.3.5.9.10.11.4.8.1.6.12.13.14.15.16");
    auto configs = enumerate_vhc_02(p);
    REQUIRE_FALSE(configs.empty());
    std::string doc = vhc_to_json(p, configs.front());
    check_schema(doc, "vhc.schema.json");

    json j = json::parse(doc);
    CHECK(j["descents"] == json::array({2, 7, 9}));
    CHECK(j["hat_q"].size() == 4);
    CHECK(j["coloring"].size() == 16);

    // determinism
    CHECK(doc == vhc_to_json(p, configs.front()));
}

TEST_CASE("canonical JSON carries the minimal-choice data") {
    Permutation p = Permutation::parse("2.7.3.5.9.10.11.4.8.1.6.12.13.14.15.16");
    std::string doc = canonical_to_json(p, canonical_vhc(p));
    check_schema(doc, "canonical.schema.json");
    json j = json::parse(doc);
    CHECK(j["exists"] == true);
    CHECK(j["b_star"] == json::array({9, 13, 12}));
    CHECK(j["b_star_positions"] == json::array({5, 13, 12}));

    std::string none = canonical_to_json(Permutation::parse("21"),
                                         canonical_vhc(Permutation::parse("21")));
    check_schema(none, "canonical.schema.json");
    CHECK(json::parse(none)["exists"] == false);
}

TEST_CASE("profile JSON") {
    Permutation p = Permutation::identity(3);
    std::string doc = profile_to_json(p, profile(p));
    check_schema(doc, "profile.schema.json");
    json j = json::parse(doc);
    CHECK(j["total"] == "5");
    CHECK(j["by_descents"]["1"] == "3");
    CHECK(j["valleys_provisional"] == false);
}

TEST_CASE("bound report JSON") {
    BoundReport rep;
    rep.name = "theorem6";
    rep.value = Real("12.5329600");
    rep.tolerance = 1e-5;
    rep.method = "root-isolation";
    rep.certified = true;
    rep.reference_value = 12.53296;
    std::string doc = bound_report_to_json(rep);
    check_schema(doc, "bound_report.schema.json");
    CHECK(json::parse(doc)["certified"] == true);
}

TEST_CASE("count table JSON") {
    CountTable table;
    table.method = "direct";
    table.generated_at = "2026-01-01T00:00:00Z";
    table.record(2, 4, count_direct(2, 4));
    std::string doc = table_to_json(table);
    check_schema(doc, "count_table.schema.json");
    CHECK(doc == table_to_json(table));
}

TEST_CASE("svg rendering") {
    Permutation p = Permutation::parse("2.7.3.5.9.10.11.4.8.1.6.12.13.14.15.16");
    auto configs = enumerate_vhc_02(p);
    REQUIRE_FALSE(configs.empty());
    std::string svg = vhc_to_svg(p, configs.front());
    CHECK(svg.rfind("<svg", 0) == 0);
    size_t polylines = 0, circles = 0, pos = 0;
    while ((pos = svg.find("<polyline", pos)) != std::string::npos) {
        ++polylines;
        ++pos;
    }
    pos = 0;
    while ((pos = svg.find("<circle", pos)) != std::string::npos) {
        ++circles;
        ++pos;
    }
    CHECK(polylines == configs.front().hooks.size());
    CHECK(circles == 16);
    CHECK(svg == vhc_to_svg(p, configs.front()));

    // the empty configuration still renders all points
    Permutation id = Permutation::identity(4);
    std::string small = vhc_to_svg(id, enumerate_vhc_02(id).front());
    CHECK(small.find("<circle") != std::string::npos);
}
