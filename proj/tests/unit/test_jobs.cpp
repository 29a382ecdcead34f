#include <doctest.h>

#include "jobs.hpp"

using rspan::jobs::Overrides;
using nlohmann::json;

namespace {

json job(const std::string& command, json payload)
{
    return {{"version", 1}, {"command", command}, {"payload", std::move(payload)}};
}

json square()
{
    return json::array({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
}

json simplex()
{
    return json::array({{0, 0}, {1, 0}, {0, 1}});
}

} // namespace

TEST_CASE("mixed-volume job")
{
    auto r = rspan::jobs::run(job("mixed-volume", {{"supports", {simplex(), simplex()}}}), Overrides{});
    CHECK(r["result"]["mixed_volume"] == 1);
    CHECK(r["input"]["command"] == "mixed-volume");
}

TEST_CASE("completion job")
{
    auto r = rspan::jobs::run(job("completion", {{"support", {{0}, {3}}}}), Overrides{});
    CHECK(r["result"]["support"] == json::array({{0}, {1}, {2}, {3}}));
    CHECK(r["result"]["certificates"].size() == 2);
}

TEST_CASE("oracle job")
{
    auto r = rspan::jobs::run(
        job("oracle", {{"supports", {square(), square()}}, {"p", 7}, {"trials", 10}, {"K_max", 4}, {"seed", 42}}), Overrides{});
    CHECK(r["result"]["generic_count"] == 2);
    CHECK(r["result"]["mv_reference"] == 2);
}

TEST_CASE("integers may be decimal strings")
{
    auto r = rspan::jobs::run(job("mixed-volume", {{"supports", {json::array({{"0", "0"}, {"100000000000000000000", "0"}, {"0", "1"}}), simplex()}}}),
                              Overrides{});
    CHECK(r["result"]["mixed_volume"] == "100000000000000000000");
}

TEST_CASE("schema violations")
{
    json report;
    CHECK(rspan::jobs::run_to_report(job("nope", json::object()), Overrides{}, report) == rspan::jobs::exit_validation);
    CHECK(rspan::jobs::run_to_report(job("degree", {{"support", simplex()}, {"extra", 1}}), Overrides{}, report) ==
          rspan::jobs::exit_validation);
    json v2 = job("degree", {{"support", simplex()}});
    v2["version"] = 2;
    CHECK(rspan::jobs::run_to_report(v2, Overrides{}, report) == rspan::jobs::exit_validation);
    json extra = job("degree", {{"support", simplex()}});
    extra["note"] = "x";
    CHECK(rspan::jobs::run_to_report(extra, Overrides{}, report) == rspan::jobs::exit_validation);
    CHECK(rspan::jobs::run_to_report(job("degree", {{"support", json::array({{0, "1.5"}})}}), Overrides{}, report) ==
          rspan::jobs::exit_validation);
}

TEST_CASE("module errors carry codes")
{
    json report;
    const int code = rspan::jobs::run_to_report(
        job("oracle", {{"supports", {square(), square()}}, {"p", 11}, {"trials", 1}, {"K_max", 4}, {"seed", 0}}), Overrides{}, report);
    CHECK(code == rspan::jobs::exit_validation);
    CHECK(report["error"]["code"] == "cap_exceeded");
}

TEST_CASE("overrides are echoed")
{
    Overrides o;
    o.q_max = 3;
    auto r = rspan::jobs::run(job("completion", {{"support", {{0}, {3}}}}), o);
    CHECK(r["input"]["effective"]["q_max"] == 3);
    CHECK(r["result"]["certificates"].size() == 2);
}

TEST_CASE("every command runs")
{
    const Overrides o;
    CHECK(rspan::jobs::run(job("index", {{"classes", {{{"plus", square()}, {"minus", simplex()}}, {{"plus", simplex()}}}}}), o)["result"]["index"] == 1);
    CHECK(rspan::jobs::run(job("equivalent", {{"first", {{0}, {2}}}, {"second", {{0}, {1}, {2}}}}), o)["result"]["witness_status"] == "found");
    auto d = rspan::jobs::run(job("degree", {{"support", json::array({{0, 0}, {2, 0}, {0, 2}})}}), o)["result"];
    CHECK(d["index"] == 4);
    CHECK(d["mapping_degree"] == 4);
    CHECK(d["image_degree"] == 1);
    CHECK(rspan::jobs::run(job("degree", {{"support", json::array({{0, 0}, {1, 1}})}}), o)["result"]["mapping_degree"] == "infinite");
    auto m = rspan::jobs::run(job("multiadd", {{"first", simplex()}, {"second", square()}, {"rest", {simplex()}}, {"p", 7}, {"trials", 4}, {"K_max", 2}, {"seed", 1}}), o);
    CHECK(m["result"]["mv_identity"] == true);
    CHECK(rspan::jobs::run(job("bdiv-index", {{"supports", {simplex(), simplex()}}}), o)["result"]["bdiv_index"] == 1);
    auto div = json{{"model", square()},
                    {"cones", {{{"vertex", {0, 0}}, {"functional", {0, 0}}}, {{"vertex", {0, 1}}, {"functional", {0, 1}}},
                               {{"vertex", {1, 0}}, {"functional", {1, 0}}}, {{"vertex", {1, 1}}, {"functional", {1, 1}}}}}};
    CHECK(rspan::jobs::run(job("bdiv-index", {{"divisors", {div, div}}}), o)["result"]["bdiv_index"] == 2);
    CHECK(rspan::jobs::run(job("roundtrip", {{"support", square()}, {"companions", {simplex()}}}), o)["result"]["ok"] == true);
    auto c = rspan::jobs::run(job("chow-check", {{"signature", {1, 1, 1}}, {"first", 0}}), o)["result"];
    CHECK(c["ok"] == true);
    CHECK(c["merged_signature"] == json::array({3, 1}));
}

TEST_CASE("reports are reproducible")
{
    const auto j = job("oracle", {{"supports", {simplex(), square()}}, {"p", 7}, {"trials", 3}, {"K_max", 2}, {"seed", 9}});
    Overrides one;
    Overrides many;
    many.threads = 4;
    CHECK(rspan::jobs::serialize(rspan::jobs::run(j, one)) == rspan::jobs::serialize(rspan::jobs::run(j, many)));
}
