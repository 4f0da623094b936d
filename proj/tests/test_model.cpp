#include <doctest.h>

#include <algorithm>
#include <random>

#include "adequacy/model.hpp"
#include "test_util.hpp"

using namespace adeq;

namespace {

bool has_issue(const ValidationReport& r, const std::string& msg) {
  return std::find(r.issues.begin(), r.issues.end(), msg) != r.issues.end();
}

}  // namespace

TEST_SUITE("model") {

TEST_CASE("parses a minimal two-bus document") {
  const std::string doc = R"({
    "base_mva": 100,
    "buses": [
      {"id": "bus-1", "demand_mw": 0, "gen_capacity_mw": 50, "gen_setpoint_mw": 0, "slack": true},
      {"id": "bus-2", "demand_mw": 40, "gen_capacity_mw": 0, "gen_setpoint_mw": 0}
    ],
    "lines": [
      {"id": "T1", "from": "bus-1", "to": "bus-2", "reactance_pu": 0.5, "resistance_pu": 0.0, "capacity_mw": 60}
    ]
  })";
  const Network n = parse_network(doc);
  CHECK(n.base_mva == 100.0);
  REQUIRE(n.buses.size() == 2);
  REQUIRE(n.lines.size() == 1);
  CHECK(n.buses[0].is_slack);
  CHECK_FALSE(n.buses[1].is_slack);
  CHECK(n.buses[1].demand_mw == 40.0);
  CHECK(n.lines[0].reactance_pu == 0.5);
  CHECK(n.lines[0].capacity_mw == 60.0);
  CHECK(n.bus_index("bus-2") == 1);
  CHECK(n.line_index("T1") == 0);
  CHECK(n.slack_index() == 0);
  CHECK(validate_network(n).ok());
}

TEST_CASE("base_mva defaults to 100") {
  const Network n = parse_network(
      R"({"buses": [{"id": "a", "demand_mw": 0, "gen_capacity_mw": 1, "gen_setpoint_mw": 0, "slack": true},
                    {"id": "b", "demand_mw": 1, "gen_capacity_mw": 0, "gen_setpoint_mw": 0}],
          "lines": [{"id": "T1", "from": "a", "to": "b", "reactance_pu": 1, "resistance_pu": 0, "capacity_mw": 5}]})");
  CHECK(n.base_mva == 100.0);
}

TEST_CASE("loads the bundled five-bus fixture") {
  const Network n = testutil::load_fixture();
  CHECK(n.base_mva == 100.0);
  REQUIRE(n.buses.size() == 5);
  REQUIRE(n.lines.size() == 7);
  CHECK(n.slack_index() == 0);
  CHECK(n.buses[0].gen_capacity_mw == 100.0);
  CHECK(n.buses[1].gen_setpoint_mw == 100.0);
  double demand = 0.0;
  for (const auto& b : n.buses) demand += b.demand_mw;
  CHECK(demand == 200.0);
  CHECK(validate_network(n).ok());
}

TEST_CASE("parse errors name the offending key") {
  CHECK_THROWS_WITH_AS(parse_network("not json at all"),
                       doctest::Contains("malformed document"), ParseError);
  CHECK_THROWS_WITH_AS(parse_network(R"({"lines": []})"),
                       doctest::Contains("missing key: buses"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_network(R"({"buses": [{"id": "a", "gen_capacity_mw": 0, "gen_setpoint_mw": 0}], "lines": []})"),
      doctest::Contains("missing key: demand_mw"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_network(
          R"({"buses": [{"id": "a", "demand_mw": "lots", "gen_capacity_mw": 0, "gen_setpoint_mw": 0}], "lines": []})"),
      doctest::Contains("expected number for key: demand_mw"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_network(
          R"({"buses": [{"id": "a", "demand_mw": 0, "gen_capacity_mw": 0, "gen_setpoint_mw": 0},
                        {"id": "a", "demand_mw": 0, "gen_capacity_mw": 0, "gen_setpoint_mw": 0}],
              "lines": []})"),
      doctest::Contains("duplicate bus id: a"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_network(
          R"({"buses": [{"id": "a", "demand_mw": 0, "gen_capacity_mw": 0, "gen_setpoint_mw": 0}],
              "lines": [{"id": "T1", "from": "a", "to": "ghost", "reactance_pu": 1, "resistance_pu": 0, "capacity_mw": 1}]})"),
      doctest::Contains("unknown bus: ghost (key to, line T1)"), ParseError);
}

TEST_CASE("render then parse round-trips exactly") {
  const Network n = testutil::load_fixture();
  CHECK(parse_network(render_network(n)) == n);

  std::mt19937 rng(7);
  for (int i = 0; i < 25; ++i) {
    const Network r = testutil::random_network(rng, true);
    CHECK(parse_network(render_network(r)) == r);
  }
}

TEST_CASE("validation reports every violated invariant") {
  Network n = testutil::two_bus(40.0, 0.5, 0.0);

  SUBCASE("two slack buses") {
    n.buses[1].is_slack = true;
    CHECK(has_issue(validate_network(n), "multiple slack buses"));
  }
  SUBCASE("no slack bus") {
    n.buses[0].is_slack = false;
    CHECK(has_issue(validate_network(n), "no slack bus"));
  }
  SUBCASE("nonpositive reactance") {
    n.lines[0].reactance_pu = 0.0;
    CHECK(has_issue(validate_network(n), "nonpositive reactance: T1"));
    n.lines[0].reactance_pu = -0.1;
    CHECK(has_issue(validate_network(n), "nonpositive reactance: T1"));
  }
  SUBCASE("negative resistance") {
    n.lines[0].resistance_pu = -0.01;
    CHECK(has_issue(validate_network(n), "negative resistance: T1"));
  }
  SUBCASE("nonpositive capacity") {
    n.lines[0].capacity_mw = 0.0;
    CHECK(has_issue(validate_network(n), "nonpositive capacity: T1"));
  }
  SUBCASE("negative demand") {
    n.buses[1].demand_mw = -1.0;
    CHECK(has_issue(validate_network(n), "negative demand: bus-2"));
  }
  SUBCASE("setpoint above capacity") {
    n.buses[1].gen_capacity_mw = 5.0;
    n.buses[1].gen_setpoint_mw = 6.0;
    CHECK(has_issue(validate_network(n), "setpoint exceeds capacity: bus-2"));
  }
  SUBCASE("disconnected bus") {
    n.buses.push_back({"bus-3", 0.0, 0.0, 0.0, false});
    const ValidationReport r = validate_network(n);
    CHECK(has_issue(r, "disconnected: bus-3"));
  }
  SUBCASE("dangling endpoint") {
    n.lines.push_back({"T2", "bus-1", "nowhere", 1.0, 0.0, 1.0});
    CHECK(has_issue(validate_network(n), "unknown bus: nowhere (line T2)"));
  }
  SUBCASE("self loop") {
    n.lines.push_back({"T2", "bus-1", "bus-1", 1.0, 0.0, 1.0});
    CHECK(has_issue(validate_network(n), "self loop: T2"));
  }
  SUBCASE("single bus") {
    n.buses.resize(1);
    n.lines.clear();
    CHECK(has_issue(validate_network(n), "fewer than 2 buses"));
  }
  SUBCASE("several issues accumulate") {
    n.lines[0].reactance_pu = 0.0;
    n.buses[1].demand_mw = -2.0;
    const ValidationReport r = validate_network(n);
    CHECK(r.issues.size() == 2);
  }
}

TEST_CASE("case variants derate the expected lines and nothing else") {
  const Network base = testutil::load_fixture();

  const Network c1 = apply_case_variant(base, CaseVariant::case1);
  CHECK(c1 == base);

  const Network c2 = apply_case_variant(base, CaseVariant::case2);
  CHECK(c2.lines[c2.line_index("T1")].capacity_mw == 25.0);
  int changed = 0;
  for (size_t k = 0; k < base.lines.size(); ++k)
    if (c2.lines[k].capacity_mw != base.lines[k].capacity_mw) ++changed;
  CHECK(changed == 1);

  const Network c3 = apply_case_variant(base, CaseVariant::case3);
  CHECK(c3.lines[c3.line_index("T1")].capacity_mw == 25.0);
  CHECK(c3.lines[c3.line_index("T2")].capacity_mw == 25.0);
  changed = 0;
  for (size_t k = 0; k < base.lines.size(); ++k)
    if (c3.lines[k].capacity_mw != base.lines[k].capacity_mw) ++changed;
  CHECK(changed == 2);

  CHECK(base == testutil::load_fixture());  // input untouched

  CHECK(case_name(CaseVariant::case1) == "case1");
  CHECK(case_name(CaseVariant::case3) == "case3");
}

TEST_CASE("case variants require the derated lines to exist") {
  Network n = testutil::two_bus(40.0, 0.5, 0.0);
  n.lines[0].id = "L-A";
  CHECK_THROWS_AS(apply_case_variant(n, CaseVariant::case2), ParseError);
  CHECK_THROWS_AS(apply_case_variant(n, CaseVariant::case3), ParseError);
  CHECK_NOTHROW(apply_case_variant(n, CaseVariant::case1));
}

}  // TEST_SUITE
