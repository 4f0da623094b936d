#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace adeq {

// Network documents are JSON: {base_mva, buses: [...], lines: [...]}.
// All power quantities are MW on a common MVA base; reactance and
// resistance are per-unit on that base.

struct Bus {
  std::string id;
  double demand_mw = 0.0;
  double gen_capacity_mw = 0.0;
  double gen_setpoint_mw = 0.0;
  bool is_slack = false;

  bool operator==(const Bus&) const = default;
};

struct Line {
  std::string id;
  std::string from_bus;
  std::string to_bus;
  double reactance_pu = 0.0;
  double resistance_pu = 0.0;
  double capacity_mw = 0.0;

  bool operator==(const Line&) const = default;
};

struct Network {
  double base_mva = 100.0;
  std::vector<Bus> buses;
  std::vector<Line> lines;

  // Index lookups return -1 when the id is absent.
  int bus_index(std::string_view id) const;
  int line_index(std::string_view id) const;
  int slack_index() const;

  bool operator==(const Network&) const = default;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Network parse_network(const std::string& document);
std::string render_network(const Network& n);

struct ValidationReport {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
};

// Checks every structural invariant: id uniqueness, exactly one slack,
// endpoint references, sign constraints, connectivity.
ValidationReport validate_network(const Network& n);

// Study variants: case1 is the network as given, case2 derates T1 to
// 25 MW, case3 additionally derates T2 to 25 MW.
enum class CaseVariant { case1, case2, case3 };

std::string_view case_name(CaseVariant v);

// Returns a modified copy; the input is never mutated.
Network apply_case_variant(const Network& n, CaseVariant v);

}  // namespace adeq
