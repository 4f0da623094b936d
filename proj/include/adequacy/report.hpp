#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adequacy/adequacy.hpp"
#include "adequacy/loss.hpp"
#include "adequacy/mcmf.hpp"

namespace adeq {

inline constexpr std::string_view kToolVersion = "1.0.0";

enum class MethodSel { pm, mcmf, both };
enum class LossSel { off, on, both };

struct RunOptions {
  std::vector<CaseVariant> cases{CaseVariant::case1, CaseVariant::case2,
                                 CaseVariant::case3};
  MethodSel method = MethodSel::both;
  LossSel losses = LossSel::off;
  double eps_mw = 1e-6;
  double tol_mw = 1e-6;
  int max_iter = 50;
};

struct ModeResult {
  bool lossy = false;
  FlowSolution flow;
  AdequacyReport adequacy;
};

struct McmfSummary {
  double max_flow_mw = 0.0;
  double dns_mw = 0.0;
  double min_cut_capacity_mw = 0.0;
  std::vector<double> line_flow_mw;   // net signed flow per line, document order
  std::vector<std::string> min_cut;   // arc descriptions
};

struct CaseResult {
  CaseVariant variant = CaseVariant::case1;
  Network network;  // variant applied
  std::vector<ModeResult> modes;  // lossless before lossy when both run
  std::optional<McmfSummary> mcmf;
};

struct ComparisonReport {
  std::string tool_version{kToolVersion};
  std::string fixture_hash;  // fnv1a64 over the source document bytes
  RunOptions options;
  std::vector<CaseResult> cases;
};

uint64_t fnv1a64(std::string_view bytes);

ComparisonReport run_cases(const Network& n, const RunOptions& opt,
                           std::string_view document_bytes);

// Fixed-width text tables; numbers rounded only here.
std::string render_tables(const ComparisonReport& r);

// Deterministic JSON carrying unrounded values, keyed case -> loss mode.
std::string render_structured(const ComparisonReport& r);

}  // namespace adeq
