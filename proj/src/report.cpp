#include "adequacy/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace adeq {

uint64_t fnv1a64(std::string_view bytes) {
  uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

namespace {

using nlohmann::ordered_json;

std::string_view method_name(MethodSel m) {
  switch (m) {
    case MethodSel::pm: return "pm";
    case MethodSel::mcmf: return "mcmf";
    case MethodSel::both: return "both";
  }
  return "?";
}

std::string_view losses_name(LossSel l) {
  switch (l) {
    case LossSel::off: return "off";
    case LossSel::on: return "on";
    case LossSel::both: return "both";
  }
  return "?";
}

std::string hash_string(uint64_t h) {
  char buf[32];
  snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// Fixed decimals, trailing zeros trimmed, negative zero normalized.
std::string fmt_mw(double v, int decimals) {
  double scale = 1.0;
  for (int i = 0; i < decimals; ++i) scale *= 10.0;
  double r = std::round(v * scale) / scale;
  if (r == 0.0) r = 0.0;
  char buf[64];
  snprintf(buf, sizeof buf, "%.*f", decimals, r);
  std::string s = buf;
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  return s;
}

std::string fmt_g(double v) {
  char buf[64];
  snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

// Rows joined with " | ", first column left-aligned, the rest right.
std::string layout_table(const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return "";
  size_t cols = 0;
  for (const auto& r : rows) cols = std::max(cols, r.size());
  std::vector<size_t> width(cols, 0);
  for (const auto& r : rows)
    for (size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());

  std::ostringstream out;
  for (size_t ri = 0; ri < rows.size(); ++ri) {
    const auto& r = rows[ri];
    for (size_t c = 0; c < r.size(); ++c) {
      if (c) out << " | ";
      if (c == 0) {
        out << r[c] << std::string(width[c] - r[c].size(), ' ');
      } else {
        out << std::string(width[c] - r[c].size(), ' ') << r[c];
      }
    }
    out << "\n";
    if (ri == 0) {
      size_t total = 0;
      for (size_t c = 0; c < cols; ++c) total += width[c] + (c ? 3 : 0);
      out << std::string(total, '-') << "\n";
    }
  }
  return out.str();
}

std::string describe_arc(const FlowGraph& g, int k) {
  const Arc& a = g.arcs[k];
  std::string s = g.node_names[a.from] + "->" + g.node_names[a.to];
  s += " (";
  s += arc_kind_name(a.kind);
  s += " ";
  s += a.label;
  s += ")";
  return s;
}

const ModeResult* find_mode(const CaseResult& cr, bool lossy) {
  for (const auto& m : cr.modes)
    if (m.lossy == lossy) return &m;
  return nullptr;
}

}  // namespace

ComparisonReport run_cases(const Network& n, const RunOptions& opt,
                           std::string_view document_bytes) {
  ComparisonReport rep;
  rep.fixture_hash = hash_string(fnv1a64(document_bytes));
  rep.options = opt;

  for (CaseVariant v : opt.cases) {
    CaseResult cr;
    cr.variant = v;
    cr.network = apply_case_variant(n, v);

    if (opt.method != MethodSel::mcmf) {
      if (opt.losses != LossSel::on) {
        ModeResult m;
        m.lossy = false;
        m.flow = run_lossless_dispatch_flow(cr.network);
        m.adequacy = aggregate_adequacy(cr.network, m.flow, opt.eps_mw);
        cr.modes.push_back(std::move(m));
      }
      if (opt.losses != LossSel::off) {
        ModeResult m;
        m.lossy = true;
        m.flow = run_lossy_flow(cr.network, opt.tol_mw, opt.max_iter);
        m.adequacy = aggregate_adequacy(cr.network, m.flow, opt.eps_mw);
        cr.modes.push_back(std::move(m));
      }
    }

    if (opt.method != MethodSel::pm) {
      const FlowGraph g = build_flow_graph(cr.network);
      const MaxFlowResult mf = max_flow(g);
      McmfSummary s;
      s.max_flow_mw = mf.max_flow_mw;
      s.dns_mw = dns_mcmf(cr.network, mf);
      for (const auto& l : cr.network.lines) {
        double net = 0.0;
        for (size_t k = 0; k < g.arcs.size(); ++k) {
          if (g.arcs[k].label != l.id) continue;
          if (g.arcs[k].kind == ArcKind::line_forward) net += mf.per_arc_flow_mw[k];
          if (g.arcs[k].kind == ArcKind::line_reverse) net -= mf.per_arc_flow_mw[k];
        }
        s.line_flow_mw.push_back(net);
      }
      for (int k : mf.min_cut_arcs) {
        s.min_cut_capacity_mw += g.arcs[k].capacity_mw;
        s.min_cut.push_back(describe_arc(g, k));
      }
      cr.mcmf = std::move(s);
    }
    rep.cases.push_back(std::move(cr));
  }
  return rep;
}

std::string render_tables(const ComparisonReport& r) {
  std::ostringstream out;
  out << "adequacy report (tool " << r.tool_version << ", fixture " << r.fixture_hash
      << ")\n";
  out << "options: method=" << method_name(r.options.method)
      << " losses=" << losses_name(r.options.losses) << " eps_mw=" << fmt_g(r.options.eps_mw)
      << " tol_mw=" << fmt_g(r.options.tol_mw) << " max_iter=" << r.options.max_iter
      << "\n";

  if (r.cases.empty()) return out.str();
  const auto& bus_list = r.cases.front().network.buses;

  const bool any_lossless =
      r.options.method != MethodSel::mcmf && r.options.losses != LossSel::on;
  const bool any_lossy =
      r.options.method != MethodSel::mcmf && r.options.losses != LossSel::off;
  const bool any_mcmf = r.options.method != MethodSel::pm;

  if (any_lossless) {
    out << "\nper-bus imbalance, lossless (MW; positive = demand not served, negative = "
           "generation not served)\n";
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> head{"case"};
    for (const auto& b : bus_list) head.push_back(b.id);
    head.push_back("DNS");
    head.push_back("GNS");
    head.push_back("WL");
    if (any_mcmf) head.push_back("DNS_mcmf");
    rows.push_back(std::move(head));
    for (const auto& cr : r.cases) {
      const ModeResult* m = find_mode(cr, false);
      if (!m) continue;
      std::vector<std::string> row{std::string(case_name(cr.variant)).substr(4)};
      for (const auto& ba : m->adequacy.per_bus) row.push_back(fmt_mw(ba.diff_mw, 1));
      row.push_back(fmt_mw(m->adequacy.dns_total_mw, 1));
      row.push_back(fmt_mw(m->adequacy.gns_total_mw, 1));
      row.push_back(fmt_mw(m->adequacy.wheeling_loss_mw, 1));
      if (any_mcmf) row.push_back(cr.mcmf ? fmt_mw(cr.mcmf->dns_mw, 1) : "-");
      rows.push_back(std::move(row));
    }
    out << layout_table(rows);
    if (any_mcmf) {
      for (const auto& cr : r.cases) {
        const ModeResult* m = find_mode(cr, false);
        if (!m || !cr.mcmf || cr.mcmf->dns_mw <= 0.0) continue;
        const double ratio = m->adequacy.dns_total_mw / cr.mcmf->dns_mw;
        out << case_name(cr.variant) << ": DNS ratio pm/mcmf = " << fmt_mw(ratio, 2);
        if (ratio >= 1.05) out << " (MCMF underestimate)";
        out << "\n";
      }
    }
  }

  if (any_lossy) {
    out << "\nper-bus imbalance, with losses (MW)\n";
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> head{"case"};
    for (const auto& b : bus_list) head.push_back(b.id);
    head.push_back("DNS");
    head.push_back("GNS");
    head.push_back("WL");
    head.push_back("iter");
    rows.push_back(std::move(head));
    bool diverged = false;
    for (const auto& cr : r.cases) {
      const ModeResult* m = find_mode(cr, true);
      if (!m) continue;
      std::vector<std::string> row{std::string(case_name(cr.variant)).substr(4)};
      for (const auto& ba : m->adequacy.per_bus) row.push_back(fmt_mw(ba.diff_mw, 1));
      row.push_back(fmt_mw(m->adequacy.dns_total_mw, 1));
      row.push_back(fmt_mw(m->adequacy.gns_total_mw, 1));
      row.push_back(fmt_mw(m->adequacy.wheeling_loss_mw, 1));
      std::string it = std::to_string(m->flow.iterations);
      if (!m->flow.converged) {
        it += "*";
        diverged = true;
      }
      row.push_back(std::move(it));
      rows.push_back(std::move(row));
    }
    out << layout_table(rows);
    if (diverged) out << "* not converged within max_iter\n";
  }

  for (const auto& cr : r.cases) {
    out << "\npower flow, " << case_name(cr.variant) << " (MW)\n";
    const ModeResult* lossless = find_mode(cr, false);
    const ModeResult* lossy = find_mode(cr, true);

    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> head{"line", "capacity"};
    if (lossless) head.push_back("flow");
    if (lossy) {
      head.push_back("from");
      head.push_back("to");
      head.push_back("loss");
    }
    if (cr.mcmf) head.push_back("mcmf");
    rows.push_back(std::move(head));
    for (size_t k = 0; k < cr.network.lines.size(); ++k) {
      const Line& l = cr.network.lines[k];
      std::vector<std::string> row{l.id, fmt_mw(l.capacity_mw, 2)};
      if (lossless) row.push_back(fmt_mw(lossless->flow.from_flow_mw[k], 2));
      if (lossy) {
        row.push_back(fmt_mw(lossy->flow.from_flow_mw[k], 2));
        row.push_back(fmt_mw(lossy->flow.to_flow_mw[k], 2));
        row.push_back(fmt_mw(lossy->flow.loss_mw[k], 2));
      }
      if (cr.mcmf) row.push_back(fmt_mw(cr.mcmf->line_flow_mw[k], 2));
      rows.push_back(std::move(row));
    }
    out << layout_table(rows);

    if (lossless) {
      out << "congested (lossless):";
      if (lossless->adequacy.congested_line_ids.empty()) out << " none";
      for (const auto& id : lossless->adequacy.congested_line_ids) out << " " << id;
      out << "\nwheeling loss (lossless flows): "
          << fmt_mw(lossless->adequacy.wheeling_loss_mw, 2) << "\n";
      out << "slack injection (lossless): " << fmt_mw(lossless->flow.slack_injection_mw, 2)
          << "\n";
    }
    if (lossy) {
      out << "congested (lossy):";
      if (lossy->adequacy.congested_line_ids.empty()) out << " none";
      for (const auto& id : lossy->adequacy.congested_line_ids) out << " " << id;
      out << "\nwheeling loss (lossy from-end flows): "
          << fmt_mw(lossy->adequacy.wheeling_loss_mw, 2) << "\n";
      out << "slack injection (lossy): " << fmt_mw(lossy->flow.slack_injection_mw, 2)
          << "\n";
    }
    if (cr.mcmf) {
      out << "max flow at min cut: " << fmt_mw(cr.mcmf->max_flow_mw, 2) << "\n";
      out << "demand not served (mcmf): " << fmt_mw(cr.mcmf->dns_mw, 2) << "\n";
      out << "min cut:";
      for (const auto& d : cr.mcmf->min_cut) out << " [" << d << "]";
      out << "\n";
    }
  }
  return out.str();
}

std::string render_structured(const ComparisonReport& r) {
  ordered_json doc;
  ordered_json meta;
  meta["tool_version"] = r.tool_version;
  meta["fixture_hash"] = r.fixture_hash;
  meta["method"] = std::string(method_name(r.options.method));
  meta["losses"] = std::string(losses_name(r.options.losses));
  meta["eps_mw"] = r.options.eps_mw;
  meta["tol_mw"] = r.options.tol_mw;
  meta["max_iter"] = r.options.max_iter;
  ordered_json case_list = ordered_json::array();
  for (const auto& cr : r.cases) case_list.push_back(std::string(case_name(cr.variant)));
  meta["cases"] = std::move(case_list);
  doc["meta"] = std::move(meta);

  ordered_json cases = ordered_json::object();
  for (const auto& cr : r.cases) {
    ordered_json jc = ordered_json::object();

    ordered_json jmcmf;
    if (cr.mcmf) {
      jmcmf = ordered_json::object();
      jmcmf["max_flow_mw"] = cr.mcmf->max_flow_mw;
      jmcmf["dns_mw"] = cr.mcmf->dns_mw;
      jmcmf["min_cut_capacity_mw"] = cr.mcmf->min_cut_capacity_mw;
      ordered_json per_line = ordered_json::array();
      for (size_t k = 0; k < cr.network.lines.size(); ++k) {
        ordered_json jl;
        jl["line"] = cr.network.lines[k].id;
        jl["flow_mw"] = cr.mcmf->line_flow_mw[k];
        per_line.push_back(std::move(jl));
      }
      jmcmf["per_line_flow_mw"] = std::move(per_line);
      jmcmf["min_cut"] = cr.mcmf->min_cut;
    }

    auto mode_block = [&](const ModeResult& m) {
      ordered_json jm = ordered_json::object();
      ordered_json per_bus = ordered_json::array();
      for (const auto& ba : m.adequacy.per_bus) {
        ordered_json jb;
        jb["bus"] = ba.bus_id;
        jb["diff_mw"] = ba.diff_mw;
        jb["dns_mw"] = ba.dns_mw;
        jb["gns_mw"] = ba.gns_mw;
        per_bus.push_back(std::move(jb));
      }
      jm["per_bus"] = std::move(per_bus);
      ordered_json totals;
      totals["dns_mw"] = m.adequacy.dns_total_mw;
      totals["gns_mw"] = m.adequacy.gns_total_mw;
      totals["wheeling_loss_mw"] = m.adequacy.wheeling_loss_mw;
      totals["congested_lines"] = m.adequacy.congested_line_ids;
      jm["totals"] = std::move(totals);
      ordered_json per_line = ordered_json::array();
      for (size_t k = 0; k < cr.network.lines.size(); ++k) {
        ordered_json jl;
        jl["line"] = cr.network.lines[k].id;
        jl["from_mw"] = m.flow.from_flow_mw[k];
        jl["to_mw"] = m.flow.to_flow_mw[k];
        jl["loss_mw"] = m.flow.loss_mw[k];
        jl["capacity_mw"] = cr.network.lines[k].capacity_mw;
        per_line.push_back(std::move(jl));
      }
      jm["per_line"] = std::move(per_line);
      ordered_json conv;
      conv["converged"] = m.flow.converged;
      conv["iterations"] = m.flow.iterations;
      jm["convergence"] = std::move(conv);
      jm["slack_injection_mw"] = m.flow.slack_injection_mw;
      jm["mcmf"] = jmcmf;
      return jm;
    };

    const ModeResult* lossless = find_mode(cr, false);
    const ModeResult* lossy = find_mode(cr, true);
    if (lossless) jc["lossless"] = mode_block(*lossless);
    if (lossy) jc["lossy"] = mode_block(*lossy);
    if (!lossless && !lossy && cr.mcmf) {
      ordered_json jm = ordered_json::object();
      jm["mcmf"] = jmcmf;
      if (r.options.losses != LossSel::on) jc["lossless"] = jm;
      if (r.options.losses != LossSel::off) jc["lossy"] = jm;
    }
    cases[std::string(case_name(cr.variant))] = std::move(jc);
  }
  doc["cases"] = std::move(cases);
  return doc.dump(2) + "\n";
}

}  // namespace adeq
