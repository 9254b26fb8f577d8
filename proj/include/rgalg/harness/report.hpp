#pragma once

#include <cmath>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "rgalg/harness/catalogue.hpp"

namespace rgalg::harness {

inline const char* mode_name(GenMode m) { return m == GenMode::ExhaustivePool ? "exhaustive-pool" : "random"; }

inline nlohmann::ordered_json config_json(const GenConfig& g) {
  nlohmann::ordered_json j;
  j["states"] = g.cfg.states;
  j["len"] = g.cfg.max_len;
  j["depth"] = g.term_depth;
  j["samples"] = g.samples;
  j["seed"] = g.seed;
  j["mode"] = mode_name(g.mode);
  return j;
}

inline nlohmann::ordered_json law_json(const LawReport& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["kind"] = r.kind;
  j["provenance"] = r.provenance;
  if (!r.note.empty()) j["note"] = r.note;
  if (r.model_gap) j["model_gap"] = true;
  j["status"] = r.status;
  j["cases_checked"] = r.cases_checked;
  j["cases_proviso_skipped"] = r.cases_proviso_skipped;
  j["coverage"] = r.coverage_mode;
  if (std::isfinite(r.space)) {
    j["space"] = r.space;
  } else {
    j["space"] = nullptr;
  }
  auto cex = nlohmann::ordered_json::array();
  for (const auto& c : r.counterexamples) {
    nlohmann::ordered_json b = nlohmann::ordered_json::object();
    for (const auto& [n, v] : c.bindings) b[n] = v;
    nlohmann::ordered_json e;
    e["bindings"] = b;
    e["witness_trace"] = c.witness;
    e["side"] = c.side;
    e["detail"] = c.detail;
    cex.push_back(e);
  }
  j["counterexamples"] = cex;
  return j;
}

/// Machine-readable report. Contains no timings so identical runs are byte-identical.
inline nlohmann::ordered_json report_json(const Report& rep) {
  nlohmann::ordered_json j;
  j["config"] = config_json(rep.config);
  auto laws = nlohmann::ordered_json::array();
  std::size_t pass = 0, fail = 0, skipped = 0, gaps = 0;
  for (const auto& l : rep.laws) {
    laws.push_back(law_json(l));
    (l.status == "pass" ? pass : l.status == "fail" ? fail : skipped)++;
    gaps += l.status == "fail" && l.model_gap ? 1 : 0;
  }
  j["laws"] = laws;
  std::size_t neg_ok = 0;
  if (rep.ran_negative) {
    auto neg = nlohmann::ordered_json::array();
    for (const auto& n : rep.negative) {
      nlohmann::ordered_json e;
      e["name"] = n.name;
      e["base"] = n.base;
      e["as_expected"] = n.as_expected;
      e["report"] = law_json(n.report);
      neg.push_back(e);
      neg_ok += n.as_expected ? 1 : 0;
    }
    j["negative"] = neg;
  }
  nlohmann::ordered_json s;
  s["laws"] = rep.laws.size();
  s["pass"] = pass;
  s["fail"] = fail;
  s["fail_model_gap"] = gaps;
  s["skipped_all"] = skipped;
  if (rep.ran_negative) {
    s["negative"] = rep.negative.size();
    s["negative_as_expected"] = neg_ok;
  }
  j["summary"] = s;
  j["ok"] = rep.ok();
  return j;
}

inline void law_text(std::ostream& os, const LawReport& r, const char* label) {
  os << label << "  " << r.name << "  (" << r.coverage_mode << ", " << r.cases_checked << " checked";
  if (r.cases_proviso_skipped) os << ", " << r.cases_proviso_skipped << " skipped";
  os << ")\n";
  for (const auto& c : r.counterexamples) {
    os << "      ";
    for (std::size_t k = 0; k < c.bindings.size(); ++k) {
      os << (k ? ", " : "") << c.bindings[k].first << " = " << c.bindings[k].second;
    }
    os << "\n      ";
    if (!c.witness.empty()) os << "witness " << c.witness << " missing from " << c.side << ": ";
    os << c.detail << "\n";
  }
  if (r.status != "pass" && !r.note.empty()) os << "      " << (r.model_gap ? "model gap: " : "note: ") << r.note << "\n";
}

/// Human-readable report.
inline std::string report_text(const Report& rep) {
  std::ostringstream os;
  const auto& g = rep.config;
  os << "config: N=" << g.cfg.states << " L=" << g.cfg.max_len << " depth=" << g.term_depth << " samples=" << g.samples
     << " seed=" << g.seed << " mode=" << mode_name(g.mode) << "\n";
  std::size_t pass = 0, fail = 0, skipped = 0, gaps = 0;
  for (const auto& l : rep.laws) {
    const char* label = l.status == "pass" ? "pass" : l.status == "fail" ? "FAIL" : "SKIP";
    (l.status == "pass" ? pass : l.status == "fail" ? fail : skipped)++;
    gaps += l.status == "fail" && l.model_gap ? 1 : 0;
    law_text(os, l, label);
  }
  std::size_t neg_ok = 0;
  for (const auto& n : rep.negative) {
    neg_ok += n.as_expected ? 1 : 0;
    law_text(os, n.report, n.as_expected ? "neg-ok" : "NEG-UNEXPECTED");
  }
  os << "summary: " << rep.laws.size() << " laws, " << pass << " pass, " << fail << " fail (" << gaps
     << " model gaps), " << skipped << " skipped-all";
  if (rep.ran_negative) os << "; negative " << neg_ok << "/" << rep.negative.size() << " fail as expected";
  os << "\n";
  return os.str();
}

}  // namespace rgalg::harness
