#pragma once

#include <cctype>
#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "rgalg/config.hpp"

namespace rgalg {

/// Declaration order is the canonical order of kinds.
enum class StepKind : int { Program = 0, Env = 1, ProgramAbort = 2, EnvAbort = 3, Termination = 4 };

struct Step {
  StepKind kind = StepKind::Termination;
  int target = 0;  // meaningful for Program and Env only

  static Step program(int s) { return {StepKind::Program, s}; }
  static Step env(int s) { return {StepKind::Env, s}; }
  static Step program_abort() { return {StepKind::ProgramAbort, 0}; }
  static Step env_abort() { return {StepKind::EnvAbort, 0}; }
  static Step done() { return {StepKind::Termination, 0}; }

  bool terminal() const { return kind >= StepKind::ProgramAbort; }
  bool has_target() const { return kind <= StepKind::Env; }

  friend bool operator==(const Step& a, const Step& b) {
    return a.kind == b.kind && (!a.has_target() || a.target == b.target);
  }
  friend std::strong_ordering operator<=>(const Step& a, const Step& b) {
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    if (!a.has_target()) return std::strong_ordering::equal;
    return a.target <=> b.target;
  }
};

struct Trace {
  int initial = 0;
  std::vector<Step> steps;

  friend bool operator==(const Trace&, const Trace&) = default;
  friend std::strong_ordering operator<=>(const Trace& a, const Trace& b) {
    if (auto c = a.initial <=> b.initial; c != 0) return c;
    return std::lexicographical_compare_three_way(a.steps.begin(), a.steps.end(),
                                                  b.steps.begin(), b.steps.end());
  }

  /// State after the last program or environment step.
  int final_state() const {
    int s = initial;
    for (const auto& st : steps) {
      if (st.has_target()) s = st.target;
    }
    return s;
  }
  bool terminated() const {
    return !steps.empty() && steps.back().kind == StepKind::Termination;
  }
};

/// Canonically ordered set of traces.
using TraceSet = std::set<Trace>;

inline bool valid_trace(const Trace& t, const ModelConfig& cfg) {
  if (t.initial < 0 || t.initial >= cfg.states) return false;
  if (static_cast<long>(t.steps.size()) > cfg.max_len) return false;
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const Step& s = t.steps[i];
    if (s.terminal() && i + 1 != t.steps.size()) return false;
    if (s.has_target() && (s.target < 0 || s.target >= cfg.states)) return false;
  }
  return true;
}

inline std::string to_string(const Step& s) {
  switch (s.kind) {
    case StepKind::Program: return "p" + std::to_string(s.target);
    case StepKind::Env: return "e" + std::to_string(s.target);
    case StepKind::ProgramAbort: return "pX";
    case StepKind::EnvAbort: return "eX";
    case StepKind::Termination: return "!";
  }
  return "?";
}

inline std::string to_string(const Trace& t) {
  std::string out = std::to_string(t.initial) + ":[";
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    if (i) out += ',';
    out += to_string(t.steps[i]);
  }
  out += ']';
  return out;
}

/// Parses `<init>:[step,...]`. Throws ValueError on malformed text.
inline Trace parse_trace(std::string_view text) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const char* what) {
    throw ValueError("bad trace '" + std::string(text) + "' at " + std::to_string(i) + ": " + what);
  };
  auto number = [&] {
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) fail("expected digit");
    long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i++] - '0');
      if (v > 1'000'000) fail("number too large");
    }
    return static_cast<int>(v);
  };
  Trace t;
  skip_ws();
  t.initial = number();
  skip_ws();
  if (i >= text.size() || text[i] != ':') fail("expected ':'");
  ++i;
  skip_ws();
  if (i >= text.size() || text[i] != '[') fail("expected '['");
  ++i;
  skip_ws();
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    for (;;) {
      skip_ws();
      if (i >= text.size()) fail("unterminated step list");
      char c = text[i];
      if (c == '!') {
        ++i;
        t.steps.push_back(Step::done());
      } else if (c == 'p' || c == 'e') {
        ++i;
        if (i < text.size() && text[i] == 'X') {
          ++i;
          t.steps.push_back(c == 'p' ? Step::program_abort() : Step::env_abort());
        } else {
          int k = number();
          t.steps.push_back(c == 'p' ? Step::program(k) : Step::env(k));
        }
      } else {
        fail("expected step");
      }
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ']') {
        ++i;
        break;
      }
      fail("expected ',' or ']'");
    }
  }
  skip_ws();
  if (i != text.size()) fail("trailing characters");
  return t;
}

}  // namespace rgalg
