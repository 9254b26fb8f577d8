#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "rgalg/rgalg.hpp"

namespace {

using namespace rgalg;

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kCapacity = 3 };

struct ModelFlags {
  int states = 2;
  int len = 3;

  void add(CLI::App* app) {
    app->add_option("--states", states, "number of states N")->check(CLI::Range(1, 16));
    app->add_option("--len", len, "maximum trace length L")->check(CLI::Range(0, 16));
  }
  ModelConfig cfg() const { return ModelConfig{states, len}; }
};

void print_traces(const Command& c) {
  c.bits().for_each([&](std::size_t t) {
    std::cout << to_string(c.universe().trace_at(static_cast<Universe::Index>(t))) << "\n";
  });
}

int run_eval(const std::string& text, const ModelFlags& m, bool count_only) {
  Command c = lang::eval(text, {}, m.cfg());
  if (count_only) {
    std::cout << c.size() << "\n";
  } else {
    print_traces(c);
  }
  return kOk;
}

int run_refines(const std::string& lhs, const std::string& rhs, const ModelFlags& m) {
  Command a = lang::eval(lhs, {}, m.cfg());
  Command b = lang::eval(rhs, {}, m.cfg());
  if (auto w = refinement_witness(a, b)) {
    std::cout << "NOT-REFINES\nwitness " << to_string(*w) << "\n";
    return kFail;
  }
  std::cout << "REFINES\n";
  return kOk;
}

int run_quotient(const std::string& ctext, const std::string& itext, const ModelFlags& m, bool verify,
                 std::size_t samples, std::uint64_t seed) {
  Command c = lang::eval(ctext, {}, m.cfg());
  Command i = lang::eval(itext, {}, m.cfg());
  Command q = quotient(c, i);
  print_traces(q);
  if (!verify) return kOk;
  harness::GenConfig g;
  g.cfg = m.cfg();
  g.term_depth = 1;
  g.seed = seed;
  harness::Pool pool = harness::gen_commands(g);
  std::mt19937_64 rng(seed);
  std::size_t n = std::min(samples, pool.size());
  for (std::size_t k = 0; k < n; ++k) {
    const Command& d = pool.items[n == pool.size() ? k : harness::detail::pick(rng, pool.size())];
    if (!galois_check(c, i, d)) {
      std::cout << "GALOIS-FAIL d = " << (pool.find_text(d) ? *pool.find_text(d) : render(d, " ")) << "\n";
      return kFail;
    }
  }
  std::cout << "GALOIS-OK " << n << " candidates\n";
  return kOk;
}

int run_check(harness::GenConfig g, const std::string& laws, bool negative, const std::string& json_path) {
  harness::Report rep = harness::run_suite(g, laws, negative);
  if (rep.laws.empty() && rep.negative.empty()) {
    std::cerr << "error: no law matches '" << laws << "'\n";
    return kUsage;
  }
  std::cout << harness::report_text(rep);
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "error: cannot write " << json_path << "\n";
      return kUsage;
    }
    out << harness::report_json(rep).dump(2) << "\n";
  }
  return rep.ok() ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounded trace-model checker for rely-guarantee algebra terms"};
  app.require_subcommand(1);

  ModelFlags em, rm, qm;
  std::string expr, lhs, rhs, ctext, itext;
  bool count_only = false, verify = false;
  std::size_t qsamples = 200;
  std::uint64_t qseed = 0;

  auto* eval = app.add_subcommand("eval", "print the traces of a closed term");
  eval->add_option("expr", expr, "term")->required();
  eval->add_flag("--count-only", count_only, "print only the number of traces");
  em.add(eval);

  auto* ref = app.add_subcommand("refines", "check lhs [= rhs");
  ref->add_option("lhs", lhs, "specification")->required();
  ref->add_option("rhs", rhs, "implementation")->required();
  rm.add(ref);

  auto* quo = app.add_subcommand("quotient", "print the rely quotient c // i");
  quo->add_option("c", ctext, "command")->required();
  quo->add_option("i", itext, "interference")->required();
  quo->add_flag("--verify-galois", verify, "check the Galois connection against sampled d");
  quo->add_option("--samples", qsamples, "candidates for --verify-galois");
  quo->add_option("--seed", qseed, "seed for --verify-galois");
  qm.add(quo);

  harness::GenConfig g;
  ModelFlags cm;
  std::string laws, json_path, mode = "exhaustive-pool";
  bool negative = false;
  auto* chk = app.add_subcommand("check", "run the law catalogue");
  cm.add(chk);
  chk->add_option("--depth", g.term_depth, "term depth of the generated pool")->check(CLI::Range(0, 4));
  chk->add_option("--samples", g.samples, "cases per law when not exhaustive")->check(CLI::PositiveNumber);
  chk->add_option("--seed", g.seed, "generator seed");
  chk->add_option("--laws", laws, "comma-separated name globs");
  chk->add_option("--mode", mode, "exhaustive-pool or random")->check(CLI::IsMember({"exhaustive-pool", "random"}));
  chk->add_flag("--negative", negative, "also run the stripped-proviso variants");
  chk->add_option("--json", json_path, "write the machine-readable report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*eval) return run_eval(expr, em, count_only);
    if (*ref) return run_refines(lhs, rhs, rm);
    if (*quo) return run_quotient(ctext, itext, qm, verify, qsamples, qseed);
    g.cfg = cm.cfg();
    g.mode = mode == "random" ? harness::GenMode::Random : harness::GenMode::ExhaustivePool;
    return run_check(g, laws, negative, json_path);
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kCapacity;
  } catch (const lang::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
