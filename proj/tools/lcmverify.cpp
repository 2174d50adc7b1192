// Command-line front end: simulate, verify, report.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lcm/checker.hpp"
#include "lcm/report.hpp"
#include "lcm/scenario.hpp"
#include "lcm/simulate.hpp"

namespace {

enum Exit { kConfirmed = 0, kRefuted = 1, kInconclusive = 2, kUsage = 3 };

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_or_print(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

int exit_for(lcm::CertTag tag, lcm::Expectation expect) {
  using lcm::CertTag;
  using lcm::Expectation;
  if (tag == CertTag::kInconclusive) return kInconclusive;
  if (expect == Expectation::kNone || expect == Expectation::kInconclusive) {
    return tag == CertTag::kViolated ? kRefuted : kConfirmed;
  }
  const bool match = (tag == CertTag::kSolved && expect == Expectation::kSolved) ||
                     (tag == CertTag::kViolated && expect == Expectation::kViolated) ||
                     (tag == CertTag::kImpossible && expect == Expectation::kImpossible);
  return match ? kConfirmed : kRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulator and bounded verifier for look-compute-move robots on graphs"};
  app.require_subcommand(1);

  std::string scenario_path, adversary = "full", trace_path;
  int rounds = 20;
  auto* sim = app.add_subcommand("simulate", "Run one execution and judge its trace");
  sim->add_option("scenario", scenario_path, "Scenario file")->required();
  sim->add_option("--adversary", adversary, "full | random:<seed> | script:<c1>;<c2>;...");
  sim->add_option("--rounds", rounds, "Steps to run (ignored for scripts)")->check(CLI::NonNegativeNumber);
  sim->add_option("--trace", trace_path, "Write the trace here instead of stdout");

  std::string mode, out_path, record_path;
  std::optional<int> depth, window, palette;
  auto* ver = app.add_subcommand("verify", "Bounded verification of a scenario");
  ver->add_option("scenario", scenario_path, "Scenario file")->required();
  ver->add_option("--mode", mode, "solution | impossibility")
      ->required()
      ->check(CLI::IsMember({"solution", "impossibility"}));
  ver->add_option("--depth", depth, "Depth bound")->check(CLI::PositiveNumber);
  ver->add_option("--window", window, "Fairness window")->check(CLI::PositiveNumber);
  ver->add_option("--palette", palette, "Palette bound for impossibility")->check(CLI::PositiveNumber);
  ver->add_option("--out", out_path, "Write the certificate here instead of stdout");
  ver->add_option("--record", record_path, "Append the resulting solvability verdict to this file");

  std::string verdicts_path;
  auto* rep = app.add_subcommand("report", "Derive the variant comparison table");
  rep->add_option("--verdicts", verdicts_path, "Verdict file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*sim) {
      const lcm::Scenario s = lcm::load_scenario(scenario_path);
      const auto algo = lcm::load_algorithm(s, std::filesystem::path(scenario_path).parent_path());
      const auto res = lcm::run_simulate(s, *algo, lcm::AdversarySpec::parse(adversary), rounds);
      std::string text;
      for (const auto& line : res.trace) text += line + '\n';
      write_or_print(trace_path, text);
      std::cout << "verdict " << lcm::to_string(res.verdict.tag);
      if (res.verdict.step >= 0) std::cout << " step=" << res.verdict.step;
      if (!res.verdict.reason.empty()) std::cout << " reason=\"" << res.verdict.reason << '"';
      std::cout << '\n';
      return res.verdict.tag == lcm::VerdictTag::kViolated ? kRefuted : kConfirmed;
    }
    if (*ver) {
      lcm::Scenario s = lcm::load_scenario(scenario_path);
      if (depth) s.bounds.max_depth = *depth;
      if (window) s.bounds.window = *window;
      if (palette) s.bounds.palette = *palette;
      s.bounds.validate();
      lcm::CheckContext ctx = lcm::CheckContext::from(s);
      lcm::Certificate cert;
      if (mode == "solution") {
        const auto algo = lcm::load_algorithm(s, std::filesystem::path(scenario_path).parent_path());
        cert = lcm::verify_solution(*algo, ctx);
      } else {
        ctx = ctx.with_palette_bound();
        cert = lcm::verify_impossibility(ctx);
      }
      write_or_print(out_path, lcm::to_text(cert, ctx));
      if (!out_path.empty()) {
        std::cout << "verdict " << lcm::to_string(cert.tag) << " explored=" << cert.explored << '\n';
      }
      const bool decisive = cert.tag == lcm::CertTag::kSolved || cert.tag == lcm::CertTag::kImpossible;
      if (!record_path.empty() && decisive) {
        std::ofstream rec(record_path, std::ios::app);
        rec << lcm::to_string(s.problem.kind) << ' '
            << lcm::Variant{ctx.model.tag(), ctx.scheduler}.str() << ' '
            << (cert.tag == lcm::CertTag::kSolved ? "solvable" : "unsolvable") << " # "
            << std::filesystem::path(scenario_path).filename().string() << '\n';
      }
      return exit_for(cert.tag, s.expect);
    }
    if (*rep) {
      const auto verdicts = lcm::parse_verdicts(read_file(verdicts_path));
      std::cout << lcm::build_report(verdicts).to_text();
      return kConfirmed;
    }
  } catch (const lcm::ParseError& e) {
    std::cerr << "parse error at " << e.line() << ':' << e.column() << ": " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
