#include "fibrecheck/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fibrecheck/errors.hpp"
#include "fibrecheck/parser.hpp"
#include "fibrecheck/report.hpp"
#include "fibrecheck/verticality.hpp"

namespace fibrecheck::cli {

namespace {

struct Settings {
  std::string input;
  bool json = false;
  int max_power = 0;
  std::string order = "grevlex";
  bool allow_char_p_flatness = false;
  std::size_t pair_limit = 100000;
  double timeout_seconds = 0;
  bool trace = false;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Settings s;
  CLI::App app{"Decide openness and flatness of Spec A -> Spec R through fibred powers",
               "fibrecheck"};
  app.set_version_flag("--version", version_string());
  app.add_option("-i,--input", s.input, "Problem file (default: standard input)");
  app.add_flag("--json", s.json, "Emit a JSON report");
  app.add_option("--max-power", s.max_power, "Override the number of powers examined")
      ->check(CLI::Range(1, 64));
  app.add_option("--order", s.order, "Order within the fibre and base blocks")
      ->check(CLI::IsMember({"lex", "grevlex"}));
  app.add_flag("--allow-char-p-flatness", s.allow_char_p_flatness,
               "Run the flatness check over F_p");
  app.add_option("--pair-limit", s.pair_limit, "Abort a Groebner run after this many pairs")
      ->check(CLI::PositiveNumber);
  app.add_option("--timeout-seconds", s.timeout_seconds, "Wall-clock budget for all checks")
      ->check(CLI::PositiveNumber);
  app.add_flag("--trace", s.trace, "Report per-power statistics and timings");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << "fibrecheck " << version_string() << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  std::string text;
  if (s.input.empty() || s.input == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    std::ifstream file(s.input, std::ios::binary);
    if (!file) {
      err << "error: cannot read " << s.input << "\n";
      return kInputError;
    }
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  }

  Problem problem;
  try {
    problem = parse_problem(text);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const UnsupportedInput& e) {
    err << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResourceLimit;
  }

  if (problem.check_flat && !problem.field.is_rationals() && !s.allow_char_p_flatness) {
    err << "unsupported: flatness over " << problem.field.to_string()
        << " requires --allow-char-p-flatness\n";
    return kUnsupported;
  }

  CheckOptions options;
  options.order = s.order == "lex" ? WithinBlock::Lex : WithinBlock::Grevlex;
  if (s.max_power > 0) options.max_power = s.max_power;
  options.allow_char_p_flatness = s.allow_char_p_flatness;
  options.pair_limit = s.pair_limit;
  options.measure_time = s.trace;
  if (s.timeout_seconds > 0) {
    options.deadline = std::chrono::steady_clock::now() +
                       std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(s.timeout_seconds));
  }

  Report report{problem, options.order, {}, s.trace};
  try {
    if (problem.check_open) report.verdicts.push_back(check_openness(problem, options));
    if (problem.check_flat) report.verdicts.push_back(check_flatness(problem, options));
  } catch (const UnsupportedInput& e) {
    err << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResourceLimit;
  }

  out << (s.json ? render_json(report) : render_text(report));
  out.flush();

  for (const auto& v : report.verdicts) {
    if (v.outcome == Outcome::Aborted) {
      err << "resource limit: " << to_string(v.kind) << " check aborted (" << v.abort_limit
          << ")\n";
      return kResourceLimit;
    }
  }
  return kOk;
}

}  // namespace fibrecheck::cli
