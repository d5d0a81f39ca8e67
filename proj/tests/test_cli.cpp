#include <gtest/gtest.h>

#include <json.hpp>

#include "support.hpp"

using namespace fibrecheck;
using namespace fibrecheck::testing;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Parser, BlowupTranscription) {
  auto p = parse_problem("field Q\nbase y1 y2\nvars x\nideal: y1*x - y2\ncheck both");
  EXPECT_EQ(p.base_vars.size(), 2u);
  EXPECT_EQ(p.fibre_vars.size(), 1u);
  ASSERT_EQ(p.ideal.size(), 1u);
  EXPECT_EQ(p.ideal[0], P(p.ring(), "y1*x - y2"));
  EXPECT_TRUE(p.check_open && p.check_flat);
  EXPECT_FALSE(p.max_power.has_value());
}

TEST(Parser, CommentsContinuationsAndRationals) {
  auto p = parse_problem(
      "# header\nfield Q\nbase y   # the base\nvars x z\nideal: 3/2*x^2 - (y + 1)*z,\n  -x + 2\n"
      "check open\npower 3\n");
  ASSERT_EQ(p.ideal.size(), 2u);
  EXPECT_EQ(p.ideal[0], P(p.ring(), "3/2*x^2 - y*z - z"));
  EXPECT_TRUE(p.check_open);
  EXPECT_FALSE(p.check_flat);
  EXPECT_EQ(p.max_power, 3);
}

TEST(Parser, ModuleStatement) {
  auto p = parse_problem("base y\nvars x\nmodule 2: (x; y), (0; x^2)\ncheck flat\n");
  ASSERT_TRUE(p.module.has_value());
  EXPECT_EQ(p.module->rank, 2u);
  EXPECT_EQ(p.module->relations.size(), 2u);
  EXPECT_TRUE(p.module->relations[1][0].is_zero());
}

TEST(Parser, SemanticErrorsCarryPositions) {
  auto expect_error = [](const std::string& text, int line, int col, const std::string& needle) {
    try {
      parse_problem(text);
      ADD_FAILURE() << "accepted: " << text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), line) << e.what();
      EXPECT_EQ(e.column(), col) << e.what();
      EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
    }
  };
  expect_error("field F 4\nbase y\n", 1, 9, "non-prime modulus");
  expect_error("base y1\nideal: y1*x\nvars x\n", 2, 11, "undeclared variable x");
  expect_error("base y x\nvars x\n", 2, 6, "duplicate variable x");
  expect_error("base y\nvars x\nideal: x - x\n", 3, 8, "zero generator");
  expect_error("base y\nvars x\nmodule 2: (x; y), (x)\n", 3, 19, "length 1");
  expect_error("base y\nvars x\nideal x\n", 3, 7, "unexpected");
  expect_error("base y\nvars x\nideal: x +\n", 3, 11, "unexpected");
  expect_error("vars x\n", 2, 1, "no base variables");
  expect_error("base y\nideal: 1/0\n", 2, 10, "zero denominator");
  expect_error("base y\ncheck sideways\n", 2, 7, "unexpected");
}

TEST(Parser, SyntaxErrorListsExpectedTokens) {
  try {
    parse_problem("base y\ncheck\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.expected(), (std::vector<std::string>{"open", "flat", "both"}));
  }
}

TEST(Parser, LargePrimeIsUnsupported) {
  EXPECT_THROW(parse_problem("field F 2147483659\nbase y\n"), UnsupportedInput);
  EXPECT_NO_THROW(parse_problem("field F 2147483647\nbase y\n"));
}

TEST(Parser, OversizedExpressionHitsTheTermBudget) {
  EXPECT_THROW(parse_problem(read_file(fixture_path("oversized.alg"))), ResourceLimitError);
}

TEST(Parser, RoundTripOnFixtures) {
  for (const auto& name : fixture_names()) {
    auto p = fixture(name);
    auto text = render_problem(p);
    EXPECT_EQ(parse_problem(text), p) << name;
    EXPECT_EQ(render_problem(parse_problem(text)), text) << name;
  }
  for (const auto& p : random_corpus(99, 20)) EXPECT_EQ(parse_problem(render_problem(p)), p);
}

TEST(Parser, TotalityOnMutatedInput) {
  std::mt19937 rng(1);
  const std::string alphabet = "abxy1230 \n\t:,;()+-*^/#[]QFfieldbasevarsidealmodulecheckpower\x01\xff";
  std::vector<std::string> seeds;
  for (const auto& name : fixture_names()) seeds.push_back(read_file(fixture_path(name + ".alg")));
  for (int trial = 0; trial < 3000; ++trial) {
    std::string text = seeds[trial % seeds.size()];
    std::uniform_int_distribution<int> edits(1, 6);
    for (int e = edits(rng); e > 0; --e) {
      std::uniform_int_distribution<std::size_t> at(0, text.size());
      std::uniform_int_distribution<std::size_t> ch(0, alphabet.size() - 1);
      std::size_t pos = at(rng);
      switch (rng() % 3) {
        case 0:
          text.insert(pos, 1, alphabet[ch(rng)]);
          break;
        case 1:
          if (pos < text.size()) text.erase(pos, 1);
          break;
        default:
          if (pos < text.size()) text[pos] = alphabet[ch(rng)];
      }
    }
    try {
      auto p = parse_problem(text);
      EXPECT_EQ(parse_problem(render_problem(p)), p);
    } catch (const ParseError& e) {
      EXPECT_GE(e.line(), 1);
      EXPECT_GE(e.column(), 1);
    } catch (const UnsupportedInput&) {
    } catch (const ResourceLimitError&) {
    } catch (const InvalidArgument&) {
    }
  }
}

TEST(Parser, DeepNestingIsRejectedNotFatal) {
  std::string text = "base y\nideal: " + std::string(100000, '(') + "y";
  EXPECT_THROW(parse_problem(text), ParseError);
}

TEST(Report, TextContainsVerdictAndWitness) {
  auto r = run_cli({"--input", fixture_path("blowup.alg")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("NOT OPEN (vertical component at fibred power 2)"), std::string::npos);
  EXPECT_NE(r.out.find("witness r = y1"), std::string::npos);
  EXPECT_NE(r.out.find("NOT FLAT (torsion at tensor power 2)"), std::string::npos);
}

TEST(Report, JsonSchemaAndKeyOrder) {
  auto r = run_cli({"--input", fixture_path("cusp.alg"), "--json"});
  ASSERT_EQ(r.code, 0);
  auto doc = nlohmann::ordered_json::parse(r.out);
  std::vector<std::string> keys;
  for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"version", "field", "n", "m", "order", "problem",
                                            "checks"}));
  ASSERT_EQ(doc["checks"].size(), 2u);
  EXPECT_EQ(doc["checks"][0]["kind"], "open");
  EXPECT_EQ(doc["checks"][0]["outcome"], "fail");
  EXPECT_EQ(doc["checks"][0]["failing_power"], 1);
  EXPECT_EQ(doc["checks"][0]["witness_r"], "y1^3 - y2^2");
  EXPECT_EQ(doc["checks"][1]["certificate_r"], "y1^3 - y2^2");
  for (const auto& c : doc["checks"]) {
    for (const auto& s : c["powers"]) {
      EXPECT_TRUE(s.contains("k") && s.contains("basis_size") && s.contains("pairs"));
      EXPECT_EQ(s["millis"], 0);
    }
  }
}

TEST(Report, PassReportHasNoFailingPower) {
  auto r = run_cli({"--json"}, read_file(fixture_path("double_cover.alg")));
  ASSERT_EQ(r.code, 0);
  auto doc = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(doc["checks"][0]["outcome"], "pass");
  EXPECT_FALSE(doc["checks"][0].contains("failing_power"));
}

TEST(Report, AbortedReportNamesTheLimit) {
  auto r = run_cli({"--input", fixture_path("blowup.alg"), "--json", "--pair-limit", "1"});
  EXPECT_EQ(r.code, 3);
  auto doc = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(doc["checks"][0]["outcome"], "aborted");
  EXPECT_EQ(doc["checks"][0]["abort"]["limit"], "pair-limit");
}

TEST(Cli, ExitCodeMatrix) {
  EXPECT_EQ(run_cli({"--input", fixture_path("blowup.alg")}).code, 0);
  EXPECT_EQ(run_cli({"--input", fixture_path("malformed.alg")}).code, 1);
  EXPECT_EQ(run_cli({"--input", fixture_path("does_not_exist.alg")}).code, 1);
  EXPECT_EQ(run_cli({"--bogus-flag"}).code, 1);
  EXPECT_EQ(run_cli({"--order", "revlex"}).code, 1);
  EXPECT_EQ(run_cli({"--input", fixture_path("large_prime.alg")}).code, 2);
  EXPECT_EQ(run_cli({"--input", fixture_path("prime_field.alg")}, "").code, 0);
  EXPECT_EQ(run_cli({}, "field F 7\nbase y\nvars x\ncheck flat\n").code, 2);
  EXPECT_EQ(run_cli({"--allow-char-p-flatness"}, "field F 7\nbase y\nvars x\ncheck flat\n").code, 0);
  EXPECT_EQ(run_cli({"--input", fixture_path("oversized.alg")}).code, 3);
  EXPECT_EQ(run_cli({"--input", fixture_path("blowup.alg"), "--pair-limit", "1"}).code, 3);
  auto malformed = run_cli({"--input", fixture_path("malformed.alg")});
  EXPECT_TRUE(malformed.out.empty());
  EXPECT_NE(malformed.err.find("line 5, column 10"), std::string::npos);
}

TEST(Cli, JsonIsByteIdenticalAcrossRuns) {
  for (const auto& name : fixture_names()) {
    std::vector<std::string> args = {"--input", fixture_path(name + ".alg"), "--json",
                                     "--allow-char-p-flatness"};
    auto a = run_cli(args), b = run_cli(args);
    EXPECT_EQ(a.code, 0) << name;
    EXPECT_EQ(a.out, b.out) << name;
  }
}

TEST(Cli, FlagsAffectTheRun) {
  auto lex = run_cli({"--input", fixture_path("blowup.alg"), "--order", "lex", "--json"});
  EXPECT_EQ(nlohmann::ordered_json::parse(lex.out)["order"], "lex");
  auto capped = run_cli({"--input", fixture_path("blowup.alg"), "--max-power", "1", "--json"});
  EXPECT_EQ(nlohmann::ordered_json::parse(capped.out)["checks"][0]["outcome"], "inconclusive-pass");
  auto traced = run_cli({"--input", fixture_path("blowup.alg"), "--trace"});
  EXPECT_NE(traced.out.find("power 2: basis"), std::string::npos);
  auto version = run_cli({"--version"});
  EXPECT_EQ(version.code, 0);
  EXPECT_NE(version.out.find(version_string()), std::string::npos);
}
