// Copyright 2026 The conjlogic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "conjlogic/cli.hpp"

namespace {

using namespace conjlogic;
using namespace conjlogic::cli;

RunResult cli(std::vector<std::string> args) { return run_cli(args); }

/// Restores CONJLOGIC_FORMAT when a test is done with it.
class FormatEnv {
 public:
  explicit FormatEnv(const char *value) {
    if (const char *old = std::getenv("CONJLOGIC_FORMAT")) {
      saved_ = old;
    }
    if (value) {
      ::setenv("CONJLOGIC_FORMAT", value, 1);
    } else {
      ::unsetenv("CONJLOGIC_FORMAT");
    }
  }
  ~FormatEnv() {
    if (saved_) {
      ::setenv("CONJLOGIC_FORMAT", saved_->c_str(), 1);
    } else {
      ::unsetenv("CONJLOGIC_FORMAT");
    }
  }

 private:
  std::optional<std::string> saved_;
};

TEST(CliParse, Conjunctions) {
  const auto ps = parse_conjunction("<ZI,IX>");
  ASSERT_EQ(ps.size(), 2u);
  EXPECT_EQ(format_prop(ps[0]), "<ZI>");
  EXPECT_EQ(format_prop(ps[1]), "<IX>");
  EXPECT_EQ(parse_conjunction("<-YYI>").size(), 1u);
  try {
    parse_conjunction("<ZI,IQ>");
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.position(), 5u);
  }
}

TEST(CliParse, Subcommands) {
  FormatEnv env(nullptr);
  const Command r = parse_command({"reduce", "--trace", "<XYZIZY>"});
  ASSERT_TRUE(std::holds_alternative<Reduce>(r.body));
  EXPECT_TRUE(std::get<Reduce>(r.body).trace);
  EXPECT_EQ(r.format, OutputFormat::Text);

  const Command p = parse_command({"--json", "predict", "<XZ,ZX>", "<YY>", "--theory", "toy"});
  ASSERT_TRUE(std::holds_alternative<Predict>(p.body));
  EXPECT_EQ(std::get<Predict>(p.body).generators.size(), 2u);
  EXPECT_EQ(std::get<Predict>(p.body).variant, TheoryVariant::SpekkensToy);
  EXPECT_EQ(p.format, OutputFormat::Json);

  const Command c = parse_command({"consistency", "--cz", "tilde", "--format", "json"});
  EXPECT_EQ(std::get<Consistency>(c.body).cz, CzChoice::Tilde);
  EXPECT_EQ(c.format, OutputFormat::Json);

  const Command b = parse_command({"bench", "-n", "32", "-k", "8", "-r", "3"});
  EXPECT_EQ(std::get<Bench>(b.body).n, 32u);
  EXPECT_EQ(std::get<Bench>(b.body).k, 8u);
  EXPECT_EQ(std::get<Bench>(b.body).reps, 3u);

  EXPECT_TRUE(std::holds_alternative<Help>(parse_command({"--help"}).body));
}

TEST(CliParse, UsageErrors) {
  FormatEnv env(nullptr);
  EXPECT_THROW(parse_command({}), UsageError);
  EXPECT_THROW(parse_command({"foo"}), UsageError);
  EXPECT_THROW(parse_command({"pm", "--theory", "classical"}), UsageError);
  EXPECT_THROW(parse_command({"--json", "--format", "text", "pm"}), UsageError);
  EXPECT_THROW(parse_command({"bench", "-n", "4", "-k", "5"}), UsageError);
  EXPECT_THROW(parse_command({"reduce", "<XX>", "<XXX>"}), DimensionMismatch);
  EXPECT_THROW(parse_command({"measure", "<XI>"}), UsageError);
  EXPECT_NO_THROW(parse_command({"measure", "--state", "<ZI>", "<ZI>"}));
}

TEST(CliParse, FormatFromEnvironment) {
  {
    FormatEnv env("json");
    EXPECT_EQ(parse_command({"pm"}).format, OutputFormat::Json);
    EXPECT_EQ(parse_command({"--format", "text", "pm"}).format, OutputFormat::Text);
    EXPECT_EQ(parse_command({"--json", "pm"}).format, OutputFormat::Json);
  }
  {
    FormatEnv env("yaml");
    EXPECT_THROW(parse_command({"pm"}), UsageError);
  }
}

TEST(CliRun, Eval) {
  FormatEnv env(nullptr);
  const auto t = cli({"eval", "p -> q"});
  EXPECT_EQ(t.exit_code, 0);
  EXPECT_NE(t.out.find("?"), std::string::npos);
  const auto j = cli({"--json", "eval", "p -> q"});
  EXPECT_EQ(j.exit_code, 0);
  EXPECT_NO_THROW((void)Json::parse(j.out));
  const auto e = cli({"eval", "p & (q"});
  EXPECT_EQ(e.exit_code, 1);
  EXPECT_TRUE(e.out.empty());
  EXPECT_NE(e.err.find("position"), std::string::npos);
}

TEST(CliRun, Laws) {
  FormatEnv env(nullptr);
  const auto t = cli({"laws"});
  EXPECT_EQ(t.exit_code, 0);
  EXPECT_NE(t.out.find("E9"), std::string::npos);
  const auto j = Json::parse(cli({"--json", "laws"}).out).at("laws");
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j.size(), 21u);
  std::size_t failing = 0;
  for (const auto &law : j) {
    failing += law.at("holds").get<bool>() ? 0 : 1;
  }
  EXPECT_EQ(failing, 3u);
}

TEST(CliRun, ReduceTrace) {
  FormatEnv env(nullptr);
  const auto t = cli({"reduce", "--trace", "<XYZIZY>"});
  EXPECT_EQ(t.exit_code, 0);
  for (const char *s : {"<XXZIZX>", "<XZZIZZ>", "<XIIIII>"}) {
    EXPECT_NE(t.out.find(s), std::string::npos) << s;
  }
  const auto j = Json::parse(cli({"--json", "reduce", "<XI,XX>"}).out);
  EXPECT_EQ(j.at("reduced")[1].at("letters"), "IX");
}

TEST(CliRun, PredictClosureApply) {
  FormatEnv env(nullptr);
  EXPECT_EQ(cli({"predict", "<XZ,ZX>", "<YY>"}).out, "1\n");
  EXPECT_EQ(cli({"predict", "<XX,ZZ>", "<YY>"}).out, "0\n");
  EXPECT_EQ(cli({"predict", "<XX,ZZ>", "<YY>", "--theory", "toy"}).out, "1\n");
  EXPECT_EQ(cli({"predict", "<ZZ>", "<ZI>"}).out, "?\n");
  EXPECT_EQ(cli({"closure", "<XZ,ZX>"}).out, "<II>\n<XZ>\n<YY>\n<ZX>\n");
  EXPECT_EQ(cli({"apply", "<XX>", "CZ@(1,2)"}).out, "<YY>\n");
  EXPECT_EQ(cli({"apply", "<XX>", "CZ@(1,2)", "--cz", "tilde"}).out, "<-YY>\n");
  const auto bad = cli({"apply", "<XX>", "CZ@(1,3)"});
  EXPECT_EQ(bad.exit_code, 1);
  const auto j = Json::parse(cli({"--json", "predict", "<XZ,ZX>", "<YY>", "<XI>"}).out);
  EXPECT_EQ(j.at("predictions")[0].at("value"), "1");
  EXPECT_EQ(j.at("predictions")[1].at("value"), "?");
}

TEST(CliRun, MeasureIsDeterministicPerSeed) {
  FormatEnv env(nullptr);
  const std::vector<std::string> args = {"measure", "<XII>", "<ZZI>", "<IIY>", "<ZII>", "--seed", "7"};
  const auto a = cli(args);
  const auto b = cli(args);
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto j = Json::parse(cli({"--json", "measure", "<XI>", "<XI>", "--seed", "3"}).out);
  EXPECT_FALSE(j.at("records")[0].at("predicted").get<bool>());
  EXPECT_TRUE(j.at("records")[1].at("predicted").get<bool>());
  EXPECT_EQ(j.at("records")[0].at("outcome"), j.at("records")[1].at("outcome"));
  const auto missing = cli({"measure", "<XI>"});
  EXPECT_EQ(missing.exit_code, 1);
  EXPECT_NE(missing.err.find("--seed"), std::string::npos);
}

TEST(CliRun, PmBothTheories) {
  FormatEnv env(nullptr);
  const auto q = Json::parse(cli({"--json", "pm"}).out);
  EXPECT_EQ(q.at("parity_xor"), 1);
  EXPECT_FALSE(q.at("satisfiable").get<bool>());
  EXPECT_TRUE(q.at("assignment").is_null());
  const auto t = Json::parse(cli({"--json", "pm", "--theory", "toy"}).out);
  EXPECT_EQ(t.at("parity_xor"), 0);
  EXPECT_TRUE(t.at("satisfiable").get<bool>());
  EXPECT_NE(cli({"pm"}).out.find("satisfiable: no"), std::string::npos);
}

TEST(CliRun, ConsistencyExitCodes) {
  FormatEnv env(nullptr);
  const auto ok = cli({"consistency"});
  EXPECT_EQ(ok.exit_code, 0);
  EXPECT_TRUE(ok.err.empty());
  const auto bad = cli({"consistency", "--cz", "tilde"});
  EXPECT_EQ(bad.exit_code, 2);
  EXPECT_NE(bad.err.find("<YIY>"), std::string::npos);
  EXPECT_NE(bad.err.find("<-YIY>"), std::string::npos);
  const auto j = cli({"--json", "consistency", "--cz", "tilde"});
  EXPECT_EQ(j.exit_code, 2);
  EXPECT_TRUE(Json::parse(j.out).at("contradiction_found").get<bool>());
}

TEST(CliRun, Bench) {
  FormatEnv env(nullptr);
  const auto j = Json::parse(cli({"--json", "bench", "-n", "16", "-k", "4", "-r", "2"}).out);
  EXPECT_EQ(j.at("n"), 16);
  EXPECT_EQ(j.at("closure_size"), 16);
  EXPECT_EQ(cli({"bench", "-n", "0"}).exit_code, 1);
}

TEST(CliRun, JsonOutputsRoundTrip) {
  FormatEnv env(nullptr);
  const std::vector<std::vector<std::string>> commands = {
      {"--json", "eval", "p & q", "q"},     {"--json", "laws", "--tables"},
      {"--json", "reduce", "<XYZIZY>"},     {"--json", "closure", "<-YYI,-IYY>"},
      {"--json", "apply", "<XI,IX>", "H@1; CZ@(1,2)"},
      {"--json", "pm", "--theory", "toy"},  {"--json", "consistency"},
      {"--json", "measure", "--state", "<ZZ>", "<XX>", "--seed", "1"},
  };
  for (const auto &args : commands) {
    const auto r = cli(args);
    ASSERT_EQ(r.exit_code, 0) << args[1] << ": " << r.err;
    EXPECT_EQ(Json::parse(r.out).dump(2) + "\n", r.out) << args[1];
  }
}

TEST(CliRun, ErrorsNeverExitZero) {
  FormatEnv env(nullptr);
  const std::vector<std::vector<std::string>> bad = {
      {"reduce", "<XQ>"},         {"reduce", "<II>"},          {"reduce", "<XX,-XX>"},
      {"predict", "<XI,ZI>", "<ZZ>"}, {"predict", "<ZI,-ZI>", "<ZZ>"}, {"closure", "<XX"},
      {"apply", "<X>", "S@2"},    {"apply", "<X>", "Q@1"},     {"measure", "<II>", "--seed", "1"},
      {"eval", "p ->"},           {"nope"},                    {"pm", "extra"},
  };
  for (const auto &args : bad) {
    const auto r = cli(args);
    EXPECT_NE(r.exit_code, 0) << args[0] << " " << args[1];
    EXPECT_FALSE(r.err.empty()) << args[0] << " " << args[1];
  }
}

}  // namespace
