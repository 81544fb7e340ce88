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

#pragma once

// Command-line front end. parse_command turns argv into a Command, run executes
// it and returns the exit status with the rendered stdout and stderr text, so
// everything here can be driven from tests without a process.
//
// Exit status: 0 success, 1 usage or input error, 2 logical contradiction.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "conjlogic/analysis.hpp"
#include "conjlogic/clifford.hpp"
#include "conjlogic/formula.hpp"
#include "conjlogic/formula_parser.hpp"
#include "conjlogic/knowledge.hpp"
#include "conjlogic/laws.hpp"
#include "conjlogic/pauli.hpp"
#include "conjlogic/reduction.hpp"
#include "conjlogic/serialization.hpp"

namespace conjlogic::cli {

enum class OutputFormat { Text, Json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitContradiction = 2;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Eval {
  std::vector<std::string> formulas;  // one: truth table; two: entailment checks
};
struct Laws {
  bool tables = false;
};
struct Reduce {
  std::vector<Proposition> props;
  TheoryVariant variant = TheoryVariant::Quantum;
  CzChoice cz = CzChoice::Standard;
  bool trace = false;
};
struct Predict {
  std::vector<Proposition> generators;
  std::vector<Proposition> queries;
  TheoryVariant variant = TheoryVariant::Quantum;
  CzChoice cz = CzChoice::Standard;
};
struct Closure {
  std::vector<Proposition> generators;
  TheoryVariant variant = TheoryVariant::Quantum;
  CzChoice cz = CzChoice::Standard;
};
struct Apply {
  std::vector<Proposition> props;
  Transcript transcript;
  TheoryVariant variant = TheoryVariant::Quantum;
  CzChoice cz = CzChoice::Standard;
};
struct Measure {
  std::size_t n = 0;
  std::vector<Proposition> generators;
  std::vector<Proposition> questions;
  std::optional<std::uint64_t> seed;
  TheoryVariant variant = TheoryVariant::Quantum;
  CzChoice cz = CzChoice::Standard;
};
struct Pm {
  TheoryVariant variant = TheoryVariant::Quantum;
};
struct Consistency {
  CzChoice cz = CzChoice::Standard;
};
struct Bench {
  std::size_t n = 64;
  std::size_t k = 16;
  std::size_t reps = 5;
  std::uint64_t seed = 1;
};
struct Help {
  std::string text;
};

using CommandBody = std::variant<Eval, Laws, Reduce, Predict, Closure, Apply, Measure, Pm, Consistency, Bench, Help>;

struct Command {
  CommandBody body;
  OutputFormat format = OutputFormat::Text;
};

struct RunResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

// ---------------------------------------------------------------------------
// DSL helpers
// ---------------------------------------------------------------------------

/// "<ZI,IX>" is two propositions; "<-YYI>" is one. Error positions index into text.
inline std::vector<Proposition> parse_conjunction(std::string_view text) {
  if (text.empty()) {
    throw PropParseError("empty proposition", 0, PropErrorKind::EmptyString);
  }
  if (text.front() != '<') {
    throw PropParseError("expected '<'", 0, PropErrorKind::MissingBracket);
  }
  if (text.back() != '>' || text.size() < 2) {
    throw PropParseError("expected '>'", text.size(), PropErrorKind::MissingBracket);
  }
  std::vector<Proposition> out;
  std::size_t start = 1;
  const std::size_t end = text.size() - 1;
  while (true) {
    const std::size_t comma = std::min(text.find(',', start), end);
    const std::string_view body = text.substr(start, comma - start);
    if (const auto gt = body.find('>'); gt != std::string_view::npos) {
      throw PropParseError("unexpected '>'", start + gt, PropErrorKind::MissingBracket);
    }
    Proposition p = detail::parse_prop_body(body, start);
    if (!out.empty() && p.size() != out.front().size()) {
      throw PropParseError("expected " + std::to_string(out.front().size()) + " letters, got " +
                               std::to_string(p.size()),
                           start, PropErrorKind::LengthMismatch);
    }
    out.push_back(std::move(p));
    if (comma == end) {
      return out;
    }
    start = comma + 1;
  }
}

namespace detail {

/// Parses several conjunction arguments into one list, naming the argument in
/// error messages.
inline std::vector<Proposition> parse_prop_args(const std::vector<std::string> &args, std::string_view role) {
  std::vector<Proposition> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::vector<Proposition> ps;
    try {
      ps = parse_conjunction(args[i]);
    } catch (const PropParseError &e) {
      throw PropParseError(std::string(role) + " '" + args[i] + "': " + std::string(e.what()).substr(0,
                               std::string(e.what()).rfind(" at position")),
                           e.position(), e.kind());
    }
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

inline void require_common_size(const std::vector<const std::vector<Proposition> *> &lists) {
  std::optional<std::size_t> n;
  for (const auto *list : lists) {
    for (const auto &p : *list) {
      if (!n) {
        n = p.size();
      } else if (p.size() != *n) {
        throw DimensionMismatch(*n, p.size());
      }
    }
  }
}

inline std::string join(const std::vector<Proposition> &ps, std::string_view sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i > 0) {
      out += sep;
    }
    out += format_prop(ps[i]);
  }
  return out;
}

inline std::string dump(const Json &j) { return j.dump(2) + "\n"; }

}  // namespace detail

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

inline Command parse_command(const std::vector<std::string> &argv) {
  CLI::App app{"Conjugate logic: three-valued kernel and Pauli-string propositions", "conjlogic"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format_text;
  bool json_flag = false;
  auto *format_opt = app.add_option("--format", format_text, "Output format: text or json (default: $CONJLOGIC_FORMAT)")
                         ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--json", json_flag, "Same as --format json")->excludes(format_opt);

  std::string theory = "quantum";
  std::string cz = "standard";
  std::uint64_t seed = 0;
  auto add_theory = [&](CLI::App *sub) {
    sub->add_option("--theory", theory, "quantum or toy")->check(CLI::IsMember({"quantum", "toy"}));
  };
  auto add_cz = [&](CLI::App *sub) {
    sub->add_option("--cz", cz, "standard or tilde")->check(CLI::IsMember({"standard", "tilde"}));
  };

  std::vector<std::string> eval_args;
  auto *eval = app.add_subcommand("eval", "Truth table of a formula, or entailment between two");
  eval->add_option("formula", eval_args, "Formula(s), e.g. \"p -> q\"")->required()->expected(1, 2);

  bool tables = false;
  auto *laws = app.add_subcommand("laws", "Check the equivalence and implication laws");
  laws->add_flag("--tables", tables, "Print every law's truth table");

  std::vector<std::string> reduce_args;
  bool trace = false;
  auto *reduce = app.add_subcommand("reduce", "Clifford reduction of one proposition, a pair or a set");
  reduce->add_option("props", reduce_args, "Propositions, e.g. \"<XYZIZY>\" or \"<ZI,IX>\"")->required();
  reduce->add_flag("--trace", trace, "Print the strings after every step");
  add_theory(reduce);
  add_cz(reduce);

  std::string predict_gens;
  std::vector<std::string> predict_queries;
  auto *predict = app.add_subcommand("predict", "Truth value a conjunction predicts for a query");
  predict->add_option("generators", predict_gens, "Conjunction, e.g. \"<XZ,ZX>\"")->required();
  predict->add_option("query", predict_queries, "Query propositions")->required();
  add_theory(predict);
  add_cz(predict);

  std::string closure_gens;
  auto *closure = app.add_subcommand("closure", "Every prediction of a conjunction");
  closure->add_option("generators", closure_gens, "Conjunction")->required();
  add_theory(closure);
  add_cz(closure);

  std::string apply_prop;
  std::string apply_steps;
  auto *apply = app.add_subcommand("apply", "Apply a transcript such as \"S@2; H@1; CZ@(1,2)\"");
  apply->add_option("props", apply_prop, "Proposition or conjunction")->required();
  apply->add_option("transcript", apply_steps, "Semicolon-separated steps")->required();
  add_theory(apply);
  add_cz(apply);

  std::string measure_state;
  std::vector<std::string> measure_questions;
  auto *measure = app.add_subcommand("measure", "Measure a sequence of questions");
  measure->add_option("--state", measure_state, "Initial conjunction (default: no knowledge)");
  measure->add_option("questions", measure_questions, "Questions in order")->required();
  auto *seed_opt = measure->add_option("--seed", seed, "Seed for indeterminate outcomes");
  add_theory(measure);
  add_cz(measure);

  auto *pm = app.add_subcommand("pm", "Peres-Mermin square analysis");
  add_theory(pm);

  auto *consistency = app.add_subcommand("consistency", "Check the CZ choice for consistency");
  add_cz(consistency);

  Bench bench_args;
  auto *bench = app.add_subcommand("bench", "Time reduction and closure on random states");
  bench->add_option("-n,--systems", bench_args.n, "Number of systems")->check(CLI::PositiveNumber);
  bench->add_option("-k,--generators", bench_args.k, "Number of generators");
  bench->add_option("-r,--reps", bench_args.reps, "Repetitions")->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_args.seed, "Seed for the random states");

  if (!argv.empty() && !argv.front().starts_with('-') && app.get_subcommand_no_throw(argv.front()) == nullptr) {
    throw UsageError("unknown subcommand '" + argv.front() + "'");
  }
  std::vector<std::string> args(argv.rbegin(), argv.rend());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp &) {
    return Command{Help{app.help()}, OutputFormat::Text};
  } catch (const CLI::ParseError &e) {
    throw UsageError(e.what());
  }

  // The environment only supplies a default, so it cannot clash with --json.
  if (!json_flag && format_opt->count() == 0) {
    if (const char *env = std::getenv("CONJLOGIC_FORMAT"); env && *env) {
      format_text = env;
      if (format_text != "text" && format_text != "json") {
        throw UsageError("CONJLOGIC_FORMAT must be text or json, not '" + format_text + "'");
      }
    }
  }

  Command cmd;
  cmd.format = (json_flag || format_text == "json") ? OutputFormat::Json : OutputFormat::Text;
  const TheoryVariant v = theory_from_string(theory);
  const CzChoice c = cz_from_string(cz);

  if (eval->parsed()) {
    cmd.body = Eval{eval_args};
  } else if (laws->parsed()) {
    cmd.body = Laws{tables};
  } else if (reduce->parsed()) {
    Reduce r{detail::parse_prop_args(reduce_args, "proposition"), v, c, trace};
    detail::require_common_size({&r.props});
    cmd.body = std::move(r);
  } else if (predict->parsed()) {
    Predict p{detail::parse_prop_args({predict_gens}, "generators"),
              detail::parse_prop_args(predict_queries, "query"), v, c};
    detail::require_common_size({&p.generators, &p.queries});
    cmd.body = std::move(p);
  } else if (closure->parsed()) {
    Closure cl{detail::parse_prop_args({closure_gens}, "generators"), v, c};
    cmd.body = std::move(cl);
  } else if (apply->parsed()) {
    Apply a{detail::parse_prop_args({apply_prop}, "proposition"), parse_transcript(apply_steps), v, c};
    cmd.body = std::move(a);
  } else if (measure->parsed()) {
    Measure m;
    if (!measure_state.empty()) {
      m.generators = detail::parse_prop_args({measure_state}, "state");
    }
    m.questions = detail::parse_prop_args(measure_questions, "question");
    detail::require_common_size({&m.generators, &m.questions});
    m.n = m.questions.front().size();
    m.variant = v;
    m.cz = c;
    if (seed_opt->count() > 0) {
      m.seed = seed;
    } else {
      // Whether a question is indeterminate does not depend on earlier
      // outcomes, only on which questions were asked, so a dry run with any
      // coin decides whether a seed is needed.
      KnowledgeState s = KnowledgeState::from_generators(m.n, m.generators, v, c);
      OutcomeRng probe;
      for (const auto &q : m.questions) {
        auto [record, next] = s.measure(q, probe);
        if (!record.predicted) {
          throw UsageError("--seed is required: " + format_prop(q) + " is not determined by the state");
        }
        s = std::move(next);
      }
    }
    cmd.body = std::move(m);
  } else if (pm->parsed()) {
    cmd.body = Pm{v};
  } else if (consistency->parsed()) {
    cmd.body = Consistency{c};
  } else if (bench->parsed()) {
    if (bench_args.k > bench_args.n) {
      throw UsageError("bench needs k <= n");
    }
    cmd.body = bench_args;
  }
  return cmd;
}

// ---------------------------------------------------------------------------
// Bench
// ---------------------------------------------------------------------------

struct BenchReport {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t reps = 0;
  double reduce_median_ms = 0;
  double reduce_min_ms = 0;
  std::size_t transcript_gates = 0;
  double gate_applications_per_second = 0;
  std::optional<double> closure_median_ms;  // only timed for small k
  std::size_t closure_size = 0;
};

/// Largest generator count whose closure bench times.
inline constexpr std::size_t kBenchClosureMaxK = 12;

/// Layers of random local gates and n random CZs used to spread the generators.
inline constexpr std::size_t kBenchScrambleRounds = 8;

/// k independent, pairwise compatible propositions on n systems: single X's with
/// random signs pushed through a random transcript.
template <class Rng>
std::vector<Proposition> random_state_generators(std::size_t n, std::size_t k, TheoryVariant v, Rng &rng) {
  std::vector<Proposition> gens;
  for (std::size_t i = 0; i < k; ++i) {
    Proposition p(n, (rng() & 1u) != 0);
    p.set_letter(i, PauliLetter::X);
    gens.push_back(std::move(p));
  }
  Transcript t;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  auto local_layer = [&] {
    for (std::size_t i = 0; i < n; ++i) {
      switch (rng() % 3) {
        case 0:
          t.push_back(Gate::single(GateKind::H, i));
          break;
        case 1:
          t.push_back(Gate::single(GateKind::S, i));
          break;
        default:
          break;
      }
    }
  };
  for (std::size_t round = 0; round < kBenchScrambleRounds; ++round) {
    local_layer();
    if (n > 1) {
      for (std::size_t m = 0; m < n; ++m) {
        const std::size_t a = pick(rng);
        std::size_t b = pick(rng);
        while (b == a) {
          b = pick(rng);
        }
        t.push_back(Gate::cz(a, b));
      }
    }
  }
  local_layer();
  for (auto &g : gens) {
    apply_transcript_in_place(g, t, v);
  }
  return gens;
}

inline BenchReport run_bench(std::size_t n, std::size_t k, std::size_t reps, std::uint64_t seed = 1,
                             TheoryVariant v = TheoryVariant::Quantum) {
  if (n == 0 || reps == 0) {
    throw UsageError("bench needs n >= 1 and reps >= 1");
  }
  if (k > n) {
    throw UsageError("bench needs k <= n");
  }
  using Clock = std::chrono::steady_clock;
  std::mt19937_64 rng(seed);
  BenchReport report{n, k, reps};
  std::vector<double> reduce_ms;
  std::vector<double> closure_ms;
  std::size_t gate_applications = 0;
  for (std::size_t r = 0; r < reps; ++r) {
    const auto gens = random_state_generators(n, k, v, rng);
    const auto t0 = Clock::now();
    const ReductionResult result = reduce_set(gens, v);
    const auto t1 = Clock::now();
    reduce_ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    report.transcript_gates = result.transcript.size();
    gate_applications += result.transcript.size() * k;
    if (k <= kBenchClosureMaxK) {
      const auto state = KnowledgeState::from_generators(n, gens, v);
      const auto t2 = Clock::now();
      report.closure_size = state.closure().size();
      const auto t3 = Clock::now();
      closure_ms.push_back(std::chrono::duration<double, std::milli>(t3 - t2).count());
    }
  }
  auto median = [](std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    const std::size_t m = xs.size() / 2;
    return xs.size() % 2 ? xs[m] : (xs[m - 1] + xs[m]) / 2;
  };
  report.reduce_median_ms = median(reduce_ms);
  report.reduce_min_ms = *std::min_element(reduce_ms.begin(), reduce_ms.end());
  double total_ms = 0;
  for (double ms : reduce_ms) {
    total_ms += ms;
  }
  report.gate_applications_per_second = total_ms > 0 ? gate_applications / (total_ms / 1000.0) : 0;
  if (!closure_ms.empty()) {
    report.closure_median_ms = median(closure_ms);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Execution
// ---------------------------------------------------------------------------

namespace detail {

inline RunResult run_eval(const Eval &e, OutputFormat fmt) {
  const ParsedFormulas parsed = parse_formulas(e.formulas);
  const int atoms = static_cast<int>(parsed.atom_names.size());
  if (parsed.formulas.size() == 1) {
    const Formula &f = parsed.formulas.front();
    TruthTable table;
    table.headers = parsed.atom_names;
    table.headers.push_back(to_string(f, parsed.atom_names));
    for_each_assignment(atoms, [&](const Assignment &a) {
      std::vector<TruthValue> row(a.begin(), a.end());
      row.push_back(evaluate(f, a));
      table.rows.push_back(std::move(row));
      return true;
    });
    if (fmt == OutputFormat::Json) {
      return {kExitOk, dump(truth_table_json(table)), ""};
    }
    return {kExitOk, render_truth_table(table), ""};
  }

  const Formula &f = parsed.formulas[0];
  const Formula &g = parsed.formulas[1];
  const CheckResult eq = logically_equivalent(f, g);
  const CheckResult fg = logically_implies(f, g);
  const CheckResult gf = logically_implies(g, f);
  auto witness = [&](const CheckResult &r) -> Json {
    if (!r.counterexample) {
      return nullptr;
    }
    Json j = Json::object();
    for (std::size_t i = 0; i < r.counterexample->size(); ++i) {
      j[parsed.atom_names.at(i)] = truth_text((*r.counterexample)[i]);
    }
    return j;
  };
  if (fmt == OutputFormat::Json) {
    Json j{{"lhs", to_string(f, parsed.atom_names)},
           {"rhs", to_string(g, parsed.atom_names)},
           {"equivalent", eq.holds},
           {"equivalence_counterexample", witness(eq)},
           {"lhs_implies_rhs", fg.holds},
           {"lhs_implies_rhs_counterexample", witness(fg)},
           {"rhs_implies_lhs", gf.holds},
           {"rhs_implies_lhs_counterexample", witness(gf)}};
    return {kExitOk, dump(j), ""};
  }
  auto line = [&](const std::string &label, const CheckResult &r) {
    std::string s = label + ": " + (r.holds ? "holds" : "fails");
    if (r.counterexample) {
      s += " (";
      for (std::size_t i = 0; i < r.counterexample->size(); ++i) {
        s += (i ? ", " : "") + parsed.atom_names.at(i) + "=" + truth_text((*r.counterexample)[i]);
      }
      s += ")";
    }
    return s + "\n";
  };
  return {kExitOk, line("equivalent", eq) + line("lhs => rhs", fg) + line("rhs => lhs", gf), ""};
}

inline RunResult run_laws(const Laws &l, OutputFormat fmt) {
  const auto report = law_report();
  if (fmt == OutputFormat::Json) {
    Json j{{"laws", law_report_json(report.report)}};
    if (l.tables) {
      Json tables = Json::object();
      for (std::size_t i = 0; i < report.tables.size(); ++i) {
        tables[report.report.verdicts[i].law_id] = truth_table_json(report.tables[i]);
      }
      j["tables"] = tables;
    }
    return {kExitOk, dump(j), ""};
  }
  static const char *kNames[] = {"p", "q", "r", "s", "t", "u", "v", "w"};
  std::ostringstream out;
  for (std::size_t i = 0; i < report.report.verdicts.size(); ++i) {
    const auto &v = report.report.verdicts[i];
    out << v.law_id << std::string(4 - std::min<std::size_t>(v.law_id.size(), 3), ' ') << (v.holds ? "holds " : "FAILS ")
        << v.name << '\n';
    for (const auto &c : v.counterexamples) {
      out << "      at";
      for (std::size_t a = 0; a < c.atom_values.size(); ++a) {
        out << ' ' << kNames[a] << '=' << to_char(c.atom_values[a]);
      }
      out << ": " << to_char(c.lhs) << " vs " << to_char(c.rhs) << '\n';
    }
    if (l.tables) {
      out << '\n' << render_truth_table(report.tables[i]) << '\n';
    }
  }
  return {kExitOk, out.str(), ""};
}

inline RunResult run_reduce(const Reduce &r, OutputFormat fmt) {
  ReductionResult result;
  if (r.props.size() == 1) {
    result = reduce_single(r.props[0], r.variant, r.cz);
  } else if (r.props.size() == 2) {
    result = reduce_pair(r.props[0], r.props[1], r.variant, r.cz);
  } else {
    result = reduce_set(r.props, r.variant, r.cz);
  }
  if (fmt == OutputFormat::Json) {
    Json j = reduction_json(result);
    j["input"] = r.props;
    return {kExitOk, dump(j), ""};
  }
  std::ostringstream out;
  out << "input:      " << join(r.props) << '\n';
  out << "relation:   " << to_string(result.relation) << '\n';
  out << "transcript: " << format_transcript(result.transcript) << '\n';
  if (r.trace) {
    std::vector<Proposition> rows = r.props;
    for (const Gate &g : result.transcript) {
      for (auto &p : rows) {
        apply_gate_in_place(p, g, r.variant, r.cz);
      }
      out << "  " << format_gate(g) << std::string(12 - std::min<std::size_t>(format_gate(g).size(), 11), ' ')
          << join(rows) << '\n';
    }
  }
  out << "reduced:    " << join(result.reduced) << '\n';
  return {kExitOk, out.str(), ""};
}

inline RunResult run_predict(const Predict &p, OutputFormat fmt) {
  const std::size_t n = p.queries.front().size();
  const auto state = KnowledgeState::from_generators(n, p.generators, p.variant, p.cz);
  std::vector<TruthValue> values;
  for (const auto &q : p.queries) {
    values.push_back(state.predicts(q));
  }
  if (fmt == OutputFormat::Json) {
    Json preds = Json::array();
    for (std::size_t i = 0; i < values.size(); ++i) {
      preds.push_back(Json{{"query", format_prop(p.queries[i])}, {"value", truth_text(values[i])}});
    }
    return {kExitOk, dump(Json{{"state", state_json(state)}, {"predictions", preds}}), ""};
  }
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values.size() > 1) {
      out += format_prop(p.queries[i]) + " ";
    }
    out += truth_text(values[i]) + "\n";
  }
  return {kExitOk, out, ""};
}

inline RunResult run_closure(const Closure &c, OutputFormat fmt) {
  const std::size_t n = c.generators.front().size();
  const auto state = KnowledgeState::from_generators(n, c.generators, c.variant, c.cz);
  const auto props = state.closure();
  if (fmt == OutputFormat::Json) {
    return {kExitOk, dump(Json{{"state", state_json(state)}, {"closure", props}}), ""};
  }
  std::string out;
  for (const auto &p : props) {
    out += format_prop(p) + "\n";
  }
  return {kExitOk, out, ""};
}

inline RunResult run_apply(const Apply &a, OutputFormat fmt) {
  std::vector<Proposition> out_props;
  for (const auto &p : a.props) {
    out_props.push_back(apply_transcript(p, a.transcript, a.variant, a.cz));
  }
  if (fmt == OutputFormat::Json) {
    return {kExitOk, dump(Json{{"transcript", a.transcript}, {"input", a.props}, {"output", out_props}}), ""};
  }
  return {kExitOk, join(out_props) + "\n", ""};
}

inline RunResult run_measure(const Measure &m, OutputFormat fmt) {
  KnowledgeState state = KnowledgeState::from_generators(m.n, m.generators, m.variant, m.cz);
  OutcomeRng rng(m.seed.value_or(0));
  Json records = Json::array();
  std::ostringstream out;
  for (const auto &q : m.questions) {
    auto [record, next] = state.measure(q, rng);
    state = std::move(next);
    if (fmt == OutputFormat::Json) {
      records.push_back(Json{{"question", format_prop(record.measured)},
                             {"outcome", record.outcome ? 1 : 0},
                             {"predicted", record.predicted},
                             {"result", format_prop(record.resulting_prop)},
                             {"generators", state.generators()}});
    } else {
      out << format_prop(record.measured) << " -> " << (record.outcome ? 1 : 0)
          << (record.predicted ? " (predicted)" : " (random)") << "  state: " << join(state.generators()) << '\n';
    }
  }
  if (fmt == OutputFormat::Json) {
    Json seed = m.seed ? Json(*m.seed) : Json(nullptr);
    return {kExitOk, dump(Json{{"seed", seed}, {"records", records}, {"state", state_json(state)}}), ""};
  }
  return {kExitOk, out.str(), ""};
}

inline RunResult run_pm(const Pm &p, OutputFormat fmt) {
  const PmReport report = pm_square(p.variant);
  if (fmt == OutputFormat::Json) {
    return {kExitOk, dump(pm_json(report)), ""};
  }
  std::ostringstream out;
  out << "theory: " << to_string(report.variant) << "\n\n";
  for (std::size_t row = 0; row < 3; ++row) {
    out << "  ";
    for (std::size_t col = 0; col < 3; ++col) {
      out << format_prop(report.square[row * 3 + col]) << (col < 2 ? "  " : "\n");
    }
  }
  out << '\n';
  for (const auto &c : report.constraints) {
    out << (c.is_row ? "row    " : "column ") << report.square[c.cells[0]].letters() << ' '
        << report.square[c.cells[1]].letters() << " => " << format_prop(c.prediction) << "  parity " << c.parity
        << '\n';
  }
  out << "parity xor: " << report.parity_xor() << '\n';
  out << "satisfiable: " << (report.satisfiable ? "yes" : "no") << " (" << report.assignments_searched
      << " assignments searched)\n";
  if (report.assignment) {
    out << "witness:";
    for (std::size_t i = 0; i < 9; ++i) {
      out << ' ' << report.square[i].letters() << '=' << (*report.assignment)[i];
    }
    out << '\n';
  }
  return {kExitOk, out.str(), ""};
}

inline RunResult run_consistency(const Consistency &c, OutputFormat fmt) {
  const ConsistencyReport r = cz_consistency_check(c.cz);
  const int code = r.contradiction_found || r.state_poisoned ? kExitContradiction : kExitOk;
  std::string err;
  if (code != kExitOk) {
    err = "contradiction: derived both " + format_prop(r.derived[0]) + " and " + format_prop(r.derived[1]) + "\n";
  }
  if (fmt == OutputFormat::Json) {
    return {code, dump(consistency_json(r)), err};
  }
  std::ostringstream out;
  out << "cz:                 " << to_string(r.cz) << '\n';
  out << "premise:            " << join(r.premise) << '\n';
  out << "reduction:          " << format_transcript(r.reduction) << '\n';
  out << "reduced premise:    " << join(r.reduced_premise) << '\n';
  out << "route a derives:    " << format_prop(r.derived[0]) << '\n';
  out << "route b transcript: " << format_transcript(r.route_b) << '\n';
  out << "pulled-back premise:" << ' ' << join(r.pulled_back_premise) << '\n';
  out << "route b derives:    " << format_prop(r.derived[1]) << '\n';
  out << "contradiction:      " << (r.contradiction_found ? "yes" : "no") << '\n';
  return {code, out.str(), err};
}

inline RunResult run_bench_cmd(const Bench &b, OutputFormat fmt) {
  const BenchReport r = run_bench(b.n, b.k, b.reps, b.seed);
  if (fmt == OutputFormat::Json) {
    Json closure = r.closure_median_ms ? Json(*r.closure_median_ms) : Json(nullptr);
    return {kExitOk,
            dump(Json{{"n", r.n},
                      {"k", r.k},
                      {"reps", r.reps},
                      {"reduce_median_ms", r.reduce_median_ms},
                      {"reduce_min_ms", r.reduce_min_ms},
                      {"transcript_gates", r.transcript_gates},
                      {"gate_applications_per_second", r.gate_applications_per_second},
                      {"closure_median_ms", closure},
                      {"closure_size", r.closure_size}}),
            ""};
  }
  std::ostringstream out;
  out << "n=" << r.n << " k=" << r.k << " reps=" << r.reps << '\n';
  out << "reduce_set median " << r.reduce_median_ms << " ms, min " << r.reduce_min_ms << " ms, "
      << r.transcript_gates << " gates in transcript\n";
  out << "throughput " << r.gate_applications_per_second << " gate applications/s\n";
  if (r.closure_median_ms) {
    out << "closure median " << *r.closure_median_ms << " ms, " << r.closure_size << " propositions\n";
  } else {
    out << "closure skipped (k > " << kBenchClosureMaxK << ")\n";
  }
  return {kExitOk, out.str(), ""};
}

}  // namespace detail

inline RunResult run(const Command &cmd) {
  const OutputFormat fmt = cmd.format;
  try {
    return std::visit(
        [&](const auto &body) -> RunResult {
          using T = std::decay_t<decltype(body)>;
          if constexpr (std::is_same_v<T, Eval>) {
            return detail::run_eval(body, fmt);
          } else if constexpr (std::is_same_v<T, Laws>) {
            return detail::run_laws(body, fmt);
          } else if constexpr (std::is_same_v<T, Reduce>) {
            return detail::run_reduce(body, fmt);
          } else if constexpr (std::is_same_v<T, Predict>) {
            return detail::run_predict(body, fmt);
          } else if constexpr (std::is_same_v<T, Closure>) {
            return detail::run_closure(body, fmt);
          } else if constexpr (std::is_same_v<T, Apply>) {
            return detail::run_apply(body, fmt);
          } else if constexpr (std::is_same_v<T, Measure>) {
            return detail::run_measure(body, fmt);
          } else if constexpr (std::is_same_v<T, Pm>) {
            return detail::run_pm(body, fmt);
          } else if constexpr (std::is_same_v<T, Consistency>) {
            return detail::run_consistency(body, fmt);
          } else if constexpr (std::is_same_v<T, Bench>) {
            return detail::run_bench_cmd(body, fmt);
          } else {
            return {kExitOk, body.text, ""};
          }
        },
        cmd.body);
  } catch (const Contradiction &e) {
    return {kExitContradiction, "", std::string("contradiction: ") + e.what() + "\n"};
  } catch (const Error &e) {
    return {kExitUsage, "", std::string("error: ") + e.what() + "\n"};
  }
}

/// parse_command followed by run, with every failure mapped to an exit status.
/// argv excludes the program name.
inline RunResult run_cli(const std::vector<std::string> &argv) {
  Command cmd;
  try {
    cmd = parse_command(argv);
  } catch (const Contradiction &e) {
    return {kExitContradiction, "", std::string("contradiction: ") + e.what() + "\n"};
  } catch (const Error &e) {
    return {kExitUsage, "", std::string("error: ") + e.what() + "\n"};
  }
  return run(cmd);
}

}  // namespace conjlogic::cli
