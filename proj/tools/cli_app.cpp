#include "cli_app.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "syllogos/conditional_engine.hpp"
#include "syllogos/json_io.hpp"
#include "syllogos/numeric_engine.hpp"
#include "syllogos/parser.hpp"
#include "syllogos/set_engine.hpp"
#include "syllogos/transforms.hpp"

namespace syllogos::cli {

namespace {

struct RunConfig {
  std::string file;
  std::string engine = "set";
  std::string import = "none";
  std::string import_scope = "subjects";
  int max_universe = 6;
  std::int64_t max_total = 40;
  std::string epsilon = "1/10";
  std::string quantifiers;
  std::vector<std::string> cards;
  std::string alpha = "0.25,0.5,0.75,1";
  bool json = false;
};

void add_common(CLI::App& cmd, RunConfig& cfg, bool with_file) {
  if (with_file) cmd.add_option("file", cfg.file, "Statement or syllogism file")->required();
  cmd.add_option("--engine", cfg.engine, "set|interval|fuzzy|exceptive|conditional")
      ->check(CLI::IsMember({"set", "interval", "fuzzy", "exceptive", "conditional"}));
  cmd.add_option("--import", cfg.import, "Existential import: none|universal|explicit")
      ->check(CLI::IsMember({"none", "universal", "explicit"}));
  cmd.add_option("--import-scope", cfg.import_scope, "Explicit import scope: subjects|all")
      ->check(CLI::IsMember({"subjects", "all"}));
  cmd.add_option("--max-universe", cfg.max_universe, "Largest universe the set engine enumerates")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--max-total", cfg.max_total, "Largest region total for the interval search")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--epsilon", cfg.epsilon, "Band width for most/few in the conditional engine (p/q)");
  cmd.add_option("--quantifiers", cfg.quantifiers, "Named-quantifier JSON file");
  cmd.add_option("--card", cfg.cards, "Assumed cardinality TERM=N (exceptive engine)");
  cmd.add_option("--alpha", cfg.alpha, "Comma-separated alpha levels (fuzzy engine)");
  cmd.add_flag("--json", cfg.json, "Emit JSON");
}

NamedQuantifiers load_names(const RunConfig& cfg) {
  std::string path = cfg.quantifiers;
  if (path.empty())
    if (const char* env = std::getenv("SYLLOGOS_QUANTIFIERS")) path = env;
  if (path.empty()) return {};
  return NamedQuantifiers::from_file(path);
}

ValidityOptions validity_options(const RunConfig& cfg) {
  ValidityOptions opts;
  opts.policy = cfg.import == "universal" ? ImportPolicy::UniversalImport
                : cfg.import == "explicit" ? ImportPolicy::ExplicitPremise
                                           : ImportPolicy::NoImport;
  opts.scope = cfg.import_scope == "all" ? ImportScope::AllTerms : ImportScope::SubjectsOnly;
  opts.max_universe = cfg.max_universe;
  return opts;
}

std::string describe(const FiniteModel& m) {
  std::ostringstream os;
  os << "universe {";
  for (std::size_t i = 0; i < m.universe_size(); ++i) os << (i ? "," : "") << i;
  os << "}";
  for (const auto& [term, atoms] : m.extensions()) {
    os << "\n  " << (term.is_singleton() ? "{" + term.display() + "}" : term.display()) << " = {";
    for (std::size_t i = 0; i < atoms.size(); ++i) os << (i ? "," : "") << atoms[i];
    os << "}";
  }
  return os.str();
}

std::string describe(const Verdict& v) {
  if (auto* x = std::get_if<verdict::Valid>(&v)) return "valid (bound " + std::to_string(x->bound) + ")";
  if (auto* x = std::get_if<verdict::Undetermined>(&v))
    return "undetermined (bound " + std::to_string(x->bound) +
           "; some model satisfies the premises but leaves the conclusion undefined)";
  const auto& c = std::get<verdict::CounterModel>(v);
  return "countermodel (|U| = " + std::to_string(c.model.universe_size()) + ")\n  " + describe(c.model);
}

int verdict_code(const Verdict& v) {
  if (std::holds_alternative<verdict::Valid>(v)) return kOk;
  if (std::holds_alternative<verdict::CounterModel>(v)) return kCounter;
  return kError;
}

// ---------------------------------------------------------------- parse

int cmd_parse(const RunConfig& cfg, std::ostream& out) {
  auto names = load_names(cfg);
  auto list = parse_statement_list(read_text_file(cfg.file), names);
  if (cfg.json) {
    Json premises = Json::array();
    for (const auto& p : list.premises) premises.push_back(to_json(p));
    Json j{{"premises", premises}, {"conclusion", list.conclusion ? to_json(*list.conclusion) : Json(nullptr)}};
    if (list.conclusion) {
      Syllogism syl(list.premises, *list.conclusion);
      if (auto f = syl.figure()) j["figure"] = std::string(to_string(*f));
      if (auto m = syl.mood()) j["mood"] = *m;
    }
    out << j.dump(2) << "\n";
    return kOk;
  }
  for (const auto& p : list.premises) out << render(p) << "\n";
  if (list.conclusion) {
    out << "---\n" << render(*list.conclusion) << "\n";
    Syllogism syl(list.premises, *list.conclusion);
    if (auto f = syl.figure()) {
      out << "figure " << to_string(*f);
      if (auto m = syl.mood()) out << ", mood " << *m;
      out << "\n";
    }
  }
  return kOk;
}

// ---------------------------------------------------------------- check

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  if (cfg.engine != "set")
    throw Unsupported("check: engine '" + cfg.engine + "' does not decide validity; use --engine set");
  auto syl = parse_syllogism_file(read_text_file(cfg.file), load_names(cfg));
  Verdict v = check_validity(syl, validity_options(cfg));
  if (cfg.json)
    out << to_json(v).dump(2) << "\n";
  else
    out << describe(v) << "\n";
  return verdict_code(v);
}

// ---------------------------------------------------------------- conclude

quant::Interval as_interval(const Statement& s) {
  const auto& q = s.quantifier();
  if (std::holds_alternative<quant::All>(q)) return {1, 1, {}};
  if (std::holds_alternative<quant::No>(q)) return {0, 0, {}};
  if (auto* x = std::get_if<quant::Interval>(&q)) return *x;
  if (auto* x = std::get_if<quant::Trapezoid>(&q)) return {x->a, x->b, {}};
  throw Unsupported("interval engine: '" + render(s) +
                    "' has no interval reading (use [lo,hi] or a named quantifier from --quantifiers)");
}

quant::Trapezoid as_trapezoid(const Statement& s) {
  const auto& q = s.quantifier();
  if (std::holds_alternative<quant::All>(q)) return {1, 1, 1, 1, "all"};
  if (auto* x = std::get_if<quant::Trapezoid>(&q)) return *x;
  if (auto* x = std::get_if<quant::Interval>(&q)) return {x->lo, x->lo, x->hi, x->hi, x->label};
  throw Unsupported("fuzzy engine: '" + render(s) +
                    "' has no fuzzy reading (define it with --quantifiers)");
}

std::string interval_text(const Rational& lo, const Rational& hi) {
  return "[" + to_string(lo) + "," + to_string(hi) + "]";
}

int conclude_interval(const RunConfig& cfg, const StatementList& list, std::ostream& out) {
  std::vector<ProportionConstraint> premises;
  for (const auto& p : list.premises) {
    if (p.form() != StatementForm::Categorical)
      throw Unsupported("interval engine: '" + render(p) + "' is not categorical");
    premises.push_back({{Literal{p.predicate(), p.predicate_negated()}}, p.subject(), as_interval(p)});
  }
  const Term base = premises.front().denominator;
  ProportionGoal goal{{}, base};
  std::string conj;
  for (const auto& p : premises) {
    if (p.denominator != base)
      throw Unsupported("interval engine: premises must share one subject term");
    const Literal& lit = p.numerator.front();
    if (std::find(goal.numerator.begin(), goal.numerator.end(), lit) != goal.numerator.end()) continue;
    goal.numerator.push_back(lit);
    conj += (conj.empty() ? "" : " and ") + std::string(lit.negated ? "not " : "") + lit.term.display();
  }

  IntervalOptions opts;
  opts.max_total = cfg.max_total;
  IntervalConclusion result = interval_conclude(premises, goal, opts);
  IntervalConclusion exhaustive = result.method == IntervalConclusion::Method::Exhaustive
                                      ? result
                                      : interval_conclude_exhaustive(premises, goal, cfg.max_total);
  if (result.method == IntervalConclusion::Method::Frechet) {
    result.witness_min = exhaustive.witness_min;
    result.witness_max = exhaustive.witness_max;
  }

  Statement conclusion(quant::Interval{result.lo, result.hi, {}}, base, Term(conj), false);
  if (cfg.json) {
    Json j = to_json(result);
    j["conclusion"] = to_json(conclusion);
    j["exhaustive"] = {{"lo", to_json(exhaustive.lo)}, {"hi", to_json(exhaustive.hi)}, {"max_total", cfg.max_total}};
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << render(conclusion) << "\n";
  out << "  method: " << (result.method == IntervalConclusion::Method::Frechet ? "Frechet closed form" : "exhaustive search")
      << "\n  exhaustive search (total <= " << cfg.max_total << "): " << interval_text(exhaustive.lo, exhaustive.hi)
      << "\n";
  if (list.conclusion)
    out << "  stated conclusion '" << render(*list.conclusion) << "' "
        << (render(*list.conclusion) == render(conclusion) ? "matches" : "differs") << "\n";
  return kOk;
}

std::vector<Rational> parse_alpha_levels(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) {
    auto r = parse_rational(part);
    if (!r) throw InvariantViolation("bad alpha level '" + part + "'");
    out.push_back(*r);
  }
  return out;
}

int conclude_fuzzy(const RunConfig& cfg, const StatementList& list, std::ostream& out) {
  if (list.premises.size() != 2) throw Unsupported("fuzzy engine: exactly two premises expected");
  auto slots = match_intersection_product(list.premises[0], list.premises[1]);
  if (!slots)
    throw Unsupported("fuzzy engine: premises do not match 'Q1 A are B; Q2 B A are C'");
  std::vector<quant::Trapezoid> quantifiers{as_trapezoid(list.premises[0]), as_trapezoid(list.premises[1])};
  auto alphas = parse_alpha_levels(cfg.alpha);
  auto result = fuzzy_conclude_qep(quantifiers, FuzzySchema::IntersectionProduct, alphas);

  auto label = [](const quant::Trapezoid& t) { return t.label.empty() ? render(Quantifier{t}) : t.label; };
  std::string text = label(quantifiers[0]) + " (x) " + label(quantifiers[1]) + " " + slots->subject.display() +
                     " are " + slots->first.display() + " and " + slots->second.display();
  text[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (cfg.json) {
    Json j = to_json(result);
    j["text"] = text;
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << text << "\n";
  for (const auto& cut : result.cuts)
    out << "  alpha " << to_string(cut.alpha) << ": " << interval_text(cut.lo, cut.hi) << "\n";
  out << "  approximation " << render(Quantifier{result.approximate_trapezoid()}) << "\n";
  return kOk;
}

std::optional<Cardinality> parse_card(const RunConfig& cfg, const StatementList& list) {
  for (const auto& spec : cfg.cards) {
    auto eq = spec.rfind('=');
    if (eq == std::string::npos) throw InvariantViolation("--card expects TERM=N, got '" + spec + "'");
    auto n = parse_rational(spec.substr(eq + 1));
    if (!n || n->denominator() != 1 || *n < 0)
      throw InvariantViolation("--card size must be a non-negative integer, got '" + spec + "'");
    Term t(spec.substr(0, eq));
    for (const auto& p : list.premises)
      if (p.subject() == t || p.predicate() == t) return Cardinality{t, n->numerator()};
  }
  return std::nullopt;
}

int conclude_exceptive(const RunConfig& cfg, const StatementList& list, std::ostream& out) {
  if (list.premises.size() != 2) throw Unsupported("exceptive engine: exactly two premises expected");
  auto card = parse_card(cfg, list);
  auto literal = exceptive_conclude(list.premises[0], list.premises[1], card, ExceptiveMode::Literal);
  auto sound = exceptive_conclude(list.premises[0], list.premises[1], card, ExceptiveMode::SoundBound);
  bool diverge = literal.lo < sound.lo || literal.hi > sound.hi;
  if (cfg.json) {
    out << Json{{"literal", to_json(literal)}, {"sound", to_json(sound)}, {"diverge", diverge}}.dump(2) << "\n";
    return kOk;
  }
  out << "literal: " << literal.render() << "\n";
  out << "sound:   " << sound.render() << "\n";
  if (diverge)
    out << "note: the literal exception " << literal.lo << " lies outside the sound range ["
        << sound.lo << "," << sound.hi << "]\n";
  return kOk;
}

int conclude_conditional(const RunConfig& cfg, const StatementList& list, std::ostream& out) {
  if (list.premises.size() != 2) throw Unsupported("conditional engine: exactly two premises expected");
  auto eps = parse_rational(cfg.epsilon);
  if (!eps) throw InvariantViolation("bad --epsilon '" + cfg.epsilon + "'");
  ProbQuantifierConfig prob(*eps);
  auto result = heuristic_conclude(list.premises[0], list.premises[1]);
  if (cfg.json) {
    Json j = to_json(result);
    Json readings = Json::array();
    for (const auto& p : list.premises) readings.push_back(to_json(prob_interpret(p, prob)));
    j["readings"] = readings;
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << render(result.conclusion) << "\n";
  for (const auto& line : result.trace) out << "  " << line << "\n";
  for (const auto& p : list.premises) out << "  reading: " << render(p) << "  ::  " << prob_interpret(p, prob).render() << "\n";
  return kOk;
}

int cmd_conclude(const RunConfig& cfg, std::ostream& out) {
  auto list = parse_statement_list(read_text_file(cfg.file), load_names(cfg));
  if (cfg.engine == "interval") return conclude_interval(cfg, list, out);
  if (cfg.engine == "fuzzy") return conclude_fuzzy(cfg, list, out);
  if (cfg.engine == "exceptive") return conclude_exceptive(cfg, list, out);
  if (cfg.engine == "conditional") return conclude_conditional(cfg, list, out);
  throw Unsupported("conclude: engine 'set' checks validity only; use --engine interval|fuzzy|exceptive|conditional");
}

// ---------------------------------------------------------------- compare

int cmd_compare(const RunConfig& cfg, std::ostream& out) {
  auto syl = parse_syllogism_file(read_text_file(cfg.file), load_names(cfg));

  Json set_col, cond_col;
  std::string set_text, cond_text;
  std::optional<Verdict> verdict;
  try {
    verdict = check_validity(syl, validity_options(cfg));
    set_col = to_json(*verdict);
    set_text = describe(*verdict);
  } catch (const Error& e) {
    set_col = {{"error", e.what()}};
    set_text = std::string("error: ") + e.what();
  }

  std::optional<Statement> derived;
  try {
    if (syl.premises().size() != 2) throw Unsupported("conditional engine: exactly two premises expected");
    auto h = heuristic_conclude(syl.premises()[0], syl.premises()[1]);
    derived = h.conclusion;
    cond_col = to_json(h);
    cond_text = render(h.conclusion);
  } catch (const Error& e) {
    cond_col = {{"error", e.what()}};
    cond_text = std::string("rejected: ") + e.what();
  }

  bool set_valid = verdict && is_valid(*verdict);
  bool matches = derived && *derived == syl.conclusion();
  std::string summary;
  if (set_valid && matches)
    summary = "agree: the conclusion is valid and the heuristics derive it";
  else if (!set_valid && !matches && derived)
    summary = "diverge: the conclusion is not valid; the heuristics derive '" + render(*derived) + "' instead";
  else if (!set_valid && !derived)
    summary = "agree: neither interpretation supports the conclusion";
  else if (set_valid && !derived)
    summary = "diverge: the conclusion is valid but the conditional engine rejects the premises";
  else if (set_valid)
    summary = "diverge: the conclusion is valid; the heuristics derive '" + render(*derived) + "' instead";
  else
    summary = "diverge: the heuristics derive the conclusion but it is not valid";
  const bool agree = summary.rfind("agree", 0) == 0;

  if (cfg.json) {
    out << Json{{"set", set_col}, {"conditional", cond_col}, {"agree", agree}, {"summary", summary}}.dump(2)
        << "\n";
    return kOk;
  }
  out << "conclusion:  " << render(syl.conclusion()) << "\n";
  out << "set:         " << set_text << "\n";
  out << "conditional: " << cond_text << "\n";
  out << summary << "\n";
  return kOk;
}

// ---------------------------------------------------------------- enumerate

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  auto entries = enumerate_classical_moods(validity_options(cfg));
  std::size_t valid = count_valid(entries);
  if (cfg.json) {
    Json list = Json::array();
    for (const auto& e : entries)
      list.push_back({{"figure", std::string(to_string(e.figure))}, {"mood", e.mood}, {"verdict", to_json(e.verdict)}});
    out << Json{{"entries", list}, {"valid_count", valid}, {"total", entries.size()}}.dump(2) << "\n";
    return kOk;
  }
  for (const auto& e : entries) {
    std::string status = is_valid(e.verdict) ? "valid"
                         : std::holds_alternative<verdict::CounterModel>(e.verdict) ? "invalid"
                                                                                     : "undetermined";
    out << to_string(e.figure) << "\t" << e.mood << "\t" << status << "\n";
  }
  out << "valid: " << valid << " of " << entries.size() << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"syllogos: set-based and conditional readings of quantified syllogisms"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* parse = app.add_subcommand("parse", "Parse a statement file and print its canonical form");
  auto* check = app.add_subcommand("check", "Check validity by finite-model enumeration");
  auto* conclude = app.add_subcommand("conclude", "Derive a conclusion from premises");
  auto* compare = app.add_subcommand("compare", "Run the set and conditional engines side by side");
  auto* enumerate = app.add_subcommand("enumerate", "Classify all 256 classical moods");
  for (auto* cmd : {parse, check, conclude, compare}) add_common(*cmd, cfg, true);
  add_common(*enumerate, cfg, false);

  try {
    std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rest.begin(), rest.end());
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  try {
    if (parse->parsed()) return cmd_parse(cfg, out);
    if (check->parsed()) return cmd_check(cfg, out);
    if (conclude->parsed()) return cmd_conclude(cfg, out);
    if (compare->parsed()) return cmd_compare(cfg, out);
    if (enumerate->parsed()) return cmd_enumerate(cfg, out);
  } catch (const ParseError& e) {
    err << cfg.file << ": parse error " << e.what() << "\n";
    return kError;
  } catch (const Error& e) {
    err << "error (" << cfg.engine << " engine): " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace syllogos::cli
