// Randomized property suites. Every generator is seeded, so failures
// reproduce; each property runs at least kCases cases.

#include <doctest.h>

#include <algorithm>

#include "oracle.hpp"
#include "syllogos/conditional_engine.hpp"
#include "syllogos/numeric_engine.hpp"
#include "syllogos/parser.hpp"
#include "syllogos/set_engine.hpp"

using namespace syllogos;

namespace {

constexpr int kCases = 1000;

const std::vector<Term> kTerms{Term("S"), Term("M"), Term("P")};

Quantifier random_quantifier(std::mt19937_64& g, bool classical_only = false) {
  const int pick = static_cast<int>(oracle::uniform(g, 0, classical_only ? 3 : 12));
  switch (pick) {
    case 0: return quant::All{};
    case 1: return quant::No{};
    case 2: return quant::Some{};
    case 3: return quant::SomeNot{};
    case 4: return quant::Most{};
    case 5: return quant::Many{};
    case 6: return quant::Few{};
    case 7: return quant::AlmostAll{};
    case 8: return quant::AllBut{oracle::uniform(g, 0, 2)};
    case 9: return quant::Exactly{oracle::uniform(g, 0, 2)};
    case 10: return quant::AtLeast{oracle::uniform(g, 0, 2)};
    case 11: {
      auto a = oracle::uniform(g, 0, 4), b = oracle::uniform(g, 0, 4);
      return quant::Interval{Rational(std::min(a, b), 4), Rational(std::max(a, b), 4), {}};
    }
    default: {
      std::vector<std::int64_t> v{oracle::uniform(g, 0, 5), oracle::uniform(g, 0, 5), oracle::uniform(g, 0, 5),
                                  oracle::uniform(g, 0, 5)};
      std::sort(v.begin(), v.end());
      return quant::Trapezoid{Rational(v[0], 5), Rational(v[1], 5), Rational(v[2], 5), Rational(v[3], 5), {}};
    }
  }
}

Statement random_statement(std::mt19937_64& g, const Term& s, const Term& p, bool classical_only = false) {
  return Statement(random_quantifier(g, classical_only), s, p, !classical_only && oracle::uniform(g, 0, 3) == 0);
}

std::pair<Term, Term> random_pair(std::mt19937_64& g) {
  auto i = oracle::uniform(g, 0, 2), j = (i + oracle::uniform(g, 1, 2)) % 3;
  return {kTerms[i], kTerms[j]};
}

Syllogism random_syllogism(std::mt19937_64& g, bool classical_only = false) {
  std::vector<Statement> premises;
  const auto n = oracle::uniform(g, 1, 3);
  for (int i = 0; i < n; ++i) {
    auto [s, p] = random_pair(g);
    premises.push_back(random_statement(g, s, p, classical_only));
  }
  auto [s, p] = random_pair(g);
  return Syllogism(std::move(premises), random_statement(g, s, p, classical_only));
}

oracle::AtomModel to_atoms(const FiniteModel& m, const std::vector<Term>& terms) {
  oracle::AtomModel out{terms, std::vector<unsigned>(m.universe_size(), 0)};
  for (std::size_t i = 0; i < terms.size(); ++i)
    if (m.has_term(terms[i]))
      for (auto a : m.extension(terms[i])) out.membership[a] |= 1u << i;
  return out;
}

oracle::AtomModel random_model(std::mt19937_64& g, const std::vector<Term>& terms, std::int64_t max_atoms) {
  oracle::AtomModel m{terms, {}};
  const auto n = oracle::uniform(g, 0, max_atoms);
  for (int i = 0; i < n; ++i)
    m.membership.push_back(static_cast<unsigned>(oracle::uniform(g, 0, (1 << terms.size()) - 1)));
  return m;
}

std::optional<bool> engine_truth(const oracle::AtomModel& m, const Statement& st) {
  switch (evaluate_truth(m.to_model(), st)) {
    case Truth::True: return true;
    case Truth::False: return false;
    default: return std::nullopt;
  }
}

}  // namespace

TEST_CASE("every countermodel satisfies the premises and falsifies the conclusion") {
  auto g = oracle::rng(1);
  int counters = 0;
  for (int i = 0; i < kCases; ++i) {
    auto syl = random_syllogism(g);
    auto v = check_validity(syl, ImportPolicy::NoImport, 4);
    auto* cm = std::get_if<verdict::CounterModel>(&v);
    if (!cm) continue;
    ++counters;
    auto atoms = to_atoms(cm->model, kTerms);
    for (const auto& p : syl.premises()) {
      CHECK(evaluate_truth(cm->model, p) == Truth::True);
      CHECK(oracle::truth(atoms, p) == std::optional<bool>(true));
    }
    CHECK(evaluate_truth(cm->model, syl.conclusion()) == Truth::False);
    CHECK(oracle::truth(atoms, syl.conclusion()) == std::optional<bool>(false));
  }
  CHECK(counters > kCases / 4);
}

TEST_CASE("validity verdicts agree with the atom-level oracle") {
  auto g = oracle::rng(2);
  for (int i = 0; i < kCases; ++i) {
    auto syl = random_syllogism(g);
    auto v = check_validity(syl, ImportPolicy::NoImport, 3);
    bool oracle_valid = oracle::valid_up_to(syl.premises(), syl.conclusion(), 3);
    CHECK(std::holds_alternative<verdict::CounterModel>(v) == !oracle_valid);
  }
}

TEST_CASE("parallel and serial validity search return the same verdict") {
  auto g = oracle::rng(3);
  for (int i = 0; i < kCases; ++i) {
    auto syl = random_syllogism(g);
    ValidityOptions opts;
    opts.max_universe = 4;
    opts.policy = static_cast<ImportPolicy>(oracle::uniform(g, 0, 2));
    opts.scope = static_cast<ImportScope>(oracle::uniform(g, 0, 1));
    CHECK(check_validity(syl, opts) == serial::check_validity(syl, opts));
  }
}

TEST_CASE("contradictory pairs always differ in truth value") {
  const Term s("S"), p("P");
  const std::vector<Term> terms{s, p};
  const std::pair<Quantifier, Quantifier> pairs[] = {{quant::All{}, quant::SomeNot{}}, {quant::No{}, quant::Some{}}};
  auto check_model = [&](const oracle::AtomModel& m) {
    for (const auto& [a, b] : pairs) {
      Statement x(a, s, p), y(b, s, p);
      REQUIRE(lso_relation(x, y, Square::Modern) == LsoRelation::Contradictory);
      CHECK(engine_truth(m, x) != engine_truth(m, y));
    }
  };
  oracle::for_each_model(terms, 4, check_model);
  auto g = oracle::rng(4);
  for (int i = 0; i < kCases; ++i) check_model(random_model(g, terms, 4));
}

TEST_CASE("subalternation holds exactly when the subject is non-empty") {
  const Term s("S"), p("P");
  const Statement all(quant::All{}, s, p), some(quant::Some{}, s, p);
  auto g = oracle::rng(5);
  bool empty_counterexample = false;
  for (int i = 0; i < kCases; ++i) {
    auto m = random_model(g, {s, p}, 4);
    const bool nonempty = !m.ext(s).empty();
    const bool all_true = *engine_truth(m, all);
    const bool some_true = *engine_truth(m, some);
    if (nonempty && all_true) CHECK(some_true);
    if (!nonempty && all_true && !some_true) empty_counterexample = true;
  }
  CHECK(empty_counterexample);
}

TEST_CASE("all but zero means all") {
  auto g = oracle::rng(6);
  const Term s("S"), p("P");
  for (int i = 0; i < kCases; ++i) {
    auto m = random_model(g, {s, p}, 6);
    bool neg = oracle::uniform(g, 0, 1) == 1;
    CHECK(engine_truth(m, Statement(quant::AllBut{0}, s, p, neg)) ==
          engine_truth(m, Statement(quant::All{}, s, p, neg)));
  }
}

TEST_CASE("most means more than half") {
  const Term s("S"), p("P");
  const Statement most(quant::Most{}, s, p);
  auto check_model = [&](const oracle::AtomModel& m) {
    auto sx = m.ext(s), px = m.ext(p);
    std::size_t in = std::count_if(sx.begin(), sx.end(), [&](std::size_t a) { return px.count(a) > 0; });
    auto t = evaluate_truth(m.to_model(), most);
    if (sx.empty())
      CHECK(t == Truth::Undefined);
    else
      CHECK((t == Truth::True) == (2 * in > sx.size()));
  };
  oracle::for_each_model({s, p}, 6, check_model);
  auto g = oracle::rng(7);
  for (int i = 0; i < kCases; ++i) check_model(random_model(g, {s, p}, 6));
}

TEST_CASE("engine truth matches the oracle on random statements") {
  auto g = oracle::rng(8);
  for (int i = 0; i < kCases; ++i) {
    auto m = random_model(g, kTerms, 6);
    auto [s, p] = random_pair(g);
    auto st = random_statement(g, s, p);
    CHECK(engine_truth(m, st) == oracle::truth(m, st));
  }
}

TEST_CASE("widening premise intervals never narrows the conclusion") {
  auto g = oracle::rng(9);
  const Term base("B"), x("X"), y("Y");
  auto random_bounds = [&](std::int64_t den) {
    auto a = oracle::uniform(g, 0, den), b = oracle::uniform(g, 0, den);
    return quant::Interval{Rational(std::min(a, b), den), Rational(std::max(a, b), den), {}};
  };
  auto widen = [&](quant::Interval iv) {
    iv.lo = std::max(Rational(0), iv.lo - Rational(oracle::uniform(g, 0, 2), 4));
    iv.hi = std::min(Rational(1), iv.hi + Rational(oracle::uniform(g, 0, 2), 4));
    return iv;
  };
  int checked = 0;
  for (int i = 0; i < kCases; ++i) {
    std::vector<ProportionConstraint> narrow{
        {{Literal{x, oracle::uniform(g, 0, 3) == 0}}, base, random_bounds(4)},
        {{Literal{y, oracle::uniform(g, 0, 3) == 0}}, base, random_bounds(4)}};
    ProportionGoal goal{{Literal{x}, Literal{y}}, base};
    if (oracle::uniform(g, 0, 1)) goal.numerator.pop_back();
    std::vector<ProportionConstraint> wide = narrow;
    for (auto& c : wide) c.bounds = widen(c.bounds);
    IntervalConclusion a, b;
    try {
      a = interval_conclude_exhaustive(narrow, goal, 8);
    } catch (const Inconsistent&) {
      continue;
    }
    b = interval_conclude_exhaustive(wide, goal, 8);
    CHECK(b.lo <= a.lo);
    CHECK(b.hi >= a.hi);
    auto fa = interval_conclude(narrow, goal), fb = interval_conclude(wide, goal);
    CHECK(fb.lo <= fa.lo);
    CHECK(fb.hi >= fa.hi);
    ++checked;
  }
  CHECK(checked > kCases / 4);
}

TEST_CASE("exhaustive interval results contain every realized proportion") {
  auto g = oracle::rng(10);
  const Term base("B"), x("X"), y("Y");
  for (int i = 0; i < kCases; ++i) {
    // a random model realizes its own proportions, which then become point premises
    std::int64_t both = oracle::uniform(g, 0, 3), xo = oracle::uniform(g, 0, 3), yo = oracle::uniform(g, 0, 3),
                 none = oracle::uniform(g, 0, 3);
    std::int64_t n = both + xo + yo + none;
    if (n == 0) continue;
    auto widen = [&](Rational r) {
      return quant::Interval{std::max(Rational(0), r - Rational(oracle::uniform(g, 0, 1), 5)),
                             std::min(Rational(1), r + Rational(oracle::uniform(g, 0, 1), 5)), {}};
    };
    std::vector<ProportionConstraint> premises{{{Literal{x}}, base, widen(Rational(both + xo, n))},
                                               {{Literal{y}}, base, widen(Rational(both + yo, n))}};
    ProportionGoal goal{{Literal{x}, Literal{y}}, base};
    auto c = interval_conclude_exhaustive(premises, goal, 12);
    CHECK(c.lo <= Rational(both, n));
    CHECK(Rational(both, n) <= c.hi);
  }
}

TEST_CASE("parallel and serial interval scans agree") {
  auto g = oracle::rng(11);
  const Term a("A"), b("B"), c("C");
  for (int i = 0; i < kCases; ++i) {
    auto bounds = [&] {
      auto p = oracle::uniform(g, 0, 5), q = oracle::uniform(g, 0, 5);
      return quant::Interval{Rational(std::min(p, q), 5), Rational(std::max(p, q), 5), {}};
    };
    std::vector<ProportionConstraint> premises{{{Literal{b}}, a, bounds()}, {{Literal{c}}, b, bounds()}};
    ProportionGoal goal{{Literal{c}}, a};
    std::optional<IntervalConclusion> par, ser;
    std::string par_err, ser_err;
    try {
      par = interval_conclude_exhaustive(premises, goal, 6);
    } catch (const Error& e) {
      par_err = e.what();
    }
    try {
      ser = serial::interval_conclude_exhaustive(premises, goal, 6);
    } catch (const Error& e) {
      ser_err = e.what();
    }
    CHECK(par_err == ser_err);
    CHECK(par.has_value() == ser.has_value());
    if (par && ser) {
      CHECK(par->lo == ser->lo);
      CHECK(par->hi == ser->hi);
      CHECK(par->witness_min == ser->witness_min);
      CHECK(par->witness_max == ser->witness_max);
    }
  }
}

TEST_CASE("alpha cuts of the product are nested") {
  auto g = oracle::rng(12);
  auto trap = [&] {
    std::vector<std::int64_t> v{oracle::uniform(g, 0, 20), oracle::uniform(g, 0, 20), oracle::uniform(g, 0, 20),
                                oracle::uniform(g, 0, 20)};
    std::sort(v.begin(), v.end());
    return quant::Trapezoid{Rational(v[0], 20), Rational(v[1], 20), Rational(v[2], 20), Rational(v[3], 20), {}};
  };
  for (int i = 0; i < kCases; ++i) {
    std::vector<quant::Trapezoid> premises{trap(), trap()};
    std::vector<Rational> levels;
    for (std::int64_t k = 1; k <= 8; ++k)
      if (oracle::uniform(g, 0, 1) || k == 8) levels.emplace_back(k, 8);
    auto c = fuzzy_conclude_qep(premises, FuzzySchema::IntersectionProduct, levels);
    REQUIRE(c.cuts.size() == levels.size());
    for (std::size_t k = 0; k + 1 < c.cuts.size(); ++k) {
      CHECK(c.cuts[k].lo <= c.cuts[k + 1].lo);
      CHECK(c.cuts[k + 1].hi <= c.cuts[k].hi);
      CHECK(c.cuts[k + 1].lo <= c.cuts[k + 1].hi);
    }
    for (const auto& cut : c.cuts) {
      auto a = alpha_cut(premises[0], cut.alpha), b = alpha_cut(premises[1], cut.alpha);
      CHECK(cut.lo == a.lo * b.lo);
      CHECK(cut.hi == a.hi * b.hi);
    }
  }
}

TEST_CASE("probabilistic readings agree with frequencies on non-empty subjects") {
  const Term s("S"), p("P");
  const std::vector<Quantifier> classical{quant::All{}, quant::No{}, quant::Some{}, quant::SomeNot{}};
  auto g = oracle::rng(13);
  auto check_model = [&](const oracle::AtomModel& m, const ProbQuantifierConfig& cfg) {
    auto sx = m.ext(s), px = m.ext(p);
    if (sx.empty()) return;
    std::int64_t in = std::count_if(sx.begin(), sx.end(), [&](std::size_t a) { return px.count(a) > 0; });
    Rational freq(in, static_cast<std::int64_t>(sx.size()));
    for (const auto& q : classical) {
      Statement st(q, s, p);
      CHECK(prob_interpret(st, cfg).admits(freq) == (engine_truth(m, st) == std::optional<bool>(true)));
    }
    auto most = prob_interpret(Statement(quant::Most{}, s, p), cfg);
    auto few = prob_interpret(Statement(quant::Few{}, s, p), cfg);
    CHECK(most.admits(freq) == (freq >= 1 - cfg.epsilon && freq < 1));
    CHECK(few.admits(freq) == (freq > 0 && freq <= cfg.epsilon));
    CHECK_FALSE((most.admits(freq) && few.admits(freq)));
  };
  oracle::for_each_model({s, p}, 5, [&](const oracle::AtomModel& m) { check_model(m, {}); });
  for (int i = 0; i < kCases; ++i) {
    ProbQuantifierConfig cfg(Rational(oracle::uniform(g, 1, 49), 100));
    check_model(random_model(g, {s, p}, 5), cfg);
  }
}

TEST_CASE("the heuristic conclusion is never more informative than a premise") {
  auto g = oracle::rng(14);
  const auto order = Informativeness::standard();
  auto heuristic_quantifier = [&]() -> Quantifier {
    switch (oracle::uniform(g, 0, 5)) {
      case 0: return quant::All{};
      case 1: return quant::Most{};
      case 2: return quant::Few{};
      case 3: return quant::Some{};
      case 4: return quant::No{};
      default: return quant::SomeNot{};
    }
  };
  const Term s("S"), m("M"), p("P");
  for (int i = 0; i < kCases; ++i) {
    // each premise joins the middle term with one end term, in either order
    auto make = [&](const Term& end) {
      return oracle::uniform(g, 0, 1) ? Statement(heuristic_quantifier(), m, end)
                                      : Statement(heuristic_quantifier(), end, m);
    };
    Statement a = make(p), b = make(s);
    if (oracle::uniform(g, 0, 1)) std::swap(a, b);
    auto h = heuristic_conclude(a, b);
    auto rc = *order.rank(h.conclusion.quantifier());
    CHECK(rc >= *order.rank(a.quantifier()));
    CHECK(rc >= *order.rank(b.quantifier()));
    CHECK((h.conclusion.quantifier() == a.quantifier() || h.conclusion.quantifier() == b.quantifier()));
    CHECK_FALSE(h.conclusion.subject() == m);
    CHECK_FALSE(h.conclusion.predicate() == m);
    CHECK(h.trace.size() == 2);
  }
}

TEST_CASE("canonicalize is idempotent and rendering round-trips") {
  auto g = oracle::rng(15);
  for (int i = 0; i < kCases; ++i) {
    auto [s, p] = random_pair(g);
    auto st = random_statement(g, s, p);
    CHECK(canonicalize(st.raw()) == st);
    // trapezoids only reach the grammar through a configured name
    NamedQuantifiers names;
    if (auto* t = std::get_if<quant::Trapezoid>(&st.quantifier())) {
      quant::Trapezoid named = *t;
      named.label = "roughly";
      names.add("roughly", named);
      st = Statement(named, st.subject(), st.predicate(), st.predicate_negated());
    }
    CHECK(parse_statement(render(st), names) == st);
  }
}

TEST_CASE("parsing is total") {
  const std::vector<std::string> tokens{"all",  "no",   "some", "not",  "are",  "is",   "most", "few", "but",
                                        "3",    "-1",   "[",    "]",    ",",    "0.5",  "1/0",  "a",   "Socrates",
                                        "there", "at",  "least", "one", "double", "{x}", "students", "\t", "",
                                        "exactly", "many", "almost", "\xff", "99999999999999999999"};
  auto g = oracle::rng(16);
  for (int i = 0; i < 4 * kCases; ++i) {
    std::string text;
    const auto n = oracle::uniform(g, 0, 7);
    for (int k = 0; k < n; ++k) {
      if (k) text += oracle::uniform(g, 0, 5) ? " " : "";
      text += tokens[oracle::uniform(g, 0, static_cast<std::int64_t>(tokens.size()) - 1)];
    }
    try {
      auto st = parse_statement(text);
      CHECK(parse_statement(render(st)) == st);
    } catch (const ParseError& e) {
      CHECK(e.position() <= text.size());
    }
  }
}
