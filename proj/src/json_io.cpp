#include "syllogos/json_io.hpp"

namespace syllogos {

namespace {

std::string term_text(const Term& t) { return t.is_singleton() ? "{" + t.display() + "}" : t.display(); }

template <class T>
T field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw InvariantViolation(std::string("json: missing field '") + name + "'");
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InvariantViolation(std::string("json: bad field '") + name + "': " + e.what());
  }
}

const Json& sub(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw InvariantViolation(std::string("json: missing field '") + name + "'");
  return j.at(name);
}

}  // namespace

Json to_json(const Rational& r) { return {{"num", r.numerator()}, {"den", r.denominator()}}; }

Rational rational_from_json(const Json& j) {
  auto den = field<std::int64_t>(j, "den");
  if (den == 0) throw InvariantViolation("json: zero denominator");
  return Rational(field<std::int64_t>(j, "num"), den);
}

Json to_json(const Quantifier& q) {
  const std::string tag(quantifier_tag(q));
  if (auto* x = std::get_if<quant::AllBut>(&q)) return {{"kind", tag}, {"k", x->k}};
  if (auto* x = std::get_if<quant::Exactly>(&q)) return {{"kind", tag}, {"k", x->k}};
  if (auto* x = std::get_if<quant::AtLeast>(&q)) return {{"kind", tag}, {"k", x->k}};
  if (auto* x = std::get_if<quant::Interval>(&q)) {
    Json j{{"kind", tag}, {"lo", to_json(x->lo)}, {"hi", to_json(x->hi)}};
    if (!x->label.empty()) j["label"] = x->label;
    return j;
  }
  if (auto* x = std::get_if<quant::Trapezoid>(&q)) {
    Json j{{"kind", tag}, {"a", to_json(x->a)}, {"c", to_json(x->c)}, {"d", to_json(x->d)}, {"b", to_json(x->b)}};
    if (!x->label.empty()) j["label"] = x->label;
    return j;
  }
  return tag;
}

Quantifier quantifier_from_json(const Json& j) {
  if (j.is_string()) {
    const auto tag = j.get<std::string>();
    if (tag == "all") return quant::All{};
    if (tag == "no") return quant::No{};
    if (tag == "some") return quant::Some{};
    if (tag == "some_not") return quant::SomeNot{};
    if (tag == "most") return quant::Most{};
    if (tag == "many") return quant::Many{};
    if (tag == "few") return quant::Few{};
    if (tag == "almost_all") return quant::AlmostAll{};
    throw InvariantViolation("json: unknown quantifier '" + tag + "'");
  }
  const auto kind = field<std::string>(j, "kind");
  std::string label = j.contains("label") ? j.at("label").get<std::string>() : std::string{};
  Quantifier q;
  if (kind == "all_but") {
    q = quant::AllBut{field<std::int64_t>(j, "k")};
  } else if (kind == "exactly") {
    q = quant::Exactly{field<std::int64_t>(j, "k")};
  } else if (kind == "at_least") {
    q = quant::AtLeast{field<std::int64_t>(j, "k")};
  } else if (kind == "interval") {
    q = quant::Interval{rational_from_json(sub(j, "lo")), rational_from_json(sub(j, "hi")), label};
  } else if (kind == "trapezoid") {
    q = quant::Trapezoid{rational_from_json(sub(j, "a")), rational_from_json(sub(j, "c")),
                         rational_from_json(sub(j, "d")), rational_from_json(sub(j, "b")), label};
  } else {
    throw InvariantViolation("json: unknown quantifier kind '" + kind + "'");
  }
  validate(q);
  return q;
}

Json to_json(const Statement& s) {
  Json j{{"q", to_json(s.quantifier())},
         {"s", term_text(s.subject())},
         {"p", term_text(s.predicate())},
         {"neg", s.predicate_negated()}};
  if (s.form() == StatementForm::Singular) {
    j["form"] = "singular";
    if (s.has_article()) j["article"] = true;
  } else if (s.form() == StatementForm::Existence) {
    j["form"] = "existence";
  }
  return j;
}

Statement statement_from_json(const Json& j) {
  Term subject(field<std::string>(j, "s"));
  Term predicate(field<std::string>(j, "p"));
  const std::string form = j.contains("form") ? j.at("form").get<std::string>() : "categorical";
  if (form == "existence") return Statement::existence(subject);
  if (form == "singular")
    return Statement::singular(subject, predicate, j.contains("article") && j.at("article").get<bool>());
  if (form != "categorical") throw InvariantViolation("json: unknown statement form '" + form + "'");
  bool neg = j.contains("neg") && j.at("neg").get<bool>();
  return Statement(quantifier_from_json(sub(j, "q")), subject, predicate, neg);
}

Json to_json(const Syllogism& s) {
  Json premises = Json::array();
  for (const auto& p : s.premises()) premises.push_back(to_json(p));
  Json j{{"premises", premises}, {"conclusion", to_json(s.conclusion())}};
  if (auto f = s.figure()) j["figure"] = std::string(to_string(*f));
  if (auto m = s.mood()) j["mood"] = *m;
  return j;
}

Syllogism syllogism_from_json(const Json& j) {
  std::vector<Statement> premises;
  for (const auto& p : sub(j, "premises")) premises.push_back(statement_from_json(p));
  return Syllogism(std::move(premises), statement_from_json(sub(j, "conclusion")));
}

Json to_json(const FiniteModel& m) {
  Json ext = Json::object();
  for (const auto& [term, atoms] : m.extensions()) ext[term_text(term)] = atoms;
  return {{"universe", m.universe_size()}, {"extensions", ext}};
}

FiniteModel model_from_json(const Json& j) {
  std::map<Term, std::vector<std::size_t>> ext;
  for (const auto& [name, atoms] : sub(j, "extensions").items())
    ext.emplace(Term(name), atoms.get<std::vector<std::size_t>>());
  return FiniteModel(field<std::size_t>(j, "universe"), std::move(ext));
}

Json to_json(const Verdict& v) {
  if (auto* x = std::get_if<verdict::Valid>(&v))
    return {{"verdict", "valid"}, {"bound", x->bound}, {"counter_model", nullptr}};
  if (auto* x = std::get_if<verdict::Undetermined>(&v))
    return {{"verdict", "undetermined"}, {"bound", x->bound}, {"counter_model", nullptr}};
  const auto& c = std::get<verdict::CounterModel>(v);
  return {{"verdict", "counter"}, {"bound", c.model.universe_size()}, {"counter_model", to_json(c.model)}};
}

Verdict verdict_from_json(const Json& j) {
  const auto kind = field<std::string>(j, "verdict");
  if (kind == "valid") return verdict::Valid{field<int>(j, "bound")};
  if (kind == "undetermined") return verdict::Undetermined{field<int>(j, "bound")};
  if (kind == "counter") return verdict::CounterModel{model_from_json(sub(j, "counter_model"))};
  throw InvariantViolation("json: unknown verdict '" + kind + "'");
}

Json to_json(const RegionVector& v) {
  Json terms = Json::array();
  for (const auto& t : v.terms) terms.push_back(term_text(t));
  return {{"terms", terms}, {"counts", v.counts}};
}

Json to_json(const IntervalConclusion& c) {
  Json j{{"interval", {{"lo", to_json(c.lo)}, {"hi", to_json(c.hi)}}},
         {"method", c.method == IntervalConclusion::Method::Frechet ? "frechet" : "exhaustive"}};
  j["witness_min"] = c.witness_min ? to_json(*c.witness_min) : Json(nullptr);
  j["witness_max"] = c.witness_max ? to_json(*c.witness_max) : Json(nullptr);
  return j;
}

Json to_json(const FuzzyConclusion& c) {
  Json cuts = Json::array();
  for (const auto& cut : c.cuts)
    cuts.push_back({{"alpha", to_json(cut.alpha)}, {"lo", to_json(cut.lo)}, {"hi", to_json(cut.hi)}});
  return {{"alpha_cuts", cuts}, {"approximation", to_json(Quantifier{c.approximate_trapezoid()})}};
}

Json to_json(const ExceptiveConclusion& c) {
  return {{"mode", c.mode == ExceptiveMode::Literal ? "literal" : "sound"},
          {"subject", term_text(c.subject)},
          {"predicate", term_text(c.predicate)},
          {"exception", {{"lo", c.lo}, {"hi", c.hi}}},
          {"text", c.render()}};
}

Json to_json(const ProbConstraint& c) {
  auto bound = [](const ProbBound& b) { return Json{{"value", to_json(b.value)}, {"inclusive", b.inclusive}}; };
  return {{"kind", std::string(to_string(c.kind))},
          {"epsilon", to_json(c.epsilon)},
          {"lower", bound(c.lower)},
          {"upper", bound(c.upper)},
          {"requires_existence", c.requires_existence},
          {"text", c.render()}};
}

Json to_json(const HeuristicConclusion& c) {
  return {{"conclusion", to_json(c.conclusion)}, {"trace", c.trace}};
}

}  // namespace syllogos
