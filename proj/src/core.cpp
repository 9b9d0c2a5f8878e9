#include "syllogos/core.hpp"

#include <algorithm>
#include <cctype>

namespace syllogos {

namespace {

std::string collapse_whitespace(std::string_view s) {
  std::string out;
  bool pending_space = false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

std::string lowercase(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

Term::Term(std::string_view name) {
  display_ = collapse_whitespace(name);
  if (display_.size() >= 2 && display_.front() == '{' && display_.back() == '}') {
    display_ = collapse_whitespace(std::string_view(display_).substr(1, display_.size() - 2));
    singleton_ = true;
  }
  if (display_.empty()) throw InvariantViolation("term name is empty");
  key_ = lowercase(display_);
  if (singleton_) key_ = "{" + key_ + "}";
}

Term Term::singleton(std::string_view name) {
  Term t(name);
  if (!t.singleton_) {
    t.singleton_ = true;
    t.key_ = "{" + t.key_ + "}";
  }
  return t;
}

std::string_view quantifier_tag(const Quantifier& q) {
  return std::visit(overloaded{
                        [](const quant::All&) { return std::string_view("all"); },
                        [](const quant::No&) { return std::string_view("no"); },
                        [](const quant::Some&) { return std::string_view("some"); },
                        [](const quant::SomeNot&) { return std::string_view("some_not"); },
                        [](const quant::Most&) { return std::string_view("most"); },
                        [](const quant::Many&) { return std::string_view("many"); },
                        [](const quant::Few&) { return std::string_view("few"); },
                        [](const quant::AlmostAll&) { return std::string_view("almost_all"); },
                        [](const quant::AllBut&) { return std::string_view("all_but"); },
                        [](const quant::Exactly&) { return std::string_view("exactly"); },
                        [](const quant::AtLeast&) { return std::string_view("at_least"); },
                        [](const quant::Interval&) { return std::string_view("interval"); },
                        [](const quant::Trapezoid&) { return std::string_view("trapezoid"); },
                    },
                    q);
}

void validate(const Quantifier& q) {
  auto count = [](std::int64_t k, const char* what) {
    if (k < 0) throw InvariantViolation(std::string(what) + " count must be non-negative");
  };
  std::visit(overloaded{
                 [&](const quant::AllBut& x) { count(x.k, "all-but"); },
                 [&](const quant::Exactly& x) { count(x.k, "exactly"); },
                 [&](const quant::AtLeast& x) { count(x.k, "at-least"); },
                 [](const quant::Interval& x) {
                   if (!in_unit_interval(x.lo) || !in_unit_interval(x.hi))
                     throw InvariantViolation("interval bounds must lie in [0,1]");
                   if (x.lo > x.hi)
                     throw InvariantViolation("interval lower bound " + to_string(x.lo) +
                                              " exceeds upper bound " + to_string(x.hi));
                 },
                 [](const quant::Trapezoid& x) {
                   for (const auto& v : {x.a, x.c, x.d, x.b})
                     if (!in_unit_interval(v))
                       throw InvariantViolation("trapezoid points must lie in [0,1]");
                   if (!(x.a <= x.c && x.c <= x.d && x.d <= x.b))
                     throw InvariantViolation("trapezoid needs a <= c <= d <= b");
                 },
                 [](const auto&) {},
             },
             q);
}

bool is_classical(const Quantifier& q) {
  return std::holds_alternative<quant::All>(q) || std::holds_alternative<quant::No>(q) ||
         std::holds_alternative<quant::Some>(q) || std::holds_alternative<quant::SomeNot>(q);
}

bool is_proportional(const Quantifier& q) {
  return std::holds_alternative<quant::Most>(q) || std::holds_alternative<quant::Many>(q) ||
         std::holds_alternative<quant::Few>(q) || std::holds_alternative<quant::AlmostAll>(q) ||
         std::holds_alternative<quant::Interval>(q) || std::holds_alternative<quant::Trapezoid>(q);
}

Statement::Statement(Quantifier q, Term subject, Term predicate, bool predicate_negated)
    : Statement(std::move(q), std::move(subject), std::move(predicate), predicate_negated,
                StatementForm::Categorical, false) {}

Statement::Statement(Quantifier q, Term subject, Term predicate, bool negated, StatementForm form,
                     bool article)
    : q_(std::move(q)),
      subject_(std::move(subject)),
      predicate_(std::move(predicate)),
      negated_(negated),
      form_(form),
      article_(article) {
  validate(q_);
  if (form_ != StatementForm::Existence && subject_ == predicate_)
    throw InvariantViolation("subject and predicate are the same term '" + subject_.display() + "'");
  if (negated_) {
    if (std::holds_alternative<quant::Some>(q_)) {
      q_ = quant::SomeNot{};
      negated_ = false;
    } else if (std::holds_alternative<quant::SomeNot>(q_)) {
      q_ = quant::Some{};
      negated_ = false;
    } else if (std::holds_alternative<quant::All>(q_)) {
      q_ = quant::No{};
      negated_ = false;
    } else if (std::holds_alternative<quant::No>(q_)) {
      q_ = quant::All{};
      negated_ = false;
    }
  }
  if (form_ == StatementForm::Singular &&
      (!std::holds_alternative<quant::All>(q_) || negated_ || subject_.is_singleton()))
    throw InvariantViolation("singular statement must be an affirmative 'Name is P'");
}

Statement Statement::existence(Term t) {
  Term copy = t;
  return Statement(quant::AtLeast{1}, std::move(t), std::move(copy), false,
                   StatementForm::Existence, false);
}

Statement Statement::singular(Term name, Term predicate, bool article) {
  return Statement(quant::All{}, std::move(name), std::move(predicate), false,
                   StatementForm::Singular, article);
}

Statement canonicalize(const RawStatement& raw) {
  return Statement(raw.quantifier, raw.subject, raw.predicate, raw.predicate_negated);
}

std::string render(const Quantifier& q) {
  return std::visit(
      overloaded{
          [](const quant::All&) -> std::string { return "All"; },
          [](const quant::No&) -> std::string { return "No"; },
          [](const quant::Some&) -> std::string { return "Some"; },
          [](const quant::SomeNot&) -> std::string { return "Some"; },
          [](const quant::Most&) -> std::string { return "Most"; },
          [](const quant::Many&) -> std::string { return "Many"; },
          [](const quant::Few&) -> std::string { return "Few"; },
          [](const quant::AlmostAll&) -> std::string { return "Almost all"; },
          [](const quant::AllBut& x) { return "All but " + std::to_string(x.k); },
          [](const quant::Exactly& x) { return "Exactly " + std::to_string(x.k); },
          [](const quant::AtLeast& x) { return "At least " + std::to_string(x.k); },
          [](const quant::Interval& x) {
            if (!x.label.empty()) return x.label;
            return "[" + to_string(x.lo) + "," + to_string(x.hi) + "]";
          },
          [](const quant::Trapezoid& x) {
            if (!x.label.empty()) return x.label;
            return "[" + to_string(x.a) + "," + to_string(x.c) + "," + to_string(x.d) + "," +
                   to_string(x.b) + "]";
          },
      },
      q);
}

namespace {

std::string render_term(const Term& t) {
  return t.is_singleton() ? "{" + t.display() + "}" : t.display();
}

}  // namespace

std::string render(const Statement& s) {
  switch (s.form()) {
    case StatementForm::Existence:
      return "There is at least one " + render_term(s.subject());
    case StatementForm::Singular: {
      std::string out = s.subject().display() + " is ";
      if (s.has_article()) {
        char c0 = static_cast<char>(std::tolower(static_cast<unsigned char>(s.predicate().display()[0])));
        out += std::string_view("aeiou").find(c0) != std::string_view::npos ? "an " : "a ";
      }
      return out + render_term(s.predicate());
    }
    case StatementForm::Categorical:
      break;
  }
  std::string out = render(s.quantifier()) + " " + render_term(s.subject()) + " are ";
  if (s.predicate_negated() || std::holds_alternative<quant::SomeNot>(s.quantifier()))
    out += "not ";
  out += render_term(s.predicate());
  out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  return out;
}

std::string_view to_string(Figure f) {
  switch (f) {
    case Figure::I: return "I";
    case Figure::II: return "II";
    case Figure::III: return "III";
    case Figure::IV: return "IV";
  }
  return "?";
}

Syllogism::Syllogism(std::vector<Statement> premises, Statement conclusion)
    : premises_(std::move(premises)), conclusion_(std::move(conclusion)) {
  if (premises_.empty()) throw StructureError("a syllogism needs at least one premise");
}

std::vector<Term> Syllogism::terms() const {
  std::vector<Term> out;
  auto add = [&](const Term& t) {
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
  };
  for (const auto& p : premises_) {
    add(p.subject());
    add(p.predicate());
  }
  add(conclusion_.subject());
  add(conclusion_.predicate());
  return out;
}

std::optional<Term> Syllogism::middle_term() const {
  if (premises_.size() != 2) return std::nullopt;
  for (const auto& p : premises_)
    if (p.form() == StatementForm::Existence) return std::nullopt;
  const auto& a = premises_[0];
  const auto& b = premises_[1];
  std::vector<Term> shared;
  for (const Term& t : {a.subject(), a.predicate()})
    if (t == b.subject() || t == b.predicate()) shared.push_back(t);
  if (shared.size() != 1) return std::nullopt;
  const Term& m = shared.front();
  if (m == conclusion_.subject() || m == conclusion_.predicate()) return std::nullopt;
  return m;
}

std::optional<Figure> Syllogism::figure() const {
  auto middle = middle_term();
  if (!middle || terms().size() != 3) return std::nullopt;
  const auto& major = premises_[0];
  const auto& minor = premises_[1];
  const Term& s = conclusion_.subject();
  const Term& p = conclusion_.predicate();
  const Term& m = *middle;

  bool major_has_p = major.subject() == p || major.predicate() == p;
  bool minor_has_s = minor.subject() == s || minor.predicate() == s;
  if (!major_has_p || !minor_has_s) return std::nullopt;

  bool m_subject_of_major = major.subject() == m;
  bool m_predicate_of_minor = minor.predicate() == m;
  if (m_subject_of_major && m_predicate_of_minor) return Figure::I;
  if (!m_subject_of_major && m_predicate_of_minor) return Figure::II;
  if (m_subject_of_major && !m_predicate_of_minor) return Figure::III;
  return Figure::IV;
}

std::optional<std::string> Syllogism::mood() const {
  auto letter = [](const Statement& s) -> std::optional<char> {
    if (s.form() != StatementForm::Categorical || s.predicate_negated()) return std::nullopt;
    const auto& q = s.quantifier();
    if (std::holds_alternative<quant::All>(q)) return 'A';
    if (std::holds_alternative<quant::No>(q)) return 'E';
    if (std::holds_alternative<quant::Some>(q)) return 'I';
    if (std::holds_alternative<quant::SomeNot>(q)) return 'O';
    return std::nullopt;
  };
  std::string out;
  for (const auto& p : premises_) {
    auto c = letter(p);
    if (!c) return std::nullopt;
    out.push_back(*c);
  }
  auto c = letter(conclusion_);
  if (!c) return std::nullopt;
  out.push_back(*c);
  return out;
}

FiniteModel::FiniteModel(std::size_t universe_size,
                         std::map<Term, std::vector<std::size_t>> extensions)
    : universe_size_(universe_size), extensions_(std::move(extensions)) {
  for (auto& [term, atoms] : extensions_) {
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    if (!atoms.empty() && atoms.back() >= universe_size_)
      throw InvariantViolation("extension of '" + term.display() + "' leaves the universe");
  }
}

const std::vector<std::size_t>& FiniteModel::extension(const Term& t) const {
  auto it = extensions_.find(t);
  if (it == extensions_.end())
    throw InvariantViolation("model has no extension for term '" + t.display() + "'");
  return it->second;
}

ProbQuantifierConfig::ProbQuantifierConfig(Rational eps) : epsilon(eps) {
  if (!(eps > 0 && eps < Rational(1, 2)))
    throw InvariantViolation("epsilon must lie strictly between 0 and 1/2");
}

}  // namespace syllogos
