#pragma once

// Domain types shared by every interpretation engine. All of them are
// immutable values once constructed.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "syllogos/errors.hpp"
#include "syllogos/rational.hpp"

namespace syllogos {

/// A term name. Equality is on the normalized key: trimmed, inner whitespace
/// collapsed, ASCII-lowercased. Morphology is untouched ("student" and
/// "students" are different terms). Singleton terms denote a one-element set
/// and are namespaced as "{name}" so they never collide with a common noun.
class Term {
 public:
  explicit Term(std::string_view name);
  static Term singleton(std::string_view name);

  const std::string& key() const noexcept { return key_; }
  const std::string& display() const noexcept { return display_; }
  bool is_singleton() const noexcept { return singleton_; }

  friend bool operator==(const Term& a, const Term& b) noexcept { return a.key_ == b.key_; }
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) noexcept {
    return a.key_ <=> b.key_;
  }

 private:
  std::string key_;
  std::string display_;
  bool singleton_ = false;
};

namespace quant {

struct All { bool operator==(const All&) const = default; };
struct No { bool operator==(const No&) const = default; };
struct Some { bool operator==(const Some&) const = default; };
struct SomeNot { bool operator==(const SomeNot&) const = default; };
struct Most { bool operator==(const Most&) const = default; };
struct Many { bool operator==(const Many&) const = default; };
struct Few { bool operator==(const Few&) const = default; };
struct AlmostAll { bool operator==(const AlmostAll&) const = default; };

struct AllBut {
  std::int64_t k = 0;
  bool operator==(const AllBut&) const = default;
};
struct Exactly {
  std::int64_t k = 0;
  bool operator==(const Exactly&) const = default;
};
struct AtLeast {
  std::int64_t k = 0;
  bool operator==(const AtLeast&) const = default;
};

// `label` remembers the configured name a quantifier was resolved from; it
// only affects rendering.
struct Interval {
  Rational lo{0}, hi{1};
  std::string label;
  bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
};

/// Kernel [c,d] inside support [a,b].
struct Trapezoid {
  Rational a{0}, c{0}, d{1}, b{1};
  std::string label;
  bool operator==(const Trapezoid& o) const {
    return a == o.a && c == o.c && d == o.d && b == o.b;
  }
};

}  // namespace quant

using Quantifier =
    std::variant<quant::All, quant::No, quant::Some, quant::SomeNot, quant::Most, quant::Many,
                 quant::Few, quant::AlmostAll, quant::AllBut, quant::Exactly, quant::AtLeast,
                 quant::Interval, quant::Trapezoid>;

/// Stable lowercase tag: "all", "some_not", "all_but", "interval", ...
std::string_view quantifier_tag(const Quantifier& q);
/// Throws InvariantViolation for negative counts or misordered bounds.
void validate(const Quantifier& q);
bool is_classical(const Quantifier& q);
/// Quantifiers whose truth needs |subject| in a denominator.
bool is_proportional(const Quantifier& q);

enum class StatementForm {
  Categorical,
  /// "Socrates is mortal" before desugaring; quantifier is All.
  Singular,
  /// Machine-generated "there is at least one T", AtLeast(1)(T, T).
  Existence,
};

struct RawStatement {
  Quantifier quantifier;
  Term subject;
  Term predicate;
  bool predicate_negated = false;
};

class Statement {
 public:
  /// Canonicalizes and validates. The classical forms absorb predicate
  /// negation (Some+not -> SomeNot, All+not -> No and back); other
  /// quantifiers keep the flag.
  Statement(Quantifier q, Term subject, Term predicate, bool predicate_negated = false);

  static Statement existence(Term t);
  /// `article` records an "is a/an" copula; transforms uses it to line the
  /// predicate up with a plural term.
  static Statement singular(Term name, Term predicate, bool article = false);

  const Quantifier& quantifier() const noexcept { return q_; }
  const Term& subject() const noexcept { return subject_; }
  const Term& predicate() const noexcept { return predicate_; }
  bool predicate_negated() const noexcept { return negated_; }
  StatementForm form() const noexcept { return form_; }
  bool has_article() const noexcept { return article_; }

  RawStatement raw() const { return {q_, subject_, predicate_, negated_}; }

  friend bool operator==(const Statement& a, const Statement& b) {
    return a.form_ == b.form_ && a.q_ == b.q_ && a.subject_ == b.subject_ &&
           a.predicate_ == b.predicate_ && a.negated_ == b.negated_;
  }

 private:
  Statement(Quantifier q, Term subject, Term predicate, bool negated, StatementForm form,
            bool article);

  Quantifier q_;
  Term subject_;
  Term predicate_;
  bool negated_ = false;
  StatementForm form_ = StatementForm::Categorical;
  bool article_ = false;
};

Statement canonicalize(const RawStatement& raw);

/// Canonical pretty-printer; output reparses to an equal statement.
std::string render(const Statement& s);
std::string render(const Quantifier& q);

enum class Figure { I = 1, II = 2, III = 3, IV = 4 };
std::string_view to_string(Figure f);

class Syllogism {
 public:
  /// At least one premise. The two-premise classical shape is not required
  /// here; figure() reports whether it holds.
  Syllogism(std::vector<Statement> premises, Statement conclusion);

  const std::vector<Statement>& premises() const noexcept { return premises_; }
  const Statement& conclusion() const noexcept { return conclusion_; }

  /// Distinct terms in order of first appearance (premises, then conclusion).
  std::vector<Term> terms() const;

  /// Defined for two premises over three terms where the middle term sits in
  /// both premises and not in the conclusion. Premise 1 carries the
  /// conclusion's predicate, premise 2 its subject.
  std::optional<Figure> figure() const;
  std::optional<Term> middle_term() const;
  /// "AII" style letters when every statement is classical.
  std::optional<std::string> mood() const;

 private:
  std::vector<Statement> premises_;
  Statement conclusion_;
};

/// A finite universe {0..n-1} with an extension per term.
class FiniteModel {
 public:
  FiniteModel(std::size_t universe_size, std::map<Term, std::vector<std::size_t>> extensions);

  std::size_t universe_size() const noexcept { return universe_size_; }
  const std::map<Term, std::vector<std::size_t>>& extensions() const noexcept {
    return extensions_;
  }
  /// Sorted atom list. Throws InvariantViolation for an unknown term.
  const std::vector<std::size_t>& extension(const Term& t) const;
  bool has_term(const Term& t) const { return extensions_.contains(t); }

  friend bool operator==(const FiniteModel&, const FiniteModel&) = default;

 private:
  std::size_t universe_size_;
  std::map<Term, std::vector<std::size_t>> extensions_;
};

enum class ImportPolicy { NoImport, UniversalImport, ExplicitPremise };
enum class ImportScope { SubjectsOnly, AllTerms };

namespace verdict {
struct Valid {
  int bound = 0;
  bool operator==(const Valid&) const = default;
};
struct CounterModel {
  FiniteModel model;
  bool operator==(const CounterModel&) const = default;
};
/// No countermodel up to `bound`, but some model satisfied the premises while
/// leaving the conclusion undefined (empty denominator).
struct Undetermined {
  int bound = 0;
  bool operator==(const Undetermined&) const = default;
};
}  // namespace verdict

using Verdict = std::variant<verdict::Valid, verdict::CounterModel, verdict::Undetermined>;

inline bool is_valid(const Verdict& v) { return std::holds_alternative<verdict::Valid>(v); }

struct ProbQuantifierConfig {
  Rational epsilon{1, 10};

  ProbQuantifierConfig() = default;
  explicit ProbQuantifierConfig(Rational eps);
};

}  // namespace syllogos
