#include "syllogos/transforms.hpp"

#include <algorithm>

namespace syllogos {

namespace {

Statement desugar_with_predicate(const Statement& stmt, const Term& predicate) {
  return Statement(quant::All{}, Term::singleton(stmt.subject().display()), predicate, false);
}

}  // namespace

Statement desugar_singular(const Statement& stmt) {
  if (stmt.form() != StatementForm::Singular) return stmt;
  return desugar_with_predicate(stmt, stmt.predicate());
}

Syllogism desugar_singulars(const Syllogism& syl) {
  std::vector<Statement> all = syl.premises();
  all.push_back(syl.conclusion());

  auto align = [&](const Statement& s) -> Term {
    if (s.form() != StatementForm::Singular || !s.has_article()) return s.predicate();
    const std::string& key = s.predicate().key();
    std::vector<Term> others;
    for (const auto& o : all) {
      if (&o == &s) continue;
      others.push_back(o.subject());
      if (!(o.form() == StatementForm::Singular && o.has_article())) others.push_back(o.predicate());
    }
    auto has = [&](const std::string& k) {
      return std::any_of(others.begin(), others.end(), [&](const Term& t) { return t.key() == k; });
    };
    if (has(key)) return s.predicate();
    for (const char* suffix : {"s", "es"}) {
      auto it = std::find_if(others.begin(), others.end(),
                             [&](const Term& t) { return t.key() == key + suffix; });
      if (it != others.end()) return *it;
    }
    return s.predicate();
  };

  std::vector<Statement> out;
  for (const auto& s : all)
    out.push_back(s.form() == StatementForm::Singular ? desugar_with_predicate(s, align(s)) : s);
  Statement conclusion = out.back();
  out.pop_back();
  return Syllogism(std::move(out), std::move(conclusion));
}

Syllogism add_import_premises(const Syllogism& syl, ImportScope scope) {
  std::vector<Term> scope_terms;
  if (scope == ImportScope::AllTerms) {
    scope_terms = syl.terms();
  } else {
    for (const auto& p : syl.premises())
      if (std::find(scope_terms.begin(), scope_terms.end(), p.subject()) == scope_terms.end())
        scope_terms.push_back(p.subject());
  }

  std::vector<Statement> premises = syl.premises();
  for (const auto& t : scope_terms) {
    Statement existence = Statement::existence(t);
    if (std::find(premises.begin(), premises.end(), existence) == premises.end())
      premises.push_back(std::move(existence));
  }
  return Syllogism(std::move(premises), syl.conclusion());
}

}  // namespace syllogos
