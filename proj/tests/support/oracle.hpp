#pragma once

// Independent reference semantics used by the tests. Models are built atom by
// atom (no region bookkeeping) and statements are evaluated straight from the
// set definitions with plain integer arithmetic.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "syllogos/core.hpp"

namespace oracle {

using syllogos::Rational;
using syllogos::Statement;
using syllogos::Term;

/// Atom-level model: membership[atom] is a bitmask over `terms`.
struct AtomModel {
  std::vector<Term> terms;
  std::vector<unsigned> membership;

  std::set<std::size_t> ext(const Term& t) const {
    std::set<std::size_t> out;
    auto it = std::find(terms.begin(), terms.end(), t);
    if (it == terms.end()) return out;
    unsigned bit = 1u << (it - terms.begin());
    for (std::size_t a = 0; a < membership.size(); ++a)
      if (membership[a] & bit) out.insert(a);
    return out;
  }

  syllogos::FiniteModel to_model() const {
    std::map<Term, std::vector<std::size_t>> m;
    for (const auto& t : terms) {
      auto e = ext(t);
      m.emplace(t, std::vector<std::size_t>(e.begin(), e.end()));
    }
    return syllogos::FiniteModel(membership.size(), std::move(m));
  }
};

/// Calls visit on every atom-level model with up to max_atoms atoms. Atoms
/// are unordered up to renaming, so only non-decreasing membership sequences
/// are produced.
inline void for_each_model(const std::vector<Term>& terms, std::size_t max_atoms,
                           const std::function<void(const AtomModel&)>& visit) {
  const unsigned kinds = 1u << terms.size();
  AtomModel m{terms, {}};
  std::function<void(unsigned)> rec = [&](unsigned floor) {
    visit(m);
    if (m.membership.size() == max_atoms) return;
    for (unsigned k = floor; k < kinds; ++k) {
      m.membership.push_back(k);
      rec(k);
      m.membership.pop_back();
    }
  };
  rec(0);
}

/// std::nullopt means the proportion is undefined (empty subject).
inline std::optional<bool> truth(const AtomModel& m, const Statement& st) {
  using namespace syllogos;
  auto s = m.ext(st.subject());
  auto p = m.ext(st.predicate());
  if (st.predicate_negated()) {
    std::set<std::size_t> c;
    for (std::size_t a = 0; a < m.membership.size(); ++a)
      if (!p.count(a)) c.insert(a);
    p = c;
  }
  std::int64_t in = 0, out = 0;
  for (auto a : s) (p.count(a) ? in : out)++;
  const std::int64_t n = in + out;
  const auto& q = st.quantifier();
  if (std::holds_alternative<quant::All>(q)) return out == 0;
  if (std::holds_alternative<quant::No>(q)) return in == 0;
  if (std::holds_alternative<quant::Some>(q)) return in > 0;
  if (std::holds_alternative<quant::SomeNot>(q)) return out > 0;
  if (auto* x = std::get_if<quant::AllBut>(&q)) return out == x->k;
  if (auto* x = std::get_if<quant::Exactly>(&q)) return in == x->k;
  if (auto* x = std::get_if<quant::AtLeast>(&q)) return in >= x->k;
  if (n == 0) return std::nullopt;
  if (std::holds_alternative<quant::Most>(q)) return 2 * in > n;
  if (std::holds_alternative<quant::Many>(q)) return 2 * in > n;
  if (std::holds_alternative<quant::Few>(q)) return 5 * in <= n;
  if (std::holds_alternative<quant::AlmostAll>(q)) return 20 * out <= n;
  Rational share(in, n);
  if (auto* x = std::get_if<quant::Interval>(&q)) return x->lo <= share && share <= x->hi;
  if (auto* x = std::get_if<quant::Trapezoid>(&q)) return x->a <= share && share <= x->b;
  return std::nullopt;
}

/// Brute-force validity over atom-level models: true when no model with at
/// most max_atoms atoms makes every premise true and the conclusion false.
/// Premises that are undefined count as not holding.
inline bool valid_up_to(const std::vector<Statement>& premises, const Statement& conclusion,
                        std::size_t max_atoms, const std::vector<Term>& nonempty = {}) {
  std::vector<Term> terms;
  auto add = [&](const Term& t) {
    if (std::find(terms.begin(), terms.end(), t) == terms.end()) terms.push_back(t);
  };
  for (const auto& p : premises) add(p.subject()), add(p.predicate());
  add(conclusion.subject());
  add(conclusion.predicate());
  bool ok = true;
  for_each_model(terms, max_atoms, [&](const AtomModel& m) {
    if (!ok) return;
    for (const auto& t : nonempty)
      if (m.ext(t).empty()) return;
    for (const auto& p : premises)
      if (truth(m, p) != std::optional<bool>(true)) return;
    if (truth(m, conclusion) == std::optional<bool>(false)) ok = false;
  });
  return ok;
}

inline std::mt19937_64 rng(std::uint64_t salt) { return std::mt19937_64(0x5eed0000u + salt); }

inline std::int64_t uniform(std::mt19937_64& g, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(g);
}

}  // namespace oracle
