#pragma once

// Validity search compiled down to region-bit masks. Shared by the serial
// reference kernel and the OpenMP kernel.

#include <cstdint>
#include <span>
#include <vector>

#include "syllogos/set_engine.hpp"
#include "syllogos/transforms.hpp"

namespace syllogos::detail {

struct CompiledStatement {
  Quantifier quantifier;
  std::uint32_t subject = 0;
  std::uint32_t predicate = 0;
  bool negated = false;

  Truth truth(std::span<const std::int64_t> counts, const SetSemantics& sem) const {
    std::int64_t inside = 0, outside = 0;
    for (std::size_t r = 0; r < counts.size(); ++r) {
      if (!(r & subject)) continue;
      bool in_p = (r & predicate) != 0;
      (in_p != negated ? inside : outside) += counts[r];
    }
    return quantifier_truth(quantifier, inside, outside, sem);
  }
};

enum class Outcome { PremisesFail, ConclusionHolds, ConclusionFails, ConclusionUndefined };

class ValidityProblem {
 public:
  ValidityProblem(const Syllogism& syl, const ValidityOptions& opts)
      : space_(prepare(syl, opts).terms()), sem_(opts.semantics) {
    const Syllogism prepared = prepare(syl, opts);
    for (const auto& p : prepared.premises()) {
      premises_.push_back(compile(p));
      bool universal = std::holds_alternative<quant::All>(p.quantifier()) ||
                       std::holds_alternative<quant::No>(p.quantifier());
      if (opts.policy == ImportPolicy::UniversalImport && universal &&
          p.form() == StatementForm::Categorical)
        nonempty_.push_back(space_.bit(p.subject()));
    }
    conclusion_ = compile(prepared.conclusion());
    for (const auto& t : space_.terms())
      if (t.is_singleton()) singletons_.push_back(space_.bit(t));
  }

  const RegionSpace& space() const noexcept { return space_; }
  std::size_t regions() const noexcept { return space_.region_count(); }

  Outcome classify(std::span<const std::int64_t> counts) const {
    for (auto mask : singletons_)
      if (RegionSpace::cardinality(counts, mask) != 1) return Outcome::PremisesFail;
    for (auto mask : nonempty_)
      if (RegionSpace::cardinality(counts, mask) == 0) return Outcome::PremisesFail;
    for (const auto& p : premises_)
      if (p.truth(counts, sem_) != Truth::True) return Outcome::PremisesFail;
    switch (conclusion_.truth(counts, sem_)) {
      case Truth::True: return Outcome::ConclusionHolds;
      case Truth::False: return Outcome::ConclusionFails;
      case Truth::Undefined: return Outcome::ConclusionUndefined;
    }
    return Outcome::PremisesFail;
  }

 private:
  static Syllogism prepare(const Syllogism& syl, const ValidityOptions& opts) {
    Syllogism out = desugar_singulars(syl);
    if (opts.policy == ImportPolicy::ExplicitPremise) out = add_import_premises(out, opts.scope);
    return out;
  }

  CompiledStatement compile(const Statement& s) const {
    return {s.quantifier(), space_.bit(s.subject()), space_.bit(s.predicate()), s.predicate_negated()};
  }

  RegionSpace space_;
  SetSemantics sem_;
  std::vector<CompiledStatement> premises_;
  CompiledStatement conclusion_;
  std::vector<std::uint32_t> nonempty_;
  std::vector<std::uint32_t> singletons_;
};

inline Verdict make_verdict(const ValidityProblem& problem, int bound, const RegionCounts* counter,
                            bool saw_undefined) {
  if (counter) return verdict::CounterModel{problem.space().materialize(*counter)};
  if (saw_undefined) return verdict::Undetermined{bound};
  return verdict::Valid{bound};
}

}  // namespace syllogos::detail
