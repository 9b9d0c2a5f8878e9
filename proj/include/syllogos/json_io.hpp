#pragma once

// JSON document schema (see README "JSON schema"):
//   rational   {"num": int, "den": int}
//   quantifier "all" | "no" | "some" | "some_not" | "most" | "many" | "few" | "almost_all"
//              | {"kind": "all_but"|"exactly"|"at_least", "k": int}
//              | {"kind": "interval", "lo": rational, "hi": rational}
//              | {"kind": "trapezoid", "a", "c", "d", "b": rational}
//   statement  {"q": quantifier, "s": term, "p": term, "neg": bool [, "form": "singular"|"existence"]}
//   term       display string; singleton terms are written "{Name}"

#include <json.hpp>

#include "syllogos/conditional_engine.hpp"
#include "syllogos/core.hpp"
#include "syllogos/numeric_engine.hpp"
#include "syllogos/set_engine.hpp"

namespace syllogos {

using Json = nlohmann::json;

Json to_json(const Rational& r);
Json to_json(const Quantifier& q);
Json to_json(const Statement& s);
Json to_json(const Syllogism& s);
Json to_json(const FiniteModel& m);
Json to_json(const Verdict& v);
Json to_json(const RegionVector& v);
Json to_json(const IntervalConclusion& c);
Json to_json(const FuzzyConclusion& c);
Json to_json(const ExceptiveConclusion& c);
Json to_json(const ProbConstraint& c);
Json to_json(const HeuristicConclusion& c);

// Readers throw InvariantViolation on schema violations.
Rational rational_from_json(const Json& j);
Quantifier quantifier_from_json(const Json& j);
Statement statement_from_json(const Json& j);
Syllogism syllogism_from_json(const Json& j);
FiniteModel model_from_json(const Json& j);
Verdict verdict_from_json(const Json& j);

}  // namespace syllogos
