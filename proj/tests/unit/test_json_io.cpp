#include <doctest.h>

#include "syllogos/json_io.hpp"
#include "syllogos/parser.hpp"
#include "syllogos/set_engine.hpp"

using namespace syllogos;

TEST_CASE("rationals serialize as num/den") {
  CHECK(to_json(Rational(1, 2)) == Json::parse(R"({"num":1,"den":2})"));
  CHECK(rational_from_json(Json::parse(R"({"num":3,"den":6})")) == Rational(1, 2));
  CHECK_THROWS_AS(rational_from_json(Json::parse(R"({"num":3,"den":0})")), InvariantViolation);
  CHECK_THROWS_AS(rational_from_json(Json::parse(R"({"num":3})")), InvariantViolation);
}

TEST_CASE("statements round-trip") {
  for (const char* text : {"All human beings are mortal", "Some S are not P", "All but 19 young people are students",
                           "[0.3,0.5] single people are young", "Most S are not P", "Socrates is a human being",
                           "there is at least one consulting detective", "exactly 2 S are P"}) {
    auto s = parse_statement(text);
    auto j = to_json(s);
    CHECK(j.contains("q"));
    CHECK(j.contains("s"));
    CHECK(j.contains("p"));
    CHECK(j.contains("neg"));
    CHECK(statement_from_json(j) == s);
    CHECK(statement_from_json(Json::parse(j.dump())) == s);
  }
  CHECK(to_json(parse_statement("Some S are not P"))["q"] == "some_not");
}

TEST_CASE("trapezoids keep their label") {
  quant::Trapezoid t{Rational(95, 100), Rational(97, 100), Rational(98, 100), 1, "almost all"};
  auto back = quantifier_from_json(to_json(Quantifier{t}));
  CHECK(std::get<quant::Trapezoid>(back).label == "almost all");
  CHECK(back == Quantifier{t});
}

TEST_CASE("verdicts round-trip") {
  auto counter = check_validity(parse_syllogism_file("All DT are MT\nAll NT are DT\n---\nSome NT are MT\n"),
                                ImportPolicy::NoImport, 6);
  auto j = to_json(counter);
  CHECK(j["verdict"] == "counter");
  CHECK(j["counter_model"]["extensions"].contains("NT"));
  CHECK(verdict_from_json(j) == counter);

  Verdict valid = verdict::Valid{6};
  CHECK(to_json(valid) == Json::parse(R"({"verdict":"valid","bound":6,"counter_model":null})"));
  CHECK(verdict_from_json(to_json(valid)) == valid);
  Verdict und = verdict::Undetermined{3};
  CHECK(verdict_from_json(to_json(und)) == und);
  CHECK_THROWS_AS(verdict_from_json(Json::parse(R"({"verdict":"maybe"})")), InvariantViolation);
}

TEST_CASE("syllogisms round-trip") {
  auto syl = parse_syllogism_file("All human beings are mortal\nAll Greeks are human beings\n---\nAll Greeks are mortal\n");
  auto j = to_json(syl);
  CHECK(j["figure"] == "I");
  CHECK(j["mood"] == "AAA");
  auto back = syllogism_from_json(j);
  CHECK(back.premises() == syl.premises());
  CHECK(back.conclusion() == syl.conclusion());
}

TEST_CASE("bad quantifier documents") {
  CHECK_THROWS_AS(quantifier_from_json(Json("sometimes")), InvariantViolation);
  CHECK_THROWS_AS(quantifier_from_json(Json::parse(R"({"kind":"all_but","k":-1})")), InvariantViolation);
  CHECK_THROWS_AS(quantifier_from_json(Json::parse(R"({"kind":"interval","lo":{"num":1,"den":2},"hi":{"num":1,"den":4}})")),
                  InvariantViolation);
}
