#include <doctest.h>

#include "oracle.hpp"
#include "syllogos/parser.hpp"
#include "syllogos/set_engine.hpp"
#include "syllogos/transforms.hpp"

using namespace syllogos;

TEST_CASE("singular statements become All over a singleton") {
  auto d = desugar_singular(parse_statement("Socrates is mortal"));
  CHECK(d == Statement(quant::All{}, Term::singleton("Socrates"), Term("mortal")));
  CHECK(d.form() == StatementForm::Categorical);
  CHECK(desugar_singular(d) == d);
  auto plain = parse_statement("All S are P");
  CHECK(desugar_singular(plain) == plain);
}

TEST_CASE("an article predicate lines up with the plural term of the syllogism") {
  auto syl = parse_syllogism_file("All human beings are mortal\nSocrates is a human being\n---\nSocrates is mortal\n");
  auto d = desugar_singulars(syl);
  CHECK(d.premises()[1] == Statement(quant::All{}, Term::singleton("Socrates"), Term("human beings")));
  CHECK(d.conclusion() == Statement(quant::All{}, Term::singleton("Socrates"), Term("mortal")));
  CHECK(desugar_singulars(d).premises() == d.premises());
  CHECK(is_valid(check_validity(syl, ImportPolicy::NoImport, 6)));
  CHECK(std::get<verdict::Valid>(check_validity(syl, ImportPolicy::NoImport, 6)).bound == 6);
}

TEST_CASE("singleton terms hold exactly one atom in every enumerated model") {
  // Without the singleton constraint {Socrates} could be empty and
  // "Some {Socrates} are mortal" would fail.
  auto syl = parse_syllogism_file("All human beings are mortal\nSocrates is a human being\n---\nsome {Socrates} are mortal\n");
  CHECK(is_valid(check_validity(syl, ImportPolicy::NoImport, 5)));
  // and it cannot hold two: "at least 2" fails
  auto two = parse_syllogism_file("Socrates is mortal\n---\nat least 2 {Socrates} are mortal\n");
  auto v = check_validity(two, ImportPolicy::NoImport, 5);
  REQUIRE(std::holds_alternative<verdict::CounterModel>(v));
  CHECK(std::get<verdict::CounterModel>(v).model.extension(Term::singleton("Socrates")).size() == 1);
}

TEST_CASE("import premises for subject terms") {
  Syllogism syl({parse_statement("No consulting detective is Spanish")},
                parse_statement("some consulting detective is not Spanish"));
  auto with = add_import_premises(syl, ImportScope::SubjectsOnly);
  REQUIRE(with.premises().size() == 2);
  CHECK(with.premises()[1] == Statement::existence(Term("consulting detective")));
  CHECK(render(with.premises()[1]) == "There is at least one consulting detective");
  CHECK(with.conclusion() == syl.conclusion());
  CHECK(add_import_premises(with, ImportScope::SubjectsOnly).premises() == with.premises());
  CHECK_FALSE(is_valid(check_validity(syl, ImportPolicy::NoImport, 4)));
  CHECK(is_valid(check_validity(with, ImportPolicy::NoImport, 4)));
}

TEST_CASE("all-terms import makes the AAI-1 form valid") {
  auto syl = parse_syllogism_file("All DT are MT\nAll NT are DT\n---\nSome NT are MT\n");
  auto all = add_import_premises(syl, ImportScope::AllTerms);
  CHECK(all.premises().size() == 5);
  CHECK(is_valid(check_validity(all, ImportPolicy::NoImport, 6)));
  // the oracle agrees
  std::vector<Statement> premises = syl.premises();
  CHECK(oracle::valid_up_to(premises, syl.conclusion(), 4, {Term("DT"), Term("MT"), Term("NT")}));
  CHECK_FALSE(oracle::valid_up_to(premises, syl.conclusion(), 4));
}
