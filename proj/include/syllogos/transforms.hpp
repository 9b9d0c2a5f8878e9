#pragma once

#include "syllogos/core.hpp"

namespace syllogos {

/// "Socrates is P" -> All({Socrates}, P). Anything else is returned as is.
Statement desugar_singular(const Statement& stmt);

/// Desugars every singular statement. A singular predicate written with an
/// article ("is a human being") is matched to the plural term of another
/// statement when exactly that term plus "s"/"es" occurs ("human beings");
/// no other morphology is attempted.
Syllogism desugar_singulars(const Syllogism& syl);

/// Appends "there is at least one T" for every T in scope that lacks one.
/// SubjectsOnly covers the subjects of the premises; AllTerms covers every
/// term of the syllogism. The conclusion is never touched.
Syllogism add_import_premises(const Syllogism& syl, ImportScope scope);

}  // namespace syllogos
