#pragma once

// Controlled statement grammar (case-insensitive):
//
//   stmt     := det subject ("are" | "is") ["not"] predicate
//             | NAME "is" ["a" | "an"] predicate          -- singular
//             | "there is at least one" term              -- existence
//   det      := "all" | "no" | "some" | "most" | "many" | "few" | "almost all"
//             | "all but" INT | "exactly" INT | "at least" INT
//             | "[" RAT "," RAT "]" | <configured name>
//
// NAME is a single capitalized token. RAT accepts "0.3", "3/10" or "1".
// Comparatives ("double", "half") are reserved and rejected.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "syllogos/core.hpp"

namespace syllogos {

/// Named quantifier table: a determiner phrase resolved to an Interval or
/// Trapezoid. Configured names take precedence over built-in determiners.
class NamedQuantifiers {
 public:
  NamedQuantifiers() = default;

  /// JSON object: name -> {"kind":"trapezoid","a","c","d","b"} or
  /// {"kind":"interval","lo","hi"}. Values are numbers or "p/q" strings.
  static NamedQuantifiers from_json_text(std::string_view text);
  static NamedQuantifiers from_file(const std::filesystem::path& path);

  void add(std::string_view name, Quantifier q);
  /// Lookup by normalized (lowercased, whitespace-collapsed) name.
  std::optional<Quantifier> find(std::string_view name) const;
  const std::map<std::string, Quantifier>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

 private:
  std::map<std::string, Quantifier> entries_;
};

/// Only ever throws ParseError.
Statement parse_statement(std::string_view text, const NamedQuantifiers& names = {});

struct StatementList {
  std::vector<Statement> premises;
  std::optional<Statement> conclusion;
};

/// One statement per line, blank lines and '#' comments skipped. A line of
/// dashes ("---") separates premises from the single conclusion line; the
/// separator is optional here. ParseError positions are file byte offsets.
StatementList parse_statement_list(std::string_view text, const NamedQuantifiers& names = {});

/// Like parse_statement_list but the separator and conclusion are required
/// (StructureError otherwise).
Syllogism parse_syllogism_file(std::string_view text, const NamedQuantifiers& names = {});

std::string read_text_file(const std::filesystem::path& path);

}  // namespace syllogos
