#include "syllogos/parser.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

namespace syllogos {

namespace {

struct Token {
  std::string text;
  std::string lower;
  std::size_t pos = 0;
  std::size_t end() const { return pos + text.size(); }
};

std::string lower_copy(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::vector<Token> tokenize(std::string_view text, std::size_t from) {
  std::vector<Token> out;
  std::size_t i = from;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    if (i >= text.size()) break;
    std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    std::string word(text.substr(start, i - start));
    out.push_back({word, lower_copy(word), start});
  }
  return out;
}

std::string normalize_name(std::string_view s) {
  std::string out;
  for (const auto& t : tokenize(s, 0)) {
    if (!out.empty()) out.push_back(' ');
    out += t.lower;
  }
  return out;
}

std::vector<std::string> split_words(const std::string& normalized) {
  std::vector<std::string> words;
  std::istringstream in(normalized);
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

class StatementParser {
 public:
  StatementParser(std::string_view text, const NamedQuantifiers& names)
      : text_(text), names_(names) {}

  Statement parse() {
    std::size_t start = 0;
    while (start < text_.size() && is_space(text_[start])) ++start;
    if (start == text_.size()) throw ParseError(start, "a statement", "");

    if (text_[start] == '[') {
      Quantifier q = parse_bracket(start);
      tokens_ = tokenize(text_, bracket_end_);
      return parse_body(std::move(q), 0);
    }

    tokens_ = tokenize(text_, start);
    if (auto existence = try_existence()) return *existence;

    std::size_t next = 0;
    if (auto q = match_determiner(next)) return parse_body(std::move(*q), next);

    if (auto singular = try_singular()) return *singular;

    const Token& t = tokens_[0];
    if (t.lower == "double" || t.lower == "half")
      throw ParseError(t.pos, "a supported determiner (comparative quantifiers are reserved)",
                       t.text);
    throw ParseError(t.pos, "a determiner", t.text);
  }

 private:
  std::size_t end_of_text() const { return text_.size(); }

  std::string join(std::size_t from, std::size_t to) const {
    return std::string(text_.substr(tokens_[from].pos, tokens_[to - 1].end() - tokens_[from].pos));
  }

  Statement build(const std::function<Statement()>& make) const {
    try {
      return make();
    } catch (const InvariantViolation& e) {
      throw ParseError(0, std::string("a well-formed statement (") + e.what() + ")",
                       std::string(text_));
    }
  }

  Rational parse_rat(std::string_view s, std::size_t pos) const {
    auto r = parse_rational(s);
    if (!r) throw ParseError(pos, "a rational number", std::string(s));
    if (!in_unit_interval(*r)) throw ParseError(pos, "a proportion in [0,1]", std::string(s));
    return *r;
  }

  Quantifier parse_bracket(std::size_t open) {
    auto close = text_.find(']', open);
    if (close == std::string_view::npos) throw ParseError(end_of_text(), "']'", "");
    auto inner = text_.substr(open + 1, close - open - 1);
    auto comma = inner.find(',');
    if (comma == std::string_view::npos || inner.find(',', comma + 1) != std::string_view::npos)
      throw ParseError(open, "an interval [lo,hi]", std::string(text_.substr(open, close - open + 1)));
    auto trim = [](std::string_view s, std::size_t& offset) {
      while (!s.empty() && is_space(s.front())) s.remove_prefix(1), ++offset;
      while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
      return s;
    };
    std::size_t lo_pos = open + 1, hi_pos = open + 2 + comma;
    auto lo_text = trim(inner.substr(0, comma), lo_pos);
    auto hi_text = trim(inner.substr(comma + 1), hi_pos);
    Rational lo = parse_rat(lo_text, lo_pos);
    Rational hi = parse_rat(hi_text, hi_pos);
    if (lo > hi)
      throw ParseError(open, "an interval with lo <= hi",
                       std::string(text_.substr(open, close - open + 1)));
    bracket_end_ = close + 1;
    return quant::Interval{lo, hi, {}};
  }

  std::optional<Statement> try_existence() {
    static const char* kWords[] = {"there", "is", "at", "least", "one"};
    if (tokens_.size() < 5) return std::nullopt;
    for (std::size_t i = 0; i < 5; ++i)
      if (tokens_[i].lower != kWords[i]) return std::nullopt;
    if (tokens_.size() == 5) throw ParseError(end_of_text(), "a term", "");
    std::string name = join(5, tokens_.size());
    return build([&] { return Statement::existence(Term(name)); });
  }

  bool prefix_is(std::size_t at, const std::vector<std::string>& words) const {
    if (at + words.size() > tokens_.size()) return false;
    for (std::size_t i = 0; i < words.size(); ++i)
      if (tokens_[at + i].lower != words[i]) return false;
    return true;
  }

  std::int64_t count_after(std::size_t index) const {
    if (index >= tokens_.size()) throw ParseError(end_of_text(), "a count", "");
    const Token& t = tokens_[index];
    if (!all_digits(t.text) || t.text.size() > 15) throw ParseError(t.pos, "a count", t.text);
    return std::stoll(t.text);
  }

  std::optional<Quantifier> match_determiner(std::size_t& next) {
    // Configured names first, longest phrase wins.
    std::size_t best_len = 0;
    std::optional<Quantifier> best;
    for (const auto& [name, q] : names_.entries()) {
      auto words = split_words(name);
      if (words.size() > best_len && prefix_is(0, words)) {
        best_len = words.size();
        best = q;
      }
    }
    if (best) {
      next = best_len;
      return best;
    }

    const std::string& w0 = tokens_[0].lower;
    if (prefix_is(0, {"almost", "all"})) return next = 2, Quantifier{quant::AlmostAll{}};
    if (prefix_is(0, {"all", "but"})) {
      auto k = count_after(2);
      next = 3;
      return quant::AllBut{k};
    }
    if (prefix_is(0, {"at", "least"})) {
      auto k = count_after(2);
      next = 3;
      return quant::AtLeast{k};
    }
    if (w0 == "exactly") {
      auto k = count_after(1);
      next = 2;
      return quant::Exactly{k};
    }
    next = 1;
    if (w0 == "all") return quant::All{};
    if (w0 == "no") return quant::No{};
    if (w0 == "some") return quant::Some{};
    if (w0 == "most") return quant::Most{};
    if (w0 == "many") return quant::Many{};
    if (w0 == "few") return quant::Few{};
    return std::nullopt;
  }

  std::optional<Statement> try_singular() {
    if (tokens_.size() < 3 || tokens_[1].lower != "is") return std::nullopt;
    const Token& name = tokens_[0];
    if (!std::isupper(static_cast<unsigned char>(name.text[0]))) return std::nullopt;
    std::size_t i = 2;
    if (tokens_[i].lower == "not")
      throw ParseError(tokens_[i].pos, "an affirmative singular statement", tokens_[i].text);
    bool article = false;
    if (tokens_[i].lower == "a" || tokens_[i].lower == "an") {
      article = true;
      ++i;
    }
    if (i >= tokens_.size()) throw ParseError(end_of_text(), "a predicate term", "");
    std::string predicate = join(i, tokens_.size());
    return build([&] { return Statement::singular(Term(name.text), Term(predicate), article); });
  }

  Statement parse_body(Quantifier q, std::size_t first) {
    std::size_t copula = first;
    while (copula < tokens_.size() && tokens_[copula].lower != "are" && tokens_[copula].lower != "is")
      ++copula;
    if (copula == tokens_.size()) throw ParseError(end_of_text(), "copula 'are' or 'is'", "");
    if (copula == first) throw ParseError(tokens_[copula].pos, "a subject term", tokens_[copula].text);

    std::size_t i = copula + 1;
    bool negated = false;
    if (i < tokens_.size() && tokens_[i].lower == "not") {
      if (std::holds_alternative<quant::No>(q))
        throw ParseError(tokens_[i].pos, "an affirmative predicate after 'no'", tokens_[i].text);
      negated = true;
      ++i;
    }
    if (i >= tokens_.size()) throw ParseError(end_of_text(), "a predicate term", "");

    std::string subject = join(first, copula);
    std::string predicate = join(i, tokens_.size());
    return build([&] { return Statement(q, Term(subject), Term(predicate), negated); });
  }

  std::string_view text_;
  const NamedQuantifiers& names_;
  std::vector<Token> tokens_;
  std::size_t bracket_end_ = 0;
};

Rational json_rational(const nlohmann::json& j, const std::string& field) {
  std::optional<Rational> r;
  if (j.is_string()) {
    r = parse_rational(j.get<std::string>());
  } else if (j.is_number_integer()) {
    r = Rational(j.get<std::int64_t>());
  } else if (j.is_number()) {
    // Shortest round-trip decimal, e.g. 0.95 -> "0.95".
    r = parse_rational(j.dump());
  } else if (j.is_object() && j.contains("num") && j.contains("den")) {
    auto den = j.at("den").get<std::int64_t>();
    if (den != 0) r = Rational(j.at("num").get<std::int64_t>(), den);
  }
  if (!r) throw InvariantViolation("quantifier config: bad rational for '" + field + "'");
  return *r;
}

}  // namespace

void NamedQuantifiers::add(std::string_view name, Quantifier q) {
  auto key = normalize_name(name);
  if (key.empty()) throw InvariantViolation("quantifier config: empty name");
  validate(q);
  std::visit(
      [&](auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, quant::Interval> || std::is_same_v<T, quant::Trapezoid>) {
          if (x.label.empty()) x.label = key;
        }
      },
      q);
  entries_.insert_or_assign(key, std::move(q));
}

std::optional<Quantifier> NamedQuantifiers::find(std::string_view name) const {
  auto it = entries_.find(normalize_name(name));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

NamedQuantifiers NamedQuantifiers::from_json_text(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvariantViolation(std::string("quantifier config: ") + e.what());
  }
  if (!doc.is_object()) throw InvariantViolation("quantifier config: top level must be an object");

  NamedQuantifiers out;
  for (const auto& [name, spec] : doc.items()) {
    if (!spec.is_object() || !spec.contains("kind"))
      throw InvariantViolation("quantifier config: entry '" + name + "' needs a kind");
    auto kind = spec.at("kind").get<std::string>();
    auto field = [&](const char* f) {
      if (!spec.contains(f))
        throw InvariantViolation("quantifier config: entry '" + name + "' lacks '" + f + "'");
      return json_rational(spec.at(f), name + "." + f);
    };
    if (kind == "trapezoid") {
      out.add(name, quant::Trapezoid{field("a"), field("c"), field("d"), field("b"), {}});
    } else if (kind == "interval") {
      out.add(name, quant::Interval{field("lo"), field("hi"), {}});
    } else {
      throw InvariantViolation("quantifier config: unknown kind '" + kind + "'");
    }
  }
  return out;
}

NamedQuantifiers NamedQuantifiers::from_file(const std::filesystem::path& path) {
  return from_json_text(read_text_file(path));
}

Statement parse_statement(std::string_view text, const NamedQuantifiers& names) {
  return StatementParser(text, names).parse();
}

StatementList parse_statement_list(std::string_view text, const NamedQuantifiers& names) {
  StatementList out;
  bool after_separator = false;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    auto nl = text.find('\n', line_start);
    std::size_t line_end = nl == std::string_view::npos ? text.size() : nl;
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t lead = 0;
    while (lead < line.size() && is_space(line[lead])) ++lead;
    std::string_view body = line.substr(lead);
    while (!body.empty() && is_space(body.back())) body.remove_suffix(1);

    if (!body.empty() && body.front() != '#') {
      bool separator =
          body.size() >= 3 && std::all_of(body.begin(), body.end(), [](char c) { return c == '-'; });
      if (separator) {
        if (after_separator) throw StructureError("more than one '---' separator");
        after_separator = true;
      } else {
        Statement s = [&] {
          try {
            return parse_statement(line, names);
          } catch (const ParseError& e) {
            throw ParseError(line_start + e.position(), e.expected(), e.found());
          }
        }();
        if (!after_separator) {
          out.premises.push_back(std::move(s));
        } else {
          if (out.conclusion) throw StructureError("more than one conclusion after '---'");
          out.conclusion = std::move(s);
        }
      }
    }
    if (nl == std::string_view::npos) break;
    line_start = nl + 1;
  }
  if (after_separator && !out.conclusion) throw StructureError("no conclusion after '---'");
  if (out.premises.empty()) throw StructureError("no premises");
  return out;
}

Syllogism parse_syllogism_file(std::string_view text, const NamedQuantifiers& names) {
  auto list = parse_statement_list(text, names);
  if (!list.conclusion) throw StructureError("missing '---' separator before the conclusion");
  return Syllogism(std::move(list.premises), std::move(*list.conclusion));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace syllogos
