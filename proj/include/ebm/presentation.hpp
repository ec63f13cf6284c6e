// Finitely presented groups on involutory generators: words, presentations and
// the line-based text format
//
//   gens x y s t
//   rel x^2
//   rel (s x y)^2 t      # comments run to end of line
//
// A word is a sequence of factors `name`, `name^k` or `( word )^k` with k >= 1.
// Every generator is an involution (g^2 = 1 holds whether or not it is listed),
// so the inverse of a word is its reversal and no inverse letters exist.

#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ebm/group.hpp"

namespace ebm {

/// Sequence of generator indices.
using Word = std::vector<int>;

struct Presentation {
  std::vector<std::string> generator_names;
  std::vector<Word> relators;
  /// Relators as written in the source, parallel to `relators`.
  std::vector<std::string> relator_text;

  std::size_t generator_count() const { return generator_names.size(); }

  std::optional<int> generator_index(std::string_view name) const {
    for (std::size_t i = 0; i < generator_names.size(); ++i)
      if (generator_names[i] == name) return int(i);
    return std::nullopt;
  }

  std::string to_text() const {
    std::string out = "gens";
    for (const auto& n : generator_names) out += " " + n;
    out += "\n";
    for (const auto& r : relator_text) out += "rel " + r + "\n";
    return out;
  }
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

inline Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

inline Word power(const Word& w, std::size_t k) {
  Word out;
  out.reserve(w.size() * k);
  for (std::size_t i = 0; i < k; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

/// Value of a word in a group whose marked elements stand for the generators.
inline Element evaluate(const MarkedGroup& m, const Word& w) {
  Element r = m.g().identity();
  for (int letter : w) r = m.g().mul(r, m.marked.at(std::size_t(letter)));
  return r;
}

namespace detail {

inline bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

/// Recursive-descent parser for one word; `column_base` makes error columns
/// refer to the original line.
class WordParser {
 public:
  WordParser(std::string_view text, const Presentation& p, std::size_t line, std::size_t column_base)
      : s_(text), p_(p), line_(line), base_(column_base) {}

  Word parse() {
    skip_ws();
    if (pos_ >= s_.size()) fail("empty word");
    Word w = parse_sequence();
    skip_ws();
    if (pos_ < s_.size()) {
      if (s_[pos_] == ')') fail("unbalanced ')'");
      fail(std::string("unexpected character '") + s_[pos_] + "'");
    }
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, base_ + pos_ + 1, what); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  Word parse_sequence() {
    Word w;
    for (;;) {
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] == ')') break;
      Word f = parse_factor();
      w.insert(w.end(), f.begin(), f.end());
    }
    return w;
  }

  Word parse_factor() {
    Word base;
    if (s_[pos_] == '(') {
      ++pos_;
      base = parse_sequence();
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("missing ')'");
      if (base.empty()) fail("empty parentheses");
      ++pos_;
    } else if (is_name_start(s_[pos_])) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && is_name_char(s_[pos_])) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      auto idx = p_.generator_index(name);
      if (!idx) {
        pos_ = start;
        fail("unknown generator '" + name + "'");
      }
      base = {*idx};
    } else {
      fail(std::string("unexpected character '") + s_[pos_] + "'");
    }
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      bool negative = false;
      if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
        negative = s_[pos_] == '-';
        ++pos_;
      }
      std::size_t digits = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (digits == pos_) {
        pos_ = start;
        fail("expected an exponent after '^'");
      }
      if (pos_ - digits > 6) {
        pos_ = start;
        fail("exponent too large");
      }
      long k = std::stol(std::string(s_.substr(digits, pos_ - digits)));
      if (negative || k <= 0) {
        pos_ = start;
        fail("exponent must be a positive integer");
      }
      return power(base, std::size_t(k));
    }
    return base;
  }

  std::string_view s_;
  const Presentation& p_;
  std::size_t line_, base_;
  std::size_t pos_ = 0;
};

struct ParsedFile {
  Presentation presentation;
  std::optional<std::vector<std::string>> marks;
  std::size_t mark_line = 0;
};

inline ParsedFile parse_lines(std::string_view text, bool allow_mark) {
  ParsedFile out;
  bool have_gens = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t p = 0;
    while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p]))) ++p;
    if (p == line.size()) {
      if (end == text.size()) break;
      continue;
    }
    std::size_t kw_end = p;
    while (kw_end < line.size() && !std::isspace(static_cast<unsigned char>(line[kw_end]))) ++kw_end;
    std::string_view keyword = line.substr(p, kw_end - p);
    std::string_view rest = line.substr(kw_end);

    if (keyword == "gens") {
      if (have_gens) throw ParseError(line_no, p + 1, "duplicate 'gens' line");
      have_gens = true;
      std::size_t q = kw_end;
      for (;;) {
        while (q < line.size() && std::isspace(static_cast<unsigned char>(line[q]))) ++q;
        if (q >= line.size()) break;
        std::size_t s = q;
        while (q < line.size() && !std::isspace(static_cast<unsigned char>(line[q]))) ++q;
        std::string name(line.substr(s, q - s));
        if (!is_name_start(name[0]) ||
            !std::all_of(name.begin(), name.end(), [](char c) { return is_name_char(c); }))
          throw ParseError(line_no, s + 1, "invalid generator name '" + name + "'");
        if (out.presentation.generator_index(name))
          throw ParseError(line_no, s + 1, "duplicate generator '" + name + "'");
        out.presentation.generator_names.push_back(std::move(name));
      }
      if (out.presentation.generator_names.empty())
        throw ParseError(line_no, kw_end + 1, "'gens' needs at least one generator");
    } else if (keyword == "rel") {
      if (!have_gens) throw ParseError(line_no, p + 1, "'rel' before 'gens'");
      WordParser wp(rest, out.presentation, line_no, kw_end);
      out.presentation.relators.push_back(wp.parse());
      std::string_view trimmed = rest;
      while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
      while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
      out.presentation.relator_text.emplace_back(trimmed);
    } else if (keyword == "mark" && allow_mark) {
      if (!have_gens) throw ParseError(line_no, p + 1, "'mark' before 'gens'");
      if (out.marks) throw ParseError(line_no, p + 1, "duplicate 'mark' line");
      std::vector<std::string> names;
      std::istringstream ss{std::string(rest)};
      for (std::string n; ss >> n;) {
        if (!out.presentation.generator_index(n))
          throw ParseError(line_no, line.find(n, kw_end) + 1, "unknown generator '" + n + "'");
        names.push_back(n);
      }
      out.marks = std::move(names);
      out.mark_line = line_no;
    } else {
      throw ParseError(line_no, p + 1, "unknown directive '" + std::string(keyword) + "'");
    }
    if (end == text.size()) break;
  }
  if (!have_gens) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing 'gens' line");
  return out;
}

}  // namespace detail

inline Presentation parse_presentation(std::string_view text) { return detail::parse_lines(text, false).presentation; }

/// Parses a single word over the generators of `p` (e.g. a subgroup generator).
inline Word parse_word(const Presentation& p, std::string_view text) {
  return detail::WordParser(text, p, 1, 0).parse();
}

}  // namespace ebm
