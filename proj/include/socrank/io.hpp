#pragma once

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "socrank/core.hpp"
#include "socrank/game.hpp"

namespace socrank {

struct SyntaxError : Error {
  int line;
  int column;
  SyntaxError(int line_, int column_, const std::string& what)
      : Error("line " + std::to_string(line_) + ", column " + std::to_string(column_) + ": " +
              what),
        line(line_), column(column_) {}
};

namespace detail {

inline bool is_label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-';
}

struct Line {
  int number = 0;
  std::string text;
};

// Strips comments and blank lines, keeping original line numbers.
inline std::vector<Line> logical_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    bool blank = true;
    for (char c : raw)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) out.push_back({number, raw});
  }
  return out;
}

class Cursor {
 public:
  explicit Cursor(const Line& line) : line_(line) {}

  void skip_space() {
    while (pos_ < line_.text.size() &&
           std::isspace(static_cast<unsigned char>(line_.text[pos_])))
      ++pos_;
  }

  bool done() {
    skip_space();
    return pos_ >= line_.text.size();
  }

  char peek() {
    skip_space();
    return pos_ < line_.text.size() ? line_.text[pos_] : '\0';
  }

  bool consume(char c) {
    skip_space();
    if (pos_ < line_.text.size() && line_.text[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!consume(c)) fail(std::string("expected ") + what);
  }

  std::string label() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < line_.text.size() && is_label_char(line_.text[pos_])) ++pos_;
    if (pos_ == start) fail("expected a label");
    return line_.text.substr(start, pos_ - start);
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(line_.number, static_cast<int>(pos_) + 1, what);
  }

 private:
  const Line& line_;
  std::size_t pos_ = 0;
};

inline bool starts_with_key(const Line& line, std::string_view key, std::string& rest) {
  std::size_t p = 0;
  while (p < line.text.size() && std::isspace(static_cast<unsigned char>(line.text[p]))) ++p;
  if (line.text.compare(p, key.size(), key) != 0) return false;
  rest = line.text.substr(p + key.size());
  return true;
}

}  // namespace detail

// .pr format: a `players:` line with whitespace-separated labels, then a
// `ranking:` line with classes separated by `>`, coalitions inside a class
// separated by `~`, each coalition written `{a,b,...}`. The optional final
// class token `*` stands for all unlisted coalitions.
inline PowerRelation parse_power_relation(std::istream& in) {
  const auto lines = detail::logical_lines(in);
  if (lines.size() < 2) throw SyntaxError(1, 1, "expected a players: line and a ranking: line");
  if (lines.size() > 2)
    throw SyntaxError(lines[2].number, 1, "unexpected extra line");

  std::string rest;
  if (!detail::starts_with_key(lines[0], "players:", rest))
    throw SyntaxError(lines[0].number, 1, "expected players:");
  std::vector<std::string> names;
  {
    detail::Line body{lines[0].number, rest};
    detail::Cursor cur(body);
    while (!cur.done()) names.push_back(cur.label());
    if (names.empty()) cur.fail("expected at least one player label");
  }
  PlayerSet players(std::move(names));

  if (!detail::starts_with_key(lines[1], "ranking:", rest))
    throw SyntaxError(lines[1].number, 1, "expected ranking:");
  detail::Line body{lines[1].number, rest};
  detail::Cursor cur(body);

  std::vector<std::vector<Coalition>> classes;
  bool saw_sink = false;
  while (true) {
    std::vector<Coalition> cls;
    if (cur.consume('*')) {
      saw_sink = true;
      if (!cur.done()) cur.fail("'*' must be the final class");
      classes.emplace_back();  // filled below
      break;
    }
    while (true) {
      cur.expect('{', "'{'");
      Coalition c = 0;
      if (!cur.consume('}')) {
        while (true) {
          const std::string label = cur.label();
          const auto idx = players.index_of(label);
          if (!idx) throw UnknownPlayerError(label);
          c |= Coalition{1} << *idx;
          if (cur.consume('}')) break;
          cur.expect(',', "',' or '}'");
        }
      }
      cls.push_back(c);
      if (!cur.consume('~')) break;
    }
    classes.push_back(std::move(cls));
    if (cur.done()) break;
    cur.expect('>', "'>' between classes");
  }

  if (saw_sink) {
    std::vector<bool> seen(static_cast<std::size_t>(1u << players.size()), false);
    for (const auto& cls : classes)
      for (Coalition c : cls) seen[c] = true;
    auto& sink = classes.back();
    const Coalition full = static_cast<Coalition>((1u << players.size()) - 1u);
    for (Coalition c = 1; c <= full; ++c)
      if (!seen[c]) sink.push_back(c);
  }
  return PowerRelation(std::move(players), std::move(classes));
}

inline PowerRelation parse_power_relation(const std::string& text) {
  std::istringstream in(text);
  return parse_power_relation(in);
}

// Round-trips through parse_power_relation. Coalitions inside a class are
// emitted in ascending bit-pattern order; no `*` sink is emitted.
inline void serialize_power_relation(const PowerRelation& pr, std::ostream& out) {
  out << "players:";
  for (const auto& name : pr.players().names()) out << ' ' << name;
  out << "\nranking:";
  bool first_class = true;
  for (const auto& cls : pr.classes()) {
    auto sorted = cls;
    std::sort(sorted.begin(), sorted.end());
    out << (first_class ? " " : " > ");
    first_class = false;
    bool first = true;
    for (Coalition c : sorted) {
      if (!first) out << " ~ ";
      first = false;
      out << pr.describe(c);
    }
  }
  out << '\n';
}

inline std::string serialize_power_relation(const PowerRelation& pr) {
  std::ostringstream out;
  serialize_power_relation(pr, out);
  return out.str();
}

// .game format: `houses: <m>`, then `quota: <q_1> ... <q_m>`, then one
// `player <label> <w_1> ... <w_m>` line per player.
inline MulticameralGame parse_game(std::istream& in) {
  const auto lines = detail::logical_lines(in);
  if (lines.size() < 3)
    throw SyntaxError(1, 1, "expected houses:, quota: and at least one player line");

  auto parse_int = [](detail::Cursor& cur) {
    const std::string tok = cur.label();
    try {
      std::size_t used = 0;
      const long long v = std::stoll(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      return static_cast<std::int64_t>(v);
    } catch (const std::exception&) {
      cur.fail("expected an integer, got '" + tok + "'");
    }
  };

  std::string rest;
  if (!detail::starts_with_key(lines[0], "houses:", rest))
    throw SyntaxError(lines[0].number, 1, "expected houses:");
  std::size_t m = 0;
  {
    detail::Line body{lines[0].number, rest};
    detail::Cursor cur(body);
    const std::int64_t v = parse_int(cur);
    if (v < 1 || v > 64) cur.fail("house count must be in [1, 64]");
    if (!cur.done()) cur.fail("unexpected trailing text");
    m = static_cast<std::size_t>(v);
  }

  if (!detail::starts_with_key(lines[1], "quota:", rest))
    throw SyntaxError(lines[1].number, 1, "expected quota:");
  std::vector<std::int64_t> quotas;
  {
    detail::Line body{lines[1].number, rest};
    detail::Cursor cur(body);
    while (!cur.done()) quotas.push_back(parse_int(cur));
    if (quotas.size() != m)
      throw DimensionMismatchError("quota line has " + std::to_string(quotas.size()) +
                                   " entries for " + std::to_string(m) + " houses");
  }
  for (std::int64_t q : quotas)
    if (q <= 0) throw NonPositiveQuotaError("quotas must be positive");

  std::vector<std::string> names;
  std::vector<std::vector<std::int64_t>> weights_by_player;
  for (std::size_t idx = 2; idx < lines.size(); ++idx) {
    detail::Cursor cur(lines[idx]);
    const std::string keyword = cur.label();
    if (keyword != "player") cur.fail("expected a player line");
    names.push_back(cur.label());
    std::vector<std::int64_t> weights;
    while (!cur.done()) weights.push_back(parse_int(cur));
    if (weights.size() != m)
      throw DimensionMismatchError("player " + names.back() + " has " +
                                   std::to_string(weights.size()) + " weights for " +
                                   std::to_string(m) + " houses");
    for (std::int64_t w : weights)
      if (w < 0) cur.fail("weights must be non-negative");
    weights_by_player.push_back(std::move(weights));
  }

  PlayerSet players(std::move(names));
  std::vector<House> houses(m);
  for (std::size_t h = 0; h < m; ++h) {
    houses[h].quota = quotas[h];
    houses[h].weights.resize(static_cast<std::size_t>(players.size()));
    for (int p = 0; p < players.size(); ++p)
      houses[h].weights[static_cast<std::size_t>(p)] =
          weights_by_player[static_cast<std::size_t>(p)][h];
  }
  return MulticameralGame(std::move(players), std::move(houses));
}

inline MulticameralGame parse_game(const std::string& text) {
  std::istringstream in(text);
  return parse_game(in);
}

inline void serialize_game(const MulticameralGame& g, std::ostream& out) {
  out << "houses: " << g.house_count() << "\nquota:";
  for (const House& h : g.houses()) out << ' ' << h.quota;
  out << '\n';
  for (int p = 0; p < g.players().size(); ++p) {
    out << "player " << g.players().name(p);
    for (const House& h : g.houses()) out << ' ' << h.weights[static_cast<std::size_t>(p)];
    out << '\n';
  }
}

}  // namespace socrank
