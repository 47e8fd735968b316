#include "rankarg/formats.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_set>
#include <vector>

#include "rankarg/generic.hpp"

namespace rankarg {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool is_name_char(char c) { return !is_space(c) && c != '(' && c != ')' && c != ',' && c != '.' && c != '%'; }

class ApxReader {
 public:
  explicit ApxReader(std::string_view text) : text_(text) {}

  ArgumentationFramework read() {
    struct PendingAttack {
      std::string from, to;
      std::size_t line;
    };
    std::vector<std::string> names;
    std::unordered_set<std::string> declared;
    std::vector<PendingAttack> attacks;

    for (skip_blank(); pos_ < text_.size(); skip_blank()) {
      const std::size_t line = line_;
      const std::string keyword = name("statement keyword");
      expect('(');
      if (keyword == "arg") {
        std::string n = name("argument name");
        expect(')');
        expect('.');
        if (declared.insert(n).second) names.push_back(std::move(n));
      } else if (keyword == "att") {
        std::string from = name("attacker name");
        expect(',');
        std::string to = name("target name");
        expect(')');
        expect('.');
        attacks.push_back({std::move(from), std::move(to), line});
      } else {
        throw ParseError(line, "unknown statement '" + keyword + "'");
      }
    }
    std::vector<std::pair<std::string, std::string>> pairs;
    for (auto& a : attacks) {
      for (const auto* endpoint : {&a.from, &a.to}) {
        if (!declared.count(*endpoint)) throw ParseError(a.line, "undeclared argument '" + *endpoint + "'");
      }
      pairs.emplace_back(std::move(a.from), std::move(a.to));
    }
    if (names.size() > kMaxArguments) throw ParseError(0, "too many arguments");
    return ArgumentationFramework(std::move(names), pairs);
  }

 private:
  void skip_blank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (is_space(c)) {
        if (c == '\n') ++line_;
        ++pos_;
      } else {
        return;
      }
    }
  }

  std::string name(const char* what) {
    skip_blank();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    if (pos_ == start) throw ParseError(error_line(), std::string("expected ") + what);
    token_line_ = line_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip_blank();
    if (pos_ >= text_.size() || text_[pos_] != c) throw ParseError(error_line(), std::string("expected '") + c + "'");
    token_line_ = line_;
    ++pos_;
  }

  // At end of input, blame the line holding the unfinished statement.
  std::size_t error_line() const { return pos_ >= text_.size() ? token_line_ : line_; }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t token_line_ = 1;
};

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t number = 1;
  while (!text.empty()) {
    const auto end = text.find('\n');
    std::string_view line = text.substr(0, end);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(number++, line);
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
}

}  // namespace

ArgumentationFramework parse_apx(std::string_view text) { return ApxReader(text).read(); }

std::string serialize_apx(const ArgumentationFramework& af) {
  std::string out;
  for (const auto& n : af.names()) out += "arg(" + n + ").\n";
  for (const auto& [f, t] : af.attack_pairs()) out += "att(" + af.name(f) + "," + af.name(t) + ").\n";
  return out;
}

ArgumentationFramework parse_tgf(std::string_view text) {
  std::vector<std::string> names;
  std::unordered_set<std::string> declared;
  std::vector<std::pair<std::string, std::string>> attacks;
  bool in_edges = false;
  for_each_line(text, [&](std::size_t number, std::string_view line) {
    const auto words = split_words(line);
    if (words.empty()) return;
    if (!in_edges) {
      if (words.size() == 1 && words[0] == "#") {
        in_edges = true;
        return;
      }
      if (words.size() != 1) throw ParseError(number, "expected a single node id");
      if (declared.insert(words[0]).second) names.push_back(words[0]);
      return;
    }
    if (words.size() != 2) throw ParseError(number, "expected an edge 'FROM TO'");
    for (const auto& endpoint : words) {
      if (!declared.count(endpoint)) throw ParseError(number, "unknown node '" + endpoint + "'");
    }
    attacks.emplace_back(words[0], words[1]);
  });
  if (!in_edges) throw ParseError(0, "missing '#' separator");
  if (names.size() > kMaxArguments) throw ParseError(0, "too many arguments");
  return ArgumentationFramework(std::move(names), attacks);
}

std::string serialize_tgf(const ArgumentationFramework& af) {
  std::string out;
  for (const auto& n : af.names()) out += n + "\n";
  out += "#\n";
  for (const auto& [f, t] : af.attack_pairs()) out += af.name(f) + " " + af.name(t) + "\n";
  return out;
}

RankingMeasure parse_measure(std::string_view text, const ArgumentationFramework& af) {
  if (af.size() > GenericWorldSpace::kMaxArguments) throw ParseError(0, "framework too large for a measure file");
  const GenericWorldSpace space(af.size());
  std::vector<Rank> ranks(space.world_count(), Rank::top());
  std::vector<bool> seen(space.world_count(), false);
  for_each_line(text, [&](std::size_t number, std::string_view line) {
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto words = split_words(line);
    if (words.empty()) return;
    // A framework without arguments has the single world "" and lines hold
    // only the rank.
    if (af.empty() && words.size() == 1) words.insert(words.begin(), "");
    if (words.size() != 2) throw ParseError(number, "expected 'STATES RANK'");
    const std::string& states = words[0];
    if (states.size() != af.size()) {
      throw ParseError(number, "state vector needs " + std::to_string(af.size()) + " digits");
    }
    GenericWorld world;
    for (char c : states) {
      if (c < '0' || c > '2') throw ParseError(number, "state digits must be 0, 1 or 2");
      world.push_back(static_cast<ArgState>(c - '0'));
    }
    const std::size_t w = space.encode(world);
    if (seen[w]) throw ParseError(number, "world " + states + " listed twice");
    seen[w] = true;
    try {
      ranks[w] = Rank::parse(words[1]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(number, e.what());
    }
  });
  RankingMeasure measure(std::move(ranks));
  if (!measure.is_normalized()) throw ParseError(0, "measure is not normalized: no world has rank 0");
  return measure;
}

}  // namespace rankarg
