#include "rankarg/rank.hpp"

#include <charconv>
#include <stdexcept>

namespace rankarg {

Rank::Rank(std::int64_t value) : value_(value) {
  if (value < 0) throw std::invalid_argument("negative rank");
}

Rank::Rank(Value value) : value_(value) {
  if (value < 0) throw std::invalid_argument("negative rank");
}

Rank::Value Rank::value() const {
  if (top_) throw std::logic_error("TOP has no finite value");
  return value_;
}

Rank operator+(Rank a, Rank b) {
  if (a.top_ || b.top_) return Rank::top();
  return Rank(a.value_ + b.value_);
}

std::strong_ordering operator<=>(const Rank& a, const Rank& b) {
  if (a.top_ || b.top_) return a.top_ <=> b.top_;
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (b.value_ < a.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rank::to_string() const {
  if (top_) return "inf";
  std::string out = std::to_string(value_.numerator());
  if (value_.denominator() != 1) out += "/" + std::to_string(value_.denominator());
  return out;
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument("malformed rank '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Rank Rank::parse(std::string_view text) {
  if (text == "inf" || text == "INF" || text == "TOP") return top();
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rank(parse_int(text, text));
  const std::int64_t num = parse_int(text.substr(0, slash), text);
  const std::int64_t den = parse_int(text.substr(slash + 1), text);
  if (den <= 0) throw std::invalid_argument("malformed rank '" + std::string(text) + "'");
  return Rank(Value(num, den));
}

Rank rank_difference(Rank a, Rank b) {
  if (b.is_top()) throw std::domain_error("cannot subtract TOP");
  if (a.is_top()) return Rank::top();
  if (a < b) throw std::domain_error("negative rank difference");
  return Rank(a.value() - b.value());
}

}  // namespace rankarg
