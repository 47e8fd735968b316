#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace rankarg {

/// Extended nonnegative rational: a finite value >= 0 or TOP (infinity).
///
/// TOP absorbs addition and is the greatest element, so min(TOP, x) = x.
class Rank {
 public:
  using Value = boost::rational<std::int64_t>;

  constexpr Rank() = default;
  /// Throws std::invalid_argument for negative values.
  Rank(std::int64_t value);  // NOLINT(google-explicit-constructor)
  explicit Rank(Value value);

  static Rank top() {
    Rank r;
    r.top_ = true;
    return r;
  }

  bool is_top() const { return top_; }
  bool is_finite() const { return !top_; }
  /// Throws std::logic_error on TOP.
  Value value() const;
  bool is_integer() const { return !top_ && value_.denominator() == 1; }

  friend Rank operator+(Rank a, Rank b);
  Rank& operator+=(Rank o) { return *this = *this + o; }

  friend bool operator==(const Rank& a, const Rank& b) {
    return a.top_ == b.top_ && (a.top_ || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const Rank& a, const Rank& b);

  /// "inf", "3" or "3/2".
  std::string to_string() const;
  /// Accepts the to_string forms; throws std::invalid_argument otherwise.
  static Rank parse(std::string_view text);

 private:
  Value value_{0};
  bool top_ = false;
};

/// a - b for finite b <= a; TOP - finite = TOP. Throws std::domain_error when
/// b is TOP or exceeds a.
Rank rank_difference(Rank a, Rank b);

}  // namespace rankarg
