#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace rankarg {

/// Frameworks are limited to this many arguments; sets are single 64-bit masks.
inline constexpr std::size_t kMaxArguments = 64;

class FrameworkError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Subset of a framework's arguments, addressed by dense argument index.
class ArgumentSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = std::size_t;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    std::size_t operator*() const { return static_cast<std::size_t>(std::countr_zero(rest_)); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr ArgumentSet() = default;
  static constexpr ArgumentSet from_mask(std::uint64_t mask) {
    ArgumentSet s;
    s.mask_ = mask;
    return s;
  }
  /// The first `n` arguments.
  static constexpr ArgumentSet first(std::size_t n) {
    return from_mask(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr ArgumentSet singleton(std::size_t i) { return from_mask(std::uint64_t{1} << i); }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr bool contains(std::size_t i) const { return (mask_ >> i) & 1U; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask_)); }

  constexpr void insert(std::size_t i) { mask_ |= std::uint64_t{1} << i; }
  constexpr void erase(std::size_t i) { mask_ &= ~(std::uint64_t{1} << i); }
  constexpr ArgumentSet with(std::size_t i) const { return from_mask(mask_ | (std::uint64_t{1} << i)); }
  constexpr ArgumentSet without(std::size_t i) const { return from_mask(mask_ & ~(std::uint64_t{1} << i)); }

  constexpr bool is_subset_of(ArgumentSet other) const { return (mask_ & ~other.mask_) == 0; }
  constexpr bool intersects(ArgumentSet other) const { return (mask_ & other.mask_) != 0; }

  iterator begin() const { return iterator(mask_); }
  iterator end() const { return iterator(0); }

  friend constexpr ArgumentSet operator|(ArgumentSet a, ArgumentSet b) { return from_mask(a.mask_ | b.mask_); }
  friend constexpr ArgumentSet operator&(ArgumentSet a, ArgumentSet b) { return from_mask(a.mask_ & b.mask_); }
  /// Set difference.
  friend constexpr ArgumentSet operator-(ArgumentSet a, ArgumentSet b) { return from_mask(a.mask_ & ~b.mask_); }
  constexpr ArgumentSet& operator|=(ArgumentSet o) {
    mask_ |= o.mask_;
    return *this;
  }
  constexpr ArgumentSet& operator&=(ArgumentSet o) {
    mask_ &= o.mask_;
    return *this;
  }
  friend constexpr bool operator==(ArgumentSet, ArgumentSet) = default;

 private:
  std::uint64_t mask_ = 0;
};

/// Size first, then lexicographic comparison of the ascending index lists.
bool canonical_less(ArgumentSet a, ArgumentSet b);

/// A family of argument sets kept sorted by canonical_less without duplicates.
using ExtensionSet = std::vector<ArgumentSet>;

/// Sort canonically and drop duplicates.
void normalize(ExtensionSet& sets);
ExtensionSet normalized(ExtensionSet sets);

using AttackPair = std::pair<std::size_t, std::size_t>;

/// Immutable Dung framework (arguments, attacks). Arguments keep their declared
/// order; attacks are a set and may include self-attacks.
class ArgumentationFramework {
 public:
  ArgumentationFramework() = default;

  /// Throws FrameworkError on duplicate names, undeclared attack endpoints, or
  /// more than kMaxArguments arguments.
  ArgumentationFramework(std::vector<std::string> arguments,
                         const std::vector<std::pair<std::string, std::string>>& attacks);
  ArgumentationFramework(std::vector<std::string> arguments, const std::vector<AttackPair>& attacks);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  ArgumentSet all() const { return ArgumentSet::first(size()); }
  bool attacks(std::size_t from, std::size_t to) const { return targets_[from].contains(to); }
  ArgumentSet targets(std::size_t from) const { return targets_[from]; }
  ArgumentSet attackers(std::size_t to) const { return attackers_[to]; }
  /// Sorted (from, to) pairs.
  const std::vector<AttackPair>& attack_pairs() const { return pairs_; }

  /// Throws FrameworkError on unknown names.
  ArgumentSet set_of(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(ArgumentSet s) const;
  /// "[a,c]" with members in declared order.
  std::string format(ArgumentSet s) const;

  friend bool operator==(const ArgumentationFramework& a, const ArgumentationFramework& b) {
    return a.names_ == b.names_ && a.pairs_ == b.pairs_;
  }

 private:
  void build(const std::vector<AttackPair>& attacks);

  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<ArgumentSet> targets_;
  std::vector<ArgumentSet> attackers_;
  std::vector<AttackPair> pairs_;
};

/// Non-self-attacking arguments.
ArgumentSet non_self_attacking(const ArgumentationFramework& af);

bool is_conflict_free(const ArgumentationFramework& af, ArgumentSet s);

/// Arguments attacked by some member of `s`.
ArgumentSet attack_image(const ArgumentationFramework& af, ArgumentSet s);

/// Arguments attacking some member of `s`.
ArgumentSet attacker_image(const ArgumentationFramework& af, ArgumentSet s);

/// Calls `visit(ArgumentSet)` once per conflict-free subset of `universe`.
///
/// Depth-first over ascending argument index, inclusion branch first; a
/// partial set is never extended by a conflicting argument, so the work is
/// proportional to the number of conflict-free sets.
template <typename Visitor>
void for_each_conflict_free(const ArgumentationFramework& af, ArgumentSet universe, Visitor&& visit) {
  std::vector<std::size_t> order(universe.begin(), universe.end());
  auto step = [&](auto&& self, std::size_t depth, ArgumentSet current, ArgumentSet blocked) -> void {
    if (depth == order.size()) {
      visit(current);
      return;
    }
    const std::size_t a = order[depth];
    if (!blocked.contains(a)) {
      self(self, depth + 1, current.with(a), blocked | af.targets(a) | af.attackers(a));
    }
    self(self, depth + 1, current, blocked);
  };
  ArgumentSet self_attackers = universe - non_self_attacking(af);
  step(step, 0, ArgumentSet{}, self_attackers);
}

/// Collects for_each_conflict_free output in enumeration order.
std::vector<ArgumentSet> enumerate_conflict_free(const ArgumentationFramework& af, ArgumentSet universe);

/// Inclusion-maximal conflict-free subsets of `universe`, canonically sorted.
ExtensionSet maximal_conflict_free(const ArgumentationFramework& af, ArgumentSet universe);

/// Sub-framework on `keep` with the induced attacks. Argument order is preserved.
ArgumentationFramework restrict(const ArgumentationFramework& af, ArgumentSet keep);

/// Renames every argument through `rename`. Throws FrameworkError unless the
/// map is total on the arguments and injective.
ArgumentationFramework apply_isomorphism(const ArgumentationFramework& af,
                                         const std::map<std::string, std::string>& rename);

}  // namespace rankarg
