#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "rankarg/rank.hpp"

namespace rankarg {

/// A proposition over a finite world space, stored extensionally as the set
/// of worlds where it holds.
class Proposition {
 public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  Proposition() = default;
  explicit Proposition(std::size_t world_count, bool value = false);
  explicit Proposition(Bits bits) : bits_(std::move(bits)) {}

  static Proposition top(std::size_t world_count) { return Proposition(world_count, true); }
  static Proposition bottom(std::size_t world_count) { return Proposition(world_count, false); }

  std::size_t world_count() const { return bits_.size(); }
  bool holds(std::size_t world) const { return bits_.test(world); }
  void set(std::size_t world, bool value = true) { bits_.set(world, value); }
  bool is_empty() const { return bits_.none(); }
  std::size_t count() const { return bits_.count(); }
  /// Extensional entailment: every world of *this satisfies `other`.
  bool entails(const Proposition& other) const;
  const Bits& bits() const { return bits_; }

  template <typename Fn>
  void for_each_world(Fn&& fn) const {
    for (auto w = bits_.find_first(); w != Bits::npos; w = bits_.find_next(w)) fn(w);
  }

  Proposition operator~() const { return Proposition(~bits_); }
  Proposition& operator&=(const Proposition& o);
  Proposition& operator|=(const Proposition& o);
  friend Proposition operator&(Proposition a, const Proposition& b) { return a &= b; }
  friend Proposition operator|(Proposition a, const Proposition& b) { return a |= b; }
  friend bool operator==(const Proposition& a, const Proposition& b) { return a.bits_ == b.bits_; }

 private:
  Bits bits_;
};

/// All truth assignments over a list of named atoms. World w assigns atom i
/// the value of bit i of w.
class WorldSpace {
 public:
  static constexpr std::size_t kMaxAtoms = 24;

  explicit WorldSpace(std::vector<std::string> atoms);

  std::size_t atom_count() const { return atoms_.size(); }
  std::size_t world_count() const { return std::size_t{1} << atoms_.size(); }
  const std::vector<std::string>& atoms() const { return atoms_; }

  Proposition atom(std::size_t index) const;
  /// Throws std::invalid_argument on an unknown name.
  Proposition atom(std::string_view name) const;
  Proposition top() const { return Proposition::top(world_count()); }
  Proposition bottom() const { return Proposition::bottom(world_count()); }
  bool value(std::size_t world, std::size_t atom_index) const { return (world >> atom_index) & 1U; }

 private:
  std::vector<std::string> atoms_;
};

/// Rank assignment over the worlds of a finite space. Proposition ranks are
/// minima over their worlds; the empty proposition has rank TOP.
///
/// Measures built by shifting may be unnormalized; that state is recorded and
/// satisfaction checks reject it.
class RankingMeasure {
 public:
  RankingMeasure() = default;
  explicit RankingMeasure(std::vector<Rank> world_ranks);

  /// R0: every world at rank 0.
  static RankingMeasure uniform(std::size_t world_count);

  std::size_t world_count() const { return ranks_.size(); }
  Rank world_rank(std::size_t world) const { return ranks_.at(world); }
  std::span<const Rank> world_ranks() const { return ranks_; }
  /// Some world has rank 0 (so R(TOP) = 0).
  bool is_normalized() const { return normalized_; }

  friend bool operator==(const RankingMeasure& a, const RankingMeasure& b) { return a.ranks_ == b.ranks_; }

 private:
  std::vector<Rank> ranks_;
  bool normalized_ = false;
};

Rank rank_of(const RankingMeasure& measure, const Proposition& p);

/// R(consequent | condition) = R(condition & consequent) - R(condition), TOP
/// when the condition has rank TOP.
Rank conditional_rank(const RankingMeasure& measure, const Proposition& consequent, const Proposition& condition);

enum class ConditionalKind { Strict, Default };

/// `antecedent ⊐ consequent` (strict) or `antecedent ⇝ consequent` (default).
struct Conditional {
  ConditionalKind kind = ConditionalKind::Default;
  Proposition antecedent;
  Proposition consequent;
  std::string label;

  static Conditional strict(Proposition antecedent, Proposition consequent, std::string label = {});
  static Conditional defeasible(Proposition antecedent, Proposition consequent, std::string label = {});

  /// antecedent & ~consequent, the region a construction shift raises.
  Proposition violation() const { return antecedent & ~consequent; }
  Proposition verification() const { return antecedent & consequent; }
};

/// Ordered list of conditionals over one world space.
class DefaultBase {
 public:
  explicit DefaultBase(std::size_t world_count) : world_count_(world_count) {}

  /// Throws std::invalid_argument if the conditional lives in another space.
  void add(Conditional c);

  std::size_t world_count() const { return world_count_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const Conditional& operator[](std::size_t i) const { return items_.at(i); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

 private:
  std::size_t world_count_;
  std::vector<Conditional> items_;
};

class UnnormalizedMeasure : public std::invalid_argument {
 public:
  UnnormalizedMeasure() : std::invalid_argument("ranking measure is not normalized") {}
};

/// Strict: R(a & ~c) = TOP. Default: R(a & c) + 1 <= R(a & ~c), which holds
/// whenever the antecedent is impossible. Throws UnnormalizedMeasure.
bool satisfies(const RankingMeasure& measure, const Conditional& c);
bool satisfies_base(const RankingMeasure& measure, const DefaultBase& base);

/// R + r[region]: adds `amount` to the rank of every world in `region`.
RankingMeasure shift(const RankingMeasure& measure, const Proposition& region, Rank amount);

/// R0 + sum_i shifts[i][violation of base[i]]. Throws std::invalid_argument on
/// a length mismatch.
RankingMeasure construct(const DefaultBase& base, std::span<const Rank> shifts);

/// The constructed measure is normalized, satisfies the base, and every
/// strictly positive shift is justified: its default holds with equality
/// (R(a & c) + 1 = R(a & ~c)), or for a strict conditional, the violation has
/// rank TOP.
bool is_justifiably_constructible(const DefaultBase& base, std::span<const Rank> shifts);

struct ConstructedModel {
  std::vector<Rank> shifts;
  RankingMeasure measure;
};

/// Exhaustive search over shift vectors in {0..bound, TOP}^n. Returns one
/// representative shift vector per distinct justifiably constructible
/// measure, in order of first discovery.
std::vector<ConstructedModel> jj_search(const DefaultBase& base, int bound);

}  // namespace rankarg
