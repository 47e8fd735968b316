#include "rankarg/ranking.hpp"

#include <algorithm>

namespace rankarg {

namespace {

void require_same_space(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("propositions from different world spaces");
}

}  // namespace

Proposition::Proposition(std::size_t world_count, bool value) : bits_(world_count) {
  if (value) bits_.set();
}

bool Proposition::entails(const Proposition& other) const {
  require_same_space(world_count(), other.world_count());
  return bits_.is_subset_of(other.bits_);
}

Proposition& Proposition::operator&=(const Proposition& o) {
  require_same_space(world_count(), o.world_count());
  bits_ &= o.bits_;
  return *this;
}

Proposition& Proposition::operator|=(const Proposition& o) {
  require_same_space(world_count(), o.world_count());
  bits_ |= o.bits_;
  return *this;
}

WorldSpace::WorldSpace(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.size() > kMaxAtoms) throw std::invalid_argument("too many atoms for an explicit world space");
  std::vector<std::string> sorted = atoms_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("duplicate atom name");
  }
}

Proposition WorldSpace::atom(std::size_t index) const {
  if (index >= atoms_.size()) throw std::invalid_argument("atom index out of range");
  Proposition p(world_count());
  for (std::size_t w = 0; w < world_count(); ++w) {
    if (value(w, index)) p.set(w);
  }
  return p;
}

Proposition WorldSpace::atom(std::string_view name) const {
  auto it = std::find(atoms_.begin(), atoms_.end(), name);
  if (it == atoms_.end()) throw std::invalid_argument("unknown atom '" + std::string(name) + "'");
  return atom(static_cast<std::size_t>(it - atoms_.begin()));
}

RankingMeasure::RankingMeasure(std::vector<Rank> world_ranks) : ranks_(std::move(world_ranks)) {
  normalized_ = std::any_of(ranks_.begin(), ranks_.end(), [](const Rank& r) { return r == Rank(0); });
}

RankingMeasure RankingMeasure::uniform(std::size_t world_count) {
  return RankingMeasure(std::vector<Rank>(world_count, Rank(0)));
}

Rank rank_of(const RankingMeasure& measure, const Proposition& p) {
  require_same_space(measure.world_count(), p.world_count());
  Rank best = Rank::top();
  const auto ranks = measure.world_ranks();
  p.for_each_world([&](std::size_t w) { best = std::min(best, ranks[w]); });
  return best;
}

Rank conditional_rank(const RankingMeasure& measure, const Proposition& consequent, const Proposition& condition) {
  const Rank base = rank_of(measure, condition);
  if (base.is_top()) return Rank::top();
  return rank_difference(rank_of(measure, condition & consequent), base);
}

Conditional Conditional::strict(Proposition antecedent, Proposition consequent, std::string label) {
  require_same_space(antecedent.world_count(), consequent.world_count());
  return {ConditionalKind::Strict, std::move(antecedent), std::move(consequent), std::move(label)};
}

Conditional Conditional::defeasible(Proposition antecedent, Proposition consequent, std::string label) {
  require_same_space(antecedent.world_count(), consequent.world_count());
  return {ConditionalKind::Default, std::move(antecedent), std::move(consequent), std::move(label)};
}

void DefaultBase::add(Conditional c) {
  require_same_space(world_count_, c.antecedent.world_count());
  require_same_space(world_count_, c.consequent.world_count());
  items_.push_back(std::move(c));
}

bool satisfies(const RankingMeasure& measure, const Conditional& c) {
  if (!measure.is_normalized()) throw UnnormalizedMeasure();
  const Rank violated = rank_of(measure, c.violation());
  if (c.kind == ConditionalKind::Strict) return violated.is_top();
  return rank_of(measure, c.verification()) + Rank(1) <= violated;
}

bool satisfies_base(const RankingMeasure& measure, const DefaultBase& base) {
  return std::all_of(base.begin(), base.end(), [&](const Conditional& c) { return satisfies(measure, c); });
}

RankingMeasure shift(const RankingMeasure& measure, const Proposition& region, Rank amount) {
  require_same_space(measure.world_count(), region.world_count());
  std::vector<Rank> ranks(measure.world_ranks().begin(), measure.world_ranks().end());
  region.for_each_world([&](std::size_t w) { ranks[w] += amount; });
  return RankingMeasure(std::move(ranks));
}

RankingMeasure construct(const DefaultBase& base, std::span<const Rank> shifts) {
  if (shifts.size() != base.size()) throw std::invalid_argument("shift vector length does not match the base");
  std::vector<Rank> ranks(base.world_count(), Rank(0));
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (shifts[i] == Rank(0)) continue;
    base[i].violation().for_each_world([&](std::size_t w) { ranks[w] += shifts[i]; });
  }
  return RankingMeasure(std::move(ranks));
}

namespace {

bool justified(const RankingMeasure& measure, const DefaultBase& base, std::span<const Rank> shifts) {
  if (!measure.is_normalized() || !satisfies_base(measure, base)) return false;
  for (std::size_t j = 0; j < base.size(); ++j) {
    if (shifts[j] == Rank(0)) continue;
    const Conditional& c = base[j];
    const Rank violated = rank_of(measure, c.violation());
    if (c.kind == ConditionalKind::Strict) {
      if (!violated.is_top()) return false;
    } else if (rank_of(measure, c.verification()) + Rank(1) != violated) {
      return false;
    }
  }
  return true;
}

// Depth-first search over shift vectors. A world's rank is final once every
// default whose violation region contains it has its shift; until then it
// lies between its partial sum and TOP. Those bounds rule out branches where
// some assigned shift can no longer be justified or no world can stay at 0.
class JjSearch {
 public:
  JjSearch(const DefaultBase& base, int bound) : base_(base), partial_(base.world_count(), Rank(0)) {
    for (int v = 0; v <= bound; ++v) values_.emplace_back(v);
    values_.push_back(Rank::top());
    open_.assign(base.world_count(), 0);
    for (const Conditional& c : base) {
      violation_.push_back(worlds_of(c.violation()));
      verification_.push_back(worlds_of(c.verification()));
      for (std::size_t w : violation_.back()) ++open_[w];
    }
  }

  std::vector<ConstructedModel> run() {
    descend(0);
    return std::move(found_);
  }

 private:
  struct Bounds {
    Rank low = Rank::top();
    Rank high = Rank::top();
  };

  static std::vector<std::size_t> worlds_of(const Proposition& p) {
    std::vector<std::size_t> out;
    p.for_each_world([&](std::size_t w) { out.push_back(w); });
    return out;
  }

  Bounds bounds(const std::vector<std::size_t>& worlds) const {
    Bounds b;
    for (std::size_t w : worlds) {
      b.low = std::min(b.low, partial_[w]);
      if (open_[w] == 0) b.high = std::min(b.high, partial_[w]);
    }
    return b;
  }

  bool feasible(std::size_t assigned) const {
    if (std::none_of(partial_.begin(), partial_.end(), [](const Rank& r) { return r == Rank(0); })) return false;
    for (std::size_t j = 0; j < assigned; ++j) {
      const Bounds viol = bounds(violation_[j]);
      if (base_[j].kind == ConditionalKind::Strict) {
        if (!viol.high.is_top()) return false;
        continue;
      }
      const Bounds verif = bounds(verification_[j]);
      if (verif.low + Rank(1) > viol.high) return false;
      if (shifts_[j] != Rank(0) && verif.high + Rank(1) < viol.low) return false;
    }
    return true;
  }

  void descend(std::size_t j) {
    if (j == base_.size()) {
      RankingMeasure measure(partial_);
      if (!justified(measure, base_, shifts_)) return;
      const bool duplicate =
          std::any_of(found_.begin(), found_.end(), [&](const ConstructedModel& m) { return m.measure == measure; });
      if (!duplicate) found_.push_back({shifts_, std::move(measure)});
      return;
    }
    for (std::size_t w : violation_[j]) --open_[w];
    const std::vector<Rank> saved = partial_;
    for (const Rank& v : values_) {
      if (v != Rank(0)) {
        for (std::size_t w : violation_[j]) partial_[w] = saved[w] + v;
      }
      shifts_.push_back(v);
      if (feasible(j + 1)) descend(j + 1);
      shifts_.pop_back();
      partial_ = saved;
    }
    for (std::size_t w : violation_[j]) ++open_[w];
  }

  const DefaultBase& base_;
  std::vector<Rank> values_;
  std::vector<std::vector<std::size_t>> violation_;
  std::vector<std::vector<std::size_t>> verification_;
  std::vector<int> open_;
  std::vector<Rank> partial_;
  std::vector<Rank> shifts_;
  std::vector<ConstructedModel> found_;
};

}  // namespace

bool is_justifiably_constructible(const DefaultBase& base, std::span<const Rank> shifts) {
  return justified(construct(base, shifts), base, shifts);
}

std::vector<ConstructedModel> jj_search(const DefaultBase& base, int bound) {
  if (bound < 0) throw std::invalid_argument("negative search bound");
  return JjSearch(base, bound).run();
}

}  // namespace rankarg
