#include "rankarg/jz_solver.hpp"

#include <algorithm>
#include <limits>

namespace rankarg {

namespace {

// Cost of leaving `a` out of an extension: one for the argument plus one per
// one-sided attack it launches into A+.
std::vector<std::int64_t> exclusion_costs(const ArgumentationFramework& af, ArgumentSet plus) {
  std::vector<std::int64_t> cost(af.size(), 0);
  for (std::size_t a : plus) {
    cost[a] = 1;
    for (std::size_t b : af.targets(a) & plus) {
      if (!af.attacks(b, a)) ++cost[a];
    }
  }
  return cost;
}

}  // namespace

Rank extension_weight(const ArgumentationFramework& af, ArgumentSet e) {
  const ArgumentSet plus = non_self_attacking(af);
  if (!e.is_subset_of(plus) || !is_conflict_free(af, e)) return Rank::top();
  const auto cost = exclusion_costs(af, plus);
  std::int64_t total = 0;
  for (std::size_t a : plus - e) total += cost[a];
  return Rank(total);
}

ExtensionSet jz_extensions(const ArgumentationFramework& af) {
  const ArgumentSet plus = non_self_attacking(af);
  const auto cost = exclusion_costs(af, plus);
  const std::vector<std::size_t> order(plus.begin(), plus.end());

  // Branch and bound over conflict-free subsets of A+, inclusion first. The
  // cost of arguments already excluded is a lower bound on the final weight.
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  ExtensionSet winners;
  auto step = [&](auto&& self, std::size_t depth, ArgumentSet current, ArgumentSet blocked,
                  std::int64_t spent) -> void {
    if (spent > best) return;
    if (depth == order.size()) {
      if (spent < best) {
        best = spent;
        winners.clear();
      }
      winners.push_back(current);
      return;
    }
    const std::size_t a = order[depth];
    if (!blocked.contains(a)) {
      self(self, depth + 1, current.with(a), blocked | af.targets(a) | af.attackers(a), spent);
    }
    self(self, depth + 1, current, blocked, spent + cost[a]);
  };
  step(step, 0, ArgumentSet{}, ArgumentSet{}, 0);
  normalize(winners);
  return winners;
}

ArgumentSet jz_some_extension(const ArgumentationFramework& af) { return jz_extensions(af).front(); }

std::optional<Rank> WeightReport::weight_of(ArgumentSet e) const {
  for (const auto& [set, weight] : entries) {
    if (set == e) return weight;
  }
  return std::nullopt;
}

WeightReport weight_table(const ArgumentationFramework& af) {
  const ArgumentSet plus = non_self_attacking(af);
  const auto cost = exclusion_costs(af, plus);
  WeightReport report;
  for_each_conflict_free(af, plus, [&](ArgumentSet e) {
    std::int64_t total = 0;
    for (std::size_t a : plus - e) total += cost[a];
    report.entries.emplace_back(e, Rank(total));
  });
  std::sort(report.entries.begin(), report.entries.end(),
            [](const auto& x, const auto& y) { return canonical_less(x.first, y.first); });
  report.minimum = Rank::top();
  for (const auto& [e, w] : report.entries) report.minimum = std::min(report.minimum, w);
  for (const auto& [e, w] : report.entries) {
    if (w == report.minimum) report.minima.push_back(e);
  }
  return report;
}

}  // namespace rankarg
