#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rankarg/framework.hpp"
#include "rankarg/rank.hpp"

namespace rankarg {

/// Extension weight of `e`: TOP unless `e` is a conflict-free subset of the
/// non-self-attacking arguments A+; otherwise |A+ - E| plus the number of
/// one-sided attack edges a ▷ b with a in A+ - E and b in A+.
Rank extension_weight(const ArgumentationFramework& af, ArgumentSet e);

/// Conflict-free subsets of A+ with minimal extension weight, canonically
/// sorted. Never empty.
ExtensionSet jz_extensions(const ArgumentationFramework& af);

/// First member of jz_extensions.
ArgumentSet jz_some_extension(const ArgumentationFramework& af);

struct WeightReport {
  /// Every conflict-free subset of A+ with its (finite) weight, canonically ordered.
  std::vector<std::pair<ArgumentSet, Rank>> entries;
  Rank minimum;
  ExtensionSet minima;

  std::optional<Rank> weight_of(ArgumentSet e) const;
};

WeightReport weight_table(const ArgumentationFramework& af);

}  // namespace rankarg
