#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rankarg/framework.hpp"

namespace rankarg {

/// Any extension semantics: framework -> family of extensions.
using SemanticsFn = std::function<ExtensionSet(const ArgumentationFramework&)>;

/// Intersection of the family; the full argument set for an empty family.
ArgumentSet skeptical(const ArgumentationFramework& af, const ExtensionSet& family);
/// Union of the family.
ArgumentSet credulous(const ExtensionSet& family);

/// sem(f(F)) is the f-image of sem(F), compared by argument names.
bool check_isomorphy(const SemanticsFn& sem, const ArgumentationFramework& af,
                     const std::map<std::string, std::string>& rename);

bool check_conflict_freedom(const SemanticsFn& sem, const ArgumentationFramework& af);

/// Where "maximal conflict-free" is measured. Self-attackers never occur in a
/// conflict-free set, so both readings select the same sets.
enum class CfUniverse { NonSelfAttacking, AllArguments };

bool check_cf_maximality(const SemanticsFn& sem, const ArgumentationFramework& af,
                         CfUniverse universe = CfUniverse::NonSelfAttacking);

bool check_inclusion_maximality(const SemanticsFn& sem, const ArgumentationFramework& af);

/// Every argument all of whose attackers are attacked by an extension belongs to it.
bool check_reinstatement(const SemanticsFn& sem, const ArgumentationFramework& af);

/// Joins `first` and `second` by `bridge` (attacks from first into second)
/// and compares sem(first) with the projections of the joint extensions.
/// Throws FrameworkError on shared argument names or a bridge that is not
/// first -> second.
bool check_directionality(const SemanticsFn& sem, const ArgumentationFramework& first,
                          const ArgumentationFramework& second,
                          const std::vector<std::pair<std::string, std::string>>& bridge);

/// Directionality for every nonempty proper subset of `af` that receives no
/// attack from outside. Frameworks above `max_arguments` are not checked
/// (returns true).
bool check_directionality_all_splits(const SemanticsFn& sem, const ArgumentationFramework& af,
                                     std::size_t max_arguments = 12);

/// For every argument outside all extensions, removing it must not grow
/// (Rej-Cut) resp. shrink (Rej-CM) the skeptically accepted set.
bool check_rej_cut(const SemanticsFn& sem, const ArgumentationFramework& af);
bool check_rej_cm(const SemanticsFn& sem, const ArgumentationFramework& af);

struct PrincipleResult {
  std::string principle;
  bool holds = false;
};

/// All principles on one framework. Isomorphy uses a name permutation drawn
/// from `seed`.
std::vector<PrincipleResult> check_all(const SemanticsFn& sem, const ArgumentationFramework& af,
                                       std::uint64_t seed);

/// Random framework with 1..max_arguments arguments named a, b, c, ...
ArgumentationFramework random_framework(std::mt19937_64& rng, std::size_t max_arguments);

/// `count` frameworks from a fixed seed.
std::vector<ArgumentationFramework> random_corpus(std::uint64_t seed, std::size_t count, std::size_t max_arguments);

/// Random bijection of the framework's names onto themselves.
std::map<std::string, std::string> random_renaming(const ArgumentationFramework& af, std::mt19937_64& rng);

}  // namespace rankarg
