#include "rankarg/principles.hpp"

#include <algorithm>
#include <set>

namespace rankarg {

namespace {

using NamedFamily = std::set<std::set<std::string>>;

std::set<std::string> named(const ArgumentationFramework& af, ArgumentSet s) {
  auto names = af.names_of(s);
  return {names.begin(), names.end()};
}

NamedFamily named(const ArgumentationFramework& af, const ExtensionSet& family) {
  NamedFamily out;
  for (ArgumentSet s : family) out.insert(named(af, s));
  return out;
}

bool rejection_cumulativity(const SemanticsFn& sem, const ArgumentationFramework& af, bool cut) {
  const ExtensionSet family = sem(af);
  const auto accepted = named(af, skeptical(af, family));
  const ArgumentSet rejected = af.all() - credulous(family);
  for (std::size_t a : rejected) {
    const auto sub = restrict(af, af.all().without(a));
    const auto sub_accepted = named(sub, skeptical(sub, sem(sub)));
    const auto& small = cut ? sub_accepted : accepted;
    const auto& large = cut ? accepted : sub_accepted;
    if (!std::includes(large.begin(), large.end(), small.begin(), small.end())) return false;
  }
  return true;
}

std::string argument_name(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "a" + std::to_string(i);
}

}  // namespace

ArgumentSet skeptical(const ArgumentationFramework& af, const ExtensionSet& family) {
  ArgumentSet out = af.all();
  for (ArgumentSet s : family) out &= s;
  return out;
}

ArgumentSet credulous(const ExtensionSet& family) {
  ArgumentSet out;
  for (ArgumentSet s : family) out |= s;
  return out;
}

bool check_isomorphy(const SemanticsFn& sem, const ArgumentationFramework& af,
                     const std::map<std::string, std::string>& rename) {
  const auto image = apply_isomorphism(af, rename);
  NamedFamily expected;
  for (const auto& members : named(af, sem(af))) {
    std::set<std::string> mapped;
    for (const auto& m : members) mapped.insert(rename.at(m));
    expected.insert(mapped);
  }
  return named(image, sem(image)) == expected;
}

bool check_conflict_freedom(const SemanticsFn& sem, const ArgumentationFramework& af) {
  const auto family = sem(af);
  return std::all_of(family.begin(), family.end(), [&](ArgumentSet e) { return is_conflict_free(af, e); });
}

bool check_cf_maximality(const SemanticsFn& sem, const ArgumentationFramework& af, CfUniverse universe) {
  const ArgumentSet u = universe == CfUniverse::NonSelfAttacking ? non_self_attacking(af) : af.all();
  for (ArgumentSet e : sem(af)) {
    if (!e.is_subset_of(u) || !is_conflict_free(af, e)) return false;
    for (std::size_t a : u - e) {
      if (is_conflict_free(af, e.with(a))) return false;
    }
  }
  return true;
}

bool check_inclusion_maximality(const SemanticsFn& sem, const ArgumentationFramework& af) {
  const auto family = sem(af);
  for (ArgumentSet e : family) {
    for (ArgumentSet f : family) {
      if (e != f && e.is_subset_of(f)) return false;
    }
  }
  return true;
}

bool check_reinstatement(const SemanticsFn& sem, const ArgumentationFramework& af) {
  for (ArgumentSet e : sem(af)) {
    const ArgumentSet defeated = attack_image(af, e);
    for (std::size_t a = 0; a < af.size(); ++a) {
      if (af.attackers(a).is_subset_of(defeated) && !e.contains(a)) return false;
    }
  }
  return true;
}

bool check_directionality(const SemanticsFn& sem, const ArgumentationFramework& first,
                          const ArgumentationFramework& second,
                          const std::vector<std::pair<std::string, std::string>>& bridge) {
  std::vector<std::string> names = first.names();
  for (const auto& n : second.names()) {
    if (first.index_of(n)) throw FrameworkError("argument '" + n + "' occurs on both sides of the split");
    names.push_back(n);
  }
  std::vector<std::pair<std::string, std::string>> attacks;
  for (const auto& [f, t] : first.attack_pairs()) attacks.emplace_back(first.name(f), first.name(t));
  for (const auto& [f, t] : second.attack_pairs()) attacks.emplace_back(second.name(f), second.name(t));
  for (const auto& [f, t] : bridge) {
    if (!first.index_of(f) || !second.index_of(t)) {
      throw FrameworkError("bridge attack " + f + " -> " + t + " does not lead from the first part to the second");
    }
    attacks.emplace_back(f, t);
  }
  const ArgumentationFramework joint(std::move(names), attacks);
  const ArgumentSet left = joint.set_of(first.names());
  ExtensionSet projected;
  for (ArgumentSet e : sem(joint)) projected.push_back(e & left);
  return named(joint, projected) == named(first, sem(first));
}

bool check_directionality_all_splits(const SemanticsFn& sem, const ArgumentationFramework& af,
                                     std::size_t max_arguments) {
  if (af.size() > max_arguments || af.size() < 2) return true;
  const ArgumentSet all = af.all();
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << af.size()); ++mask) {
    const ArgumentSet left = ArgumentSet::from_mask(mask);
    const ArgumentSet right = all - left;
    if (attack_image(af, right).intersects(left)) continue;
    std::vector<std::pair<std::string, std::string>> bridge;
    for (const auto& [f, t] : af.attack_pairs()) {
      if (left.contains(f) && right.contains(t)) bridge.emplace_back(af.name(f), af.name(t));
    }
    if (!check_directionality(sem, restrict(af, left), restrict(af, right), bridge)) return false;
  }
  return true;
}

bool check_rej_cut(const SemanticsFn& sem, const ArgumentationFramework& af) {
  return rejection_cumulativity(sem, af, true);
}

bool check_rej_cm(const SemanticsFn& sem, const ArgumentationFramework& af) {
  return rejection_cumulativity(sem, af, false);
}

std::vector<PrincipleResult> check_all(const SemanticsFn& sem, const ArgumentationFramework& af,
                                       std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return {
      {"isomorphy", check_isomorphy(sem, af, random_renaming(af, rng))},
      {"conflict-freedom", check_conflict_freedom(sem, af)},
      {"cf-maximality", check_cf_maximality(sem, af)},
      {"inclusion-maximality", check_inclusion_maximality(sem, af)},
      {"reinstatement", check_reinstatement(sem, af)},
      {"directionality", check_directionality_all_splits(sem, af)},
      {"rej-cut", check_rej_cut(sem, af)},
      {"rej-cm", check_rej_cm(sem, af)},
  };
}

ArgumentationFramework random_framework(std::mt19937_64& rng, std::size_t max_arguments) {
  std::uniform_int_distribution<std::size_t> size_dist(1, max_arguments);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t n = size_dist(rng);
  const double density = 0.1 + 0.4 * unit(rng);
  const double loops = 0.15 * unit(rng);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(argument_name(i));
  std::vector<AttackPair> attacks;
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t t = 0; t < n; ++t) {
      if (unit(rng) < (f == t ? loops : density)) attacks.emplace_back(f, t);
    }
  }
  return ArgumentationFramework(std::move(names), attacks);
}

std::vector<ArgumentationFramework> random_corpus(std::uint64_t seed, std::size_t count, std::size_t max_arguments) {
  std::mt19937_64 rng(seed);
  std::vector<ArgumentationFramework> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_framework(rng, max_arguments));
  return out;
}

std::map<std::string, std::string> random_renaming(const ArgumentationFramework& af, std::mt19937_64& rng) {
  std::vector<std::string> targets = af.names();
  std::shuffle(targets.begin(), targets.end(), rng);
  std::map<std::string, std::string> out;
  for (std::size_t i = 0; i < af.size(); ++i) out[af.name(i)] = targets[i];
  return out;
}

}  // namespace rankarg
