#include "rankarg/framework.hpp"

#include <algorithm>
#include <set>

namespace rankarg {

bool canonical_less(ArgumentSet a, ArgumentSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void normalize(ExtensionSet& sets) {
  std::sort(sets.begin(), sets.end(), canonical_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

ExtensionSet normalized(ExtensionSet sets) {
  normalize(sets);
  return sets;
}

ArgumentationFramework::ArgumentationFramework(std::vector<std::string> arguments,
                                               const std::vector<std::pair<std::string, std::string>>& attacks)
    : names_(std::move(arguments)) {
  if (names_.size() > kMaxArguments) {
    throw FrameworkError("framework exceeds " + std::to_string(kMaxArguments) + " arguments");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], i).second) throw FrameworkError("duplicate argument '" + names_[i] + "'");
  }
  std::vector<AttackPair> indexed;
  indexed.reserve(attacks.size());
  for (const auto& [from, to] : attacks) {
    auto f = index_of(from);
    auto t = index_of(to);
    if (!f) throw FrameworkError("attack from undeclared argument '" + from + "'");
    if (!t) throw FrameworkError("attack on undeclared argument '" + to + "'");
    indexed.emplace_back(*f, *t);
  }
  build(indexed);
}

ArgumentationFramework::ArgumentationFramework(std::vector<std::string> arguments,
                                               const std::vector<AttackPair>& attacks)
    : names_(std::move(arguments)) {
  if (names_.size() > kMaxArguments) {
    throw FrameworkError("framework exceeds " + std::to_string(kMaxArguments) + " arguments");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], i).second) throw FrameworkError("duplicate argument '" + names_[i] + "'");
  }
  for (const auto& [f, t] : attacks) {
    if (f >= names_.size() || t >= names_.size()) throw FrameworkError("attack index out of range");
  }
  build(attacks);
}

void ArgumentationFramework::build(const std::vector<AttackPair>& attacks) {
  targets_.assign(names_.size(), ArgumentSet{});
  attackers_.assign(names_.size(), ArgumentSet{});
  for (const auto& [f, t] : attacks) {
    targets_[f].insert(t);
    attackers_[t].insert(f);
  }
  pairs_.clear();
  for (std::size_t f = 0; f < names_.size(); ++f) {
    for (std::size_t t : targets_[f]) pairs_.emplace_back(f, t);
  }
}

std::optional<std::size_t> ArgumentationFramework::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ArgumentSet ArgumentationFramework::set_of(const std::vector<std::string>& names) const {
  ArgumentSet s;
  for (const auto& n : names) {
    auto i = index_of(n);
    if (!i) throw FrameworkError("unknown argument '" + n + "'");
    s.insert(*i);
  }
  return s;
}

std::vector<std::string> ArgumentationFramework::names_of(ArgumentSet s) const {
  std::vector<std::string> out;
  for (std::size_t i : s) out.push_back(names_.at(i));
  return out;
}

std::string ArgumentationFramework::format(ArgumentSet s) const {
  std::string out = "[";
  bool first = true;
  for (std::size_t i : s) {
    if (!first) out += ',';
    out += names_.at(i);
    first = false;
  }
  out += ']';
  return out;
}

ArgumentSet non_self_attacking(const ArgumentationFramework& af) {
  ArgumentSet out;
  for (std::size_t i = 0; i < af.size(); ++i) {
    if (!af.attacks(i, i)) out.insert(i);
  }
  return out;
}

bool is_conflict_free(const ArgumentationFramework& af, ArgumentSet s) {
  for (std::size_t a : s) {
    if (af.targets(a).intersects(s)) return false;
  }
  return true;
}

ArgumentSet attack_image(const ArgumentationFramework& af, ArgumentSet s) {
  ArgumentSet out;
  for (std::size_t a : s) out |= af.targets(a);
  return out;
}

ArgumentSet attacker_image(const ArgumentationFramework& af, ArgumentSet s) {
  ArgumentSet out;
  for (std::size_t a : s) out |= af.attackers(a);
  return out;
}

std::vector<ArgumentSet> enumerate_conflict_free(const ArgumentationFramework& af, ArgumentSet universe) {
  std::vector<ArgumentSet> out;
  for_each_conflict_free(af, universe, [&](ArgumentSet s) { out.push_back(s); });
  return out;
}

ExtensionSet maximal_conflict_free(const ArgumentationFramework& af, ArgumentSet universe) {
  ExtensionSet out;
  for_each_conflict_free(af, universe, [&](ArgumentSet s) {
    for (std::size_t a : universe - s) {
      if (is_conflict_free(af, s.with(a))) return;
    }
    out.push_back(s);
  });
  normalize(out);
  return out;
}

ArgumentationFramework restrict(const ArgumentationFramework& af, ArgumentSet keep) {
  std::vector<std::string> names;
  std::vector<std::size_t> remap(af.size(), kMaxArguments);
  for (std::size_t i : keep) {
    remap[i] = names.size();
    names.push_back(af.name(i));
  }
  std::vector<AttackPair> attacks;
  for (const auto& [f, t] : af.attack_pairs()) {
    if (keep.contains(f) && keep.contains(t)) attacks.emplace_back(remap[f], remap[t]);
  }
  return ArgumentationFramework(std::move(names), attacks);
}

ArgumentationFramework apply_isomorphism(const ArgumentationFramework& af,
                                         const std::map<std::string, std::string>& rename) {
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (const auto& n : af.names()) {
    auto it = rename.find(n);
    if (it == rename.end()) throw FrameworkError("renaming is not defined on '" + n + "'");
    if (!seen.insert(it->second).second) throw FrameworkError("renaming is not injective at '" + it->second + "'");
    names.push_back(it->second);
  }
  return ArgumentationFramework(std::move(names), af.attack_pairs());
}

}  // namespace rankarg
