#include "rankarg/generic.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rankarg {

GenericWorldSpace::GenericWorldSpace(std::size_t argument_count) : n_(argument_count), worlds_(1) {
  if (n_ > kMaxArguments) {
    throw std::invalid_argument("compact generic space supports at most " + std::to_string(kMaxArguments) +
                                " arguments");
  }
  for (std::size_t i = 0; i < n_; ++i) {
    place_.push_back(worlds_);
    worlds_ *= 3;
  }
}

ArgState GenericWorldSpace::state(std::size_t world, std::size_t argument) const {
  return static_cast<ArgState>((world / place_.at(argument)) % 3);
}

GenericWorld GenericWorldSpace::decode(std::size_t world) const {
  GenericWorld out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    out[i] = static_cast<ArgState>(world % 3);
    world /= 3;
  }
  return out;
}

std::size_t GenericWorldSpace::encode(std::span<const ArgState> world) const {
  if (world.size() != n_) throw std::invalid_argument("world has the wrong number of arguments");
  std::size_t index = 0;
  for (std::size_t i = 0; i < n_; ++i) index += place_[i] * static_cast<std::size_t>(world[i]);
  return index;
}

Proposition GenericWorldSpace::in_state(std::size_t argument, ArgState s) const {
  Proposition p(worlds_);
  for (std::size_t w = 0; w < worlds_; ++w) {
    if (state(w, argument) == s) p.set(w);
  }
  return p;
}

Proposition GenericWorldSpace::premise(std::size_t argument) const { return ~in_state(argument, ArgState::XFalse); }

Proposition GenericWorldSpace::claim(std::size_t argument) const { return in_state(argument, ArgState::XY); }

ShallowInstantiation::ShallowInstantiation(std::vector<ArgumentContent> contents) : contents_(std::move(contents)) {
  if (!contents_.empty()) world_count_ = contents_.front().premise.world_count();
  for (const ArgumentContent& c : contents_) {
    if (c.premise.world_count() != world_count_ || c.strict_content.world_count() != world_count_ ||
        c.claim.world_count() != world_count_) {
      throw std::invalid_argument("instantiation mixes world spaces");
    }
    if (!c.claim.entails(c.strict_content) || !c.strict_content.entails(c.premise)) {
      throw std::invalid_argument("instantiation claim must entail strict content, which must entail the premise");
    }
  }
}

ShallowInstantiation generic_instantiation(const GenericWorldSpace& space) {
  std::vector<ArgumentContent> contents;
  for (std::size_t a = 0; a < space.argument_count(); ++a) {
    Proposition x = space.premise(a);
    contents.push_back({x, x, space.claim(a)});
  }
  return ShallowInstantiation(std::move(contents));
}

WorldSpace generic_boolean_space(const ArgumentationFramework& af) {
  std::vector<std::string> atoms;
  for (const auto& name : af.names()) {
    atoms.push_back("X_" + name);
    atoms.push_back("Y_" + name);
  }
  return WorldSpace(std::move(atoms));
}

ShallowInstantiation generic_instantiation(const ArgumentationFramework& af, const WorldSpace& space) {
  if (space.atom_count() != 2 * af.size()) throw std::invalid_argument("space does not match the framework");
  std::vector<ArgumentContent> contents;
  for (std::size_t a = 0; a < af.size(); ++a) {
    Proposition x = space.atom(2 * a);
    contents.push_back({x, x, x & space.atom(2 * a + 1)});
  }
  return ShallowInstantiation(std::move(contents));
}

DefaultBase instantiation_base(const ShallowInstantiation& inst) {
  DefaultBase base(inst.world_count());
  for (std::size_t a = 0; a < inst.size(); ++a) {
    base.add(Conditional::defeasible(inst.premise(a), inst.claim(a)));
    base.add(Conditional::strict(inst.premise(a), inst.strict_content(a)));
  }
  return base;
}

namespace {

// Unordered pairs {a, b}, a <= b, joined by an attack in either direction.
std::vector<AttackPair> conflict_pairs(const ArgumentationFramework& af) {
  std::vector<AttackPair> out;
  for (std::size_t a = 0; a < af.size(); ++a) {
    for (std::size_t b = a; b < af.size(); ++b) {
      if (af.attacks(a, b) || af.attacks(b, a)) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<AttackPair> one_sided_attacks(const ArgumentationFramework& af) {
  std::vector<AttackPair> out;
  for (const auto& [f, t] : af.attack_pairs()) {
    if (!af.attacks(t, f)) out.emplace_back(f, t);
  }
  return out;
}

}  // namespace

DefaultBase generic_delta(const ArgumentationFramework& af, const ShallowInstantiation& inst) {
  if (inst.size() != af.size()) throw std::invalid_argument("instantiation does not match the framework");
  const std::size_t worlds = inst.world_count();
  const Proposition falsum = Proposition::bottom(worlds);
  DefaultBase base(worlds);
  for (std::size_t a = 0; a < af.size(); ++a) {
    base.add(Conditional::defeasible(inst.premise(a), inst.claim(a), "phi_" + af.name(a) + " ~> psi_" + af.name(a)));
  }
  for (const auto& [a, b] : conflict_pairs(af)) {
    base.add(Conditional::defeasible(inst.claim(a) & inst.claim(b), falsum,
                                     "psi_" + af.name(a) + " & psi_" + af.name(b) + " ~> F"));
  }
  for (const auto& [a, b] : one_sided_attacks(af)) {
    base.add(Conditional::defeasible(inst.premise(a) & inst.premise(b), inst.claim(a),
                                     "phi_" + af.name(a) + " & phi_" + af.name(b) + " ~> psi_" + af.name(a)));
  }
  return base;
}

std::vector<Rank> jz_shifts(const ArgumentationFramework& af) {
  std::vector<Rank> shifts;
  for (std::size_t a = 0; a < af.size(); ++a) shifts.push_back(af.attacks(a, a) ? Rank::top() : Rank(1));
  shifts.insert(shifts.end(), conflict_pairs(af).size(), Rank::top());
  shifts.insert(shifts.end(), one_sided_attacks(af).size(), Rank(1));
  return shifts;
}

Rank jz_world_rank(const ArgumentationFramework& af, std::span<const ArgState> world) {
  if (world.size() != af.size()) throw std::invalid_argument("world has the wrong number of arguments");
  std::int64_t total = 0;
  for (std::size_t a = 0; a < af.size(); ++a) {
    if (world[a] == ArgState::XNotY) {
      if (af.attacks(a, a)) return Rank::top();
      ++total;
    }
  }
  for (const auto& [from, to] : af.attack_pairs()) {
    if (world[from] == ArgState::XY && world[to] == ArgState::XY) return Rank::top();
    if (world[from] == ArgState::XNotY && world[to] != ArgState::XFalse && !af.attacks(to, from)) ++total;
  }
  return Rank(total);
}

RankingMeasure jz_measure(const ArgumentationFramework& af, const GenericWorldSpace& space) {
  if (space.argument_count() != af.size()) throw std::invalid_argument("space does not match the framework");
  std::vector<Rank> ranks;
  ranks.reserve(space.world_count());
  for (std::size_t w = 0; w < space.world_count(); ++w) ranks.push_back(jz_world_rank(af, space.decode(w)));
  return RankingMeasure(std::move(ranks));
}

Proposition theta_proposition(const ShallowInstantiation& inst, ArgumentSet s) {
  Proposition p = Proposition::top(inst.world_count());
  for (std::size_t a : s) p &= inst.premise(a) & inst.strict_content(a);
  return p;
}

Proposition psi_proposition(const ShallowInstantiation& inst, ArgumentSet s, ArgumentSet e) {
  if (!e.is_subset_of(s)) throw std::invalid_argument("psi_{S,E} requires E to be a subset of S");
  Proposition p = theta_proposition(inst, s);
  for (std::size_t a = 0; a < inst.size(); ++a) p &= e.contains(a) ? inst.claim(a) : ~inst.claim(a);
  return p;
}

ExtensionSet maximal_coherent_sets(const RankingMeasure& measure, const ShallowInstantiation& inst) {
  const std::size_t n = inst.size();
  if (n > GenericWorldSpace::kMaxArguments) throw std::invalid_argument("too many arguments for coherence search");
  // Coherence is downward closed, so depth-first search may stop at the
  // first incoherent extension of a branch.
  ExtensionSet coherent;
  auto visit = [&](auto&& self, std::size_t next, ArgumentSet s, const Proposition& theta) -> void {
    coherent.push_back(s);
    for (std::size_t a = next; a < n; ++a) {
      Proposition t = theta & inst.premise(a) & inst.strict_content(a);
      if (rank_of(measure, t).is_finite()) self(self, a + 1, s.with(a), t);
    }
  };
  const Proposition top = Proposition::top(inst.world_count());
  if (rank_of(measure, top).is_finite()) visit(visit, 0, ArgumentSet{}, top);

  std::vector<char> is_coherent(std::size_t{1} << n, 0);
  for (ArgumentSet s : coherent) is_coherent[s.mask()] = 1;
  ExtensionSet out;
  for (ArgumentSet s : coherent) {
    bool maximal = true;
    for (std::size_t a = 0; a < n && maximal; ++a) {
      if (!s.contains(a) && is_coherent[s.with(a).mask()]) maximal = false;
    }
    if (maximal) out.push_back(s);
  }
  normalize(out);
  return out;
}

ExtensionSet maximal_coherent_sets(const ArgumentationFramework& af) {
  GenericWorldSpace space(af.size());
  return maximal_coherent_sets(jz_measure(af, space), generic_instantiation(space));
}

ExtensionSet ranking_extensions(const RankingMeasure& measure, const ShallowInstantiation& inst) {
  const std::size_t n = inst.size();
  ExtensionSet out;
  for (ArgumentSet s : maximal_coherent_sets(measure, inst)) {
    const Proposition theta = theta_proposition(inst, s);
    const Rank threshold = rank_of(measure, theta);
    Proposition base = theta;
    for (std::size_t a = 0; a < n; ++a) {
      if (!s.contains(a)) base &= ~inst.claim(a);
    }
    const std::vector<std::size_t> members(s.begin(), s.end());
    // Narrowing a proposition never lowers its rank; branches already above
    // R(theta_S) cannot reach conditional rank 0.
    auto visit = [&](auto&& self, std::size_t depth, ArgumentSet e, const Proposition& psi) -> void {
      const Rank r = rank_of(measure, psi);
      if (r.is_top() || r != threshold) return;
      if (depth == members.size()) {
        if (rank_difference(r, threshold) == Rank(0)) out.push_back(e);
        return;
      }
      const std::size_t a = members[depth];
      self(self, depth + 1, e.with(a), psi & inst.claim(a));
      self(self, depth + 1, e, psi & ~inst.claim(a));
    };
    visit(visit, 0, ArgumentSet{}, base);
  }
  normalize(out);
  return out;
}

ExtensionSet ranking_extensions_semantic(const ArgumentationFramework& af) {
  GenericWorldSpace space(af.size());
  return ranking_extensions(jz_measure(af, space), generic_instantiation(space));
}

std::vector<AttackPair> derive_attacks(const RankingMeasure& measure, const ShallowInstantiation& inst) {
  if (measure.world_count() != inst.world_count()) throw std::invalid_argument("measure and instantiation differ");
  if (!measure.is_normalized() || !satisfies_base(measure, instantiation_base(inst))) {
    throw NotAnInstantiationModel();
  }
  const Proposition falsum = Proposition::bottom(inst.world_count());
  std::vector<AttackPair> out;
  for (std::size_t a = 0; a < inst.size(); ++a) {
    for (std::size_t b = 0; b < inst.size(); ++b) {
      if (!satisfies(measure, Conditional::defeasible(inst.claim(a) & inst.claim(b), falsum))) continue;
      const Proposition context = inst.premise(a) & inst.premise(b);
      const bool keeps_own = satisfies(measure, Conditional::defeasible(context, inst.claim(a)));
      const bool keeps_other = satisfies(measure, Conditional::defeasible(context, inst.claim(b)));
      if (keeps_own || !keeps_other) out.emplace_back(a, b);
    }
  }
  return out;
}

bool is_ranking_instantiation_model(const ArgumentationFramework& af, const RankingMeasure& measure,
                                    const ShallowInstantiation& inst) {
  if (inst.size() != af.size() || measure.world_count() != inst.world_count()) return false;
  std::vector<AttackPair> derived;
  try {
    derived = derive_attacks(measure, inst);
  } catch (const NotAnInstantiationModel&) {
    return false;
  }
  const ArgumentSet plus = non_self_attacking(af);
  auto inside = [&](const AttackPair& p) { return plus.contains(p.first) && plus.contains(p.second); };
  std::vector<AttackPair> expected;
  for (const auto& p : af.attack_pairs()) {
    if (inside(p)) expected.push_back(p);
  }
  std::erase_if(derived, [&](const AttackPair& p) { return !inside(p); });
  return derived == expected;
}

bool rebuts(const RankingMeasure& measure, const ShallowInstantiation& inst, std::size_t a, std::size_t b) {
  return rank_of(measure, inst.claim(a) & inst.claim(b)).is_top();
}

bool undermines(const RankingMeasure& measure, const ShallowInstantiation& inst, std::size_t a, std::size_t b) {
  return rank_of(measure, inst.claim(a) & inst.premise(b)).is_top();
}

}  // namespace rankarg
