#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rankarg/framework.hpp"
#include "rankarg/ranking.hpp"

namespace rankarg {

/// Per-argument state of a world in the compact generic space. X_a false
/// leaves Y_a irrelevant, so three states per argument replace four
/// assignments.
enum class ArgState : std::uint8_t { XFalse = 0, XY = 1, XNotY = 2 };

using GenericWorld = std::vector<ArgState>;

/// The 3^n compact world space of a generic instantiation. World index is the
/// base-3 number whose digit i is the state of argument i.
class GenericWorldSpace {
 public:
  static constexpr std::size_t kMaxArguments = 12;

  /// Throws std::invalid_argument above kMaxArguments.
  explicit GenericWorldSpace(std::size_t argument_count);

  std::size_t argument_count() const { return n_; }
  std::size_t world_count() const { return worlds_; }

  ArgState state(std::size_t world, std::size_t argument) const;
  GenericWorld decode(std::size_t world) const;
  std::size_t encode(std::span<const ArgState> world) const;

  Proposition in_state(std::size_t argument, ArgState s) const;
  /// X_a.
  Proposition premise(std::size_t argument) const;
  /// X_a & Y_a.
  Proposition claim(std::size_t argument) const;

 private:
  std::size_t n_;
  std::size_t worlds_;
  std::vector<std::size_t> place_;
};

/// Shallow semantic content of one argument: premise phi, strict content
/// theta, defeasible claim psi.
struct ArgumentContent {
  Proposition premise;
  Proposition strict_content;
  Proposition claim;
};

/// Propositional content for every argument of a framework, over one world
/// space. Each claim must entail its strict content, which must entail the
/// premise.
class ShallowInstantiation {
 public:
  /// Throws std::invalid_argument on mixed spaces or a broken entailment chain.
  explicit ShallowInstantiation(std::vector<ArgumentContent> contents);

  std::size_t size() const { return contents_.size(); }
  std::size_t world_count() const { return world_count_; }
  const ArgumentContent& operator[](std::size_t a) const { return contents_.at(a); }
  const Proposition& premise(std::size_t a) const { return contents_.at(a).premise; }
  const Proposition& strict_content(std::size_t a) const { return contents_.at(a).strict_content; }
  const Proposition& claim(std::size_t a) const { return contents_.at(a).claim; }

 private:
  std::vector<ArgumentContent> contents_;
  std::size_t world_count_ = 1;
};

/// Generic instantiation (X_a, X_a, X_a & Y_a) over the compact space.
ShallowInstantiation generic_instantiation(const GenericWorldSpace& space);

/// Boolean space over atoms X_<name>, Y_<name> (4^n worlds), atoms interleaved
/// in argument order.
WorldSpace generic_boolean_space(const ArgumentationFramework& af);

/// Generic instantiation over the explicit boolean space from generic_boolean_space.
ShallowInstantiation generic_instantiation(const ArgumentationFramework& af, const WorldSpace& space);

/// {phi_a ⇝ psi_a, phi_a ⊐ theta_a | a}: the argument-level base every
/// instantiation model must satisfy.
DefaultBase instantiation_base(const ShallowInstantiation& inst);

/// Default base induced by a framework and an instantiation, in order:
/// phi_a ⇝ psi_a per argument; psi_a & psi_b ⇝ FALSE per attacked-or-attacking
/// pair {a, b} (a <= b, including self-attacks); phi_a & phi_b ⇝ psi_a per
/// one-sided attack a ▷ b. The strict phi_a ⊐ theta_a conditionals are
/// tautologies under genericity and are left out.
DefaultBase generic_delta(const ArgumentationFramework& af, const ShallowInstantiation& inst);

/// Shift vector of the canonical JZ model, aligned with generic_delta: 1 (or
/// TOP for a self-attacker) per argument default, TOP per conflict default,
/// 1 per one-sided attack default.
std::vector<Rank> jz_shifts(const ArgumentationFramework& af);

/// Closed-form rank of a compact generic world under the JZ model.
Rank jz_world_rank(const ArgumentationFramework& af, std::span<const ArgState> world);

/// The JZ model tabulated over the compact space.
RankingMeasure jz_measure(const ArgumentationFramework& af, const GenericWorldSpace& space);

/// theta_S: conjunction of phi_a & theta_a over a in S.
Proposition theta_proposition(const ShallowInstantiation& inst, ArgumentSet s);

/// psi_{S,E}: theta_S, psi_a for a in E, ~psi_a for every other argument.
/// Throws std::invalid_argument unless E ⊆ S.
Proposition psi_proposition(const ShallowInstantiation& inst, ArgumentSet s, ArgumentSet e);

/// Inclusion-maximal S with R(theta_S) < TOP.
ExtensionSet maximal_coherent_sets(const RankingMeasure& measure, const ShallowInstantiation& inst);
ExtensionSet maximal_coherent_sets(const ArgumentationFramework& af);

/// E ⊆ S for some maximal coherent S with R(psi_{S,E} | theta_S) = 0.
ExtensionSet ranking_extensions(const RankingMeasure& measure, const ShallowInstantiation& inst);

/// ranking_extensions for the JZ model of the generic instantiation.
ExtensionSet ranking_extensions_semantic(const ArgumentationFramework& af);

class NotAnInstantiationModel : public std::invalid_argument {
 public:
  NotAnInstantiationModel() : std::invalid_argument("measure does not satisfy the instantiation base") {}
};

/// a ▷ b iff R ⊨ psi_a & psi_b ⇝ FALSE and (R ⊨ phi_a & phi_b ⇝ psi_a or
/// R ⊭ phi_a & phi_b ⇝ psi_b), over all ordered pairs including self-pairs.
/// Throws NotAnInstantiationModel if R does not satisfy instantiation_base.
std::vector<AttackPair> derive_attacks(const RankingMeasure& measure, const ShallowInstantiation& inst);

bool is_ranking_instantiation_model(const ArgumentationFramework& af, const RankingMeasure& measure,
                                    const ShallowInstantiation& inst);

/// R(psi_a & psi_b) = TOP.
bool rebuts(const RankingMeasure& measure, const ShallowInstantiation& inst, std::size_t a, std::size_t b);
/// R(psi_a & phi_b) = TOP.
bool undermines(const RankingMeasure& measure, const ShallowInstantiation& inst, std::size_t a, std::size_t b);

}  // namespace rankarg
