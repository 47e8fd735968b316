#include "rankarg/classical.hpp"

#include <array>
#include <utility>

namespace rankarg {

namespace {

constexpr std::array<std::pair<Semantics, std::string_view>, 7> kTags{{
    {Semantics::Admissible, "ADM"},
    {Semantics::Grounded, "GR"},
    {Semantics::Complete, "CO"},
    {Semantics::Preferred, "PR"},
    {Semantics::Stable, "ST"},
    {Semantics::Stage, "STG"},
    {Semantics::SemiStable, "SST"},
}};

// Keeps the members of `candidates` whose key is inclusion-maximal.
template <typename Key>
ExtensionSet keep_maximal(const ExtensionSet& candidates, Key key) {
  ExtensionSet out;
  for (ArgumentSet s : candidates) {
    const ArgumentSet ks = key(s);
    bool dominated = false;
    for (ArgumentSet t : candidates) {
      const ArgumentSet kt = key(t);
      if (ks != kt && ks.is_subset_of(kt)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(s);
  }
  normalize(out);
  return out;
}

ArgumentSet range(const ArgumentationFramework& af, ArgumentSet s) { return s | attack_image(af, s); }

}  // namespace

std::string_view semantics_tag(Semantics s) {
  for (const auto& [sem, tag] : kTags) {
    if (sem == s) return tag;
  }
  return "?";
}

std::optional<Semantics> semantics_from_tag(std::string_view tag) {
  for (const auto& [sem, t] : kTags) {
    if (t == tag) return sem;
  }
  return std::nullopt;
}

bool defends_all(const ArgumentationFramework& af, ArgumentSet s) {
  return attacker_image(af, s).is_subset_of(attack_image(af, s));
}

bool is_admissible(const ArgumentationFramework& af, ArgumentSet s) {
  return is_conflict_free(af, s) && defends_all(af, s);
}

ArgumentSet characteristic(const ArgumentationFramework& af, ArgumentSet s) {
  const ArgumentSet beaten = attack_image(af, s);
  ArgumentSet out;
  for (std::size_t a = 0; a < af.size(); ++a) {
    if (af.attackers(a).is_subset_of(beaten)) out.insert(a);
  }
  return out;
}

bool is_complete(const ArgumentationFramework& af, ArgumentSet s) {
  return is_conflict_free(af, s) && characteristic(af, s) == s;
}

bool is_stable(const ArgumentationFramework& af, ArgumentSet s) {
  return is_conflict_free(af, s) && (af.all() - s) == attack_image(af, s);
}

ArgumentSet grounded(const ArgumentationFramework& af) {
  ArgumentSet current;
  for (;;) {
    ArgumentSet next = characteristic(af, current);
    if (next == current) return current;
    current = next;
  }
}

ExtensionSet admissible_sets(const ArgumentationFramework& af) {
  ExtensionSet out;
  for_each_conflict_free(af, af.all(), [&](ArgumentSet s) {
    if (defends_all(af, s)) out.push_back(s);
  });
  normalize(out);
  return out;
}

ExtensionSet complete(const ArgumentationFramework& af) {
  ExtensionSet out;
  for_each_conflict_free(af, af.all(), [&](ArgumentSet s) {
    if (characteristic(af, s) == s) out.push_back(s);
  });
  normalize(out);
  return out;
}

ExtensionSet preferred(const ArgumentationFramework& af) {
  return keep_maximal(admissible_sets(af), [](ArgumentSet s) { return s; });
}

ExtensionSet stable(const ArgumentationFramework& af) {
  ExtensionSet out;
  const ArgumentSet all = af.all();
  for_each_conflict_free(af, all, [&](ArgumentSet s) {
    if (range(af, s) == all) out.push_back(s);
  });
  normalize(out);
  return out;
}

ExtensionSet stage(const ArgumentationFramework& af) {
  ExtensionSet cf = enumerate_conflict_free(af, af.all());
  return keep_maximal(cf, [&](ArgumentSet s) { return range(af, s); });
}

ExtensionSet semi_stable(const ArgumentationFramework& af) {
  return keep_maximal(admissible_sets(af), [&](ArgumentSet s) { return range(af, s); });
}

ExtensionSet extensions(const ArgumentationFramework& af, Semantics s) {
  switch (s) {
    case Semantics::Admissible: return admissible_sets(af);
    case Semantics::Grounded: return {grounded(af)};
    case Semantics::Complete: return complete(af);
    case Semantics::Preferred: return preferred(af);
    case Semantics::Stable: return stable(af);
    case Semantics::Stage: return stage(af);
    case Semantics::SemiStable: return semi_stable(af);
  }
  return {};
}

}  // namespace rankarg
