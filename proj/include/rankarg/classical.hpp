#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "rankarg/framework.hpp"

namespace rankarg {

enum class Semantics { Admissible, Grounded, Complete, Preferred, Stable, Stage, SemiStable };

/// Short tag used on the command line ("GR", "PR", ...).
std::string_view semantics_tag(Semantics s);
std::optional<Semantics> semantics_from_tag(std::string_view tag);

/// Every attacker of every member of `s` is attacked by `s`.
bool defends_all(const ArgumentationFramework& af, ArgumentSet s);

bool is_admissible(const ArgumentationFramework& af, ArgumentSet s);
bool is_complete(const ArgumentationFramework& af, ArgumentSet s);
bool is_stable(const ArgumentationFramework& af, ArgumentSet s);

/// Arguments all of whose attackers are attacked by `s`.
ArgumentSet characteristic(const ArgumentationFramework& af, ArgumentSet s);

/// Least fixed point of the characteristic function.
ArgumentSet grounded(const ArgumentationFramework& af);

ExtensionSet admissible_sets(const ArgumentationFramework& af);
ExtensionSet complete(const ArgumentationFramework& af);
ExtensionSet preferred(const ArgumentationFramework& af);
ExtensionSet stable(const ArgumentationFramework& af);
ExtensionSet stage(const ArgumentationFramework& af);
ExtensionSet semi_stable(const ArgumentationFramework& af);

/// Dispatch by tag; Grounded yields a singleton family.
ExtensionSet extensions(const ArgumentationFramework& af, Semantics s);

}  // namespace rankarg
