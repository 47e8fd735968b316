#include "rankarg/run.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iostream>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rankarg/classical.hpp"
#include "rankarg/formats.hpp"
#include "rankarg/generic.hpp"
#include "rankarg/jz_solver.hpp"
#include "rankarg/principles.hpp"

namespace rankarg {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::array<std::pair<Task, std::string_view>, 12> kTasks{{
    {Task::EnumerateJz, "EE-JZ"},
    {Task::SomeJz, "SE-JZ"},
    {Task::Weights, "WEIGHTS"},
    {Task::Grounded, "EE-GR"},
    {Task::Complete, "EE-CO"},
    {Task::Preferred, "EE-PR"},
    {Task::Stable, "EE-ST"},
    {Task::Stage, "EE-STG"},
    {Task::SemiStable, "EE-SST"},
    {Task::CheckModel, "CHECK-MODEL"},
    {Task::Principles, "PRINCIPLES"},
    {Task::Compare, "COMPARE"},
}};

constexpr std::array<Semantics, 6> kClassical{Semantics::Grounded,  Semantics::Complete, Semantics::Preferred,
                                              Semantics::Stable,    Semantics::Stage,    Semantics::SemiStable};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> sorted_names(const ArgumentationFramework& af, ArgumentSet s) {
  auto names = af.names_of(s);
  std::sort(names.begin(), names.end());
  return names;
}

std::string bracketed(const ArgumentationFramework& af, ArgumentSet s) {
  std::string out = "[";
  const auto names = sorted_names(af, s);
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ',';
    out += names[i];
  }
  return out + "]";
}

Json family_json(const ArgumentationFramework& af, const ExtensionSet& family) {
  Json out = Json::array();
  for (ArgumentSet s : family) out.push_back(sorted_names(af, s));
  return out;
}

std::string family_text(const ArgumentationFramework& af, const ExtensionSet& family) {
  std::string out;
  for (ArgumentSet s : family) out += bracketed(af, s) + "\n";
  return out;
}

Json rank_json(const Rank& r) {
  if (r.is_integer()) return r.value().numerator();
  return r.to_string();
}

ExtensionSet checked_jz(const ArgumentationFramework& af) {
  const ExtensionSet family = jz_extensions(af);
  const ArgumentSet plus = non_self_attacking(af);
  if (family.empty()) throw InvariantError("JZ solver returned no extension");
  for (ArgumentSet e : family) {
    if (!e.is_subset_of(plus) || !is_conflict_free(af, e)) {
      throw InvariantError("JZ extension " + af.format(e) + " is not a conflict-free subset of A+");
    }
  }
  return family;
}

struct Rendered {
  std::string text;
  Json json;
};

Rendered render_family(std::string_view tag, const ArgumentationFramework& af, const ExtensionSet& family) {
  Json j;
  j["task"] = tag;
  j["extensions"] = family_json(af, family);
  return {family_text(af, family), j};
}

Rendered render_weights(const ArgumentationFramework& af) {
  const WeightReport report = weight_table(af);
  if (report.minima != checked_jz(af)) throw InvariantError("weight table minima differ from the JZ solver");
  Json weights = Json::object();
  std::string text;
  for (const auto& [e, w] : report.entries) {
    weights[bracketed(af, e)] = rank_json(w);
    const bool minimal = w == report.minimum;
    text += bracketed(af, e) + " " + w.to_string() + (minimal ? " *" : "") + "\n";
  }
  Json j;
  j["task"] = "WEIGHTS";
  j["extensions"] = family_json(af, report.minima);
  j["weights"] = weights;
  j["minimum"] = rank_json(report.minimum);
  return {text, j};
}

Rendered render_check_model(const ArgumentationFramework& af, const SolveRequest& request) {
  if (!request.measure) throw InputError("CHECK-MODEL needs a measure file (--measure)");
  const RankingMeasure measure = parse_measure(read_file(*request.measure), af);
  const GenericWorldSpace space(af.size());
  const ShallowInstantiation inst = generic_instantiation(space);
  const bool model = is_ranking_instantiation_model(af, measure, inst);
  Json j;
  j["task"] = "CHECK-MODEL";
  j["model"] = model;
  std::string text = std::string("model: ") + (model ? "yes" : "no") + "\n";
  ExtensionSet family;
  if (model) family = ranking_extensions(measure, inst);
  j["extensions"] = family_json(af, family);
  text += family_text(af, family);
  return {text, j};
}

Rendered render_principles(const ArgumentationFramework& af, std::uint64_t seed) {
  std::vector<std::pair<std::string, SemanticsFn>> semantics{{"JZ", jz_extensions}};
  for (Semantics s : kClassical) {
    semantics.emplace_back(std::string(semantics_tag(s)),
                           [s](const ArgumentationFramework& f) { return extensions(f, s); });
  }
  Json table = Json::object();
  std::vector<std::vector<PrincipleResult>> rows;
  for (const auto& [tag, fn] : semantics) {
    rows.push_back(check_all(fn, af, seed));
    Json col = Json::object();
    for (const auto& r : rows.back()) col[r.principle] = r.holds;
    table[tag] = col;
  }
  std::ostringstream text;
  text << "principle";
  for (const auto& [tag, fn] : semantics) text << ' ' << tag;
  text << '\n';
  for (std::size_t p = 0; p < rows.front().size(); ++p) {
    text << rows.front()[p].principle;
    for (const auto& col : rows) text << ' ' << (col[p].holds ? "yes" : "no");
    text << '\n';
  }
  Json j;
  j["task"] = "PRINCIPLES";
  j["extensions"] = family_json(af, checked_jz(af));
  j["principles"] = table;
  return {text.str(), j};
}

Rendered render_compare(const ArgumentationFramework& af) {
  const ExtensionSet jz = checked_jz(af);
  auto joined = [&](const ExtensionSet& family) {
    std::string out;
    for (ArgumentSet s : family) out += (out.empty() ? "" : " ") + bracketed(af, s);
    return out.empty() ? std::string("-") : out;
  };
  std::string text = "JZ " + joined(jz) + "\n";
  Json semantics = Json::object();
  for (Semantics s : kClassical) {
    const ExtensionSet family = extensions(af, s);
    const bool agrees = family == jz;
    text += std::string(semantics_tag(s)) + " " + joined(family) + (agrees ? " agree" : " differ") + "\n";
    Json entry;
    entry["extensions"] = family_json(af, family);
    entry["agrees_with_jz"] = agrees;
    semantics[std::string(semantics_tag(s))] = entry;
  }
  Json j;
  j["task"] = "COMPARE";
  j["extensions"] = family_json(af, jz);
  j["semantics"] = semantics;
  return {text, j};
}

Rendered dispatch(const ArgumentationFramework& af, const SolveRequest& request) {
  const std::string_view tag = task_tag(request.task);
  switch (request.task) {
    case Task::EnumerateJz: return render_family(tag, af, checked_jz(af));
    case Task::SomeJz: return render_family(tag, af, {checked_jz(af).front()});
    case Task::Weights: return render_weights(af);
    case Task::Grounded: return render_family(tag, af, extensions(af, Semantics::Grounded));
    case Task::Complete: return render_family(tag, af, extensions(af, Semantics::Complete));
    case Task::Preferred: return render_family(tag, af, extensions(af, Semantics::Preferred));
    case Task::Stable: return render_family(tag, af, extensions(af, Semantics::Stable));
    case Task::Stage: return render_family(tag, af, extensions(af, Semantics::Stage));
    case Task::SemiStable: return render_family(tag, af, extensions(af, Semantics::SemiStable));
    case Task::CheckModel: return render_check_model(af, request);
    case Task::Principles: return render_principles(af, request.seed);
    case Task::Compare: return render_compare(af);
  }
  throw InvariantError("unhandled task");
}

}  // namespace

std::optional<Task> task_from_tag(std::string_view tag) {
  for (const auto& [task, t] : kTasks) {
    if (t == tag) return task;
  }
  return std::nullopt;
}

std::string_view task_tag(Task task) {
  for (const auto& [t, tag] : kTasks) {
    if (t == task) return tag;
  }
  return "?";
}

std::optional<InputFormat> format_from_tag(std::string_view tag) {
  if (tag == "apx") return InputFormat::Apx;
  if (tag == "tgf") return InputFormat::Tgf;
  return std::nullopt;
}

std::optional<OutputMode> output_from_tag(std::string_view tag) {
  if (tag == "text") return OutputMode::Text;
  if (tag == "json") return OutputMode::Json;
  return std::nullopt;
}

RunResult run(const SolveRequest& request, std::istream& stdin_stream) {
  RunResult result;
  try {
    std::string text;
    if (request.input) {
      text = read_file(*request.input);
    } else {
      std::ostringstream buf;
      buf << stdin_stream.rdbuf();
      text = buf.str();
    }
    const ArgumentationFramework af = request.format == InputFormat::Apx ? parse_apx(text) : parse_tgf(text);
    Rendered r = dispatch(af, request);
    result.out = request.output == OutputMode::Json ? r.json.dump() + "\n" : r.text;
  } catch (const InvariantError& e) {
    result.exit_code = 2;
    result.err = std::string("internal error: ") + e.what() + "\n";
  } catch (const std::logic_error& e) {
    // FrameworkError and other invalid_argument failures come from the input.
    const bool input = dynamic_cast<const std::invalid_argument*>(&e) != nullptr;
    result.exit_code = input ? 1 : 2;
    result.err = std::string(input ? "error: " : "internal error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    result.exit_code = 1;
    result.err = std::string("error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace rankarg
