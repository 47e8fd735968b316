#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rankarg {

enum class InputFormat { Apx, Tgf };
enum class OutputMode { Text, Json };

enum class Task {
  EnumerateJz,    // EE-JZ
  SomeJz,         // SE-JZ
  Weights,        // WEIGHTS
  Grounded,       // EE-GR
  Complete,       // EE-CO
  Preferred,      // EE-PR
  Stable,         // EE-ST
  Stage,          // EE-STG
  SemiStable,     // EE-SST
  CheckModel,     // CHECK-MODEL
  Principles,     // PRINCIPLES
  Compare,        // COMPARE
};

std::optional<Task> task_from_tag(std::string_view tag);
std::string_view task_tag(Task task);
std::optional<InputFormat> format_from_tag(std::string_view tag);
std::optional<OutputMode> output_from_tag(std::string_view tag);

struct SolveRequest {
  /// Framework file; stdin when empty.
  std::optional<std::filesystem::path> input;
  InputFormat format = InputFormat::Apx;
  Task task = Task::EnumerateJz;
  OutputMode output = OutputMode::Text;
  /// Measure file, required by CHECK-MODEL.
  std::optional<std::filesystem::path> measure;
  std::uint64_t seed = 0;
};

/// Raised when a solver result breaks one of its own guarantees.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct RunResult {
  /// 0 success, 1 input error, 2 internal invariant failure.
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Reads the framework (from `stdin_stream` when no path is given), runs the
/// task and renders its output.
RunResult run(const SolveRequest& request, std::istream& stdin_stream);

}  // namespace rankarg
