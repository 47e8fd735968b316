// rankarg: JZ ranking extensions and classical semantics for Dung frameworks.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "rankarg/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Plausibility-based (JZ) and classical extensions of argumentation frameworks"};

  std::string input;
  std::string format = "apx";
  std::string task = "EE-JZ";
  std::string output = "text";
  std::string measure;
  std::uint64_t seed = 0;

  app.add_option("input", input, "Framework file (stdin when omitted)");
  app.add_option("-f,--format", format, "Input format")->check(CLI::IsMember({"apx", "tgf"}));
  app.add_option("-t,--task", task,
                 "EE-JZ, SE-JZ, WEIGHTS, EE-GR, EE-CO, EE-PR, EE-ST, EE-STG, EE-SST, CHECK-MODEL, PRINCIPLES, "
                 "COMPARE");
  app.add_option("-o,--output", output, "Output mode")->check(CLI::IsMember({"text", "json"}));
  app.add_option("-m,--measure", measure, "Measure file for CHECK-MODEL");
  app.add_option("--seed", seed, "Seed for randomized principle checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  rankarg::SolveRequest request;
  const auto parsed_task = rankarg::task_from_tag(task);
  if (!parsed_task) {
    std::cerr << "error: unknown task '" << task << "'\n";
    return 1;
  }
  request.task = *parsed_task;
  request.format = *rankarg::format_from_tag(format);
  request.output = *rankarg::output_from_tag(output);
  request.seed = seed;
  if (!input.empty() && input != "-") request.input = input;
  if (!measure.empty()) request.measure = measure;

  const rankarg::RunResult result = rankarg::run(request, std::cin);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
