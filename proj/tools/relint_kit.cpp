#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "relkit/runner.hpp"

namespace fs = std::filesystem;
using namespace relkit;

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw InputError("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Files are taken as given; directories contribute their *.json entries in
// name order.
std::vector<RunInput> collect_inputs(const std::vector<std::string>& paths) {
  std::vector<RunInput> inputs;
  for (const auto& arg : paths) {
    const fs::path p(arg);
    if (fs::is_directory(p)) {
      std::vector<fs::path> files;
      for (const auto& e : fs::directory_iterator(p))
        if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
      std::sort(files.begin(), files.end());
      for (const auto& f : files) inputs.push_back({f.filename().string(), read_file(f)});
    } else {
      inputs.push_back({p.filename().string(), read_file(p)});
    }
  }
  return inputs;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact relative-interior toolkit for polyhedral sets, maps, functions and sequences"};
  app.set_help_all_flag("--help-all");

  std::string command;
  std::vector<std::string> files;
  std::uint64_t seed = kDefaultSeed;
  std::string out_path, point, lambda, matrix;
  bool json_stdout = false;

  app.add_option("command", command, "Command to run")
      ->required()
      ->check(CLI::IsMember(command_names()));
  app.add_option("files", files, "Instance documents, certificate documents, or corpus directories");
  app.add_option("--seed", seed, "Sampling seed")->capture_default_str();
  app.add_option("--out", out_path, "Write the JSON report to this file");
  app.add_flag("--json", json_stdout, "Print the JSON report instead of check lines");
  app.add_option("--point", point, "Query point, e.g. \"1/2,0\"");
  app.add_option("--lambda", lambda, "Epigraph level for epi-ri");
  app.add_option("--matrix", matrix, "Linear map for image-ri, rows separated by ';', e.g. \"1,1;0,1\"");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  RunReport report;
  try {
    RunOptions options;
    options.seed = seed;
    if (!point.empty()) options.point = parse_vector_arg(point);
    if (!lambda.empty()) options.lambda = parse_rational(lambda);
    if (!matrix.empty()) options.matrix = parse_matrix_arg(matrix);
    report = run(command, options, collect_inputs(files));
  } catch (const InputError& e) {
    std::cerr << "relint-kit: " << e.what() << "\n";
    return kExitInputError;
  }

  const std::string text = report.json.dump(2) + "\n";
  std::ostream& lines_out = report.exit_code == kExitInputError ? std::cerr : std::cout;
  if (json_stdout) {
    std::cout << text;
  } else {
    for (const auto& line : report.lines) lines_out << line << "\n";
  }
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "relint-kit: cannot write " << out_path << "\n";
      return kExitInputError;
    }
    out << text;
  }
  return report.exit_code;
}
