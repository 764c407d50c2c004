#include "wdcat/bench/experiment.hpp"
#include "wdcat/data/dataset.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

constexpr int kConfigError = 2;
constexpr int kRuntimeError = 3;

int run_command(const std::string& path, std::optional<std::uint64_t> seed,
                const std::string& out) {
  wdcat::bench::ExperimentConfig cfg = wdcat::bench::load_experiment(path);
  if (seed) cfg.seed = *seed;
  if (!out.empty()) cfg.out = out;
  const auto result = wdcat::bench::run_experiment(cfg);
  if (cfg.out.empty()) wdcat::bench::write_csv(std::cout, result);
  std::cerr << wdcat::bench::summary_line(result) << '\n';
  return result.aborted ? kRuntimeError : 0;
}

int compare_command(const std::vector<std::string>& paths, const std::string& out) {
  std::vector<wdcat::bench::CompareEntry> entries;
  for (const auto& path : paths)
    entries.push_back({std::filesystem::path(path).stem().string(),
                       wdcat::bench::load_experiment(path)});
  wdcat::bench::CompareResult result;
  if (out.empty()) {
    result = wdcat::bench::compare(entries, std::cout, wdcat::bench::bench_threads());
  } else {
    std::ofstream file(out);
    if (!file) throw wdcat::Error("cannot write '" + out + "'");
    result = wdcat::bench::compare(entries, file, wdcat::bench::bench_threads());
  }
  bool aborted = false;
  for (std::size_t i = 0; i < result.runs.size(); ++i) {
    std::cerr << result.labels[i] << ": " << wdcat::bench::summary_line(result.runs[i]) << '\n';
    aborted = aborted || result.runs[i].aborted;
  }
  return aborted ? kRuntimeError : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Catalyst benchmark harness"};
  app.require_subcommand(1);

  std::string config_path, out;
  std::optional<std::uint64_t> seed;
  auto* run = app.add_subcommand("run", "Run one experiment and write its CSV trace");
  run->add_option("--config", config_path, "key=value experiment file")->required();
  run->add_option("--seed", seed, "Override the algorithm seed");
  run->add_option("--out", out, "CSV output path (overrides the config)");

  std::vector<std::string> configs;
  std::string compare_out;
  auto* cmp = app.add_subcommand("compare", "Run several experiments on one problem");
  cmp->add_option("--configs", configs, "Comma-separated config files")
      ->required()
      ->delimiter(',');
  cmp->add_option("--out", compare_out, "Wide CSV output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  try {
    if (*run) return run_command(config_path, seed, out);
    return compare_command(configs, compare_out);
  } catch (const wdcat::bench::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const wdcat::ParseError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
}
