#pragma once

#include "wdcat/bench/config.hpp"
#include "wdcat/bench/problem_factory.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace wdcat::bench {

inline constexpr const char* kCsvHeader = "iter,grad_evals,fval,stationarity,kappa,winner,elapsed_s";

struct TraceRow {
  std::int64_t iter = 0;
  std::uint64_t grad_evals = 0;
  double fval = 0.0;
  double stationarity = 0.0;
  double kappa = 0.0;
  std::string winner = "na";  // prox | accel | na
  double elapsed_s = 0.0;
};

struct ExperimentResult {
  std::vector<TraceRow> rows;
  bool aborted = false;
  std::string status;
  std::string message;
  std::string problem_signature;
  Vector x_final;
};

/// Runs one configured experiment in memory. Invalid configurations throw
/// ConfigError before any computation; runtime failures are reported
/// through `aborted` with the rows collected so far.
ExperimentResult execute(const ExperimentConfig& config);
/// Same, on an already built problem instance.
ExperimentResult execute(const ExperimentConfig& config, const ProblemInstance& instance);

void write_csv(std::ostream& out, const ExperimentResult& result);
std::string summary_line(const ExperimentResult& result);

/// execute + write_csv to config.out (when set).
ExperimentResult run_experiment(const ExperimentConfig& config);

struct CompareEntry {
  std::string label;
  ExperimentConfig config;
};

struct CompareResult {
  std::vector<std::string> labels;
  std::vector<ExperimentResult> runs;
};

/// Runs every config (up to `threads` at a time) and writes a wide CSV
/// aligned on grad_evals with step interpolation: one `<label>.fval` and
/// one `<label>.stationarity` column per config. Throws ConfigError when
/// fewer than two configs are given or their problems differ.
CompareResult compare(const std::vector<CompareEntry>& entries, std::ostream& out,
                      unsigned threads = 1);

/// BENCH_THREADS when set and positive, otherwise the hardware concurrency.
unsigned bench_threads();

}  // namespace wdcat::bench
