#include "wdcat/bench/experiment.hpp"

#include "wdcat/stationarity.hpp"

#include <algorithm>
#include <chrono>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

namespace wdcat::bench {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), v);
  return std::string(buffer, ptr);
}

std::string fixed(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6f", v);
  return buffer;
}

CatalystConfig catalyst_config(const ExperimentConfig& cfg, const CompositeObjective& obj) {
  const double L = obj.lipschitz();
  const Index n = obj.size();
  CatalystConfig c;
  c.mode = cfg.wrapper == Wrapper::CatalystBasic ? CatalystMode::Basic : CatalystMode::Auto;
  const bool stochastic = cfg.method != Method::GD;
  const double default_kappa =
      stochastic ? 2.0 * L / static_cast<double>(n) : method_constants(cfg.method, L, n).kappa_cvx;
  c.kappa0 = cfg.kappa0.value_or(default_kappa);
  c.kappa_cvx = cfg.kappa_cvx.value_or(default_kappa);
  c.T = cfg.T.value_or(stochastic ? static_cast<std::int64_t>(n) : budget_T(cfg.method, L, n));
  c.S = cfg.S.value_or(stochastic ? static_cast<std::int64_t>(n) : budget_S(cfg.method, L, n));
  c.use_logk_factor = cfg.use_logk;
  c.epsilon = cfg.epsilon;
  c.max_outer = cfg.max_outer;
  c.seed = cfg.seed;
  c.inner_tolerance = cfg.inner_tolerance;
  c.lazy_prox = cfg.lazy_prox;
  c.grad_budget = cfg.budget;
  c.max_doublings = cfg.max_doublings;
  c.validate();
  return c;
}

void run_wrapped(const ExperimentConfig& cfg, const ProblemInstance& instance, SolverKind kind,
                 ExperimentResult& out) {
  const CompositeObjective& obj = *instance.objective;
  const CatalystConfig c = catalyst_config(cfg, obj);
  const CatalystResult r = run_catalyst(obj, instance.x0, c, kind);
  for (const TraceRecord& rec : r.trace) {
    TraceRow row;
    row.iter = rec.k;
    row.grad_evals = rec.grad_evals;
    row.fval = rec.fval;
    row.stationarity = rec.stationarity;
    row.kappa = rec.kappa;
    row.winner = to_string(rec.winner);
    row.elapsed_s = rec.elapsed_s;
    out.rows.push_back(row);
  }
  out.status = to_string(r.status);
  out.aborted = r.status == RunStatus::Aborted;
  out.message = r.message;
  out.x_final = r.x;
}

void run_baseline(const ExperimentConfig& cfg, const ProblemInstance& instance, SolverKind kind,
                  ExperimentResult& out) {
  const CompositeObjective& obj = *instance.objective;
  const auto n = static_cast<std::uint64_t>(obj.size());
  const double L = obj.lipschitz();
  const double step = cfg.wrapper == Wrapper::ConvexStep
                          ? 1.0 / (2.0 * L)
                          : 1.0 / (L * std::pow(static_cast<double>(n), 2.0 / 3.0));
  kind.step = step;
  const auto start = Clock::now();
  MethodRun run(kind, obj, std::nullopt, 0.0, step, instance.x0, cfg.seed);
  out.status = to_string(RunStatus::Budget);
  for (std::int64_t pass = 1;; ++pass) {
    if (run.evals().gradients >= cfg.budget) break;
    const std::uint64_t target =
        std::max(static_cast<std::uint64_t>(pass) * n, run.evals().gradients + 1);
    while (run.evals().gradients < target && !run.diverged()) run.advance(1);
    if (run.diverged()) {
      out.aborted = true;
      out.status = to_string(RunStatus::Aborted);
      out.message = "baseline diverged after " + std::to_string(run.iterations()) + " iterations";
      break;
    }
    TraceRow row;
    row.iter = pass;
    row.grad_evals = run.evals().gradients;
    row.fval = evaluate(obj, run.iterate());
    row.stationarity = outer_stationarity(obj, run.iterate()).mapping_norm;
    row.elapsed_s = seconds_since(start);
    out.rows.push_back(row);
    if (!std::isfinite(row.fval)) {
      out.aborted = true;
      out.status = to_string(RunStatus::Aborted);
      out.message = "non-finite objective at pass " + std::to_string(pass);
      break;
    }
    if (cfg.epsilon > 0.0 && row.stationarity < cfg.epsilon) {
      out.status = to_string(RunStatus::Converged);
      break;
    }
  }
  out.x_final = run.iterate();
}

}  // namespace

ExperimentResult execute(const ExperimentConfig& config) {
  config.validate();
  return execute(config, build_problem(config.problem));
}

ExperimentResult execute(const ExperimentConfig& config, const ProblemInstance& instance) {
  config.validate();
  SolverKind kind;
  kind.method = config.method;
  kind.epoch_length = config.epoch_length;
  kind.validate();

  ExperimentResult out;
  out.problem_signature = config.problem.signature();
  const CompositeObjective& obj = *instance.objective;

  TraceRow first;
  first.fval = evaluate(obj, instance.x0);
  first.stationarity = outer_stationarity(obj, instance.x0).mapping_norm;
  out.rows.push_back(first);
  out.x_final = instance.x0;

  if (config.budget == 0) {
    out.status = to_string(RunStatus::Budget);
    return out;
  }
  if (config.wrapper == Wrapper::CatalystBasic || config.wrapper == Wrapper::CatalystAuto)
    run_wrapped(config, instance, kind, out);
  else
    run_baseline(config, instance, kind, out);
  return out;
}

void write_csv(std::ostream& out, const ExperimentResult& result) {
  out << kCsvHeader << '\n';
  for (const TraceRow& r : result.rows)
    out << r.iter << ',' << r.grad_evals << ',' << number(r.fval) << ',' << number(r.stationarity)
        << ',' << number(r.kappa) << ',' << r.winner << ',' << fixed(r.elapsed_s) << '\n';
  if (result.aborted) out << "# aborted: " << result.message << '\n';
}

std::string summary_line(const ExperimentResult& result) {
  std::ostringstream s;
  const TraceRow& last = result.rows.back();
  s << "status=" << result.status << " rows=" << result.rows.size()
    << " grad_evals=" << last.grad_evals << " fval=" << number(last.fval)
    << " stationarity=" << number(last.stationarity) << " kappa_history=";
  std::vector<double> history;
  for (const TraceRow& r : result.rows)
    if (r.winner != "na" && (history.empty() || history.back() != r.kappa)) history.push_back(r.kappa);
  if (history.empty()) s << "none";
  for (std::size_t i = 0; i < history.size(); ++i) s << (i ? ";" : "") << number(history[i]);
  if (result.aborted) s << " aborted=\"" << result.message << '"';
  return s.str();
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  ExperimentResult result = execute(config);
  if (!config.out.empty()) {
    std::ofstream file(config.out);
    if (!file) throw Error("cannot write '" + config.out + "'");
    write_csv(file, result);
  }
  return result;
}

CompareResult compare(const std::vector<CompareEntry>& entries, std::ostream& out,
                      unsigned threads) {
  if (entries.size() < 2) throw ConfigError("compare needs at least two configs");
  for (const CompareEntry& e : entries) e.config.validate();
  const std::string signature = entries.front().config.problem.signature();
  for (const CompareEntry& e : entries)
    if (e.config.problem.signature() != signature)
      throw ConfigError("config '" + e.label + "' describes a different problem");

  CompareResult result;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    std::string label = entries[i].label;
    if (!seen.insert(label).second) {
      label += "_" + std::to_string(i);
      seen.insert(label);
    }
    result.labels.push_back(label);
  }

  const ProblemInstance instance = build_problem(entries.front().config.problem);
  result.runs.resize(entries.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, entries.size()));
  if (workers == 1) {
    for (std::size_t i = 0; i < entries.size(); ++i)
      result.runs[i] = execute(entries[i].config, instance);
  } else {
    std::vector<std::exception_ptr> errors(entries.size());
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < entries.size(); i += workers) {
          try {
            result.runs[i] = execute(entries[i].config, instance);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  std::set<std::uint64_t> axis;
  for (const ExperimentResult& r : result.runs)
    for (const TraceRow& row : r.rows) axis.insert(row.grad_evals);

  out << "grad_evals";
  for (const std::string& label : result.labels)
    out << ',' << label << ".fval," << label << ".stationarity";
  out << '\n';
  std::vector<std::size_t> cursor(result.runs.size(), 0);
  for (std::uint64_t g : axis) {
    out << g;
    for (std::size_t i = 0; i < result.runs.size(); ++i) {
      const auto& rows = result.runs[i].rows;
      while (cursor[i] + 1 < rows.size() && rows[cursor[i] + 1].grad_evals <= g) ++cursor[i];
      const TraceRow& r = rows[cursor[i]];
      out << ',' << number(r.fval) << ',' << number(r.stationarity);
    }
    out << '\n';
  }
  for (std::size_t i = 0; i < result.runs.size(); ++i)
    if (result.runs[i].aborted)
      out << "# aborted " << result.labels[i] << ": " << result.runs[i].message << '\n';
  return result;
}

unsigned bench_threads() {
  if (const char* env = std::getenv("BENCH_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace wdcat::bench
