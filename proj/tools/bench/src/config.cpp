#include "wdcat/bench/config.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>
#include <sstream>

namespace wdcat::bench {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_double(const std::string& key, const std::string& text) {
  double v = 0.0;
  const char* begin = text.data();
  if (!text.empty() && text.front() == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ConfigError("config key '" + key + "': '" + text + "' is not a number");
  return v;
}

long long to_integer(const std::string& key, const std::string& text) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    // Accept integral values written in floating-point notation, e.g. 1e5.
    const double d = to_double(key, text);
    if (d != static_cast<double>(static_cast<long long>(d)))
      throw ConfigError("config key '" + key + "': '" + text + "' is not an integer");
    return static_cast<long long>(d);
  }
  return v;
}

bool to_bool(const std::string& key, const std::string& text) {
  if (text == "1" || text == "true" || text == "on" || text == "yes") return true;
  if (text == "0" || text == "false" || text == "off" || text == "no") return false;
  throw ConfigError("config key '" + key + "': '" + text + "' is not a boolean");
}

std::string format_double(double v) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), v);
  return std::string(buffer, ptr);
}

}  // namespace

KeyValues parse_key_values(std::istream& in, const std::string& origin) {
  KeyValues values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
    if (!values.emplace(key, value).second)
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": duplicate key '" + key + "'");
  }
  return values;
}

KeyValues load_key_values(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  return parse_key_values(in, path);
}

std::string to_string(Wrapper wrapper) {
  switch (wrapper) {
    case Wrapper::ConvexStep: return "none-convex-stepsize";
    case Wrapper::NonconvexStep: return "none-nonconvex-stepsize";
    case Wrapper::CatalystBasic: return "catalyst-basic";
    case Wrapper::CatalystAuto: return "catalyst-auto";
  }
  return "unknown";
}

Wrapper parse_wrapper(const std::string& text) {
  for (Wrapper w : {Wrapper::ConvexStep, Wrapper::NonconvexStep, Wrapper::CatalystBasic,
                    Wrapper::CatalystAuto})
    if (text == to_string(w)) return w;
  throw ConfigError("unknown wrapper '" + text + "'");
}

std::string ProblemSpec::signature() const {
  std::ostringstream s;
  s << "problem=" << kind << ";data_seed=" << data_seed;
  if (!data.empty()) s << ";data=" << data;
  if (features) s << ";features=" << *features;
  if (kind == "quadratic") {
    s << ";n=" << samples << ";p=" << dim << ";L=" << format_double(lipschitz)
      << ";rho=" << format_double(rho) << ";radius=" << format_double(radius)
      << ";noise=" << format_double(noise);
  } else if (kind == "logistic" || kind == "nn") {
    if (data.empty())
      s << ";n=" << samples << ";p=" << dim << ";spread=" << format_double(spread)
        << ";flip=" << format_double(flip);
    s << ";l2=" << format_double(l2);
    if (kind == "logistic") s << ";l1=" << format_double(l1);
    if (kind == "nn") s << ";hidden=" << hidden;
  } else if (kind == "dictionary") {
    s << ";n=" << samples << ";m=" << signal_size << ";atoms=" << atoms
      << ";lambda=" << format_double(lambda) << ";mu=" << format_double(mu);
  }
  return s.str();
}

void ExperimentConfig::validate() const {
  const auto& p = problem;
  if (p.kind != "quadratic" && p.kind != "logistic" && p.kind != "dictionary" && p.kind != "nn")
    throw ConfigError("unknown problem '" + p.kind + "'");
  if (!p.data.empty()) {
    if (p.kind != "logistic" && p.kind != "nn")
      throw ConfigError("'data' is only used by the logistic and nn problems");
    if (!std::filesystem::exists(p.data)) throw ConfigError("data file '" + p.data + "' does not exist");
  }
  if (p.samples < 1) throw ConfigError("n must be positive");
  if (p.kind == "quadratic") {
    if (p.dim < 2) throw ConfigError("quadratic: p must be at least 2");
    if (!(p.lipschitz > 0.0)) throw ConfigError("quadratic: L must be positive");
    if (!(p.rho >= 0.0 && p.rho <= p.lipschitz)) throw ConfigError("quadratic: need 0 <= rho <= L");
    if (!(p.radius > 0.0)) throw ConfigError("quadratic: radius must be positive");
    if (p.noise < 0.0) throw ConfigError("quadratic: noise must be non-negative");
  }
  if ((p.kind == "logistic" || p.kind == "nn") && p.data.empty()) {
    if (p.dim < 1) throw ConfigError("p must be positive");
    if (!(p.spread >= 1.0)) throw ConfigError("spread must be >= 1");
    if (!(p.flip >= 0.0 && p.flip < 0.5)) throw ConfigError("flip must be in [0, 0.5)");
  }
  if (p.l2 < 0.0 || p.l1 < 0.0) throw ConfigError("l1 and l2 must be non-negative");
  if (p.kind == "dictionary") {
    if (p.signal_size < 1 || p.atoms < 1) throw ConfigError("dictionary: m and atoms must be positive");
    if (p.lambda < 0.0 || p.mu < 0.0) throw ConfigError("dictionary: lambda and mu must be non-negative");
  }
  if (p.kind == "nn" && p.hidden < 1) throw ConfigError("nn: hidden must be positive");
  if (epoch_length < 0) throw ConfigError("epoch must be non-negative");
  if (!(epsilon >= 0.0)) throw ConfigError("epsilon must be non-negative");
  if (max_outer < 0) throw ConfigError("max_outer must be non-negative");
  if (kappa0 && !(*kappa0 > 0.0)) throw ConfigError("kappa0 must be positive");
  if (kappa_cvx && !(*kappa_cvx > 0.0)) throw ConfigError("kappa_cvx must be positive");
  if (T && *T < 1) throw ConfigError("T must be at least 1");
  if (S && *S < 1) throw ConfigError("S must be at least 1");
  if (!(inner_tolerance >= 0.0)) throw ConfigError("inner_tolerance must be non-negative");
  if (max_doublings < 0) throw ConfigError("max_doublings must be non-negative");
}

ExperimentConfig parse_experiment(const KeyValues& values) {
  ExperimentConfig cfg;
  auto& p = cfg.problem;
  using Setter = std::function<void(const std::string&, const std::string&)>;
  const std::map<std::string, Setter> setters = {
      {"problem", [&](auto&, auto& v) { p.kind = v; }},
      {"data", [&](auto&, auto& v) { p.data = v; }},
      {"features", [&](auto& k, auto& v) { p.features = to_integer(k, v); }},
      {"data_seed", [&](auto& k, auto& v) { p.data_seed = static_cast<std::uint64_t>(to_integer(k, v)); }},
      {"n", [&](auto& k, auto& v) { p.samples = to_integer(k, v); }},
      {"p", [&](auto& k, auto& v) { p.dim = to_integer(k, v); }},
      {"L", [&](auto& k, auto& v) { p.lipschitz = to_double(k, v); }},
      {"rho", [&](auto& k, auto& v) { p.rho = to_double(k, v); }},
      {"radius", [&](auto& k, auto& v) { p.radius = to_double(k, v); }},
      {"noise", [&](auto& k, auto& v) { p.noise = to_double(k, v); }},
      {"spread", [&](auto& k, auto& v) { p.spread = to_double(k, v); }},
      {"flip", [&](auto& k, auto& v) { p.flip = to_double(k, v); }},
      {"l2", [&](auto& k, auto& v) { p.l2 = to_double(k, v); }},
      {"l1", [&](auto& k, auto& v) { p.l1 = to_double(k, v); }},
      {"m", [&](auto& k, auto& v) { p.signal_size = to_integer(k, v); }},
      {"atoms", [&](auto& k, auto& v) { p.atoms = to_integer(k, v); }},
      {"lambda", [&](auto& k, auto& v) { p.lambda = to_double(k, v); }},
      {"mu", [&](auto& k, auto& v) { p.mu = to_double(k, v); }},
      {"hidden", [&](auto& k, auto& v) { p.hidden = to_integer(k, v); }},
      {"method", [&](auto&, auto& v) {
         try {
           cfg.method = parse_method(v);
         } catch (const Error& e) {
           throw ConfigError(e.what());
         }
       }},
      {"wrapper", [&](auto&, auto& v) { cfg.wrapper = parse_wrapper(v); }},
      {"epoch", [&](auto& k, auto& v) { cfg.epoch_length = to_integer(k, v); }},
      {"budget", [&](auto& k, auto& v) {
         const long long b = to_integer(k, v);
         if (b < 0) throw ConfigError("budget must be non-negative");
         cfg.budget = static_cast<std::uint64_t>(b);
       }},
      {"seed", [&](auto& k, auto& v) { cfg.seed = static_cast<std::uint64_t>(to_integer(k, v)); }},
      {"out", [&](auto&, auto& v) { cfg.out = v; }},
      {"epsilon", [&](auto& k, auto& v) { cfg.epsilon = to_double(k, v); }},
      {"max_outer", [&](auto& k, auto& v) { cfg.max_outer = to_integer(k, v); }},
      {"kappa0", [&](auto& k, auto& v) { cfg.kappa0 = to_double(k, v); }},
      {"kappa_cvx", [&](auto& k, auto& v) { cfg.kappa_cvx = to_double(k, v); }},
      {"T", [&](auto& k, auto& v) { cfg.T = to_integer(k, v); }},
      {"S", [&](auto& k, auto& v) { cfg.S = to_integer(k, v); }},
      {"use_logk", [&](auto& k, auto& v) { cfg.use_logk = to_bool(k, v); }},
      {"lazy_prox", [&](auto& k, auto& v) { cfg.lazy_prox = to_bool(k, v); }},
      {"inner_tolerance", [&](auto& k, auto& v) { cfg.inner_tolerance = to_double(k, v); }},
      {"max_doublings", [&](auto& k, auto& v) { cfg.max_doublings = static_cast<int>(to_integer(k, v)); }},
  };
  for (const auto& [key, value] : values) {
    const auto it = setters.find(key);
    if (it == setters.end()) throw ConfigError("unknown config key '" + key + "'");
    it->second(key, value);
  }
  if (!values.count("budget")) throw ConfigError("config must set 'budget'");
  return cfg;
}

ExperimentConfig load_experiment(const std::string& path) {
  return parse_experiment(load_key_values(path));
}

}  // namespace wdcat::bench
