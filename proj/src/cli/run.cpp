#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string_view>

#include <CLI11.hpp>

#include "squeezelab/catalog.hpp"
#include "squeezelab/cli.hpp"
#include "squeezelab/energy_density.hpp"
#include "squeezelab/error.hpp"
#include "squeezelab/optimizer.hpp"
#include "squeezelab/squeezing.hpp"
#include "squeezelab/states.hpp"

namespace squeezelab::cli {

namespace {

constexpr std::array<std::string_view, 12> kFamilies{
    "vacuum",         "coherent",        "svs",          "pacs",
    "even-cat",       "odd-cat",         "yurke-stoler", "first-kind-svs",
    "first-kind-pacs", "generalized-svs", "tmsv",         "tmsv-first-kind"};

constexpr std::array<std::pair<std::string_view, Command>, 7> kCommands{{
    {"state", Command::state},
    {"variance", Command::variance},
    {"higher-order", Command::higher_order},
    {"energy", Command::energy},
    {"optimize", Command::optimize},
    {"table1", Command::table1},
    {"report", Command::report},
}};

constexpr std::size_t kMaxGrid = 1000000;

std::string_view command_name(Command command) {
  for (const auto& [name, value] : kCommands) {
    if (value == command) return name;
  }
  return "unknown";
}

bool is_two_mode(const std::string& family) {
  return family == "tmsv" || family == "tmsv-first-kind";
}

[[noreturn]] void invalid(const std::string& message) {
  throw Error(ErrorKind::invalid_argument, message);
}

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> values;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || !std::isfinite(value)) {
      invalid(std::string("cannot parse '") + token + "' in " + what);
    }
    values.push_back(value);
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ';' || ch == ' ' || ch == '[' || ch == ']') {
      flush();
    } else {
      token.push_back(ch);
    }
  }
  flush();
  return values;
}

std::string join(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ';';
    out += format_double(values[i]);
  }
  return out;
}

void validate(const RunConfig& cfg) {
  const bool uses_state = cfg.command == Command::state || cfg.command == Command::variance ||
                          cfg.command == Command::higher_order ||
                          cfg.command == Command::energy;
  if (uses_state) {
    if (std::find(kFamilies.begin(), kFamilies.end(), cfg.family) == kFamilies.end()) {
      invalid("unknown family '" + cfg.family + "'");
    }
    if (!std::isfinite(cfg.r) || cfg.r < 0.0) invalid("--r must be finite and >= 0");
    if (cfg.r > 3.0) throw Error(ErrorKind::r_too_large, "--r exceeds 3");
    if (!std::isfinite(cfg.phase)) invalid("--phase must be finite");
    if (!std::isfinite(cfg.alpha) || !std::isfinite(cfg.alpha_im)) invalid("--alpha must be finite");
    const double alpha_cap = cfg.family == "coherent" ? 20.0 : 10.0;
    if (std::hypot(cfg.alpha, cfg.alpha_im) > alpha_cap) {
      throw Error(ErrorKind::alpha_too_large, "|alpha| exceeds " + format_double(alpha_cap));
    }
    if (cfg.m < 0 || cfg.m > 20) invalid("--m must be in [0, 20]");
    if (cfg.l < 1) invalid("--l must be >= 1");
    if (cfg.family == "tmsv-first-kind" && cfg.l > 4) invalid("--l must be <= 4 for tmsv-first-kind");
    if (cfg.family == "generalized-svs") {
      if (cfg.r_list.empty()) invalid("generalized-svs needs --r-list");
      if (cfg.weights.size() != cfg.r_list.size()) invalid("--weights must match --r-list");
      for (double r : cfg.r_list) {
        if (!(r >= 0.0 && r <= 3.0)) invalid("--r-list entries must be in [0, 3]");
      }
    }
    if (cfg.command == Command::energy && is_two_mode(cfg.family)) {
      invalid("energy density is single-mode only");
    }
  }
  if (cfg.command == Command::energy) {
    if (cfg.grid > kMaxGrid) invalid("--grid too large");
    if (!(cfg.k00 > 0.0) || !std::isfinite(cfg.k00)) invalid("--k00 must be positive");
  }
  if (cfg.command == Command::higher_order) {
    if (cfg.order && (*cfg.order < 4 || *cfg.order > 8 || *cfg.order % 2 != 0)) {
      invalid("--order must be 4, 6 or 8");
    }
    if (!std::isfinite(cfg.phi)) invalid("--phi must be finite");
  }
  if (cfg.command == Command::optimize) {
    OptimizationProblem{cfg.r_list, std::nullopt, cfg.restarts, cfg.seed}.validate();
  }
  if (cfg.restarts < 1) invalid("--restarts must be >= 1");
  if (cfg.tail_tol && !(*cfg.tail_tol > 0.0 && *cfg.tail_tol < 1.0)) {
    invalid("--tail-tol must be in (0, 1)");
  }
}

BuildOptions build_options(const RunConfig& cfg) {
  BuildOptions opts;
  opts.cutoff = cfg.cutoff;
  if (cfg.tail_tol) opts.tol.tail_tol = *cfg.tail_tol;
  return opts;
}

using AnyState = std::variant<FockState, TwoModeFockState>;

AnyState make_state(const RunConfig& cfg) {
  const auto opts = build_options(cfg);
  const Complex alpha(cfg.alpha, cfg.alpha_im);
  const std::string& f = cfg.family;
  if (f == "vacuum") {
    return opts.cutoff ? FockState::vacuum().resized(*opts.cutoff) : FockState::vacuum();
  }
  if (f == "coherent") return coherent(alpha, opts);
  if (f == "svs") return squeezed_vacuum(SqueezeParam(cfg.r, cfg.phase), opts);
  if (f == "pacs") return pacs(PacsParam(alpha, cfg.m), opts);
  if (f == "even-cat") return cat(alpha, CatKind::even, opts);
  if (f == "odd-cat") return cat(alpha, CatKind::odd, opts);
  if (f == "yurke-stoler") return cat(alpha, CatKind::yurke_stoler, opts);
  if (f == "first-kind-svs") {
    return first_kind_superposition(SqueezeParam(cfg.r, cfg.phase), cfg.l, opts);
  }
  if (f == "first-kind-pacs") return first_kind_superposition(PacsParam(alpha, cfg.m), cfg.l, opts);
  if (f == "generalized-svs") {
    SuperpositionSpec spec{Family::squeezed_vacuum, {}, false};
    for (std::size_t j = 0; j < cfg.r_list.size(); ++j) {
      spec.components.push_back({Complex(cfg.weights[j], 0.0), SqueezeParam(cfg.r_list[j])});
    }
    return generalized_superposition(spec, opts);
  }
  if (f == "tmsv") return two_mode_squeezed_vacuum(SqueezeParam(cfg.r, cfg.phase), opts);
  return two_mode_first_kind(SqueezeParam(cfg.r, cfg.phase), cfg.l, opts);
}

Table state_table(const AnyState& state) {
  Table table;
  if (const auto* single = std::get_if<FockState>(&state)) {
    table.columns = {"n", "re", "im", "probability"};
    for (std::size_t n = 0; n <= single->cutoff(); ++n) {
      const Complex c = (*single)[n];
      table.rows.push_back({static_cast<std::int64_t>(n), c.real(), c.imag(), std::norm(c)});
    }
    return table;
  }
  const auto& pair = std::get<TwoModeFockState>(state);
  table.columns = {"n", "m", "re", "im", "probability"};
  for (std::size_t n = 0; n <= pair.cutoff(); ++n) {
    for (std::size_t m = 0; m <= pair.cutoff(); ++m) {
      const Complex c = pair(n, m);
      if (c == Complex{}) continue;
      table.rows.push_back({static_cast<std::int64_t>(n), static_cast<std::int64_t>(m),
                            c.real(), c.imag(), std::norm(c)});
    }
  }
  return table;
}

Table variance_table(const RunConfig& cfg, const AnyState& state) {
  const auto tol = build_options(cfg).tol;
  const QuadratureReport report = std::holds_alternative<FockState>(state)
                                      ? principal_report(std::get<FockState>(state), tol)
                                      : two_mode_principal_report(std::get<TwoModeFockState>(state), tol);
  Table table;
  table.columns = {"family", "var_x", "var_p", "principal_variance", "principal_angle", "squeezed"};
  table.rows.push_back({cfg.family, report.var_x, report.var_p, report.principal_variance,
                        report.principal_angle, report.squeezed});
  return table;
}

Table higher_order_table(const RunConfig& cfg, const AnyState& state) {
  const auto tol = build_options(cfg).tol;
  std::vector<int> orders{4, 6, 8};
  if (cfg.order) orders = {*cfg.order};
  Table table;
  table.columns = {"criterion", "order", "phi", "value", "benchmark", "squeezed"};
  for (int order : orders) {
    const auto report =
        std::holds_alternative<FockState>(state)
            ? hong_mandel_moment(std::get<FockState>(state), order / 2, cfg.phi, tol)
            : two_mode_hong_mandel_moment(std::get<TwoModeFockState>(state), order / 2, cfg.phi, tol);
    table.rows.push_back({std::string("hong_mandel"), static_cast<std::int64_t>(report.order),
                          cfg.phi, report.moment, report.vacuum_benchmark, report.squeezed});
  }
  if (const auto* single = std::get_if<FockState>(&state)) {
    const auto h = hillery_report(*single, tol);
    table.rows.push_back({std::string("hillery_y1"), std::int64_t{4}, 0.0, h.var_y1, h.bound,
                          h.var_y1 < h.bound - kDecisionSlack});
    table.rows.push_back({std::string("hillery_y2"), std::int64_t{4}, 0.0, h.var_y2, h.bound,
                          h.var_y2 < h.bound - kDecisionSlack});
  }
  return table;
}

Table energy_table(const RunConfig& cfg, const FockState& state) {
  const auto econf = EnergyDensityConfig::uniform(cfg.grid, cfg.k00);
  const auto profile = t00_profile(state, econf, build_options(cfg).tol);
  Table table;
  table.columns = {"theta", "t00"};
  for (std::size_t i = 0; i < econf.theta_grid.size(); ++i) {
    table.rows.push_back({econf.theta_grid[i], profile.values[i]});
  }
  return table;
}

Table optimize_table(const RunConfig& cfg) {
  const OptimizationProblem problem{cfg.r_list, std::nullopt, cfg.restarts, cfg.seed};
  Table table;
  table.columns = {"method", "variance", "iterations", "converged", "weights"};
  for (const auto& result : {minimize_simplex(problem), minimize_eigen(problem)}) {
    table.rows.push_back({std::string(method_name(result.method)), result.variance,
                          static_cast<std::int64_t>(result.iterations), result.converged,
                          join(result.weights)});
  }
  return table;
}

Table table1_table(const RunConfig& cfg) {
  Table table;
  table.columns = {"row", "r_list", "published_variance", "objective_at_published",
                   "simplex_variance", "eigen_variance", "eigen_weights", "pass"};
  for (const auto& row : reproduce_table1(cfg.seed, cfg.restarts)) {
    table.rows.push_back({static_cast<std::int64_t>(row.index), join(row.r_list),
                          row.published_variance, row.objective_at_published,
                          row.simplex.variance, row.eigen.variance, join(row.eigen.weights),
                          row.pass});
  }
  return table;
}

Table report_table() {
  Table table;
  table.columns = {"state", "family", "zero_mean", "principal_variance", "squeezed",
                   "min_t00", "ever_negative", "consistent", "asserted"};
  const EnergyDensityConfig econf;
  for (const auto& entry : single_mode_catalog()) {
    const auto quad = principal_report(entry.state);
    const auto profile = t00_profile(entry.state, econf);
    const auto neg = negativity_report(entry.state);
    table.rows.push_back({entry.name, entry.family, neg.zero_mean, quad.principal_variance,
                          neg.squeezed, profile.min_value, neg.ever_negative, neg.consistent,
                          neg.zero_mean && entry.family.find("pacs") == std::string::npos});
  }
  return table;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument:
    case ErrorKind::r_too_large:
    case ErrorKind::alpha_too_large:
      return 2;
    case ErrorKind::io_error:
      return 1;
    default:
      return 3;
  }
}

void report_error(std::ostream& err, std::string_view tag, std::string message) {
  std::replace(message.begin(), message.end(), '\n', ' ');
  err << "squeezelab: error=" << tag << " message=" << message << '\n';
}

}  // namespace

Table execute(const RunConfig& config) {
  validate(config);
  switch (config.command) {
    case Command::state:
      return state_table(make_state(config));
    case Command::variance:
      return variance_table(config, make_state(config));
    case Command::higher_order:
      return higher_order_table(config, make_state(config));
    case Command::energy:
      return energy_table(config, std::get<FockState>(make_state(config)));
    case Command::optimize:
      return optimize_table(config);
    case Command::table1:
      return table1_table(config);
    case Command::report:
      return report_table();
  }
  invalid("unknown command");
}

RunMeta describe(const RunConfig& config) {
  RunMeta meta;
  meta.command = std::string(command_name(config.command));
  meta.seed = config.seed;
  auto& p = meta.parameters;
  switch (config.command) {
    case Command::state:
    case Command::variance:
    case Command::higher_order:
    case Command::energy:
      p["family"] = config.family;
      p["r"] = format_double(config.r);
      p["phase"] = format_double(config.phase);
      p["alpha"] = format_double(config.alpha);
      p["alpha_im"] = format_double(config.alpha_im);
      p["m"] = std::to_string(config.m);
      p["l"] = std::to_string(config.l);
      if (!config.r_list.empty()) p["r_list"] = join(config.r_list);
      if (!config.weights.empty()) p["weights"] = join(config.weights);
      if (config.cutoff) p["cutoff"] = std::to_string(*config.cutoff);
      if (config.tail_tol) p["tail_tol"] = format_double(*config.tail_tol);
      break;
    case Command::optimize:
      p["r_list"] = join(config.r_list);
      p["restarts"] = std::to_string(config.restarts);
      break;
    case Command::table1:
      p["restarts"] = std::to_string(config.restarts);
      break;
    case Command::report:
      break;
  }
  if (config.command == Command::energy) {
    p["grid"] = std::to_string(config.grid);
    p["k00"] = format_double(config.k00);
  }
  if (config.command == Command::higher_order) {
    p["phi"] = format_double(config.phi);
    if (config.order) p["order"] = std::to_string(*config.order);
  }
  return meta;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"squeezelab: squeezing, superpositions and energy density in truncated Fock space"};
  std::string command;
  std::string r_list;
  std::string weights;
  std::string format = "csv";
  std::size_t cutoff = 0;
  double tail_tol = 0.0;
  int order = 0;

  std::vector<std::string> command_names;
  for (const auto& [name, value] : kCommands) command_names.emplace_back(name);
  app.add_option("command", command, "Experiment to run")
      ->required()
      ->check(CLI::IsMember(command_names));
  app.add_option("--family", cfg.family, "State family");
  app.add_option("--r", cfg.r, "Squeezing parameter");
  app.add_option("--phase", cfg.phase, "Squeeze phase");
  app.add_option("--alpha", cfg.alpha, "Coherent amplitude (real part)");
  app.add_option("--alpha-im", cfg.alpha_im, "Coherent amplitude (imaginary part)");
  app.add_option("--m", cfg.m, "Added photons");
  app.add_option("--l", cfg.l, "Superposition order");
  app.add_option("--r-list", r_list, "Squeezing parameters, comma separated");
  app.add_option("--weights", weights, "Real weights, comma separated");
  app.add_option("--grid", cfg.grid, "Number of phase samples");
  app.add_option("--k00", cfg.k00, "Energy-density prefactor");
  app.add_option("--phi", cfg.phi, "Quadrature angle");
  auto* order_opt = app.add_option("--order", order, "Hong-Mandel order (4, 6 or 8)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("-o,--output", cfg.output, "Output file (stdout when omitted)");
  auto* cutoff_opt = app.add_option("--cutoff", cutoff, "Fock cutoff override");
  auto* tail_opt = app.add_option("--tail-tol", tail_tol, "Tail tolerance override");
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_option("--restarts", cfg.restarts, "Simplex restarts");
  app.set_config("--config", "", "Flat key=value configuration file");
  app.set_version_flag("--version", kToolVersion);

  std::vector<const char*> argv{"squeezelab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    report_error(err, "UsageError", e.what());
    return 2;
  }

  try {
    for (const auto& [name, value] : kCommands) {
      if (name == command) cfg.command = value;
    }
    cfg.format = format == "json" ? Format::json : Format::csv;
    cfg.r_list = parse_list(r_list, "--r-list");
    cfg.weights = parse_list(weights, "--weights");
    if (order_opt->count() > 0) cfg.order = order;
    if (cutoff_opt->count() > 0) cfg.cutoff = cutoff;
    if (tail_opt->count() > 0) cfg.tail_tol = tail_tol;

    const Table table = execute(cfg);
    emit(table, describe(cfg), cfg.format, cfg.output, out);
  } catch (const Error& e) {
    report_error(err, e.tag(), e.what());
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    report_error(err, "InternalError", e.what());
    return 3;
  }
  return 0;
}

}  // namespace squeezelab::cli
