#include "toriclogk/cli.hpp"

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "toriclogk/error.hpp"
#include "toriclogk/io.hpp"
#include "toriclogk/svg.hpp"

namespace toriclogk::cli {

namespace {

using io::Json;

// Usage problems detected before any computation.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_error(std::ostream& err, std::string_view code, const std::string& message) {
  Json e;
  e["error"] = code;
  e["message"] = message;
  err << e.dump() << '\n';
}

bool needs_polytope(Command c) { return c != Command::P1Conic; }

Format effective_format(const RunConfig& config) {
  if (config.format) return *config.format;
  return config.command == Command::Plot ? Format::Svg : Format::Json;
}

void validate(const RunConfig& config) {
  if (needs_polytope(config.command)) {
    if (config.input_path.has_value() == config.builtin.has_value()) {
      throw UsageError("exactly one of --input or --builtin is required");
    }
  }
  const Format format = effective_format(config);
  if ((format == Format::Svg) != (config.command == Command::Plot)) {
    throw UsageError("svg format is produced by (and only by) the plot command");
  }
  switch (config.command) {
    case Command::Futaki:
    case Command::Oracle:
      if (!config.lambda) throw UsageError("--lambda is required");
      break;
    case Command::Classify:
      if (!config.beta) throw UsageError("--beta is required");
      break;
    case Command::P1Conic:
      if (!config.alphas) throw UsageError("--alphas is required");
      break;
    default:
      break;
  }
  if (config.k_max && config.command != Command::Oracle) {
    throw UsageError("--kmax only applies to oracle");
  }
}

bool use_color(const RunConfig& config) {
  const char* env = std::getenv("TORICLOGK_COLOR");
  const std::string mode = env ? env : "auto";
  if (mode == "never") return false;
  return !config.output && isatty(STDOUT_FILENO);
}

std::string paint(const std::string& s, bool color) {
  if (!color) return s;
  const char* code = nullptr;
  if (s == "stable" || s == "OK" || s == "true") code = "32";
  if (s == "semistable") code = "33";
  if (s == "unstable" || s == "MISMATCH" || s == "false") code = "31";
  if (!code) return s;
  return std::string("\x1b[") + code + "m" + s + "\x1b[0m";
}

std::string scalar_text(const Json& v, bool color) {
  if (v.is_string()) return paint(v.get<std::string>(), color);
  if (v.is_null()) return "none";
  return paint(v.dump(), color);
}

void text_lines(const Json& v, const std::string& indent, bool color, std::ostream& os) {
  for (const auto& [key, value] : v.items()) {
    const bool flat_array =
        value.is_array() && std::all_of(value.begin(), value.end(),
                                        [](const Json& x) { return x.is_primitive(); });
    if (value.is_primitive()) {
      os << indent << key << ": " << scalar_text(value, color) << '\n';
    } else if (flat_array) {
      os << indent << key << ": (";
      for (std::size_t i = 0; i < value.size(); ++i) {
        os << (i ? ", " : "") << scalar_text(value[i], color);
      }
      os << ")\n";
    } else {
      os << indent << key << ":\n";
      text_lines(value, indent + "  ", color, os);
    }
  }
}

io::NamedPolytope load(const RunConfig& config) {
  if (config.builtin) return io::builtin_polytope(*config.builtin);
  return io::load_polytope(*config.input_path);
}

Json r_report(const io::NamedPolytope& np) {
  const auto& p = np.polytope;
  Json out;
  out["name"] = np.name;
  out["R"] = io::rational_json(r_invariant(p));
  out["barycenter"] = io::ratvec_json(p.barycenter());
  out["Q"] = p.barycenter().is_zero() ? Json(nullptr) : io::ratvec_json(exit_point(p));
  return out;
}

Json futaki_report(const io::NamedPolytope& np, const RunConfig& config) {
  const auto& p = np.polytope;
  const RatVec& lambda = *config.lambda;
  const LogFutakiResult at_zero = log_futaki_toric(p, lambda, 0);
  Json out;
  out["name"] = np.name;
  out["lambda"] = io::ratvec_json(lambda);
  out["W"] = io::rational_json(at_zero.support);
  out["pairing"] = io::rational_json(at_zero.pairing);
  out["vol"] = io::rational_json(at_zero.volume);
  out["classical_futaki"] = io::rational_json(classical_futaki(p, lambda));
  // F(beta) = A beta + B (1 - beta)
  Json form;
  form["beta_coefficient"] = io::rational_json(-at_zero.pairing * at_zero.volume);
  form["one_minus_beta_coefficient"] = io::rational_json(-at_zero.support * at_zero.volume);
  out["linear_form"] = std::move(form);
  const auto crit = critical_beta(p, lambda);
  out["critical_beta"] = crit ? io::rational_json(*crit) : Json(nullptr);
  if (config.beta) out["log_futaki"] = io::log_futaki_json(log_futaki_toric(p, lambda, *config.beta));
  out["sign_convention"] = "F <= 0 stable (t -> 0); flip for t -> infinity";
  return out;
}

struct Report {
  Json json;
  std::string raw;  // svg, or the bare value for `r` in text mode
};

Report compute(const RunConfig& config) {
  if (config.command == Command::P1Conic) {
    return {io::p1conic_report(ConeData(*config.alphas)), {}};
  }
  const io::NamedPolytope np = load(config);
  const LatticePolytope& p = np.polytope;
  switch (config.command) {
    case Command::Check:
      return {io::check_report(np.name, p), {}};
    case Command::R: {
      Json j = r_report(np);
      std::string bare = j["R"].get<std::string>() + "\n";
      return {std::move(j), std::move(bare)};
    }
    case Command::Futaki:
      return {futaki_report(np, config), {}};
    case Command::Classify:
      return {io::verdict_json(classify(p, *config.beta)), {}};
    case Command::Sweep:
      return {io::sweep_json(sweep(p)), {}};
    case Command::Oracle: {
      const long k_max = config.k_max.value_or(default_k_max(p.dim()));
      const WeightSeries series = sample_series(p, *config.lambda, k_max);
      const ExpansionFit fit = fit_expansions_detailed(series, p);
      return {io::oracle_report(p, series, fit), {}};
    }
    case Command::Plot:
      return {{}, render_svg(p, config.beta, np.name)};
    case Command::P1Conic:
      break;
  }
  throw std::logic_error("unhandled command");
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::string text;
  try {
    validate(config);
    const Report report = compute(config);
    switch (effective_format(config)) {
      case Format::Json:
        text = io::dump(report.json);
        break;
      case Format::Svg:
        text = report.raw;
        break;
      case Format::Text: {
        if (config.command == Command::R) {
          text = report.raw;
          break;
        }
        std::ostringstream os;
        text_lines(report.json, "", use_color(config), os);
        text = os.str();
        break;
      }
    }
  } catch (const UsageError& e) {
    write_error(err, "UsageError", e.what());
    return kDomainError;
  } catch (const Error& e) {
    write_error(err, error_name(e.code()), e.what());
    return kDomainError;
  } catch (const io::IoError& e) {
    write_error(err, "IoError", e.what());
    return kIoError;
  } catch (const std::exception& e) {
    write_error(err, "InternalError", e.what());
    return kIoError;
  }

  if (!config.output) {
    out << text;
    return out ? kOk : kIoError;
  }
  std::ofstream file(*config.output, std::ios::binary);
  file << text;
  if (!file.flush()) {
    write_error(err, "IoError", "cannot write " + *config.output);
    return kIoError;
  }
  return kOk;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact R-invariant, log-Futaki and log-K-stability toolkit for reflexive polytopes"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  struct Raw {
    std::string input, builtin, lambda, beta, alphas, output, format;
    long k_max = 0;
  } raw;

  const std::vector<std::pair<Command, std::string>> commands = {
      {Command::Check, "check"},       {Command::R, "r"},
      {Command::Futaki, "futaki"},     {Command::Classify, "classify"},
      {Command::Sweep, "sweep"},       {Command::Oracle, "oracle"},
      {Command::Plot, "plot"},         {Command::P1Conic, "p1conic"},
  };
  const std::map<std::string, std::string> help = {
      {"check", "validate a polytope and print facets, volume and barycenter"},
      {"r", "R-invariant"},
      {"futaki", "classical and log-Futaki invariants along --lambda"},
      {"classify", "log-K-stability verdict at --beta"},
      {"sweep", "critical beta for every facet normal"},
      {"oracle", "lattice-point weight expansions along --lambda"},
      {"plot", "SVG diagram of a polygon"},
      {"p1conic", "P^1 with marked points: log-Futaki values and conic-metric criterion"},
  };
  std::map<CLI::App*, Command> by_app;
  for (const auto& [cmd, name] : commands) {
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    by_app[sub] = cmd;
    if (cmd != Command::P1Conic) {
      sub->add_option("-i,--input", raw.input, "polytope JSON file");
      sub->add_option("-b,--builtin", raw.builtin, "built-in polytope")
          ->check(CLI::IsMember(io::builtin_names()));
    }
    if (cmd == Command::Futaki || cmd == Command::Oracle) {
      sub->add_option("-l,--lambda", raw.lambda, "direction, e.g. -1,2");
    }
    if (cmd == Command::Futaki || cmd == Command::Classify || cmd == Command::Plot) {
      sub->add_option("--beta", raw.beta, "angle parameter, e.g. 21/25");
    }
    if (cmd == Command::Oracle) sub->add_option("--kmax", raw.k_max, "largest dilation");
    if (cmd == Command::P1Conic) sub->add_option("--alphas", raw.alphas, "e.g. 1/2,1/2,1/2");
    sub->add_option("-o,--output", raw.output, "output file (default: standard output)");
    sub->add_option("-f,--format", raw.format, "json | text | svg")
        ->check(CLI::IsMember({"json", "text", "svg"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    write_error(err, "UsageError", e.what());
    return kDomainError;
  }

  RunConfig config;
  for (const auto& [sub, cmd] : by_app) {
    if (sub->parsed()) config.command = cmd;
  }
  try {
    if (!raw.input.empty()) config.input_path = raw.input;
    if (!raw.builtin.empty()) config.builtin = raw.builtin;
    if (!raw.lambda.empty()) config.lambda = parse_ratvec(raw.lambda);
    if (!raw.beta.empty()) config.beta = parse_rational(raw.beta);
    if (app.get_subcommand_ptr("p1conic")->count("--alphas")) {
      config.alphas = parse_rational_list(raw.alphas);
    }
    if (app.get_subcommand_ptr("oracle")->count("--kmax")) config.k_max = raw.k_max;
  } catch (const Error& e) {
    write_error(err, error_name(e.code()), e.what());
    return kDomainError;
  }
  if (!raw.output.empty()) config.output = raw.output;
  if (raw.format == "json") config.format = Format::Json;
  if (raw.format == "text") config.format = Format::Text;
  if (raw.format == "svg") config.format = Format::Svg;
  return run(config, out, err);
}

}  // namespace toriclogk::cli
