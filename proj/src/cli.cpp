#include "stirep/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "stirep/common.hpp"
#include "stirep/dynamics.hpp"
#include "stirep/invariant.hpp"
#include "stirep/perturbation.hpp"
#include "stirep/robustness.hpp"

namespace stirep::cli {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string normalize_key(std::string_view key) {
  std::string out(trim(key));
  for (char& c : out) c = c == '-' ? '_' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

double parse_double(std::string_view text, std::string_view key) {
  text = trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw DomainError("invalid number for '" + std::string(key) + "': '" + std::string(text) + "'");
  }
  return value;
}

long parse_integer(std::string_view text, std::string_view key) {
  text = trim(text);
  long value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw DomainError("invalid integer for '" + std::string(key) + "': '" + std::string(text) + "'");
  }
  return value;
}

Command parse_command(std::string_view text) {
  const std::string name = normalize_key(text);
  if (name == "fields") return Command::Fields;
  if (name == "propagate") return Command::Propagate;
  if (name == "orders") return Command::Orders;
  if (name == "radius") return Command::Radius;
  if (name == "sweep") return Command::Sweep;
  if (name == "contour") return Command::Contour;
  throw DomainError("unknown command '" + std::string(text) + "'");
}

std::string_view command_name(Command command) {
  switch (command) {
    case Command::Fields: return "fields";
    case Command::Propagate: return "propagate";
    case Command::Orders: return "orders";
    case Command::Radius: return "radius";
    case Command::Sweep: return "sweep";
    case Command::Contour: return "contour";
  }
  return "unknown";
}

PulseFamily parse_family(std::string_view text) {
  const std::string name = normalize_key(text);
  if (name == "shaped" || name == "sssp") return PulseFamily::Shaped;
  if (name == "gaussian") return PulseFamily::Gaussian;
  if (name == "adiabopt") return PulseFamily::AdiabOpt;
  throw DomainError("unknown pulse family '" + std::string(text) + "'");
}

void apply_key(RunConfig& cfg, std::string_view raw_key, std::string_view value) {
  const std::string key = normalize_key(raw_key);
  value = trim(value);
  if (key == "command") {
    cfg.command = parse_command(value);
  } else if (key == "family") {
    cfg.family = parse_family(value);
  } else if (key == "phi0") {
    cfg.phi0 = parse_double(value, key);
  } else if (key == "v0") {
    cfg.v0 = parse_double(value, key);
  } else if (key == "t") {
    cfg.T = parse_double(value, key);
  } else if (key == "rho") {
    cfg.rho = parse_double(value, key);
  } else if (key == "peak") {
    cfg.peak = parse_double(value, key);
  } else if (key == "delay") {
    cfg.delay = parse_double(value, key);
  } else if (key == "sigma") {
    cfg.sigma = parse_double(value, key);
  } else if (key == "m" || key == "waist_factor") {
    cfg.waist_factor = parse_double(value, key);
  } else if (key == "n" || key == "power") {
    cfg.power = static_cast<int>(parse_integer(value, key));
  } else if (key == "lambda" || key == "switch_rate") {
    cfg.switch_rate = parse_double(value, key);
  } else if (key == "preset") {
    const std::string name = normalize_key(value);
    const AdiabOptParams p = name == "opt1"   ? AdiabOptParams::opt1(0.0)
                             : name == "opt2" ? AdiabOptParams::opt2(0.0)
                                              : throw DomainError("unknown preset '" + name + "'");
    cfg.family = PulseFamily::AdiabOpt;
    cfg.waist_factor = p.waist_factor;
    cfg.power = p.power;
    cfg.switch_rate = p.switch_rate;
  } else if (key == "phi0_grid") {
    cfg.phi0_grid = parse_grid(value);
  } else if (key == "rho_grid") {
    cfg.rho_grid = parse_grid(value);
  } else if (key == "peak_grid") {
    cfg.peak_grid = parse_grid(value);
  } else if (key == "delay_grid") {
    cfg.delay_grid = parse_grid(value);
  } else if (key == "n_grid") {
    const long n = parse_integer(value, key);
    if (n < 2) throw DomainError("n_grid must be at least 2");
    cfg.n_grid = static_cast<std::size_t>(n);
  } else if (key == "tol") {
    cfg.tol = parse_double(value, key);
  } else if (key == "threshold") {
    cfg.threshold = parse_double(value, key);
  } else if (key == "output") {
    cfg.output = std::string(value);
  } else if (key == "format") {
    const std::string name = normalize_key(value);
    if (name == "csv") {
      cfg.format = OutputFormat::Csv;
    } else if (name == "json") {
      cfg.format = OutputFormat::Json;
    } else {
      throw DomainError("unknown output format '" + name + "'");
    }
  } else {
    throw DomainError("unknown configuration key '" + std::string(raw_key) + "'");
  }
}

std::vector<double> require_grid(const std::optional<GridSpec>& grid, std::string_view name) {
  if (!grid) throw DomainError("this command requires --" + std::string(name));
  return grid->values();
}

TrackingParams tracking(const RunConfig& c, double phi0) {
  return TrackingParams{phi0, c.v0 * c.T, c.T, c.n_grid};
}

GaussianParams gaussian(const RunConfig& c, double peak, double delay) {
  return GaussianParams{peak / c.T, delay * c.T, c.sigma * c.T, c.T};
}

AdiabOptParams adiabopt(const RunConfig& c, double peak) {
  return AdiabOptParams{peak / c.T, c.sigma * c.T, c.waist_factor, c.power, c.switch_rate, c.T};
}

PulsePair make_pulses(const RunConfig& c) {
  switch (c.family) {
    case PulseFamily::Shaped: return eval_shaped(tracking(c, c.phi0));
    case PulseFamily::Gaussian: return sample_gaussian(gaussian(c, c.peak, c.delay), c.n_grid);
    case PulseFamily::AdiabOpt: return sample_adiabopt(adiabopt(c, c.peak), c.n_grid);
  }
  throw DomainError("unknown pulse family");
}

RadiusOptions radius_options(const RunConfig& c) {
  RadiusOptions o;
  o.threshold = c.threshold;
  o.propagation.tol = c.tol;
  return o;
}

std::vector<std::string> scan_columns(PulseFamily family) {
  switch (family) {
    case PulseFamily::Shaped: return {"phi0", "A_G_over_pi", "radius", "rho_minus", "rho_plus"};
    case PulseFamily::Gaussian:
      return {"peak", "delay", "A_G_over_pi", "radius", "rho_minus", "rho_plus"};
    case PulseFamily::AdiabOpt: return {"peak", "A_G_over_pi", "radius", "rho_minus", "rho_plus"};
  }
  return {};
}

std::vector<std::optional<double>> scan_cells(const SweepRow& row, double T) {
  std::vector<std::optional<double>> cells;
  if (const auto* p = std::get_if<TrackingParams>(&row.params)) {
    cells.push_back(p->phi0);
  } else if (const auto* g = std::get_if<GaussianParams>(&row.params)) {
    cells.push_back(g->peak * T);
    cells.push_back(g->delay / T);
  } else if (const auto* a = std::get_if<AdiabOptParams>(&row.params)) {
    cells.push_back(a->peak * T);
  }
  cells.push_back(row.area_over_pi);
  if (row.scan.valid) {
    cells.push_back(row.scan.radius);
    cells.push_back(row.scan.rho_minus);
    cells.push_back(row.scan.rho_plus);
  } else {
    cells.insert(cells.end(), 3, std::nullopt);
  }
  return cells;
}

std::string scan_summary(const SweepRow& row) {
  std::ostringstream s;
  if (row.scan.valid) {
    s << "radius=" << format_number(row.scan.radius) << " A_G/pi=" << format_number(row.area_over_pi)
      << " rho_minus=" << format_number(row.scan.rho_minus)
      << " rho_plus=" << format_number(row.scan.rho_plus);
    if (row.scan.capped) s << " capped=1";
  } else {
    s << "radius=undefined A_G/pi=" << format_number(row.area_over_pi)
      << " epsilon0=" << format_number(row.scan.epsilon0);
  }
  return s.str();
}

RunOutcome run_fields(const RunConfig& c) {
  const PulsePair pp = make_pulses(c);
  RunOutcome out;
  out.table.columns = {"t_over_T", "P", "S"};
  for (std::size_t k = 0; k < pp.size(); ++k) {
    out.table.rows.push_back({pp.t()[k] / c.T, pp.pump()[k] * c.T, pp.stokes()[k] * c.T});
  }
  const PulseAreas areas = pulse_areas(pp);
  const BoundaryReport boundary = boundary_check(pp);
  out.summary = "family=" + std::string(to_string(pp.family())) +
                " A_G/pi=" + format_number(generalized_area(pp) / kPi) +
                " A_P/pi=" + format_number(areas.pump / kPi) +
                " A_S/pi=" + format_number(areas.stokes / kPi) +
                " boundary_ratio=" + format_number(boundary.max_ratio) +
                (boundary.pass ? "" : " boundary=fail");
  return out;
}

RunOutcome run_propagate(const RunConfig& c) {
  const PulsePair pp = make_pulses(c);
  PropagationOptions po;
  po.tol = c.tol;
  const PropagationResult r = propagate(pp, c.rho, ground_state(), po);
  RunOutcome out;
  out.table.columns = {"t_over_T", "P1", "P2", "P3", "proj_dark", "proj_plus", "proj_minus"};
  double p2_max = 0.0;
  for (std::size_t k = 0; k < r.t.size(); ++k) {
    const auto& pop = r.populations[k];
    p2_max = std::max(p2_max, pop[1]);
    std::vector<std::optional<double>> row{r.t[k] / c.T, pop[0], pop[1], pop[2]};
    if (const auto& proj = r.projections[k]) {
      row.insert(row.end(), {proj->dark, proj->plus, proj->minus});
    } else {
      row.insert(row.end(), 3, std::nullopt);
    }
    out.table.rows.push_back(std::move(row));
  }
  out.summary = "fidelity=" + format_number(r.fidelity) + " infidelity=" + format_number(r.infidelity) +
                " max_P2=" + format_number(p2_max) +
                " renormalizations=" + std::to_string(r.renormalizations);
  if (r.renormalizations > 0) out.summary += " warning=renormalized";
  return out;
}

RunOutcome run_orders(const RunConfig& c) {
  const std::vector<double> grid = require_grid(c.phi0_grid, "phi0-grid");
  const std::vector<OrdersRow> rows = orders_vs_phi0(grid, tracking(c, c.phi0));
  RunOutcome out;
  out.table.columns = {"phi0", "A_G_over_pi", "O2t", "O4t", "P2max"};
  for (const OrdersRow& row : rows) {
    out.table.rows.push_back({row.phi0, row.area / kPi, row.Otilde2, row.Otilde4, row.p2_max});
  }
  out.summary = "rows=" + std::to_string(rows.size());
  return out;
}

RunOutcome run_radius(const RunConfig& c) {
  const PulsePair pp = make_pulses(c);
  const SweepRow row{pp.params(), generalized_area(pp) / kPi, uh_radius(pp, radius_options(c))};
  RunOutcome out;
  out.table.columns = scan_columns(c.family);
  out.table.rows.push_back(scan_cells(row, c.T));
  out.summary = scan_summary(row);
  return out;
}

RunOutcome run_sweep(const RunConfig& c) {
  const RadiusOptions options = radius_options(c);
  AreaSweep sweep;
  switch (c.family) {
    case PulseFamily::Shaped:
      sweep = sweep_shaped(require_grid(c.phi0_grid, "phi0-grid"), tracking(c, c.phi0), options);
      break;
    case PulseFamily::Gaussian: {
      std::vector<double> peaks = require_grid(c.peak_grid, "peak-grid");
      for (double& p : peaks) p /= c.T;
      std::vector<double> delays =
          c.delay_grid ? c.delay_grid->values() : default_delay_grid(1.0);
      for (double& d : delays) d *= c.T;
      sweep = sweep_gaussian(peaks, delays, c.sigma * c.T, c.T, c.n_grid, options);
      break;
    }
    case PulseFamily::AdiabOpt: {
      std::vector<double> peaks = require_grid(c.peak_grid, "peak-grid");
      for (double& p : peaks) p /= c.T;
      sweep = sweep_adiabopt(peaks, adiabopt(c, 0.0), c.n_grid, options);
      break;
    }
  }
  RunOutcome out;
  out.table.columns = scan_columns(c.family);
  for (const SweepRow& row : sweep.rows) out.table.rows.push_back(scan_cells(row, c.T));
  const SweepRow* best = sweep.best();
  out.summary = "rows=" + std::to_string(sweep.rows.size()) + " best_" +
                (best ? scan_summary(*best) : std::string("radius=undefined"));
  return out;
}

RunOutcome run_contour(const RunConfig& c) {
  const std::vector<double> phi0 = require_grid(c.phi0_grid, "phi0-grid");
  const std::vector<double> rho =
      c.rho_grid ? c.rho_grid->values() : GridSpec{-0.5, 0.5, 0.01}.values();
  PropagationOptions po;
  po.tol = c.tol;
  const ContourMap map = contour_map(phi0, rho, tracking(c, c.phi0), po);
  RunOutcome out;
  out.table.columns = {"A_G_over_pi", "rho", "log10_eps"};
  for (std::size_t i = 0; i < map.phi0.size(); ++i) {
    for (std::size_t j = 0; j < map.rho.size(); ++j) {
      out.table.rows.push_back({map.area_over_pi[i], map.rho[j], map.at(i, j)});
    }
  }
  out.summary = "cells=" + std::to_string(out.table.rows.size());
  return out;
}

void print_error(std::ostream& err, std::string_view kind, std::string_view message) {
  nlohmann::json record{{"status", "error"}, {"kind", kind}, {"message", message}};
  err << record.dump() << "\n";
}

class HelpRequested : public std::exception {
 public:
  explicit HelpRequested(std::string text) : text_(std::move(text)) {}
  const char* what() const noexcept override { return text_.c_str(); }

 private:
  std::string text_;
};

}  // namespace

std::vector<double> GridSpec::values() const {
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> out(count);
  for (std::size_t k = 0; k < count; ++k) out[k] = start + static_cast<double>(k) * step;
  return out;
}

GridSpec parse_grid(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t begin = 0;
  for (std::size_t pos = text.find(':'); pos != std::string_view::npos; pos = text.find(':', begin)) {
    parts.push_back(text.substr(begin, pos - begin));
    begin = pos + 1;
  }
  parts.push_back(text.substr(begin));
  if (parts.size() != 3) throw DomainError("grid must be start:stop:step, got '" + std::string(text) + "'");
  GridSpec g{parse_double(parts[0], "grid start"), parse_double(parts[1], "grid stop"),
             parse_double(parts[2], "grid step")};
  if (!(g.step > 0.0)) throw DomainError("grid step must be positive");
  if (g.stop < g.start) throw DomainError("grid stop must not precede start");
  if ((g.stop - g.start) / g.step > 1e7) throw DomainError("grid has too many points");
  return g;
}

void RunConfig::validate() const {
  if (!command) throw DomainError("no command given");
  if (!(T > 0.0)) throw DomainError("T must be positive");
  if (n_grid < 2) throw DomainError("n_grid must be at least 2");
  if (!(tol > 0.0)) throw DomainError("tol must be positive");
  if (!(threshold > 0.0 && threshold < 1.0)) throw DomainError("threshold must lie in (0, 1)");
  if (!(rho >= -1.0) || !std::isfinite(rho)) throw DomainError("rho must be >= -1");
  const bool grid_command = *command == Command::Orders || *command == Command::Contour ||
                            (*command == Command::Sweep && family == PulseFamily::Shaped);
  if (family == PulseFamily::Shaped || grid_command) {
    tracking(*this, grid_command && phi0_grid ? phi0_grid->start : phi0).validate();
    if (phi0_grid) {
      tracking(*this, phi0_grid->start).validate();
      tracking(*this, phi0_grid->values().back()).validate();
    }
  }
  if (family == PulseFamily::Gaussian) gaussian(*this, std::max(peak, 0.0), delay).validate();
  if (family == PulseFamily::Gaussian && !(peak >= 0.0)) throw DomainError("peak must be >= 0");
  if (family == PulseFamily::AdiabOpt) adiabopt(*this, peak).validate();
  if (peak_grid && peak_grid->start < 0.0) throw DomainError("peak grid must be non-negative");
  if (rho_grid && rho_grid->start < -1.0) throw DomainError("rho grid must stay >= -1");
}

std::string RunConfig::output_path() const {
  if (!output.empty()) return output;
  const std::string ext = format == OutputFormat::Json ? ".json" : ".csv";
  return "stirep_" + std::string(command ? command_name(*command) : "run") + ext;
}

RunConfig default_config() {
  RunConfig cfg;
  if (const char* env = std::getenv("STIREP_NGRID"); env && *env) apply_key(cfg, "n_grid", env);
  return cfg;
}

RunConfig parse_config_text(std::string_view text, RunConfig base) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw DomainError("config line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    apply_key(base, line.substr(0, eq), line.substr(eq + 1));
  }
  return base;
}

RunConfig parse_args(int argc, const char* const* argv) {
  CLI::App app{"Shaped-pulse stimulated Raman exact passage: fields, dynamics and robustness"};
  std::string command;
  std::string config_path;
  app.add_option("command", command, "fields | propagate | orders | radius | sweep | contour");
  app.add_option("--config", config_path, "key = value configuration file");

  struct Flag {
    const char* name;
    const char* help;
    std::string value;
  };
  std::vector<Flag> flags = {
      {"--family", "shaped | gaussian | adiabopt", {}},
      {"--phi0", "excursion cap of the shaped family (rad)", {}},
      {"--v0", "ramp time scale (units of T)", {}},
      {"--T", "total duration", {}},
      {"--rho", "relative pulse-area error", {}},
      {"--peak", "baseline peak amplitude (1/T)", {}},
      {"--delay", "Gaussian delay (units of T, > 0: Stokes first)", {}},
      {"--sigma", "baseline waist (units of T)", {}},
      {"--m", "hypergaussian waist factor", {}},
      {"--n", "hypergaussian power", {}},
      {"--lambda", "switch rate of the mixing angle", {}},
      {"--preset", "opt1 | opt2 (adiabatically optimised pulses)", {}},
      {"--phi0-grid", "start:stop:step", {}},
      {"--rho-grid", "start:stop:step", {}},
      {"--peak-grid", "start:stop:step", {}},
      {"--delay-grid", "start:stop:step (units of T)", {}},
      {"--n-grid", "samples on [0, T]", {}},
      {"--tol", "local error tolerance of the propagator", {}},
      {"--threshold", "UH-fidelity infidelity threshold", {}},
      {"--output,-o", "output file", {}},
      {"--format", "csv | json", {}},
  };
  std::vector<CLI::Option*> options;
  for (Flag& f : flags) options.push_back(app.add_option(f.name, f.value, f.help));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw DomainError(e.what());
  }

  RunConfig cfg = default_config();
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw DomainError("cannot read config file '" + config_path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    cfg = parse_config_text(buffer.str(), cfg);
  }
  if (!command.empty()) cfg.command = parse_command(command);
  // --preset first so explicit --m/--n/--lambda still win.
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (options[i]->count() > 0 && options[i]->get_name() == "--preset") apply_key(cfg, "preset", flags[i].value);
  }
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (options[i]->count() == 0 || options[i]->get_name() == "--preset") continue;
    std::string key = options[i]->get_name();
    key.erase(0, key.find_first_not_of('-'));
    apply_key(cfg, key, flags[i].value);
  }
  return cfg;
}

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += table.columns[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      if (row[i]) out += format_number(*row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& table, std::string_view command, std::string_view summary) {
  nlohmann::ordered_json doc;
  doc["command"] = command;
  doc["summary"] = summary;
  doc["columns"] = table.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (const auto& cell : row) {
      if (cell) {
        cells.push_back(std::stod(format_number(*cell)));
      } else {
        cells.push_back(nullptr);
      }
    }
    rows.push_back(std::move(cells));
  }
  doc["rows"] = std::move(rows);
  return doc.dump() + "\n";
}

Table read_csv(std::string_view text) {
  Table table;
  bool header = true;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    const std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (line.empty()) continue;
    std::vector<std::string_view> cells;
    std::size_t begin = 0;
    for (std::size_t pos = line.find(','); pos != std::string_view::npos; pos = line.find(',', begin)) {
      cells.push_back(line.substr(begin, pos - begin));
      begin = pos + 1;
    }
    cells.push_back(line.substr(begin));
    if (header) {
      for (auto c : cells) table.columns.emplace_back(c);
      header = false;
      continue;
    }
    if (cells.size() != table.columns.size()) throw DomainError("read_csv: ragged row");
    std::vector<std::optional<double>> row;
    for (auto c : cells) {
      if (trim(c).empty()) {
        row.push_back(std::nullopt);
      } else {
        row.push_back(parse_double(c, "csv cell"));
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DomainError("cannot open '" + tmp.string() + "' for writing");
    out << content;
    out.flush();
    if (!out) throw DomainError("failed writing '" + tmp.string() + "'");
  }
  fs::rename(tmp, target);
}

RunOutcome execute(const RunConfig& config) {
  config.validate();
  switch (*config.command) {
    case Command::Fields: return run_fields(config);
    case Command::Propagate: return run_propagate(config);
    case Command::Orders: return run_orders(config);
    case Command::Radius: return run_radius(config);
    case Command::Sweep: return run_sweep(config);
    case Command::Contour: return run_contour(config);
  }
  throw DomainError("unknown command");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const RunOutcome outcome = execute(config);
    const std::string path = config.output_path();
    const std::string content = config.format == OutputFormat::Json
                                    ? to_json(outcome.table, command_name(*config.command), outcome.summary)
                                    : to_csv(outcome.table);
    write_atomic(path, content);
    out << command_name(*config.command) << ": " << outcome.summary << " output=" << path << "\n";
    return kExitOk;
  } catch (const DomainError& e) {
    print_error(err, "config", e.what());
    return kExitConfig;
  } catch (const std::filesystem::filesystem_error& e) {
    print_error(err, "config", e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    print_error(err, "numerical", e.what());
    return kExitNumerical;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_args(argc, argv);
  } catch (const HelpRequested& help) {
    out << help.what();
    return kExitOk;
  } catch (const DomainError& e) {
    print_error(err, "config", e.what());
    return kExitConfig;
  }
  return run(config, out, err);
}

}  // namespace stirep::cli
