#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "postsel/config.hpp"
#include "postsel/csv.hpp"
#include "postsel/errors.hpp"
#include "postsel/figures.hpp"
#include "postsel/sweep.hpp"
#include "postsel/validate.hpp"

namespace {

using namespace postsel;

// Exit codes: 0 ok, 1 config error, 2 compute error, 3 validation failure.
constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitCompute = 2;
constexpr int kExitValidationFail = 3;

std::size_t env_start_dim() {
  const char* v = std::getenv("POSTSEL_DIM");
  if (!v || !*v) return 128;
  std::size_t dim = 0;
  const char* last = v + std::string_view(v).size();
  auto [ptr, ec] = std::from_chars(v, last, dim);
  if (ec != std::errc{} || ptr != last) {
    throw ConfigError(std::string("POSTSEL_DIM must be an integer, got '") +
                      v + "'");
  }
  if (dim < 8) dim = 8;
  if (dim > 1024) dim = 1024;
  return dim;
}

unsigned env_threads() {
  const char* v = std::getenv("POSTSEL_THREADS");
  if (!v || !*v) return 1;
  unsigned n = 0;
  const char* last = v + std::string_view(v).size();
  auto [ptr, ec] = std::from_chars(v, last, n);
  if (ec != std::errc{} || ptr != last) {
    throw ConfigError(
        std::string("POSTSEL_THREADS must be an integer, got '") + v + "'");
  }
  if (n < 1) n = 1;
  if (n > 64) n = 64;
  return n;
}

void emit(const CsvTable& table, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << to_string(table);
  } else {
    write_file(out_path, table);
  }
}

SweepSpec load_spec(const std::string& config_path,
                    const std::vector<std::string>& sets,
                    bool point_defaults) {
  KeyValueMap map = parse_config_file(config_path);
  apply_overrides(map, sets);
  SweepSpec spec = build_sweep_spec(map);
  if (point_defaults && !map.count("outputs")) {
    spec.outputs = default_point_outputs();
  }
  return spec;
}

const char* kind_name(PointerKind k) {
  switch (k) {
    case PointerKind::Coherent: return "coherent";
    case PointerKind::SqueezedVacuum: return "squeezed";
    case PointerKind::Cat: return "cat";
  }
  return "unknown";
}

CsvTable report_table(const ValidationResult& result) {
  CsvTable t;
  t.header = {"quantity",    "pointer",  "r",        "vartheta",
              "eta",         "delta",    "omega",    "s",
              "theta",       "phi_sys",  "phi_quad", "analytic_re",
              "analytic_im", "oracle_re", "oracle_im", "abs_err",
              "literal_err", "status"};
  for (const ClosedFormReport& r : result.reports) {
    std::vector<std::string> row;
    row.push_back(to_string(r.quantity));
    row.push_back(kind_name(r.pointer.kind));
    row.push_back(format_number(r.pointer.r));
    row.push_back(format_number(r.pointer.vartheta));
    row.push_back(format_number(r.pointer.eta));
    row.push_back(format_number(r.pointer.delta));
    row.push_back(format_number(r.pointer.omega));
    row.push_back(format_number(r.cfg.s));
    row.push_back(format_number(r.cfg.theta));
    row.push_back(format_number(r.cfg.phi_sys));
    row.push_back(format_number(r.phi_quad));
    row.push_back(format_number(r.analytic_value.real()));
    row.push_back(format_number(r.analytic_value.imag()));
    row.push_back(format_number(r.oracle_value.real()));
    row.push_back(format_number(r.oracle_value.imag()));
    row.push_back(format_number(r.abs_err));
    row.push_back(r.literal_err ? format_number(*r.literal_err) : "");
    row.push_back(to_string(r.status));
    t.rows.push_back(std::move(row));
  }
  return t;
}

CsvTable typo_table_csv() {
  CsvTable t;
  t.header = {"quantity", "evaluable", "printed_form", "corrected_form",
              "defect"};
  for (const TypoEntry& e : typo_catalog()) {
    t.rows.push_back({to_string(e.quantity), e.evaluable ? "yes" : "no",
                      e.printed_form, e.corrected_form, e.defect});
  }
  return t;
}

Quantity parse_quantity(const std::string& name) {
  static const Quantity all[] = {
      Quantity::CohNorm,    Quantity::CohMeanN,   Quantity::CohA2A2,
      Quantity::CohXphi,    Quantity::CohA2,      Quantity::SqNorm,
      Quantity::SqAmp,      Quantity::SqMeanN,    Quantity::SqXphi,
      Quantity::SqX2,       Quantity::SqInitG2,   Quantity::SqInitQ,
      Quantity::SqInitSphi, Quantity::CatNorm,    Quantity::CatMeanN,
      Quantity::CatA2A2,    Quantity::CatAmean,   Quantity::CatA2,
      Quantity::CatInitQ,   Quantity::CatInitG2,  Quantity::CatInitSphi};
  for (Quantity q : all) {
    if (name == to_string(q)) return q;
  }
  throw ConfigError("unknown quantity for --inject-fault: '" + name + "'");
}

int run_validate(const std::string& grid_name, const std::string& out_dir,
                 const std::string& fault_name, std::size_t start_dim) {
  ValidationGrid grid;
  if (grid_name == "small") {
    grid = default_grid();
  } else if (grid_name == "full") {
    grid = full_grid();
  } else {
    throw ConfigError("--grid must be small or full, got '" + grid_name +
                      "'");
  }
  std::optional<Quantity> fault;
  if (!fault_name.empty()) fault = parse_quantity(fault_name);

  const ValidationResult result = validate_all(grid, fault, start_dim);

  std::filesystem::create_directories(out_dir);
  const std::string report_path =
      (std::filesystem::path(out_dir) / "validation_report.csv").string();
  const std::string typo_path =
      (std::filesystem::path(out_dir) / "typo_table.csv").string();
  write_file(report_path, report_table(result));
  write_file(typo_path, typo_table_csv());

  std::cout << "match=" << result.summary.match
            << " typo_suspected=" << result.summary.typo_suspected
            << " fail=" << result.summary.fail << "\n";
  std::cout << "report: " << report_path << "\n";
  std::cout << "typo table: " << typo_path << "\n";
  if (result.summary.fail > 0) {
    for (const ClosedFormReport& r : result.reports) {
      if (r.status == MatchStatus::Fail) {
        std::cout << "FAIL " << to_string(r.quantity)
                  << " abs_err=" << format_number(r.abs_err) << "\n";
      }
    }
    return kExitValidationFail;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "postsel: conditional pointer states of a postselected von Neumann "
      "measurement (coherent, squeezed, and cat pointers)"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> sets;
  std::string out_path;

  CLI::App* point = app.add_subcommand(
      "point", "evaluate one parameter point as a single CSV row");
  point->add_option("--config", config_path, "key=value config file")
      ->required();
  point->add_option("--set", sets, "override config entries (key=value)");
  point->add_option("--out", out_path, "output CSV path (default stdout)");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "evaluate a 1D/2D parameter sweep as CSV");
  sweep->add_option("--config", config_path, "key=value config file")
      ->required();
  sweep->add_option("--set", sets, "override config entries (key=value)");
  sweep->add_option("--out", out_path, "output CSV path (default stdout)");

  std::string preset_id;
  bool list_presets = false;
  CLI::App* figure = app.add_subcommand(
      "figure", "render a named preset panel as CSV");
  figure->add_option("--preset", preset_id, "preset id (fig1a .. fig9d)");
  figure->add_flag("--list", list_presets, "list preset ids and exit");
  figure->add_option("--out", out_path, "output CSV path (default stdout)");

  std::string grid_name = "small";
  std::string validate_dir;
  std::string fault_name;
  CLI::App* validate = app.add_subcommand(
      "validate",
      "compare every closed form against the numeric pipeline over a grid");
  validate->add_option("--grid", grid_name, "grid size: small or full")
      ->required();
  validate->add_option("--out", validate_dir, "directory for the CSV reports")
      ->required();
  validate->add_option("--inject-fault", fault_name,
                       "perturb one quantity's closed form (negative-path "
                       "test fixture)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    const std::size_t start_dim = env_start_dim();
    const unsigned threads = env_threads();
    if (point->parsed()) {
      emit(run_point(load_spec(config_path, sets, true), start_dim),
           out_path);
      return kExitOk;
    }
    if (sweep->parsed()) {
      emit(run_sweep(load_spec(config_path, sets, false), start_dim, threads),
           out_path);
      return kExitOk;
    }
    if (figure->parsed()) {
      if (list_presets) {
        for (const FigurePreset& p : figure_presets()) {
          std::cout << p.id << "  " << p.summary << "\n";
        }
        return kExitOk;
      }
      if (preset_id.empty()) {
        throw ConfigError("figure requires --preset ID or --list");
      }
      emit(render_figure(preset(preset_id), start_dim, threads), out_path);
      return kExitOk;
    }
    if (validate->parsed()) {
      return run_validate(grid_name, validate_dir, fault_name, start_dim);
    }
    throw ConfigError("no subcommand given");
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCompute;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCompute;
  }
}
