#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "postsel/config.hpp"
#include "postsel/csv.hpp"
#include "postsel/errors.hpp"
#include "postsel/figures.hpp"
#include "postsel/sweep.hpp"

#ifdef POSTSEL_CLI_PATH
#include <sys/wait.h>
#endif

using namespace postsel;
using testval::kPi;

namespace {

double cell(const CsvTable& t, std::size_t row, std::size_t col) {
  return std::stod(t.rows.at(row).at(col));
}

std::size_t column_index(const CsvTable& t, const std::string& name) {
  for (std::size_t i = 0; i < t.header.size(); ++i) {
    if (t.header[i] == name) return i;
  }
  REQUIRE_MESSAGE(false, "missing column ", name);
  return 0;
}

}  // namespace

TEST_SUITE("sweep_cli") {

TEST_CASE("numbers format deterministically") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(2.5) == "2.5");
  CHECK(format_number(-1.25e-7) == "-1.25e-07");
  CHECK(format_number(1e300) == "1e+300");
}

TEST_CASE("csv quoting is minimal and exact") {
  CsvTable t;
  t.header = {"x", "note"};
  t.rows.push_back({"1.5", "plain"});
  t.rows.push_back({"a,b", "say \"hi\""});
  t.rows.push_back({"multi\nline", "end"});
  CHECK(to_string(t) ==
        "x,note\n"
        "1.5,plain\n"
        "\"a,b\",\"say \"\"hi\"\"\"\n"
        "\"multi\nline\",end\n");
}

TEST_CASE("config text parses with comments, blanks, and overrides") {
  KeyValueMap map = parse_config_text(
      "# a comment\n"
      "\n"
      "  pointer = squeezed  \n"
      "eta=0.5\n"
      "theta = 0.3\n"
      " theta= 0.6\n");
  CHECK(map.at("pointer") == "squeezed");
  CHECK(map.at("eta") == "0.5");
  CHECK(map.at("theta") == "0.6");  // later assignment wins

  apply_overrides(map, {"theta=0.9", "s = 1.5"});
  CHECK(map.at("theta") == "0.9");
  CHECK(map.at("s") == "1.5");
  CHECK_THROWS_AS(apply_overrides(map, {"no_equals"}), ConfigParseError);

  try {
    parse_config_text("pointer = cat\nbogus line\n");
    FAIL("expected ConfigParseError");
  } catch (const ConfigParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("sweep spec assembles from the key map") {
  KeyValueMap map{
      {"pointer", "squeezed"}, {"eta", "0.2"},          {"s", "1"},
      {"theta", "0.7"},        {"phi_sys", "0.5"},      {"phi_quad", "0.9"},
      {"axis1.param", "s"},    {"axis1.start", "0"},    {"axis1.stop", "3"},
      {"axis1.count", "21"},   {"axis2.param", "theta"}, {"axis2.start", "0"},
      {"axis2.stop", "2.8"},   {"axis2.count", "21"},   {"outputs", "mandel_q"},
  };
  SweepSpec spec = build_sweep_spec(map);
  CHECK(spec.pointer.kind == PointerKind::SqueezedVacuum);
  CHECK(spec.pointer.eta == 0.2);
  CHECK(spec.cfg.s == 1.0);
  CHECK(spec.cfg.theta == 0.7);
  CHECK(spec.phi_quad == 0.9);
  REQUIRE(spec.axis1.has_value());
  CHECK(spec.axis1->param == "s");
  CHECK(spec.axis1->count == 21);
  REQUIRE(spec.axis2.has_value());
  CHECK(spec.axis2->param == "theta");
  REQUIRE(spec.outputs.size() == 1);
  CHECK(spec.outputs[0].label == "mandel_q");

  // Defaults: coherent vacuum pointer and the four standard columns.
  SweepSpec dflt = build_sweep_spec({});
  CHECK(dflt.pointer.kind == PointerKind::Coherent);
  CHECK(!dflt.axis1.has_value());
  REQUIRE(dflt.outputs.size() == 4);
  CHECK(dflt.outputs[0].label == "mean_n");
  CHECK(dflt.outputs[3].label == "success");
}

TEST_CASE("config rejections name the offending field") {
  CHECK_THROWS_AS(build_sweep_spec({{"banana", "1"}}), ConfigParseError);
  CHECK_THROWS_AS(build_sweep_spec({{"r", "abc"}}), ConfigParseError);
  CHECK_THROWS_AS(build_sweep_spec({{"pointer", "thermal"}}), ConfigParseError);
  try {
    build_sweep_spec({{"axis1.param", "banana"},
                      {"axis1.start", "0"},
                      {"axis1.stop", "1"},
                      {"axis1.count", "5"}});
    FAIL("expected ConfigParseError");
  } catch (const ConfigParseError& e) {
    CHECK(std::string(e.what()).find("banana") != std::string::npos);
  }
  // Partial axis block.
  CHECK_THROWS_AS(build_sweep_spec({{"axis1.param", "s"}}), ConfigParseError);
  // count < 2 is a domain error, not a parse error.
  CHECK_THROWS_AS(build_sweep_spec({{"axis1.param", "s"},
                                    {"axis1.start", "0"},
                                    {"axis1.stop", "1"},
                                    {"axis1.count", "1"}}),
                  ConfigError);
  CHECK_THROWS_AS(build_sweep_spec({{"axis2.param", "s"},
                                    {"axis2.start", "0"},
                                    {"axis2.stop", "1"},
                                    {"axis2.count", "5"}}),
                  ConfigError);
  CHECK_THROWS_AS(build_sweep_spec({{"axis1.param", "s"},
                                    {"axis1.start", "0"},
                                    {"axis1.stop", "1"},
                                    {"axis1.count", "5"},
                                    {"axis2.param", "s"},
                                    {"axis2.start", "0"},
                                    {"axis2.stop", "2"},
                                    {"axis2.count", "5"}}),
                  ConfigError);
  CHECK_THROWS_AS(build_sweep_spec({{"outputs", ","}}), ConfigParseError);
}

TEST_CASE("output tokens parse and expand") {
  CHECK(parse_output_token("mean_n")[0].kind == OutputKind::MeanN);
  CHECK(parse_output_token("success")[0].kind == OutputKind::Success);
  std::vector<OutputItem> sphi = parse_output_token("s_phi");
  CHECK(sphi[0].kind == OutputKind::SPhi);
  CHECK(sphi[0].at_phi_quad);
  std::vector<OutputItem> at = parse_output_token("s_phi@1.0");
  CHECK(at[0].kind == OutputKind::SPhi);
  CHECK(!at[0].at_phi_quad);
  CHECK(at[0].angle == 1.0);
  CHECK(at[0].label == "s_phi@1.0");
  std::vector<OutputItem> range = parse_output_token("pn@0..3");
  REQUIRE(range.size() == 4);
  CHECK(range[0].label == "pn@0");
  CHECK(range[3].label == "pn@3");
  CHECK(range[3].n == 3);
  CHECK(parse_output_token("pn@7")[0].n == 7);
  CHECK_THROWS_AS(parse_output_token("pn@5..2"), ConfigParseError);
  CHECK_THROWS_AS(parse_output_token("bogus"), ConfigParseError);
  CHECK_THROWS_AS(parse_output_token("pn@x"), ConfigParseError);
}

TEST_CASE("point evaluation emits the full observable row") {
  SweepSpec spec;  // coherent vacuum, s = 0, theta = 0
  spec.outputs = default_point_outputs();
  CsvTable t = run_point(spec);
  REQUIRE(t.rows.size() == 1);
  CHECK(t.header.front() == "success");
  CHECK(t.header.back() == "warning");
  CHECK(t.rows[0].at(column_index(t, "success")) == "1");
  CHECK(t.rows[0].at(column_index(t, "mean_n")) == "0");
  CHECK(t.rows[0].at(column_index(t, "g2")).empty());  // vacuum: undefined
  CHECK(t.rows[0].at(column_index(t, "mandel_q")) == "0");
  CHECK(t.rows[0].at(column_index(t, "pn@0")) == "1");
  CHECK(t.rows[0].at(column_index(t, "pn@1")) == "0");
  const std::string warn = t.rows[0].back();
  CHECK(warn.find("g2") != std::string::npos);

  std::vector<OutputItem> defaults = default_point_outputs();
  CHECK(defaults.size() == 26);  // 5 scalars + pn@0..20
  CHECK(defaults.back().label == "pn@20");

  SweepSpec with_axis = spec;
  with_axis.axis1 = AxisSpec{"s", 0.0, 1.0, 5};
  CHECK_THROWS_AS(run_point(with_axis), ConfigError);
}

TEST_CASE("point evaluation reproduces the pinned coherent row") {
  SweepSpec spec;
  spec.pointer = PointerSpec{PointerKind::Coherent, 1.0, kPi / 3, 0.0, 0.0,
                             0.0};
  spec.cfg = MeasurementConfig{2.0, 7 * kPi / 9, 4 * kPi / 5};
  spec.phi_quad = kPi / 5;
  spec.outputs = default_point_outputs();
  CsvTable t = run_point(spec);
  REQUIRE(t.rows.size() == 1);
  CHECK(testval::rel_err(cell(t, 0, column_index(t, "success")),
                         testval::kCohP_success) < 1e-10);
  CHECK(testval::rel_err(cell(t, 0, column_index(t, "mean_n")),
                         testval::kCohP_meanN) < 1e-10);
  CHECK(testval::rel_err(cell(t, 0, column_index(t, "g2")),
                         testval::kCohP_g2) < 1e-10);
  CHECK(testval::rel_err(cell(t, 0, column_index(t, "mandel_q")),
                         testval::kCohP_q) < 1e-10);
  CHECK(testval::rel_err(cell(t, 0, column_index(t, "s_phi")),
                         testval::kCohP_sphi) < 1e-10);
  CHECK(testval::rel_err(cell(t, 0, column_index(t, "pn@2")),
                         testval::kCohP_p2) < 1e-10);
  CHECK(t.rows[0].back().empty());
}

TEST_CASE("a one-axis sweep walks the grid in order") {
  SweepSpec spec;
  spec.pointer = PointerSpec{PointerKind::Coherent, 1.0, kPi / 3, 0.0, 0.0,
                             0.0};
  spec.cfg = MeasurementConfig{0.0, kPi / 3, kPi / 4};
  spec.axis1 = AxisSpec{"s", 0.0, 3.0, 31};
  spec.outputs = parse_output_token("g2");
  for (OutputItem& item : parse_output_token("success")) {
    spec.outputs.push_back(item);
  }
  CsvTable t = run_sweep(spec);
  REQUIRE(t.header == std::vector<std::string>{"s", "g2", "success",
                                               "warning"});
  REQUIRE(t.rows.size() == 31);
  for (std::size_t i = 0; i < 31; ++i) {
    CHECK(cell(t, i, 0) == doctest::Approx(0.1 * i).epsilon(1e-12));
    CHECK(!t.rows[i][1].empty());
    CHECK(!t.rows[i][2].empty());
    CHECK(t.rows[i][3].empty());
    const double success = cell(t, i, 2);
    CHECK(success > 0.0);
    CHECK(success < 1.0);
  }
}

TEST_CASE("a two-axis sweep finds the sub-Poissonian region") {
  SweepSpec spec;
  spec.pointer = PointerSpec{PointerKind::SqueezedVacuum, 0.0, 0.0, 0.2, 0.0,
                             0.0};
  spec.cfg = MeasurementConfig{0.0, 0.0, 0.0};
  spec.axis1 = AxisSpec{"s", 0.0, 3.0, 21};
  spec.axis2 = AxisSpec{"theta", 0.0, 2.8, 21};
  spec.outputs = parse_output_token("mandel_q");
  CsvTable t = run_sweep(spec);
  REQUIRE(t.header == std::vector<std::string>{"s", "theta", "mandel_q",
                                               "warning"});
  REQUIRE(t.rows.size() == 21 * 21);
  // axis1-major: the first block shares s = 0 while theta advances.
  for (std::size_t i = 0; i < 21; ++i) {
    CHECK(cell(t, i, 0) == 0.0);
    CHECK(cell(t, i, 1) == doctest::Approx(2.8 * i / 20.0).epsilon(1e-12));
  }
  CHECK(cell(t, 21, 0) > 0.0);
  bool negative_q = false;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const double q = cell(t, i, 2);
    CHECK(q >= -1.0 - 1e-9);
    if (cell(t, i, 0) >= 0.5 && q < 0.0) negative_q = true;
  }
  CHECK(negative_q);
}

TEST_CASE("sweep bytes are independent of the thread count") {
  SweepSpec spec;
  spec.pointer = PointerSpec{PointerKind::SqueezedVacuum, 0.0, 0.0, 0.2, 0.0,
                             0.0};
  spec.axis1 = AxisSpec{"s", 0.0, 3.0, 11};
  spec.axis2 = AxisSpec{"theta", 0.0, 2.8, 11};
  spec.outputs = parse_output_token("mandel_q");
  const std::string one = to_string(run_sweep(spec, 128, 1));
  const std::string five = to_string(run_sweep(spec, 128, 5));
  CHECK(one == five);
}

TEST_CASE("a failing grid point leaves a warning and the sweep continues") {
  SweepSpec spec;
  spec.pointer = PointerSpec{PointerKind::Cat, 0.5, 0.0, 0.0, 0.0, kPi};
  spec.cfg = MeasurementConfig{0.5, kPi / 3, 0.0};
  spec.axis1 = AxisSpec{"r", 0.0, 1.0, 3};  // r = 0 collapses the odd cat
  spec.outputs = parse_output_token("mean_n");
  CsvTable t = run_sweep(spec);
  REQUIRE(t.rows.size() == 3);
  CHECK(t.rows[0][1].empty());
  CHECK(!t.rows[0][2].empty());
  CHECK(t.rows[0][2].find(',') == std::string::npos);  // sanitized
  CHECK(!t.rows[1][1].empty());
  CHECK(t.rows[1][2].empty());
  CHECK(!t.rows[2][1].empty());
}

TEST_CASE("axis values outside the domain fail pointwise, not globally") {
  SweepSpec spec;
  spec.pointer = PointerSpec{PointerKind::Coherent, 0.5, 0.0, 0.0, 0.0, 0.0};
  spec.axis1 = AxisSpec{"theta", 0.0, 3.2, 5};  // 3.2 > pi: invalid up there
  spec.outputs = parse_output_token("success");
  CsvTable t = run_sweep(spec);
  REQUIRE(t.rows.size() == 5);
  CHECK(!t.rows[0][1].empty());
  CHECK(t.rows[0][2].empty());
  CHECK(t.rows[4][1].empty());
  CHECK(!t.rows[4][2].empty());
}

TEST_CASE("a base config that is invalid everywhere is rejected up front") {
  SweepSpec spec;
  spec.pointer = PointerSpec{PointerKind::Coherent, -2.0, 0.0, 0.0, 0.0, 0.0};
  spec.axis1 = AxisSpec{"s", 0.0, 1.0, 5};
  spec.outputs = parse_output_token("success");
  CHECK_THROWS_AS(run_sweep(spec), ConfigError);

  SweepSpec no_axis;
  no_axis.outputs = parse_output_token("success");
  CHECK_THROWS_AS(run_sweep(no_axis), ConfigError);
}

TEST_CASE("apply_param reaches every sweepable field") {
  SweepSpec spec;
  apply_param(spec, "s", 1.5);
  apply_param(spec, "theta", 0.7);
  apply_param(spec, "phi_sys", 0.9);
  apply_param(spec, "r", 1.1);
  apply_param(spec, "vartheta", 0.3);
  apply_param(spec, "eta", 0.4);
  apply_param(spec, "delta", 0.5);
  apply_param(spec, "omega", 0.6);
  apply_param(spec, "phi_quad", 0.8);
  CHECK(spec.cfg.s == 1.5);
  CHECK(spec.cfg.theta == 0.7);
  CHECK(spec.cfg.phi_sys == 0.9);
  CHECK(spec.pointer.r == 1.1);
  CHECK(spec.pointer.vartheta == 0.3);
  CHECK(spec.pointer.eta == 0.4);
  CHECK(spec.pointer.delta == 0.5);
  CHECK(spec.pointer.omega == 0.6);
  CHECK(spec.phi_quad == 0.8);
  CHECK_THROWS_AS(apply_param(spec, "banana", 1.0), ConfigParseError);
}

TEST_CASE("figure presets are complete and addressable") {
  const std::vector<FigurePreset>& all = figure_presets();
  REQUIRE(all.size() == 30);
  std::set<std::string> ids;
  for (const FigurePreset& p : all) {
    CHECK(ids.insert(p.id).second);
    CHECK(!p.summary.empty());
    CHECK(!p.curves.empty());
    CHECK(p.x_count >= 2);
  }
  CHECK(preset("fig1a").x_param == "n");
  CHECK(preset("fig2a").x_param == "r");
  CHECK(preset("fig2a").x_count == 41);
  CHECK_THROWS_AS(preset("nope"), UnknownPreset);
  try {
    preset("fig99");
  } catch (const UnknownPreset& e) {
    CHECK(std::string(e.what()).find("figure --list") != std::string::npos);
  }
}

TEST_CASE("the weak-modulus curve is tan(theta/2)") {
  const FigurePreset& p = preset("fig2c");
  CHECK(p.x_param == "theta");
  CsvTable t = render_figure(p);
  REQUIRE(t.rows.size() == p.x_count);
  const std::size_t aw_col = column_index(t, "abs_weak_value");
  // Cells round-trip through 12 significant digits, so compare at 1e-9.
  for (std::size_t i = 0; i < t.rows.size(); i += 8) {
    const double theta = cell(t, i, 0);
    CHECK(cell(t, i, aw_col) ==
          doctest::Approx(std::tan(theta / 2.0)).epsilon(1e-9));
  }
}

TEST_CASE("distribution panels list n = 0..20 and sum to one") {
  CsvTable t = render_figure(preset("fig1a"));
  REQUIRE(t.rows.size() == 21);
  CHECK(t.header.front() == "n");
  REQUIRE(t.header.size() >= 3);
  for (std::size_t i = 0; i < 21; ++i) {
    CHECK(cell(t, i, 0) == static_cast<double>(i));
  }
  // Each curve is a probability distribution over the shown range.
  for (std::size_t c = 1; c + 1 < t.header.size(); ++c) {
    double sum = 0.0;
    for (std::size_t i = 0; i < 21; ++i) {
      const double p = cell(t, i, c);
      CHECK(p >= 0.0);
      sum += p;
    }
    CHECK(sum > 0.9);
    CHECK(sum < 1.0 + 1e-9);
  }
}

TEST_CASE("figure bytes are independent of the thread count") {
  const FigurePreset& p = preset("fig8b");
  const std::string one = to_string(render_figure(p, 128, 1));
  const std::string four = to_string(render_figure(p, 128, 4));
  CHECK(one == four);
  // fig8b sweeps the odd cat through r = 0: that point must carry a warning.
  CsvTable t = render_figure(p);
  CHECK(!t.rows[0].back().empty());
  CHECK(t.rows[1].back().empty());
}

#ifdef POSTSEL_CLI_PATH
TEST_CASE("the command-line tool honors the exit-code contract") {
  namespace fs = std::filesystem;
  const std::string cli = POSTSEL_CLI_PATH;
  REQUIRE(fs::exists(cli));
  const fs::path dir = fs::temp_directory_path() / "postsel_cli_tests";
  fs::create_directories(dir);
  const auto run = [&](const std::string& args) {
    const std::string cmd = cli + " " + args + " >/dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    REQUIRE(rc != -1);
    REQUIRE(WIFEXITED(rc));
    return WEXITSTATUS(rc);
  };

  const fs::path good = dir / "good.cfg";
  {
    std::ofstream out(good);
    out << "pointer = coherent\nr = 1\nvartheta = 1.0471975511965976\n"
        << "s = 2\ntheta = 2.443460952792061\nphi_sys = 2.5132741228718345\n"
        << "phi_quad = 0.6283185307179586\n";
  }
  const fs::path out_csv = dir / "point.csv";
  CHECK(run("point --config " + good.string() + " --out " +
            out_csv.string()) == 0);
  CHECK(fs::exists(out_csv));

  // Config problems exit 1.
  CHECK(run("point --config " + (dir / "missing.cfg").string()) == 1);
  CHECK(run("figure --preset nope --out " + (dir / "f.csv").string()) == 1);
  const fs::path bad = dir / "bad.cfg";
  {
    std::ofstream out(bad);
    out << "r = not_a_number\n";
  }
  CHECK(run("point --config " + bad.string()) == 1);

  // Numerical failures exit 2.
  const fs::path huge = dir / "huge.cfg";
  {
    std::ofstream out(huge);
    out << "pointer = coherent\nr = 20\ns = 40\ntheta = 0.3\n";
  }
  CHECK(run("point --config " + huge.string()) == 2);

  // A validation failure exits 3.
  CHECK(run("validate --grid small --out " + (dir / "val").string() +
            " --inject-fault CohNorm") == 3);
  CHECK(run("validate --grid small --out " + (dir / "val_ok").string()) == 0);
  CHECK(fs::exists(dir / "val_ok" / "validation_report.csv"));
  CHECK(fs::exists(dir / "val_ok" / "typo_table.csv"));

  // Environment overrides are validated too.
  const std::string env_cmd = "POSTSEL_DIM=banana " + cli + " point --config " +
                              good.string() + " >/dev/null 2>&1";
  const int env_rc = std::system(env_cmd.c_str());
  REQUIRE(WIFEXITED(env_rc));
  CHECK(WEXITSTATUS(env_rc) == 1);
}
#endif

}  // TEST_SUITE
