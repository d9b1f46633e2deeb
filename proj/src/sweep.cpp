#include "postsel/sweep.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "postsel/errors.hpp"
#include "postsel/observables.hpp"

namespace postsel {

void apply_param(SweepSpec& spec, const std::string& param, double value) {
  if (param == "s") {
    spec.cfg.s = value;
  } else if (param == "theta") {
    spec.cfg.theta = value;
  } else if (param == "phi_sys") {
    spec.cfg.phi_sys = value;
  } else if (param == "r") {
    spec.pointer.r = value;
  } else if (param == "vartheta") {
    spec.pointer.vartheta = value;
  } else if (param == "eta") {
    spec.pointer.eta = value;
  } else if (param == "delta") {
    spec.pointer.delta = value;
  } else if (param == "omega") {
    spec.pointer.omega = value;
  } else if (param == "phi_quad") {
    spec.phi_quad = value;
  } else {
    throw ConfigParseError("invalid axis parameter name: '" + param + "'");
  }
}

namespace {

std::string sanitize(std::string s) {
  for (char& c : s) {
    if (c == ',' || c == '\n' || c == '\r' || c == '"') c = ';';
  }
  return s;
}

struct PointCells {
  std::vector<std::string> cells;
  std::string warning;
};

// One grid point, start to finish. Throws on compute failure; an undefined
// g² on vacuum is not a failure — it leaves that cell empty with a note.
PointCells eval_point(const SweepSpec& spec, std::size_t start_dim) {
  validate_spec(spec.pointer);
  validate_config(spec.cfg);
  const FockVector ptr = build_pointer(spec.pointer, spec.cfg.s, start_dim);
  const auto [fin, success] = apply_postselected_measurement(spec.cfg, ptr);

  std::vector<double> phis;
  for (const OutputItem& item : spec.outputs) {
    if (item.kind == OutputKind::SPhi) {
      phis.push_back(item.at_phi_quad ? spec.phi_quad : item.angle);
    }
  }
  if (phis.empty()) phis.push_back(spec.phi_quad);
  const ObservableReport report = full_report(fin, phis, success);

  PointCells out;
  out.cells.reserve(spec.outputs.size());
  std::size_t phi_at = 0;
  for (const OutputItem& item : spec.outputs) {
    switch (item.kind) {
      case OutputKind::MeanN:
        out.cells.push_back(format_number(report.mean_n));
        break;
      case OutputKind::G2:
        if (report.g2) {
          out.cells.push_back(format_number(*report.g2));
        } else {
          out.cells.push_back("");
          out.warning = "g2 undefined on vacuum";
        }
        break;
      case OutputKind::MandelQ:
        out.cells.push_back(format_number(report.mandel_q));
        break;
      case OutputKind::Success:
        out.cells.push_back(format_number(*report.success_prob));
        break;
      case OutputKind::SPhi:
        out.cells.push_back(format_number(report.s_phi[phi_at++].value));
        break;
      case OutputKind::Pn:
        out.cells.push_back(format_number(
            item.n < report.photon_dist.size() ? report.photon_dist[item.n]
                                               : 0.0));
        break;
    }
  }
  return out;
}

std::vector<std::string> output_header(const SweepSpec& spec) {
  std::vector<std::string> header;
  for (const OutputItem& item : spec.outputs) header.push_back(item.label);
  header.push_back("warning");
  return header;
}

}  // namespace

std::vector<OutputItem> default_point_outputs() {
  std::vector<OutputItem> items;
  for (const char* tok : {"success", "mean_n", "g2", "mandel_q", "s_phi"}) {
    for (OutputItem& item : parse_output_token(tok)) {
      items.push_back(std::move(item));
    }
  }
  for (OutputItem& item : parse_output_token("pn@0..20")) {
    items.push_back(std::move(item));
  }
  return items;
}

CsvTable run_point(const SweepSpec& spec, std::size_t start_dim) {
  if (spec.axis1 || spec.axis2) {
    throw ConfigError("point evaluation takes no axes; remove axis1/axis2");
  }
  CsvTable table;
  table.header = output_header(spec);
  PointCells pc = eval_point(spec, start_dim);
  pc.cells.push_back(sanitize(pc.warning));
  table.rows.push_back(std::move(pc.cells));
  return table;
}

CsvTable run_sweep(const SweepSpec& spec, std::size_t start_dim,
                   unsigned threads) {
  if (!spec.axis1) throw ConfigError("sweep requires axis1");
  const AxisSpec& ax1 = *spec.axis1;
  const std::size_t n2 = spec.axis2 ? spec.axis2->count : 1;
  const std::size_t npoints = ax1.count * n2;

  // Reject configs whose fixed parameters are already out of domain; swept
  // parameters are validated per point so a sweep may pass through
  // degenerate interior points without aborting.
  {
    SweepSpec base = spec;
    apply_param(base, ax1.param, ax1.start);
    if (spec.axis2) apply_param(base, spec.axis2->param, spec.axis2->start);
    validate_spec(base.pointer);
    validate_config(base.cfg);
  }

  const auto axis_value = [](const AxisSpec& ax, std::size_t i) {
    return ax.start + (ax.stop - ax.start) * static_cast<double>(i) /
                          static_cast<double>(ax.count - 1);
  };

  std::vector<std::vector<std::string>> rows(npoints);
  const auto eval_row = [&](std::size_t k) {
    const std::size_t i1 = k / n2;
    const std::size_t i2 = k % n2;
    SweepSpec local = spec;
    const double v1 = axis_value(ax1, i1);
    apply_param(local, ax1.param, v1);
    double v2 = 0.0;
    if (spec.axis2) {
      v2 = axis_value(*spec.axis2, i2);
      apply_param(local, spec.axis2->param, v2);
    }
    std::vector<std::string> row;
    row.push_back(format_number(v1));
    if (spec.axis2) row.push_back(format_number(v2));
    PointCells pc;
    try {
      pc = eval_point(local, start_dim);
    } catch (const Error& e) {
      pc.cells.assign(spec.outputs.size(), "");
      pc.warning = e.what();
    }
    row.insert(row.end(), pc.cells.begin(), pc.cells.end());
    row.push_back(sanitize(pc.warning));
    rows[k] = std::move(row);
  };

  const unsigned nthreads =
      std::clamp<unsigned>(threads, 1u, 64u);
  if (nthreads <= 1 || npoints <= 1) {
    for (std::size_t k = 0; k < npoints; ++k) eval_row(k);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(nthreads);
    for (unsigned t = 0; t < nthreads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t k = t; k < npoints; k += nthreads) eval_row(k);
        } catch (...) {
          errs[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errs) {
      if (e) std::rethrow_exception(e);
    }
  }

  CsvTable table;
  table.header.push_back(ax1.param);
  if (spec.axis2) table.header.push_back(spec.axis2->param);
  for (const std::string& h : output_header(spec)) table.header.push_back(h);
  table.rows = std::move(rows);
  return table;
}

}  // namespace postsel
