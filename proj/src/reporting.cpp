#include "waves/reporting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "waves/dispersion.hpp"
#include "waves/errors.hpp"
#include "waves/stability.hpp"
#include "waves/stokes_expansion.hpp"

namespace waves {

namespace {

std::string number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string short_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string xml_text(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

Json finite_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json compute_report(const FlowParams& p, double tol) {
  const Bernoulli r = bernoulli(p);
  const SurfaceShear sh = surface_shear(p);
  const StagnationPoint sp = stagnation_height(p);
  const DispersionSolution ds = solve_dispersion(p, tol);
  const ExpansionCoefficients c = expansion_coefficients(p);
  const StabilityReport st = stability_report(p);

  Json j;
  j["inputs"] = {{"a", p.a}, {"d", p.d}};
  j["laminar"] = {
      {"d_c", critical_depth(p.a)},
      {"d_s", finite_or_null(stagnation_depth(p.a))},
      {"depth_class", std::string(to_string(classify(p)))},
      {"region", std::string(to_string(sp.tag))},
      {"kappa", sh.kappa},
      {"rho0", sh.rho0},
      {"R", r.value},
      {"R_prime", r.slope},
      {"R_second", r.curvature},
      {"y_star", sp.y_star ? Json(*sp.y_star) : Json(nullptr)},
      {"Y_star", sp.Y_star ? Json(*sp.Y_star) : Json(nullptr)},
  };
  j["dispersion"] = {
      {"tau_star", ds.tau_star},
      {"lambda_star", ds.lambda_star},
      {"iterations", ds.iterations},
      {"residual", ds.residual},
      {"bracket", {ds.bracket_lo, ds.bracket_hi}},
  };
  j["expansion"] = {
      {"gamma1", c.gamma1}, {"gamma2", c.gamma2}, {"gamma3", c.gamma3},
      {"A1", c.o2.A1}, {"B1", c.o2.B1}, {"C1", c.o2.C1},
      {"a1", c.o2.a1}, {"b1", c.o2.b1}, {"c1", c.o2.c1}, {"d1", c.o2.d1},
      {"Xi", c.o3.Xi},
      {"A2", c.o3.A2}, {"B2", c.o3.B2}, {"C2", c.o3.C2}, {"D2", c.o3.D2},
      {"a2", c.o3.a2}, {"b2", c.o3.b2}, {"c2", c.o3.c2}, {"d2", c.o3.d2},
      {"lambda2", c.o3.lambda2},
  };
  j["stability"] = {
      {"mu2", st.mu2.mu2},
      {"mu2_direct", st.mu2.mu2_direct},
      {"A", st.mu2.A},
      {"lambda2", st.mu2.lambda2},
      {"H", st.mu2.H_value},
      {"mu0", st.formal.mu0},
      {"mu01", st.formal.mu01},
      {"p0", st.formal.p0},
      {"C", st.formal.C},
      {"B", st.formal.B},
  };
  j["provenance"] = {{"version", kToolkitVersion}, {"dispersion_tol", tol}, {"c2_free", 0.0}};
  return j;
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    out += (i ? "," : "") + csv_field(table.columns[i]);
  out += "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + number(row[i]);
    out += "\n";
  }
  return out;
}

std::string to_csv(const RegionCurve& curve) {
  std::string out = "a,d,value,converged\n";
  for (const auto& s : curve.samples)
    out += number(s.a) + "," + number(s.d) + "," + number(s.value) + "," +
           (s.converged ? "true" : "false") + "\n";
  return out;
}

Json to_json(const Table& table) {
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    Json r = Json::array();
    for (double v : row) r.push_back(finite_or_null(v));
    rows.push_back(std::move(r));
  }
  return Json{{"columns", table.columns}, {"rows", std::move(rows)}};
}

std::string to_svg(const Table& table, const PlotSpec& spec) {
  auto column = [&](const std::string& name) -> std::ptrdiff_t {
    const auto it = std::find(table.columns.begin(), table.columns.end(), name);
    if (it == table.columns.end()) fail(ErrorKind::Request, "to_svg: no column '" + name + "'");
    return it - table.columns.begin();
  };
  struct Series {
    std::string name;
    std::vector<std::pair<double, double>> points;  // NaN y breaks the line
  };
  std::vector<Series> series;
  const auto xc = column(spec.x_column);
  if (!spec.group_column.empty()) {
    const auto gc = column(spec.group_column);
    const auto yc = column(spec.y_columns.at(0));
    std::map<double, std::size_t> index;
    for (const auto& row : table.rows) {
      auto [it, added] = index.try_emplace(row[gc], series.size());
      if (added) series.push_back({spec.group_column + " " + short_number(row[gc]), {}});
      series[it->second].points.emplace_back(row[xc], row[yc]);
    }
  } else {
    for (const auto& name : spec.y_columns) {
      const auto yc = column(name);
      Series s{name, {}};
      for (const auto& row : table.rows) s.points.emplace_back(row[xc], row[yc]);
      series.push_back(std::move(s));
    }
  }

  const bool fixed_lo = std::isfinite(spec.y_min), fixed_hi = std::isfinite(spec.y_max);
  auto visible = [&](double y) {
    return std::isfinite(y) && (!fixed_lo || y >= spec.y_min) && (!fixed_hi || y <= spec.y_max);
  };
  double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
  for (const auto& s : series)
    for (auto [x, y] : s.points) {
      if (!std::isfinite(x) || !visible(y)) continue;
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
  for (double level : spec.reference_levels) {
    y0 = std::min(y0, level);
    y1 = std::max(y1, level);
  }
  if (fixed_lo) y0 = spec.y_min;
  if (fixed_hi) y1 = spec.y_max;
  if (!(x1 > x0)) x0 -= 1.0, x1 += 1.0;
  if (!(y1 > y0)) y0 -= 1.0, y1 += 1.0;

  const double width = 720, height = 480, left = 70, right = 170, top = 40, bottom = 50;
  const double pw = width - left - right, ph = height - top - bottom;
  auto px = [&](double x) { return left + (x - x0) / (x1 - x0) * pw; };
  auto py = [&](double y) { return top + (y1 - y) / (y1 - y0) * ph; };
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                 "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << left + pw / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
     << xml_text(spec.title) << "</text>\n";
  os << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double xv = x0 + (x1 - x0) * i / 5.0, yv = y0 + (y1 - y0) * i / 5.0;
    os << "<line x1=\"" << px(xv) << "\" y1=\"" << top + ph << "\" x2=\"" << px(xv) << "\" y2=\""
       << top + ph + 5 << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << px(xv) << "\" y=\"" << top + ph + 18 << "\" text-anchor=\"middle\">"
       << short_number(xv) << "</text>\n";
    os << "<line x1=\"" << left - 5 << "\" y1=\"" << py(yv) << "\" x2=\"" << left << "\" y2=\""
       << py(yv) << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << left - 8 << "\" y=\"" << py(yv) + 4 << "\" text-anchor=\"end\">"
       << short_number(yv) << "</text>\n";
  }
  os << "<text x=\"" << left + pw / 2 << "\" y=\"" << height - 10 << "\" text-anchor=\"middle\">"
     << xml_text(spec.x_label) << "</text>\n";
  os << "<text transform=\"translate(16," << top + ph / 2 << ") rotate(-90)\" text-anchor=\"middle\">"
     << xml_text(spec.y_label) << "</text>\n";
  for (double level : spec.reference_levels)
    os << "<line x1=\"" << left << "\" y1=\"" << py(level) << "\" x2=\"" << left + pw << "\" y2=\""
       << py(level) << "\" stroke=\"gray\" stroke-dasharray=\"2,4\"/>\n";

  for (std::size_t k = 0; k < series.size(); ++k) {
    const char* color = colors[k % std::size(colors)];
    std::string path;
    bool pen = false;
    for (auto [x, y] : series[k].points) {
      if (!std::isfinite(x) || !visible(y)) {
        pen = false;
        continue;
      }
      path += (pen ? " L" : " M") + short_number(px(x)) + "," + short_number(py(y));
      pen = true;
    }
    if (!path.empty())
      os << "<path d=\"" << path << "\" fill=\"none\" stroke=\"" << color
         << "\" stroke-width=\"1.5\"/>\n";
    const double ly = top + 16 + 18 * k;
    os << "<line x1=\"" << left + pw + 12 << "\" y1=\"" << ly - 4 << "\" x2=\"" << left + pw + 32
       << "\" y2=\"" << ly - 4 << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    os << "<text x=\"" << left + pw + 38 << "\" y=\"" << ly << "\">" << xml_text(series[k].name) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

PlotSpec figure_plot(int figure) {
  PlotSpec s;
  s.x_column = "a";
  s.x_label = "a";
  s.y_label = "d";
  switch (figure) {
    case 1:
      s.title = "Depths d_c(a), d_s(a) and d0(a)";
      s.y_columns = {"d_c", "d_s", "d0"};
      s.y_min = 0.0;
      s.y_max = 3.0;
      return s;
    case 2:
      s.title = "Stagnation regions of the laminar flow";
      s.y_columns = {"d_c", "d_s"};
      s.y_min = 0.0;
      s.y_max = 3.0;
      return s;
    case 3:
    case 4:
      s.title = figure == 3 ? "mu2 against d, a <= 0" : "mu2 against d, a > 0";
      s.x_column = "d";
      s.x_label = "d";
      s.y_label = "sgn(mu2) log(1+|mu2|)";
      s.y_columns = {"signed_log_mu2"};
      s.group_column = "a";
      return s;
    case 5:
      s.title = "Y*(a, d0(a)) for a < a0";
      s.y_label = "Y*";
      s.y_columns = {"ystar"};
      s.reference_levels = {ystar_limit()};
      return s;
    case 6:
      s.title = "Formal stability region B+";
      s.y_columns = {"d_c", "d_s", "d0", "b_lower", "b_upper"};
      s.y_min = 0.0;
      s.y_max = 3.0;
      return s;
    default:
      fail(ErrorKind::Request, "figure must be 1..6");
  }
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::Io, "cannot open '" + path + "' for writing");
  out << content;
  if (!out) fail(ErrorKind::Io, "write to '" + path + "' failed");
}

}  // namespace waves
