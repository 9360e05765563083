#pragma once

#include <limits>
#include <string>
#include <vector>

#include "json.hpp"

#include "waves/laminar_flow.hpp"
#include "waves/region_mapper.hpp"

namespace waves {

inline constexpr const char* kToolkitVersion = "1.0.0";

using Json = nlohmann::ordered_json;

/// Everything known about one laminar flow: dispersion root, region data,
/// expansion coefficients and the stability quantities.
Json compute_report(const FlowParams& p, double tol = 1e-14);

/// Header row then one row per sample, 17 significant digits.
std::string to_csv(const Table& table);
std::string to_csv(const RegionCurve& curve);

Json to_json(const Table& table);

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::string x_column;
  std::vector<std::string> y_columns;  // one line per column
  std::string group_column;            // when set, one line per distinct value of it
  std::vector<double> reference_levels; // dotted horizontal lines
  double y_min = std::numeric_limits<double>::quiet_NaN();  // NaN: fit to data
  double y_max = std::numeric_limits<double>::quiet_NaN();
};

/// Standalone SVG line plot of the table.
std::string to_svg(const Table& table, const PlotSpec& spec);

/// Axis labels and series for figures 1 to 6.
PlotSpec figure_plot(int figure);

/// Writes content to path, or to stdout when path is empty or "-". Throws Io.
void write_output(const std::string& path, const std::string& content);

}  // namespace waves
