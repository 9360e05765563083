#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace waves {

enum class CurveId { CriticalDepth, StagnationDepth, D0, BPlusBoundary, YStarOnD0 };

std::string_view to_string(CurveId id) noexcept;
CurveId parse_curve(std::string_view name);

struct CurveSample {
  double a = 0.0;
  double d = 0.0;
  double value = 0.0;  // residual of the defining equation, or Y* for YStarOnD0
  bool converged = false;
};

struct RegionCurve {
  CurveId id = CurveId::CriticalDepth;
  std::vector<CurveSample> samples;  // sorted by a
};

/// Default relative tolerance on depths returned by the root finders.
inline constexpr double kDepthTol = 1e-13;

/// Search interval in d for mu2 and B sign scans: (d_c, d_s) for a > 0 with
/// the guard band excluded, (d_c, max(10, 5 d_s)) otherwise.
struct DepthWindow {
  double lo;
  double hi;
};
DepthWindow depth_window(double a);

/// Unique zero of mu2(a, .) on the depth window. Throws NoSignChange when mu2
/// does not change sign on the scan and NonUnique when it changes more than once.
double d0(double a, double tol = kDepthTol);

/// Vorticity where d0(a) = d_s(a), searched on (-5, -0.5).
double a0(double tol = 1e-10);

struct BPlusSlice {
  bool exists = false;
  double lower = 0.0;  // B(a, lower) = 0, lower > d_c
  double upper = 0.0;  // B(a, upper) = 0
  double d_peak = 0.0; // maximiser of B over the window
  double B_peak = 0.0;
};

/// Slice of the formal-stability region B+ at fixed a.
BPlusSlice b_plus_boundary(double a, double tol = kDepthTol);

/// Rightmost a with a nonempty B+ slice, searched on (0, 1). Throws
/// Inconclusive when the existence pattern on a coarse scan is not monotone.
double a1(double tol = 1e-10);

/// Y*(a, d0(a)) for each a in a_grid; every a must lie below a0.
RegionCurve ystar_on_d0(std::span<const double> a_grid);

/// Y*(a, d0(a)) at a = -1e6, the level Y* approaches as a -> -infinity.
double ystar_limit();

/// Samples the requested curve on a_grid; failed samples are kept with
/// converged = false and d = NaN.
RegionCurve sample_curve(CurveId id, std::span<const double> a_grid);

std::vector<double> linspace(double lo, double hi, std::size_t n);
/// n points from lo to hi equally spaced in log|a|; lo and hi share a sign.
std::vector<double> logspace(double lo, double hi, std::size_t n);

/// sgn(mu) log(1 + |mu|), the vertical axis of the mu2 slice figures.
double signed_log(double mu);

/// A column-named numeric table; NaN marks a failed sample.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Tables behind figures 1 to 6.
Table figure_table(int figure);

/// Fixed vorticities of the mu2 slices in figures 3 and 4; a0 is computed.
std::vector<double> figure_vorticities(int figure);

}  // namespace waves
