#include "waves/region_mapper.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "bracketing.hpp"
#include "waves/dispersion.hpp"
#include "waves/errors.hpp"
#include "waves/laminar_flow.hpp"
#include "waves/parallel.hpp"
#include "waves/stability.hpp"

namespace waves {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr int kScanPoints = 200;
constexpr double kCriticalOffset = 1e-6;   // relative to d_c
constexpr double kStagnationOffset = 1e-5; // relative to d_s, outside the guard band

double mu2_at(double a, double d) { return mu2(FlowParams{a, d}).mu2; }
double b_at(double a, double d) { return p0_and_B(FlowParams{a, d}).B; }

// Depths geometrically clustered toward d_c.
std::vector<double> scan_depths(double a, const DepthWindow& w, int n) {
  const double dc = critical_depth(a);
  const double e_lo = w.lo - dc, e_hi = w.hi - dc;
  std::vector<double> d(n);
  for (int i = 0; i < n; ++i) d[i] = dc + e_lo * std::pow(e_hi / e_lo, double(i) / (n - 1));
  d.back() = w.hi;
  return d;
}

// Relative residual scale d * |df/dd| from a central difference.
template <class F>
double local_scale(F&& f, double d) {
  const double h = 1e-6 * d;
  return std::max(1.0, d * std::abs(f(d + h) - f(d - h)) / (2.0 * h));
}

}  // namespace

std::string_view to_string(CurveId id) noexcept {
  switch (id) {
    case CurveId::CriticalDepth: return "critical-depth";
    case CurveId::StagnationDepth: return "stagnation-depth";
    case CurveId::D0: return "d0";
    case CurveId::BPlusBoundary: return "b-plus-boundary";
    case CurveId::YStarOnD0: return "ystar-on-d0";
  }
  return "?";
}

CurveId parse_curve(std::string_view name) {
  for (auto id : {CurveId::CriticalDepth, CurveId::StagnationDepth, CurveId::D0,
                  CurveId::BPlusBoundary, CurveId::YStarOnD0})
    if (name == to_string(id)) return id;
  fail(ErrorKind::Request, "unknown curve '" + std::string(name) + "'");
}

DepthWindow depth_window(double a) {
  const double dc = critical_depth(a);
  const double lo = dc * (1.0 + kCriticalOffset);
  if (a > 0.0) return {lo, stagnation_depth(a) * (1.0 - kStagnationOffset)};
  if (a == 0.0) return {lo, 10.0};
  return {lo, std::max(10.0, 5.0 * stagnation_depth(a))};
}

double d0(double a, double tol) {
  const DepthWindow w = depth_window(a);
  const std::vector<double> d = scan_depths(a, w, kScanPoints);
  std::vector<double> mu(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) mu[i] = mu2_at(a, d[i]);

  std::vector<std::size_t> changes;
  for (std::size_t i = 0; i + 1 < d.size(); ++i)
    if (std::signbit(mu[i]) != std::signbit(mu[i + 1])) changes.push_back(i);
  if (changes.empty()) {
    std::ostringstream os;
    os << "d0: mu2 keeps its sign on (" << w.lo << ", " << w.hi << ") at a=" << a
       << "; mu2 ends: " << mu.front() << ", " << mu.back();
    fail(ErrorKind::NoSignChange, os.str());
  }
  if (changes.size() > 1) {
    std::ostringstream os;
    os << "d0: " << changes.size() << " sign changes of mu2 at a=" << a << " near d =";
    for (auto i : changes) os << ' ' << d[i];
    fail(ErrorKind::NonUnique, os.str());
  }
  const std::size_t i = changes.front();
  return detail::bisect([a](double x) { return mu2_at(a, x); }, d[i], d[i + 1], mu[i], tol);
}

double a0(double tol) {
  auto gap = [](double a) { return d0(a) - stagnation_depth(a); };
  const double lo = -5.0, hi = -0.5;
  const double g_lo = gap(lo), g_hi = gap(hi);
  if (std::signbit(g_lo) == std::signbit(g_hi))
    fail(ErrorKind::NoSignChange, "a0: d0 - d_s keeps its sign on (-5, -0.5)");
  return detail::bisect(gap, lo, hi, g_lo, tol);
}

BPlusSlice b_plus_boundary(double a, double tol) {
  const DepthWindow w = depth_window(a);
  const std::vector<double> d = scan_depths(a, w, 2 * kScanPoints);
  std::vector<double> b(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) b[i] = b_at(a, d[i]);

  int changes = 0;
  for (std::size_t i = 0; i + 1 < d.size(); ++i)
    if (std::signbit(b[i]) != std::signbit(b[i + 1])) ++changes;
  if (changes > 2) {
    std::ostringstream os;
    os << "b_plus_boundary: " << changes << " sign changes of B at a=" << a;
    fail(ErrorKind::NonUnique, os.str());
  }

  const auto peak = static_cast<std::size_t>(std::max_element(b.begin(), b.end()) - b.begin());
  const double lo = d[peak == 0 ? 0 : peak - 1];
  const double hi = d[std::min(peak + 1, d.size() - 1)];
  auto f = [a](double x) { return b_at(a, x); };
  auto [x_peak, b_peak] = detail::golden_max(f, lo, hi, tol);
  if (b[peak] > b_peak) {
    x_peak = d[peak];
    b_peak = b[peak];
  }

  BPlusSlice s;
  s.d_peak = x_peak;
  s.B_peak = b_peak;
  s.exists = b_peak > 0.0;
  if (!s.exists) return s;
  s.lower = detail::bisect(f, d.front(), x_peak, b.front(), tol);
  if (b.back() < 0.0)
    s.upper = detail::bisect(f, x_peak, d.back(), b_peak, tol);
  else
    s.upper = d.back();
  return s;
}

double a1(double tol) {
  const std::vector<double> coarse = linspace(0.0, 1.0, 21);
  std::vector<bool> exists;
  for (double a : coarse) exists.push_back(b_plus_boundary(a).exists);
  const auto first_empty = std::find(exists.begin(), exists.end(), false);
  if (first_empty == exists.begin() || first_empty == exists.end() ||
      std::find(first_empty, exists.end(), true) != exists.end()) {
    std::ostringstream os;
    os << "a1: existence of B+ on a = 0, 0.05, ..., 1 is not monotone:";
    for (bool e : exists) os << ' ' << (e ? 'T' : 'F');
    fail(ErrorKind::Inconclusive, os.str());
  }
  const std::size_t k = static_cast<std::size_t>(first_empty - exists.begin());
  auto peak = [](double a) { return b_plus_boundary(a).B_peak; };
  return detail::bisect(peak, coarse[k - 1], coarse[k], peak(coarse[k - 1]), tol);
}

RegionCurve ystar_on_d0(std::span<const double> a_grid) {
  const double a_zero = a0();
  for (double a : a_grid)
    if (a > a_zero + 1e-9) {
      std::ostringstream os;
      os << "ystar_on_d0: a=" << a << " is not below a0=" << a_zero << " (outside M+)";
      fail(ErrorKind::Domain, os.str());
    }
  RegionCurve c{CurveId::YStarOnD0, {}};
  const auto rows = parallel_map<CurveSample>(a_grid.size(), [&](std::size_t i) {
    const double a = a_grid[i];
    const double d = d0(a);
    return CurveSample{a, d, relative_stagnation_height(a * d * d), true};
  });
  c.samples = rows;
  std::sort(c.samples.begin(), c.samples.end(), [](auto& l, auto& r) { return l.a < r.a; });
  return c;
}

double ystar_limit() {
  const double a = -1e6;
  const double d = d0(a);
  return relative_stagnation_height(a * d * d);
}

RegionCurve sample_curve(CurveId id, std::span<const double> a_grid) {
  const double a_zero = id == CurveId::YStarOnD0 ? a0() : 0.0;
  auto one = [&](double a) -> std::vector<CurveSample> {
    try {
      switch (id) {
        case CurveId::CriticalDepth: {
          const double d = critical_depth(a);
          return {{a, d, bernoulli(FlowParams{a, d}).slope, true}};
        }
        case CurveId::StagnationDepth: {
          if (a == 0.0) return {{a, std::numeric_limits<double>::infinity(), kNaN, false}};
          const double d = stagnation_depth(a);
          return {{a, d, 0.5 * std::abs(a) * d * d - 1.0, true}};
        }
        case CurveId::D0: {
          const double d = d0(a);
          auto f = [a](double x) { return mu2_at(a, x); };
          const double v = f(d);
          return {{a, d, v, std::abs(v) <= 1e-8 * local_scale(f, d)}};
        }
        case CurveId::BPlusBoundary: {
          const BPlusSlice s = b_plus_boundary(a);
          if (!s.exists) return {{a, kNaN, s.B_peak, false}};
          auto f = [a](double x) { return b_at(a, x); };
          std::vector<CurveSample> out;
          for (double d : {s.lower, s.upper}) {
            const double v = f(d);
            out.push_back({a, d, v, std::abs(v) <= 1e-8 * local_scale(f, d)});
          }
          return out;
        }
        case CurveId::YStarOnD0: {
          if (a > a_zero + 1e-9) return {{a, kNaN, kNaN, false}};
          const double d = d0(a);
          return {{a, d, relative_stagnation_height(a * d * d), true}};
        }
      }
    } catch (const WavesError&) {
    }
    return {{a, kNaN, kNaN, false}};
  };
  const auto parts = parallel_map<std::vector<CurveSample>>(
      a_grid.size(), [&](std::size_t i) { return one(a_grid[i]); });
  RegionCurve c{id, {}};
  for (const auto& p : parts) c.samples.insert(c.samples.end(), p.begin(), p.end());
  std::stable_sort(c.samples.begin(), c.samples.end(), [](auto& l, auto& r) { return l.a < r.a; });
  return c;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = n == 1 ? lo : lo + (hi - lo) * double(i) / double(n - 1);
  if (n > 1) v.back() = hi;
  return v;
}

std::vector<double> logspace(double lo, double hi, std::size_t n) {
  if (lo == 0.0 || hi == 0.0 || std::signbit(lo) != std::signbit(hi))
    fail(ErrorKind::Domain, "logspace: endpoints must be nonzero and share a sign");
  const double s = lo < 0.0 ? -1.0 : 1.0;
  std::vector<double> v = linspace(std::log(std::abs(lo)), std::log(std::abs(hi)), n);
  for (auto& x : v) x = s * std::exp(x);
  if (n > 0) v.front() = lo;
  if (n > 1) v.back() = hi;
  return v;
}

double signed_log(double mu) { return std::copysign(std::log1p(std::abs(mu)), mu) * (mu != 0.0); }

std::vector<double> figure_vorticities(int figure) {
  if (figure == 3) return {-10.0, -3.0, a0(), -0.3, -0.1, 0.0};
  if (figure == 4) return {5.0, 1.5, 0.5, 0.25, 0.15};
  fail(ErrorKind::Request, "figure_vorticities: only figures 3 and 4 are mu2 slices");
}

namespace {

constexpr double kWindowLo = -6.0;
constexpr double kWindowHi = 4.0;
constexpr std::size_t kCurvePoints = 400;
constexpr std::size_t kSlicePoints = 200;
constexpr double kSliceSpan = 2.5;

// Window grid with the special vorticities inserted so the curves meet there.
std::vector<double> window_grid(std::initializer_list<double> extra) {
  std::vector<double> g = linspace(kWindowLo, kWindowHi, kCurvePoints);
  g.insert(g.end(), extra);
  std::sort(g.begin(), g.end());
  return g;
}

std::vector<double> depths_of(const RegionCurve& c) {
  std::vector<double> d;
  for (const auto& s : c.samples) d.push_back(s.converged ? s.d : kNaN);
  return d;
}

Table slice_table(const std::vector<double>& vorticities) {
  Table t{{"curve", "a", "d", "mu2", "signed_log_mu2"}, {}};
  const auto blocks = parallel_map<std::vector<std::vector<double>>>(
      vorticities.size(), [&](std::size_t k) {
        const double a = vorticities[k];
        const DepthWindow w = depth_window(a);
        const double dc = critical_depth(a);
        const double top = a > 0.0 ? stagnation_depth(a) : dc + kSliceSpan;
        std::vector<double> d;
        for (std::size_t i = 1; i <= kSlicePoints; ++i)
          d.push_back(dc + (top - dc) * double(i) / double(kSlicePoints + 1));
        d.front() = std::max(d.front(), w.lo);
        double root = kNaN;
        try {
          root = d0(a);
          d.push_back(root);
        } catch (const WavesError&) {
        }
        std::sort(d.begin(), d.end());
        std::vector<std::vector<double>> rows;
        for (double x : d) {
          double mu = kNaN;
          try {
            mu = x == root ? 0.0 : mu2_at(a, x);
          } catch (const WavesError&) {
          }
          rows.push_back({double(k + 1), a, x, mu, std::isnan(mu) ? kNaN : signed_log(mu)});
        }
        return rows;
      });
  for (const auto& b : blocks) t.rows.insert(t.rows.end(), b.begin(), b.end());
  return t;
}

}  // namespace

Table figure_table(int figure) {
  switch (figure) {
    case 1:
    case 2:
    case 6: {
      const std::vector<double> g = figure == 2 ? window_grid({}) : figure == 1
          ? window_grid({a0()}) : window_grid({a0(), a1()});
      const auto dc = depths_of(sample_curve(CurveId::CriticalDepth, g));
      const auto ds = depths_of(sample_curve(CurveId::StagnationDepth, g));
      Table t;
      if (figure == 2) {
        t.columns = {"a", "d_c", "d_s"};
        for (std::size_t i = 0; i < g.size(); ++i) t.rows.push_back({g[i], dc[i], ds[i]});
        return t;
      }
      const auto dz = depths_of(sample_curve(CurveId::D0, g));
      if (figure == 1) {
        t.columns = {"a", "d_c", "d_s", "d0"};
        for (std::size_t i = 0; i < g.size(); ++i) t.rows.push_back({g[i], dc[i], ds[i], dz[i]});
        return t;
      }
      const auto slices = parallel_map<BPlusSlice>(g.size(), [&](std::size_t i) {
        try {
          return b_plus_boundary(g[i]);
        } catch (const WavesError&) {
          return BPlusSlice{false, kNaN, kNaN, kNaN, kNaN};
        }
      });
      t.columns = {"a", "d_c", "d_s", "d0", "b_lower", "b_upper"};
      for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& s = slices[i];
        t.rows.push_back({g[i], dc[i], ds[i], dz[i], s.exists ? s.lower : kNaN,
                          s.exists ? s.upper : kNaN});
      }
      return t;
    }
    case 3:
    case 4:
      return slice_table(figure_vorticities(figure));
    case 5: {
      const std::vector<double> g = logspace(-1000.0, a0(), kCurvePoints);
      const RegionCurve c = ystar_on_d0(g);
      Table t{{"a", "d0", "ystar"}, {}};
      for (const auto& s : c.samples) t.rows.push_back({s.a, s.d, s.value});
      return t;
    }
    default:
      fail(ErrorKind::Request, "figure must be 1..6");
  }
}

}  // namespace waves
