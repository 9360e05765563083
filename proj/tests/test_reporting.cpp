#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "doctest.h"
#include "waves/errors.hpp"
#include "waves/region_mapper.hpp"
#include "waves/reporting.hpp"

using namespace waves;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const WavesError& e) {
    return e.kind();
  }
  FAIL("expected a WavesError");
  return ErrorKind::Io;
}

struct CliRun {
  int status = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CliRun run_cli(const std::string& args) {
  const std::string out = "cli_test_out.txt", err = "cli_test_err.txt";
  const std::string cmd = std::string(WAVES_CLI) + " " + args + " >" + out + " 2>" + err;
  const int raw = std::system(cmd.c_str());
  CliRun r{WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out), slurp(err)};
  std::remove(out.c_str());
  std::remove(err.c_str());
  return r;
}

}  // namespace

TEST_SUITE("reporting") {
  TEST_CASE("csv keeps full precision and marks failures") {
    const Table t{{"a", "d"}, {{0.1, 1.0 / 3.0}, {2.0, std::numeric_limits<double>::quiet_NaN()}}};
    const std::string csv = to_csv(t);
    std::istringstream in(csv);
    std::string header, first, second;
    std::getline(in, header);
    std::getline(in, first);
    std::getline(in, second);
    CHECK(header == "a,d");
    CHECK(first == "0.10000000000000001,0.33333333333333331");
    CHECK(std::stod(first.substr(first.find(',') + 1)) == 1.0 / 3.0);
    CHECK(second == "2,nan");
  }

  TEST_CASE("empty curve has only a header") {
    CHECK(to_csv(RegionCurve{CurveId::D0, {}}) == "a,d,value,converged\n");
  }

  TEST_CASE("json tables round-trip") {
    const Table t = figure_table(2);
    const Json j = Json::parse(to_json(t).dump());
    REQUIRE(j["rows"].size() == t.rows.size());
    for (std::size_t i = 0; i < t.rows.size(); ++i)
      for (std::size_t k = 0; k < t.columns.size(); ++k) {
        const double v = t.rows[i][k];
        if (std::isfinite(v)) CHECK(j["rows"][i][k].get<double>() == v);
        else CHECK(j["rows"][i][k].is_null());
      }
  }

  TEST_CASE("report contents") {
    const Json r = compute_report(FlowParams{0.0, 2.0});
    CHECK(r["dispersion"]["tau_star"].get<double>() ==
          doctest::Approx(3.9999990997154615).epsilon(1e-13));
    CHECK(r["laminar"]["d_c"].get<double>() == 1.0);
    CHECK(r["laminar"]["d_s"].is_null());
    CHECK(r["provenance"]["version"] == kToolkitVersion);
    CHECK(r.dump() == compute_report(FlowParams{0.0, 2.0}).dump());
    CHECK(kind_of([] { compute_report(FlowParams{0.0, 0.5}); }) == ErrorKind::OutOfBranch);
  }

  TEST_CASE("figure output is deterministic") {
    CHECK(to_csv(figure_table(5)) == to_csv(figure_table(5)));
  }

  TEST_CASE("svg is a single closed document") {
    const std::string svg = to_svg(figure_table(1), figure_plot(1));
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("</svg>") == svg.rfind("</svg>"));
    CHECK(svg.find("nan") == std::string::npos);
    PlotSpec spec = figure_plot(1);
    spec.title = "a < b & c";
    CHECK(to_svg(figure_table(1), spec).find("a &lt; b &amp; c") != std::string::npos);
  }

  TEST_CASE("unwritable output") {
    CHECK(kind_of([] { write_output("/nonexistent-dir/x.csv", "x"); }) == ErrorKind::Io);
  }
}

TEST_SUITE("cli") {
  TEST_CASE("compute") {
    const CliRun r = run_cli("compute a=0 d=2");
    CHECK(r.status == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["dispersion"]["tau_star"].get<double>() ==
          doctest::Approx(3.9999990997154615).epsilon(1e-13));
  }

  TEST_CASE("precondition failures exit 2 with a json error") {
    for (const char* args : {"compute a=0 d=0.5", "compute --a 2 --d 1", "compute --a 0", "bogus"}) {
      CAPTURE(args);
      const CliRun r = run_cli(args);
      CHECK(r.status == 2);
      CHECK(r.out.empty());
      CHECK(Json::parse(r.err).contains("error"));
    }
    CHECK(Json::parse(run_cli("compute a=0 d=0.5").err)["error"] == "out-of-branch");
  }

  TEST_CASE("curve csv") {
    const CliRun r = run_cli("curve d0 --a-min -1 --a-max 1 --points 3");
    CHECK(r.status == 0);
    CHECK(r.out.rfind("a,d,value,converged\n", 0) == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);
  }

  TEST_CASE("figure formats") {
    CHECK(run_cli("figure 2 --format json").status == 0);
    CHECK(run_cli("figure 2 --format svg").out.find("</svg>") != std::string::npos);
    CHECK(run_cli("figure 9").status == 2);
  }

  TEST_CASE("quick verify") {
    const CliRun r = run_cli("verify --quick --format json");
    CHECK(r.status == 0);
    CHECK(Json::parse(r.out).dump().find("\"passed\":false") == std::string::npos);
  }
}
