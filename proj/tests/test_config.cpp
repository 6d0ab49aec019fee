// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "mpnormal/config.hpp"

using namespace mpnormal;

namespace {

const char* kValidConfig = R"({
  "endpoints": {"a1": -1.0, "a2": 0.0, "b2": 1.0, "a3": 2.0},
  "A1": [[[0.0, 0.0]]],
  "A2": [[[2.0, 0.0]]],
  "A3": [[[0.0, 0.0]]],
  "W1": [[[1.0, 0.0]]],
  "W2": [[[0.0, 1.0]]],
  "options": {"n_min": -2, "n_max": 2, "fd_scheme": "central"}
})";

}  // namespace

TEST_CASE("valid config text parses into the expected problem") {
  const ProblemConfig c = parse_config_text(kValidConfig);
  CHECK(c.problem.a1 == -1.0);
  CHECK(c.problem.tau() == doctest::Approx(1.0));
  CHECK(c.problem.A2.entries()(0, 0) == Complex{2.0, 0.0});
  CHECK(std::abs(c.extension.W2.entries()(0, 0) - Complex{0, 1}) <= 1e-15);
  REQUIRE(c.options.n_window.has_value());
  CHECK(c.options.n_window->first == -2);
  CHECK(c.options.fd_scheme == FDScheme::Central);
}

TEST_CASE("config round-trips through its json serialization") {
  const ProblemConfig c = make_preset("diag-2x2");
  const ProblemConfig back = parse_config_text(config_to_json(c));
  CHECK((back.problem.A1.entries() - c.problem.A1.entries()).norm() == 0.0);
  CHECK((back.problem.A2.entries() - c.problem.A2.entries()).norm() == 0.0);
  CHECK((back.extension.W1.entries() - c.extension.W1.entries()).norm() == 0.0);
  CHECK(back.problem.a3 == c.problem.a3);
  CHECK(back.options.grid_m == c.options.grid_m);
}

TEST_CASE("config errors carry a usable location") {
  SUBCASE("syntax error reports a byte position") {
    try {
      parse_config_text("{\"endpoints\": ");
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(e.location.rfind("byte ", 0) == 0);
    }
  }
  SUBCASE("malformed matrix row reports a json pointer") {
    std::string broken = kValidConfig;
    broken.replace(broken.find("[[[2.0, 0.0]]]"), 14, "[[[2.0, 0.0], [1.0, 0.0]]]");
    try {
      parse_config_text(broken);
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(e.location == "/A2/0");
    }
  }
  SUBCASE("missing endpoint") {
    std::string broken = kValidConfig;
    broken.replace(broken.find("\"a3\""), 4, "\"a4\"");
    CHECK_THROWS_AS(parse_config_text(broken), ConfigError);
  }
  SUBCASE("bad entry shape") {
    std::string broken = kValidConfig;
    broken.replace(broken.find("[0.0, 1.0]"), 10, "[0.0]");
    try {
      parse_config_text(broken);
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(e.location == "/W2/0/0");
    }
  }
}

TEST_CASE("all presets construct and classify as expected") {
  for (const std::string& name : preset_names()) {
    const ProblemConfig c = make_preset(name);
    CHECK(c.problem.dim() >= 1);
    const NormalityReport r = validate_extension(c.problem, c.extension);
    if (name == "injective-a1" || name == "unequal-kernel") {
      CHECK_FALSE(r.extension_exists);
    } else {
      CHECK(r.extension_exists);
    }
  }
  CHECK_THROWS_AS(make_preset("nope"), ConfigError);
}

TEST_CASE("spectrum serialization") {
  const ProblemConfig c = make_preset("scalar-phase");
  const SpectrumResult r = full_spectrum(c.problem, c.extension,
                                         BranchWindow::n_range(-2, 2));
  SUBCASE("csv has the pinned header, CRLF rows and full precision") {
    const std::string csv = spectrum_to_csv(r);
    CHECK(csv.rfind("re,im,n,mu_re,mu_im,residual\r\n", 0) == 0);
    CHECK(csv.find("\r\n", csv.size() - 2) == csv.size() - 2);
    // 5 branch rows plus the header.
    int lines = 0;
    for (std::size_t i = 0; (i = csv.find("\r\n", i)) != std::string::npos;
         i += 2)
      ++lines;
    CHECK(lines == 6);
  }
  SUBCASE("json round-trip preserves point membership") {
    const nlohmann::json j = nlohmann::json::parse(spectrum_to_json(r));
    CHECK(j["schema_version"] == 1);
    CHECK(j["residual"] == "{}");
    std::vector<Complex> pts;
    for (const auto& row : j["point"]) {
      pts.emplace_back(row["re"].get<double>(), row["im"].get<double>());
    }
    const SpectrumSet rebuilt = SpectrumSet::points(pts);
    for (const auto& ev : r.point) {
      CHECK(rebuilt.contains(ev.lambda, 1e-12));
    }
    CHECK(pts.size() == r.point.size());
  }
  SUBCASE("plot data carries the scatter and an axis marker") {
    const std::string plot = plot_data(r);
    CHECK(plot.find("# axis: iR") != std::string::npos);
    CHECK(plot.find("\n0 0\n") != std::string::npos);
  }
}

TEST_CASE("normality report serialization") {
  const ProblemConfig c = make_preset("injective-a1");
  const NormalityReport r = validate_extension(c.problem, c.extension);
  const nlohmann::json j =
      nlohmann::json::parse(normality_report_to_json(r));
  CHECK(j["extension_exists"] == false);
  CHECK(j["kernel_dims"][0] == 0);
  CHECK(j["maximality_note"].get<std::string>().find("maximally") !=
        std::string::npos);
}
