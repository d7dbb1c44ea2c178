#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include "ringshift/constants.hpp"
#include "ringshift/errors.hpp"
#include "ringshift/units.hpp"

#include "support/checker.hpp"
#include "support/frozen.hpp"

using namespace ringshift;
using testsupport::rel_close;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  out.close();
  return path.string();
}

}  // namespace

TEST_CASE("pinned constants sit inside the accepted windows") {
  const auto& pc = PhysicalConstants::pinned();
  CHECK(pc.alpha() > 7.297e-3);
  CHECK(pc.alpha() < 7.298e-3);
  CHECK(pc.electron_rest_energy_ev() > 510998.0);
  CHECK(pc.electron_rest_energy_ev() < 511000.0);
  CHECK(pc.hbar_c_ev_nm() > 197.32);
  CHECK(pc.hbar_c_ev_nm() < 197.33);
}

TEST_CASE("constants constructor rejects out-of-window values") {
  CHECK_THROWS_AS(PhysicalConstants(7.0e-3, 510999.0, 197.327), std::invalid_argument);
  CHECK_THROWS_AS(PhysicalConstants(7.2974e-3, 500000.0, 197.327), std::invalid_argument);
  CHECK_THROWS_AS(PhysicalConstants(7.2974e-3, 510999.0, 200.0), std::invalid_argument);
  CHECK_NOTHROW(PhysicalConstants(7.2974e-3, 510999.0, 197.325));
}

TEST_CASE("constants file overrides within the window") {
  const auto path = write_temp("ringshift_constants_ok.txt",
                               "# pinning file\nalpha = 7.2971e-3\n");
  const PhysicalConstants pc = PhysicalConstants::from_file(path);
  CHECK(pc.alpha() == 7.2971e-3);
  CHECK(pc.electron_rest_energy_ev() == PhysicalConstants::pinned().electron_rest_energy_ev());
  std::filesystem::remove(path);
}

TEST_CASE("constants file rejects unknown keys, bad numbers, bad windows") {
  const auto unknown = write_temp("ringshift_constants_unknown.txt", "speed_of_light = 3\n");
  CHECK_THROWS_AS(PhysicalConstants::from_file(unknown), ConfigError);
  const auto bad = write_temp("ringshift_constants_bad.txt", "alpha = zero\n");
  CHECK_THROWS_AS(PhysicalConstants::from_file(bad), ConfigError);
  const auto out = write_temp("ringshift_constants_window.txt", "alpha = 1.0\n");
  CHECK_THROWS_AS(PhysicalConstants::from_file(out), ConfigError);
  CHECK_THROWS_AS(PhysicalConstants::from_file("/nonexistent/constants.txt"), ConfigError);
  std::filesystem::remove(unknown);
  std::filesystem::remove(bad);
  std::filesystem::remove(out);
}

TEST_CASE("ring validation rejects non-physical parameters") {
  CHECK_THROWS_AS(validate(Ring1DSpec{-1.0, 1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(validate(Ring1DSpec{0.0, 1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(validate(Ring1DSpec{20.0, -0.5, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(validate(Ring1DSpec{20.0, 1.0, std::nan("")}), std::invalid_argument);
  CHECK_NOTHROW(validate(Ring1DSpec{20.0, 1.0, -0.3}));
}

TEST_CASE("angular scale for the three reference rings") {
  CHECK(rel_close(epsilon0({20.0, 1.0, 0.0}), frozen::kEps0R20, 1e-14));
  CHECK(rel_close(epsilon0({0.134, 1.0, 0.0}), frozen::kEps0Benzene, 1e-14));
  CHECK(rel_close(epsilon0({0.36, 1.0, 0.0}), frozen::kEps0Porphyrin, 1e-14));
}

TEST_CASE("angular scale obeys exact power-of-two scaling laws") {
  const double base = epsilon0({20.0, 1.0, 0.0});
  CHECK(epsilon0({40.0, 1.0, 0.0}) == base / 4.0);
  CHECK(epsilon0({10.0, 1.0, 0.0}) == base * 4.0);
  CHECK(epsilon0({20.0, 2.0, 0.0}) == base / 2.0);
  CHECK(epsilon0({20.0, 0.5, 0.0}) == base * 2.0);
}

TEST_CASE("radiative scale for the three reference rings") {
  CHECK(rel_close(characteristic_chi({20.0, 1.0, 0.0}), frozen::kChiR20, 1e-14));
  CHECK(rel_close(characteristic_chi({0.134, 1.0, 0.0}), frozen::kChiBenzene, 1e-14));
  CHECK(rel_close(characteristic_chi({0.36, 1.0, 0.0}), frozen::kChiPorphyrin, 1e-14));
}

TEST_CASE("radiative scale matches its defining combination") {
  const auto& pc = PhysicalConstants::pinned();
  const Ring1DSpec ring{20.0, 1.0, 0.0};
  const double e0 = epsilon0(ring, pc);
  const double expected = pc.alpha() * e0 * e0 / (ring.mass_ratio * pc.electron_rest_energy_ev());
  CHECK(rel_close(characteristic_chi(ring, pc), expected, 1e-15));
}

TEST_CASE("cutoff window ratios and status for the reference case") {
  const WindowReport report = check_cutoff_window({0.01, frozen::kEps0R20, 5.0});
  CHECK(report.status == WindowStatus::valid);
  CHECK(report.satisfied());
  CHECK(rel_close(report.ratio_low, frozen::kWindowRatioLowR20K10meV, 1e-14));
  CHECK(rel_close(report.ratio_high, frozen::kWindowRatioHighR20K10meV, 1e-14));
}

TEST_CASE("cutoff window flags violations on either side") {
  const double e0 = frozen::kEps0R20;
  const WindowReport low = check_cutoff_window({4.0 * e0, e0, 5.0});
  CHECK(low.status == WindowStatus::below_window);
  CHECK_FALSE(low.satisfied());

  const WindowReport high = check_cutoff_window({2.0, e0, 5.0});
  CHECK(high.status == WindowStatus::above_window);
  CHECK_FALSE(high.satisfied());

  // When both sides fail, the low side is reported first.
  const WindowReport both = check_cutoff_window({1e-30, 1e-30, 5.0});
  CHECK(both.status == WindowStatus::below_window);
}

TEST_CASE("cutoff window rejects non-physical inputs") {
  CHECK_THROWS_AS(check_cutoff_window({-1.0, 1e-4, 5.0}), std::invalid_argument);
  CHECK_THROWS_AS(check_cutoff_window({0.01, 0.0, 5.0}), std::invalid_argument);
  CHECK_THROWS_AS(check_cutoff_window({0.01, 1e-4, 0.5}), std::invalid_argument);
}

TEST_CASE("window status names") {
  CHECK(std::string(to_string(WindowStatus::valid)) == "valid");
  CHECK(std::string(to_string(WindowStatus::below_window)) == "below_window");
  CHECK(std::string(to_string(WindowStatus::above_window)) == "above_window");
}
