// End-to-end checks of the command-line surface: exit codes, file outputs,
// cache behavior, determinism. Each case shells out to the real binary.

#include <doctest.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "franel/csv.hpp"
#include "franel/profile.hpp"
#include "testutil.hpp"

#ifndef FRANEL_CLI_PATH
#error "FRANEL_CLI_PATH must point at the built CLI"
#endif

namespace {

const std::string kCli = FRANEL_CLI_PATH;

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  }
  return lines;
}

}  // namespace

TEST_CASE("usage errors exit 1") {
  testutil::TempDir dir;
  CHECK(testutil::run_cli(kCli, "profile --m 1", dir).exit_code == 1);
  CHECK(testutil::run_cli(kCli, "profile", dir).exit_code == 1);
  CHECK(testutil::run_cli(kCli, "nonsense --m 5", dir).exit_code == 1);
  CHECK(testutil::run_cli(kCli, "ratio --from 10 --to 10 --params 1 1 1 1", dir).exit_code == 1);
  CHECK(testutil::run_cli(kCli, "ratio --from 10 --to 100", dir).exit_code == 1);  // no params
  CHECK(testutil::run_cli(kCli, "verify --max-m 1", dir).exit_code == 1);
  CHECK(testutil::run_cli(kCli, "bumps --m 11", dir).exit_code == 1);
  CHECK(testutil::run_cli(kCli, "profile --m 10 --convention sideways", dir).exit_code == 1);
  CHECK(testutil::run_cli(kCli, "--version", dir).exit_code == 0);
}

TEST_CASE("profile command output matches the library") {
  testutil::TempDir dir;
  const auto out = dir.file("p3.csv");
  const auto run = testutil::run_cli(kCli, "profile --m 3 --output " + out, dir);
  REQUIRE(run.exit_code == 0);

  const auto lines = data_lines(testutil::read_file(out));
  REQUIRE(lines.size() == 3);  // header + two rows
  CHECK(lines[0] == "k,p_value,term_count");
  const auto row2 = franel::split_csv(lines[1]);
  CHECK(row2[0] == "2");
  CHECK(franel::parse_double(row2[1]) == franel::compute_profile(3).p_value(2));
  CHECK(row2[2] == "1");
  const auto row3 = franel::split_csv(lines[2]);
  CHECK(franel::parse_double(row3[1]) == franel::compute_profile(3).p_value(3));
  CHECK(row3[2] == "2");
}

TEST_CASE("profile --terms writes the per-term file with n(50) rows") {
  testutil::TempDir dir;
  const auto terms = dir.file("terms.csv");
  const auto run = testutil::run_cli(
      kCli, "profile --m 50 --output " + dir.file("p.csv") + " --terms --terms-output " + terms,
      dir);
  REQUIRE(run.exit_code == 0);
  const auto lines = data_lines(testutil::read_file(terms));
  CHECK(lines.size() == 1 + 773);  // header + n(50)
  CHECK(lines[0] == "i,num,den,deviation,squared");
}

TEST_CASE("byte-identical reruns") {
  testutil::TempDir dir;
  const auto first = dir.file("a.csv");
  const auto second = dir.file("b.csv");
  REQUIRE(testutil::run_cli(kCli, "profile --m 100 --output " + first, dir).exit_code == 0);
  REQUIRE(testutil::run_cli(kCli, "profile --m 100 --output " + second, dir).exit_code == 0);
  const auto bytes_a = testutil::read_file(first);
  CHECK(!bytes_a.empty());
  CHECK(bytes_a == testutil::read_file(second));
}

TEST_CASE("cache is created, reused, and healed after corruption") {
  testutil::TempDir dir;
  const auto cache_dir = dir.file("cache");
  const auto args = "profile --m 40 --cache-dir " + cache_dir + " --output ";

  REQUIRE(testutil::run_cli(kCli, args + dir.file("one.csv"), dir).exit_code == 0);
  franel::ProfileCache cache(cache_dir);
  const auto entry = cache.path_for(40, franel::IndexConvention::interior);
  REQUIRE(std::filesystem::exists(entry));

  // Corrupt the cached file; the command must recompute and still succeed.
  {
    auto text = testutil::read_file(entry.string());
    const auto pos = text.rfind("0.");
    REQUIRE(pos != std::string::npos);
    text[pos + 2] = text[pos + 2] == '3' ? '4' : '3';
    std::ofstream out(entry, std::ios::binary | std::ios::trunc);
    out << text;
  }
  REQUIRE(testutil::run_cli(kCli, args + dir.file("two.csv"), dir).exit_code == 0);
  CHECK(testutil::read_file(dir.file("one.csv")) == testutil::read_file(dir.file("two.csv")));
}

TEST_CASE("fit, table output, and the ratio pipeline") {
  testutil::TempDir dir;
  const auto table = dir.file("table.csv");
  const auto fits = dir.file("fits.csv");

  auto run = testutil::run_cli(kCli,
                               "fit --prime-set 101 105 --output " + fits +
                                   " --table-output " + table + " --threads 2",
                               dir);
  REQUIRE(run.exit_code == 0);

  const auto fit_lines = data_lines(testutil::read_file(fits));
  CHECK(fit_lines.size() == 1 + 5);  // header + M(101,105)
  CHECK(fit_lines[0] == "m,a,b,k_star,p_at_m,p_at_kstar");

  const auto table_lines = data_lines(testutil::read_file(table));
  REQUIRE(table_lines.size() == 2);
  CHECK(table_lines[0] == "set,s,t,u,v");
  CHECK(table_lines[1].rfind("\"M(101,105)\",", 0) == 0);

  // Feed the table straight into a ratio scan.
  const auto ratio_csv = dir.file("ratio.csv");
  run = testutil::run_cli(kCli,
                          "ratio --from 1e5 --to 1e6 --steps 10 --params-from " + table +
                              " --row M(101,105) --output " + ratio_csv,
                          dir);
  REQUIRE(run.exit_code == 0);
  const auto ratio_lines = data_lines(testutil::read_file(ratio_csv));
  REQUIRE(ratio_lines.size() == 1 + 10);
  CHECK(ratio_lines[0] == "x,ratio");
  CHECK(std::filesystem::exists(ratio_csv + ".gnuplot"));

  // Unknown row name is a usage error.
  CHECK(testutil::run_cli(kCli,
                          "ratio --from 1e5 --to 1e6 --params-from " + table +
                              " --row M(1,2) --output " + dir.file("r2.csv"),
                          dir)
            .exit_code == 1);
}

TEST_CASE("fit --no-compute fails on an empty cache, listing the orders") {
  testutil::TempDir dir;
  const auto run = testutil::run_cli(
      kCli, "fit --prime-set 5 6 --cache-dir " + dir.file("cache") + " --no-compute", dir);
  CHECK(run.exit_code == 2);
  CHECK(run.output.find("11") != std::string::npos);
  CHECK(run.output.find("13") != std::string::npos);
}

TEST_CASE("fit rejects a single-prime set") {
  testutil::TempDir dir;
  CHECK(testutil::run_cli(kCli, "fit --prime-set 101 101", dir).exit_code == 1);
}

TEST_CASE("hull and bumps commands") {
  testutil::TempDir dir;
  const auto hull_csv = dir.file("hull.csv");
  REQUIRE(testutil::run_cli(kCli, "hull --m 10 --output " + hull_csv, dir).exit_code == 0);
  const auto hull_lines = data_lines(testutil::read_file(hull_csv));
  REQUIRE(hull_lines.size() == 1 + 4);
  CHECK(hull_lines[1].rfind("2,", 0) == 0);
  CHECK(hull_lines[4].rfind("7,", 0) == 0);

  const auto bumps_csv = dir.file("bumps.csv");
  REQUIRE(testutil::run_cli(kCli, "bumps --m 50 --output " + bumps_csv, dir).exit_code == 0);
  const auto bump_lines = data_lines(testutil::read_file(bumps_csv));
  REQUIRE(bump_lines.size() > 1);
  CHECK(bump_lines[0] == "k_peak,j,distance,prominence");
  for (std::size_t i = 1; i < bump_lines.size(); ++i) {
    const auto fields = franel::split_csv(bump_lines[i]);
    REQUIRE(fields.size() == 4);
    CHECK(franel::parse_double(fields[2]) <= 3.0);
  }
}

TEST_CASE("verify passes at desk scale") {
  testutil::TempDir dir;
  const auto run = testutil::run_cli(kCli, "verify --max-m 50", dir);
  CHECK(run.exit_code == 0);
  CHECK(run.output.find("[PASS]") != std::string::npos);
  CHECK(run.output.find("[FAIL]") == std::string::npos);
}
