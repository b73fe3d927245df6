#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cli/report_json.hpp"
#include "cli/sweep.hpp"
#include "cli/sweep_config.hpp"
#include "doctest.h"
#include "json.hpp"
#include "lerchsum/cli.hpp"
#include "lerchsum/complex_literal.hpp"
#include "lerchsum/error.hpp"

using lerchsum::Complex;
using lerchsum::format_complex_literal;
using lerchsum::parse_complex_literal;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = lerchsum::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("lerchsum_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("complex literal examples") {
  CHECK(parse_complex_literal("2") == Complex{2.0, 0.0});
  CHECK(parse_complex_literal("0.4+0.8i") == Complex{0.4, 0.8});
  CHECK(parse_complex_literal("-1.1e-1i") == Complex{0.0, -0.11});
  CHECK(parse_complex_literal("1e-3-2E+2i") == Complex{1e-3, -200.0});
  CHECK(parse_complex_literal("-0.2+1.1i") == Complex{-0.2, 1.1});
  for (const char* bad : {"", "i", "1+i", " 1", "1 ", "1e", "0.4+0.8", "0.4+0.8j", "++1", "1+2i3", "nan"}) {
    CAPTURE(bad);
    CHECK_FALSE(parse_complex_literal(bad).has_value());
  }
  CHECK(format_complex_literal({0.4, 0.8}) == "0.4+0.8i");
  CHECK(format_complex_literal({0.0, -0.11}) == "-0.11i");
  CHECK(format_complex_literal({2.0, 0.0}) == "2");
}

TEST_CASE("complex literal print then parse is the identity") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> exponent(-300.0, 300.0);
  std::uniform_real_distribution<double> mantissa(-10.0, 10.0);
  std::bernoulli_distribution zero(0.2);
  for (int i = 0; i < 10000; ++i) {
    const double re = zero(rng) ? 0.0 : mantissa(rng) * std::pow(10.0, exponent(rng));
    const double im = zero(rng) ? 0.0 : mantissa(rng) * std::pow(10.0, exponent(rng));
    const Complex z{re, im};
    const std::string text = format_complex_literal(z);
    const auto back = parse_complex_literal(text);
    REQUIRE(back.has_value());
    REQUIRE(*back == z);
    REQUIRE(format_complex_literal(*back) == text);
  }
}

TEST_CASE("sweep config parsing") {
  const auto config = lerchsum::cli::parse_sweep_config(R"(# comment
identity = "theorem"
tol = 1e-9
parallel = false
mode = "permissive"

[grid]
m = ["0.3+0.5i", "-0.2+1.1i"]   # trailing comment
n = [3,
     5, 7]
q = 1
k = ["0", 1]
a = "2"
)");
  CHECK(config.identity == lerchsum::IdentityId::theorem);
  CHECK(config.tol == 1e-9);
  CHECK_FALSE(config.parallel);
  CHECK(config.mode == lerchsum::ValidationMode::permissive);
  REQUIRE(config.grids.size() == 5);
  CHECK(config.grids[0].first == "n");
  CHECK(config.grids[0].second == std::vector<std::string>{"3", "5", "7"});
  CHECK(config.grids[2].second == std::vector<std::string>{"0", "1"});
  CHECK(config.grids[4].first == "m");
  CHECK(lerchsum::cli::expand_grid(config).size() == 12);
}

TEST_CASE("sweep config defaults and errors") {
  const auto minimal = lerchsum::cli::parse_sweep_config("identity = \"tan_sum\"\n[grid]\nn = 3\nq = 1\nm = 0.4\n");
  CHECK(minimal.tol == 1e-10);
  CHECK(minimal.parallel);
  CHECK(minimal.output_path.empty());

  const char* bad[] = {
      "[grid]\nn = 3\n",
      "identity = \"zeta\"\n",
      "identity = \"catalan\"\ncolour = 1\n[grid]\nn = 3\nq = 1\n",
      "identity = \"catalan\"\n[grid]\nn = 3\n",
      "identity = \"catalan\"\n[grid]\nn = 3.5\nq = 1\n",
      "identity = \"catalan\"\n[grid]\nn = 3\nq = 1\nx = 2\n",
      "identity = \"catalan\"\ntol = 1\n[grid]\nn = 3\nq = 1\n",
      "identity = \"catalan\"\ntol = 1e-20\n[grid]\nn = 3\nq = 1\n",
      "identity = \"tan_sum\"\n[grid]\nn = 3\nq = 1\nm = [\"1+i\"]\n",
      "identity = \"tan_sum\"\n[grid]\nn = 3\nq = 1\nm = []\n",
      "identity = \"tan_sum\"\n[grid]\nn = 3\nn = 5\nq = 1\nm = 1\n",
      "identity = \"tan_sum\"\n[table]\n",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(lerchsum::cli::parse_sweep_config(text), lerchsum::Error);
  }
}

TEST_CASE("3x2x2 theorem sweep gives 12 records and a summary") {
  const auto path = write_temp("grid12.toml", R"(identity = "theorem"
[grid]
n = [3, 5, 7]
q = [1, 2]
k = [0, 1]
a = "2"
m = "0.3+0.5i"
)");
  const auto run = cli({"sweep", path, "--output", "-"});
  CHECK(run.code == 0);
  const auto lines = lines_of(run.out);
  REQUIRE(lines.size() == 13);
  for (const auto& line : lines) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j.at("schema") == lerchsum::cli::kReportSchema);
  }
  const auto first = nlohmann::json::parse(lines.front());
  CHECK(first.at("params").at("n") == "3");
  CHECK(first.at("params").at("k") == "0");
  const auto second = nlohmann::json::parse(lines[1]);
  CHECK(second.at("params").at("k") == "1");
  const auto summary = nlohmann::json::parse(lines.back());
  CHECK(summary.at("record") == "summary");
  CHECK(summary.at("total") == 12);
  CHECK(summary.at("passed") == 12);
  CHECK(summary.at("failed") == 0);
}

TEST_CASE("tangent sum sweep over three primes and ten m values") {
  const auto path = write_temp("tan30.toml", R"(identity = "tan_sum"
[grid]
n = [3, 5, 7]
q = 1
m = [0.05, 0.13, 0.21, 0.29, 0.37, 0.45, 0.53, 0.61, 0.69, 0.77]
)");
  const auto run = cli({"sweep", path, "--output", "-"});
  CHECK(run.code == 0);
  const auto lines = lines_of(run.out);
  REQUIRE(lines.size() == 31);
  const auto summary = nlohmann::json::parse(lines.back());
  CHECK(summary.at("passed") == 30);
}

TEST_CASE("n = 2 points are recorded as known suspect and do not fail the sweep") {
  const auto path = write_temp("suspect.toml", R"(identity = "tan_sum"
[grid]
n = [2, 3]
q = 1
m = 0.7
)");
  const auto run = cli({"sweep", path, "--output", "-"});
  CHECK(run.code == 0);
  const auto lines = lines_of(run.out);
  REQUIRE(lines.size() == 3);
  const auto suspect = nlohmann::json::parse(lines[0]);
  CHECK(suspect.at("status") == "known_suspect");
  CHECK(suspect.at("pass") == false);
  const auto summary = nlohmann::json::parse(lines.back());
  CHECK(summary.at("suspect") == 1);
  CHECK(summary.at("passed") == 1);
}

TEST_CASE("sweep output does not depend on parallelism") {
  const std::string grid = R"(
[grid]
n = [3, 5, 7]
q = [1, 2]
k = [0, 1, -1, "0.5+0.25i"]
a = ["2", "1i"]
m = ["0.3+0.5i", "-0.2+1.1i"]
)";
  const auto serial = cli({"sweep", write_temp("serial.toml", "identity = \"theorem\"\nparallel = false\n" + grid),
                           "--output", "-"});
  const auto parallel = cli({"sweep", write_temp("parallel.toml", "identity = \"theorem\"\nparallel = true\n" + grid),
                             "--output", "-"});
  CHECK(serial.code == 0);
  CHECK(serial.out == parallel.out);
  CHECK(lines_of(serial.out).size() == 3 * 2 * 4 * 2 * 2 + 1);
}

TEST_CASE("sweep writes to the configured file") {
  const auto out_path = (std::filesystem::temp_directory_path() / "lerchsum_test_catalan.jsonl").string();
  const auto path =
      write_temp("catalan.toml", "identity = \"catalan\"\noutput = \"" + out_path + "\"\n[grid]\nn = 3\nq = [1, 2, 3]\n");
  const auto run = cli({"sweep", path});
  CHECK(run.code == 0);
  CHECK(run.out.empty());
  std::ifstream in(out_path);
  std::stringstream text;
  text << in.rdbuf();
  const auto lines = lines_of(text.str());
  REQUIRE(lines.size() == 4);
  CHECK(nlohmann::json::parse(lines[2]).at("status") == "invalid");
  CHECK(nlohmann::json::parse(lines[3]).at("invalid") == 1);
}

TEST_CASE("sweep exit codes") {
  CHECK(cli({"sweep", "/nonexistent/lerchsum.toml"}).code == 2);
  CHECK(cli({"sweep", write_temp("broken.toml", "identity = theorem\n")}).code == 2);
  const auto failing = write_temp("ex4.toml", R"(identity = "product_ex4"
[grid]
n = 3
q = 1
m = "0.4+1.2i"
r = ["0.4+1.2i", "0.1+0.9i"]
)");
  const auto run = cli({"sweep", failing, "--output", "-"});
  CHECK(run.code == 1);
  const auto summary = nlohmann::json::parse(lines_of(run.out).back());
  CHECK(summary.at("passed") == 1);
  CHECK(summary.at("failed") == 1);
}

TEST_CASE("eval") {
  const auto ok = cli({"eval", "--z", "0.5", "--s", "1", "--v", "1"});
  CHECK(ok.code == 0);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j.at("method") == "series");
  CHECK(std::abs(parse_complex_literal(j.at("value").get<std::string>())->real() - 2.0 * std::log(2.0)) < 1e-10);

  const auto single = cli({"eval", "--z", "0", "--s", "2+1i", "--v", "3"});
  CHECK(single.code == 0);
  const Complex value = *parse_complex_literal(nlohmann::json::parse(single.out).at("value").get<std::string>());
  CHECK(std::abs(value - std::exp(-Complex{2.0, 1.0} * std::log(3.0))) < 1e-15);

  const auto domain = cli({"eval", "--z", "1.5", "--s", "2", "--v", "1"});
  CHECK(domain.code == 2);
  CHECK(domain.out.empty());
  CHECK(domain.err.find("domain") != std::string::npos);
  CHECK(std::count(domain.err.begin(), domain.err.end(), '\n') == 1);

  CHECK(cli({"eval", "--z", "1+i", "--s", "2", "--v", "1"}).code == 2);
  CHECK(cli({"eval", "--z", "0.5", "--s", "2"}).code == 2);
  CHECK(cli({"eval", "--z=-0.5", "--s", "2", "--v", "1"}).code == 0);
}

TEST_CASE("verify") {
  const auto tan = cli({"verify", "--identity", "tan_sum", "--n", "5", "--q", "1", "--m", "0.4", "--tol", "1e-10"});
  CHECK(tan.code == 0);
  CHECK(nlohmann::json::parse(tan.out).at("pass") == true);

  const auto catalan = cli({"verify", "--identity", "catalan", "--n", "3", "--q", "1", "--tol", "1e-8"});
  CHECK(catalan.code == 0);
  const auto report = nlohmann::json::parse(catalan.out);
  CHECK(std::abs(parse_complex_literal(report.at("lhs").get<std::string>())->real() - 3.6638623767) < 1e-9);
  CHECK(report.at("tol") == 1e-8);

  const auto composite = cli({"verify", "--identity", "theorem", "--n", "6", "--q", "1", "--k", "0", "--a", "2", "--m",
                              "0.4+0.8i"});
  CHECK(composite.code == 2);
  CHECK(nlohmann::json::parse(composite.out).at("pass") == false);
  CHECK(composite.err.find("n not prime") != std::string::npos);

  const auto recurrence = cli({"verify", "--identity", "recurrence", "--zz", "0.5", "--s", "2", "--aa", "1", "--q", "1"});
  CHECK(recurrence.code == 0);
  CHECK(nlohmann::json::parse(recurrence.out).at("tol") == 1e-8);

  const auto off_locus = cli({"verify", "--identity", "product_ex4", "--n", "3", "--q", "1", "--m", "0.4+1.2i", "--r",
                              "0.1+0.9i"});
  CHECK(off_locus.code == 1);

  const auto suspect = cli({"verify", "--identity", "tan_sum", "--n", "2", "--q", "1", "--m", "0.7"});
  CHECK(suspect.code == 1);
  CHECK(nlohmann::json::parse(suspect.out).at("status") == "known_suspect");

  CHECK(cli({"verify", "--identity", "tan_sum", "--n", "5", "--q", "1"}).code == 2);
  CHECK(cli({"verify", "--identity", "tan_sum", "--n", "5", "--q", "1", "--m", "0.4", "--x", "1"}).code == 2);
  CHECK(cli({"verify", "--identity", "zeta", "--n", "5"}).code == 2);
  CHECK(cli({"verify", "--identity", "catalan", "--n", "five", "--q", "1"}).code == 2);
}

TEST_CASE("usage") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  const auto help = cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("verify") != std::string::npos);
}
