#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "oracles.hpp"
#include "xraypent/cache.hpp"

namespace fs = std::filesystem;
using xraypent::cli::ExitCode;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = xraypent::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

const fs::path& cache_dir() {
  static const fs::path dir = oracle::temp_dir("cli_cache");
  return dir;
}

std::string file(const fs::path& dir, const std::string& name, const std::string& body) {
  const auto p = dir / name;
  xraypent::atomic_write(p, body);
  return p.string();
}

}  // namespace

TEST_CASE("usage errors and help") {
  CHECK(run({}).code == ExitCode::kUsage);
  auto help = run({"--help"});
  CHECK(help.code == ExitCode::kOk);
  for (const char* sub : {"verify-system", "eliminate", "resultant", "trace", "solve", "symmetral", "compare",
                          "triangle-demo"}) {
    CHECK(contains(help.out, sub));
    CHECK(run({sub, "--help"}).code == ExitCode::kOk);
  }
  CHECK(run({"frobnicate"}).code == ExitCode::kUsage);
  CHECK(run({"eliminate", "--stage", "zw", "--bogus"}).code == ExitCode::kUsage);
  CHECK(run({"eliminate"}).code == ExitCode::kUsage);
  CHECK(run({"eliminate", "--stage", "q"}).code == ExitCode::kUsage);
  CHECK(run({"verify-system", "--samples", "0"}).code == ExitCode::kUsage);
  CHECK(run({"verify-system", "--samples", "many"}).code == ExitCode::kUsage);

  const auto bad = run({"solve", "--x", "2/5", "--y", "not-a-number"});
  CHECK(bad.code == ExitCode::kUsage);
  CHECK(bad.out.empty());
  CHECK(contains(bad.err, "--y"));
  CHECK(run({"solve", "--x", "1/0", "--y", "1"}).code == ExitCode::kUsage);
  CHECK(run({"solve", "--x", "1/2", "--y", "1/2", "--tol", "-1"}).code == ExitCode::kUsage);
}

TEST_CASE("eliminate matches the goldens") {
  const auto zw = run({"eliminate", "--stage", "zw"});
  CHECK(zw.code == ExitCode::kOk);
  CHECK(zw.out == oracle::read_data("eliminants_zw.txt"));
  const auto v = run({"eliminate", "--stage", "v"});
  CHECK(v.out == oracle::read_data("eliminants_v.txt"));

  const auto dir = oracle::temp_dir("cli_eliminate");
  const auto path = (dir / "sub" / "v.txt").string();
  CHECK(run({"eliminate", "--stage", "v", "--out", path}).code == ExitCode::kOk);
  CHECK(xraypent::read_file(path).value() == v.out);
  fs::remove_all(dir);
}

TEST_CASE("resultant and its cache") {
  const std::string cache = cache_dir().string();
  const auto r = run({"--cache", cache, "resultant"});
  CHECK(r.code == ExitCode::kOk);
  CHECK(r.out == oracle::read_data("final_resultant.poly"));
  CHECK(fs::exists(cache_dir() / "final_resultant.poly"));
  CHECK(run({"--cache", cache, "resultant"}).out == r.out);
  CHECK(run({"--cache", cache, "resultant", "--backend", "nope"}).code == ExitCode::kUsage);

  const auto lead = run({"--cache", cache, "resultant", "--check-leading"});
  CHECK(contains(lead.out, "coefficient of x^42*y^34: "));
  const bool pass = contains(lead.out, "PASS: |coefficient| == 268435456");
  CHECK((pass || contains(lead.out, "FAIL: |coefficient| != 268435456")));
  CHECK(lead.code == (pass ? ExitCode::kOk : ExitCode::kVerificationFailed));
  CHECK(contains(lead.out, "leading term lex(x>y): "));
  CHECK(contains(lead.out, "leading term grlex(x>y): "));
}

TEST_CASE("trace output") {
  const std::string cache = cache_dir().string();
  const auto a = run({"--cache", cache, "trace", "--grid", "48"});
  CHECK(a.code == ExitCode::kOk);
  CHECK(a.out.rfind("x,y,residual\n", 0) == 0);
  CHECK(contains(a.err, "curve points"));
  CHECK(run({"--cache", cache, "trace", "--grid", "48", "--workers", "3"}).out == a.out);

  const auto dir = oracle::temp_dir("cli_trace");
  const auto csv = (dir / "p.csv").string(), svg = (dir / "c.svg").string();
  const auto b = run({"--cache", cache, "trace", "--grid", "48", "--out", csv, "--svg", svg});
  CHECK(b.code == ExitCode::kOk);
  CHECK(b.out.empty());
  CHECK(xraypent::read_file(csv).value() == a.out);
  CHECK(contains(xraypent::read_file(svg).value(), "<svg"));
  fs::remove_all(dir);

  CHECK(run({"--cache", cache, "trace", "--grid", "1"}).code == ExitCode::kUsage);
  CHECK(run({"--cache", cache, "trace", "--domain", "0,1,0"}).code == ExitCode::kUsage);
  CHECK(run({"--cache", cache, "trace", "--domain", "1,0,0,1"}).code == ExitCode::kUsage);
  CHECK(run({"--cache", cache, "trace", "--domain", "0,1,0,1x"}).code == ExitCode::kUsage);
}

TEST_CASE("solve") {
  const auto far = run({"solve", "--x", "9/10", "--y", "9/10"});
  CHECK(far.code == ExitCode::kOk);
  CHECK(contains(far.out, "point: x = 9/10, y = 9/10"));
  CHECK(contains(far.out, "tuples: 0"));

  // a point on the traced curve
  const auto traced = run({"--cache", cache_dir().string(), "trace", "--grid", "16"}).out;
  std::istringstream in(traced);
  std::string header, line;
  std::getline(in, header);
  REQUIRE(std::getline(in, line));
  const auto c1 = line.find(','), c2 = line.find(',', c1 + 1);
  const double x = std::stod(line.substr(0, c1)), y = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
  const auto xr = xraypent::format_rational(xraypent::Rational(x));
  const auto yr = xraypent::format_rational(xraypent::Rational(y));
  const auto on = run({"solve", "--x", xr, "--y", yr});
  CHECK(on.code == ExitCode::kOk);
  CHECK_FALSE(contains(on.out, "tuples: 0"));
  CHECK(contains(on.out, "tuple 1: u="));
  CHECK(contains(on.out, "side margins: 1-v="));
}

TEST_CASE("symmetral and compare") {
  const auto dir = oracle::temp_dir("cli_geom");
  const auto tri = file(dir, "tri.txt", "# corner triangle\n0 0\n1 0\n0 1\n");
  const auto sq = file(dir, "sq.txt", "0 0\n0 1\n1 1\n1 0\n");
  const auto bad = file(dir, "bad.txt", "0 0\n2 0\n1 1\n2 2\n0 2\n");

  const auto s = run({"symmetral", "--polygon", tri, "--dir", "1,0"});
  CHECK(s.code == ExitCode::kOk);
  const auto sym = file(dir, "sym.txt", s.out);
  const auto tent = xraypent::validate_polygon(xraypent::parse_polygon(s.out));
  CHECK(tent == xraypent::validate_polygon(xraypent::parse_polygon("-1/2 0\n1/2 0\n0 1\n")));

  const auto c = run({"compare", "--a", tri, "--b", sym, "--dirs", "1,0;0,1"});
  CHECK(c.code == ExitCode::kOk);
  CHECK(c.out == "1,0: equal\n0,1: different\nx-ray equivalent: no\n");
  CHECK(run({"compare", "--a", tri, "--b", sym, "--dirs", "1,0"}).out == "1,0: equal\nx-ray equivalent: yes\n");
  CHECK(contains(run({"compare", "--a", sq, "--b", tri, "--dirs", "1,0"}).out, "different"));

  CHECK(run({"symmetral", "--polygon", bad, "--dir", "1,0"}).code == ExitCode::kUsage);
  CHECK(run({"symmetral", "--polygon", (dir / "missing.txt").string(), "--dir", "1,0"}).code == ExitCode::kUsage);
  CHECK(run({"symmetral", "--polygon", tri, "--dir", "0,0"}).code == ExitCode::kUsage);
  CHECK(run({"symmetral", "--polygon", tri, "--dir", "1"}).code == ExitCode::kUsage);
  CHECK(run({"compare", "--a", tri, "--b", sq, "--dirs", ";"}).code == ExitCode::kUsage);
  fs::remove_all(dir);
}

TEST_CASE("triangle demo") {
  const auto a = run({"triangle-demo", "--seed", "3"});
  CHECK(a.code == ExitCode::kOk);
  CHECK(contains(a.out, "congruent: no"));
  CHECK(contains(a.out, "PASS"));
  CHECK(run({"triangle-demo", "--seed", "3"}).out == a.out);
}

TEST_CASE("verify-system reports a table") {
  const auto r = run({"verify-system", "--samples", "2", "--seed", "1"});
  CHECK(contains(r.out, "stage claimed computed"));
  for (const char* label : {"Q1", "Q2", "Q3", "R1", "R2"}) CHECK(contains(r.out, label));
  const bool pass = contains(r.out, "result: PASS");
  CHECK((pass || contains(r.out, "result: FAIL")));
  CHECK(r.code == (pass ? ExitCode::kOk : ExitCode::kVerificationFailed));
}
