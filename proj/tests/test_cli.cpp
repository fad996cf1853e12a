#include <doctest.h>

#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "pv/cli.hpp"
#include "pv/errors.hpp"

using namespace pvtest;

namespace {

std::string read(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ErrorKind parse_failure(const std::string& text) {
  try {
    parse_spec(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected a parse failure");
  return ErrorKind::Inconclusive;
}

std::string random_entry(Gen& g) {
  static const std::vector<std::string> pool{"0", "1", "-1", "t", "1/t", "2/(t+1)", "t^2-3", "1/(2*t)"};
  return pool[static_cast<std::size_t>(g.integer(0, static_cast<long>(pool.size()) - 1))];
}

}  // namespace

TEST_CASE("spec documents parse with defaults") {
  const auto s = parse_spec(R"({"setting": {"kind": "differential"}, "matrix": [["1"]]})");
  CHECK(s.rank() == 1);
  CHECK(s.bounds.degree == 8);
  CHECK(s.bounds.samples == 25);
  CHECK(s.bounds.seed == 0);
  CHECK_FALSE(s.ideal);
  CHECK(default_stages(s) == std::vector<Stage>{Stage::Universal, Stage::PV, Stage::Hopf, Stage::Group});

  CHECK(parse_failure(R"({"setting": {"kind": "difference"}, "matrix": [["0"]]})") == ErrorKind::NotDualizable);
  CHECK(parse_failure(R"({"setting": {"kind": "differential"}, "matrix": [["1//t"]]})") == ErrorKind::ParseError);
  CHECK(parse_failure(R"({"setting": {"kind": "differential"}, "matrix": [["1", "0"]]})") == ErrorKind::ParseError);
  CHECK(parse_failure(R"({"setting": {"kind": "sideways"}, "matrix": [["1"]]})") == ErrorKind::ParseError);
  CHECK(parse_failure(R"({"setting": {"kind": "differential"}, "matrix": [["1"]], "bounds": {"degree": 0}})") ==
        ErrorKind::ParseError);
  CHECK(parse_failure(R"({"setting": {"kind": "differential"}, "matrix": [["1"]], "ideal": ["y1"]})") ==
        ErrorKind::ParseError);
  CHECK(parse_failure(R"({"setting": {"kind": "differential"}, "matrix": [["1"]], "colour": 1})") ==
        ErrorKind::ParseError);
  CHECK(parse_failure(R"({"setting": {"kind": "differential"}, "matrix": [["1"]],
                          "constants_extension": {"generator": "i", "min_poly": "i^2-1"}})") ==
        ErrorKind::NotAFieldExtension);
  try {
    parse_spec("{\"setting\": {\"kind\": \"differential\"},\n \"matrix\": [[\"1\"]],}");
    FAIL("expected a parse failure");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  try {
    parse_spec(R"({"setting": {"kind": "differential"}, "matrix": [["0", "1"], ["t", "1/(t"]]})");
    FAIL("expected a parse failure");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("matrix[1][1]") != std::string::npos);
  }
}

TEST_CASE("spec round trip through serialization") {
  Gen g(11);
  for (int trial = 0; trial < 30; ++trial) {
    SpecDocument s;
    s.name = "random-" + std::to_string(trial);
    s.kind = trial % 2 ? SettingKind::Difference : SettingKind::Differential;
    const auto n = static_cast<std::size_t>(g.integer(1, 3));
    s.matrix.assign(n, std::vector<std::string>(n));
    for (auto& row : s.matrix)
      for (auto& e : row) e = random_entry(g);
    if (s.kind == SettingKind::Difference)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s.matrix[i][j] = i == j ? "t+" + std::to_string(i + 1) : (i < j ? "1" : "0");
    if (g.integer(0, 1)) s.ideal = std::vector<std::string>{"x11-1", "d*x11-t"};
    if (g.integer(0, 1)) s.subring = std::vector<std::string>{"x11^2"};
    if (g.integer(0, 1)) s.subhopf = std::vector<std::string>{"w^2"};
    s.bounds = Bounds{static_cast<int>(g.integer(1, 9)), static_cast<int>(g.integer(1, 40)),
                      static_cast<std::uint64_t>(g.integer(0, 1000))};
    if (g.integer(0, 1)) s.simplicity_degree = static_cast<int>(g.integer(1, 4));
    if (g.integer(0, 1)) s.constants_extension = ConstantsExtension{"a", "a^2-2"};
    if (g.integer(0, 1)) s.subring_module = std::vector<std::vector<std::string>>{{"2"}};
    CAPTURE(trial);
    const std::string text = serialize_spec(s);
    const SpecDocument back = parse_spec(text);
    CHECK(back == s);
    CHECK(serialize_spec(back) == text);
  }
}

TEST_CASE("the catalog") {
  const auto& c = catalog();
  REQUIRE(c.size() == 6);
  const std::vector<std::string> names{"exp", "log", "sqrt", "sqrt-neg", "circle", "difference-sign"};
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(c[i].name == names[i]);
    CHECK(parse_spec(serialize_spec(c[i])) == c[i]);
    CHECK(parse_spec(read(std::string(PV_SOURCE_DIR) + "/specs/" + names[i] + ".json")) == c[i]);
  }
}

TEST_CASE("pipeline verdicts") {
  const auto& c = catalog();
  const auto exp = run_pipeline(c[0], default_stages(c[0]));
  CHECK(exp.passed);
  CHECK(exp.document["stages"]["group"]["name"] == "multiplicative group");
  CHECK(summarize(exp.document).find("multiplicative group") != std::string::npos);
  const auto log = run_pipeline(c[1], default_stages(c[1]));
  CHECK(log.passed);
  CHECK(log.document["stages"]["group"]["name"] == "additive group");

  SpecDocument sq = c[2];
  sq.ideal.reset();
  try {
    run_pipeline(sq, {Stage::Universal, Stage::Quotient});
    FAIL("expected StageOrderError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::StageOrderError);
  }
  CHECK_THROWS_AS(run_pipeline(c[0], {Stage::Hopf}), Error);
  CHECK_THROWS_AS(run_pipeline(c[1], {Stage::Universal, Stage::PV}), Error);

  // Without its ideal the sqrt module's universal ring has too many constants.
  const auto u = run_pipeline(sq, default_stages(sq));
  CHECK_FALSE(u.passed);
  CHECK(u.document["stages"]["pv"]["status"] == "fail");
  CHECK(u.document["stages"]["hopf"]["status"] == "not run");

  // A stable ideal that is not maximal: the pipeline reports the refutation and halts.
  SpecDocument nonsimple = c[1];
  nonsimple.ideal = std::vector<std::string>{"x21", "x22-1"};
  const auto ns = run_pipeline(nonsimple, default_stages(nonsimple));
  CHECK_FALSE(ns.passed);
  CHECK(ns.document["stages"]["pv"]["simplicity"]["status"] == "refuted");
  CHECK(ns.document["stages"]["pv"]["simplicity"]["witness"] == "x11-1");

  SpecDocument unstable = c[0];
  unstable.ideal = std::vector<std::string>{"x11-1"};
  const auto us = run_pipeline(unstable, default_stages(unstable));
  CHECK(us.document["stages"]["quotient"]["status"] == "error");
  CHECK(us.document["stages"]["quotient"]["error"] == "NotCIdeal");
  CHECK(us.document["stages"]["pv"]["status"] == "not run");

  const auto rebased = parse_spec(read(std::string(PV_SOURCE_DIR) + "/specs/circle-rebased.json"));
  const auto r = run_pipeline(rebased, default_stages(rebased));
  CHECK(r.passed);
  CHECK(r.document["stages"]["group"]["name"] == "multiplicative group");
}

TEST_CASE("golden reports are byte-stable") {
  for (const auto& s : catalog()) {
    CAPTURE(s.name);
    const auto first = run_pipeline(s, default_stages(s)).text();
    const auto second = run_pipeline(s, default_stages(s)).text();
    CHECK(first == second);
    CHECK(first == read(std::string(PV_SOURCE_DIR) + "/tests/golden/" + s.name + ".json"));
  }
}

TEST_CASE("golden constants agree with the dense oracle") {
  const std::vector<Example> xs{exp_example(),      log_example(),    sqrt_example(),
                                sqrt_neg_example(), circle_example(), sign_example()};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const auto golden = Json::parse(read(std::string(PV_SOURCE_DIR) + "/tests/golden/" + catalog()[i].name + ".json"));
    CAPTURE(catalog()[i].name);
    const auto& basis = golden["stages"]["pv"]["constants"]["basis"];
    CHECK(basis.size() == oracle::algebra_constants_dimension(xs[i].ring.algebra, 8));
    CHECK(golden["stages"]["pv"]["constants"]["equals_k"] == true);
  }
}
