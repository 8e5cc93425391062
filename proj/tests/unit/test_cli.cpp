#include <filesystem>

#include "blockscope/corpus.hpp"
#include "blockscope/runner.hpp"
#include "blockscope/specfile.hpp"
#include "doctest.h"

using namespace blockscope;

namespace {

const std::string kSource = BLOCKSCOPE_SOURCE_DIR;

RunConfig config(const std::string& algebra, int cap = 6) {
  RunConfig c;
  c.algebra = algebra;
  c.cap = cap;
  c.cache = false;
  return c;
}

const char* kBrokenS3 = R"(p=2 e=1
kind=group
order=6
elements: e r r2 s rs r2s
table:
e   r   r2  s   rs  r2s
r   r2  e   rs  r2s s
r2  e   r   r2s s   rs
s   r2s rs  e   r2  r
rs  s   r2s r   e   r2
r2s rs  s   r   r2  e
)";

}  // namespace

TEST_CASE("corpus registry") {
  REQUIRE(corpus().size() == 10);
  for (auto& e : corpus()) {
    HopfAlgebra h = e.build();
    CHECK(h.name() == e.name);
    CHECK(validate_hopf(h).ok());
  }
  CHECK(find_builtin("k(Z/2\xC3\x97Z/2)").name == "k(Z/2xZ/2)@p2");
  CHECK(find_builtin("k[Z/2xZ/3]").name == "k(Z/2xZ/3)@F4");
  CHECK(find_builtin("u(sl2)").name == "u(sl2)@p3");
  CHECK(builtin_algebra("kD8").dim() == 8);
  CHECK_THROWS_AS(find_builtin("kS3"), PreconditionError);
  CHECK_THROWS_AS(find_builtin("kA5@p2"), PreconditionError);
}

TEST_CASE("spec files") {
  const Field& f4 = Field::get(2, 2);
  CHECK(parse_element(f4, "a+1") == f4.from_coeffs({1, 1}));
  CHECK(parse_element(f4, "a^1") == f4.generator());
  CHECK(parse_element(Field::get(3), "5") == 2);
  CHECK_THROWS_AS(parse_element(f4, "a^2"), PreconditionError);
  CHECK_THROWS_AS(parse_element(f4, "b"), PreconditionError);

  HopfAlgebra s3 = load_spec(kSource + "/docs/examples/s3_p2.alg");
  CHECK(s3.dim() == 6);
  REQUIRE(s3.group());
  CHECK_FALSE(s3.group()->is_abelian());
  CHECK(s3.name() == "S3-from-table");

  HopfAlgebra t3 = load_spec(kSource + "/docs/examples/truncated_t3.alg");
  CHECK(t3.fingerprint() == builtin_algebra("k[t]/(t^3)@p3").fingerprint());
  // Isomorphism by regular-representation fingerprint: same Jordan type of t.
  CHECK(rank(t3.left(1)) == 2);

  HopfAlgebra z = load_spec(kSource + "/docs/examples/z2z3_f4.alg");
  CHECK(z.field().size() == 4);

  try {
    parse_spec(kBrokenS3, "broken");
    FAIL("corrupted Cayley table accepted");
  } catch (const SpecError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("group law") != std::string::npos);
  }
  try {
    parse_spec("p=2 e=1\nkind=constants\ndim=1\nmult:\n0 0 0 1\nend\nunit: 1\ncomult:\n0 0 0 1\nend\ncounit: 1\n"
               "antipode:\nend\n",
               "bad");
    FAIL("zero antipode accepted");
  } catch (const SpecError& e) {
    CHECK(std::string(e.what()).find("axiom antipode") != std::string::npos);
  }
  try {
    parse_spec("p=2 e=1\nkind=constants\ndim=1\nmult:\n0 0 0 q\nend\n", "coef");
    FAIL("bad coefficient accepted");
  } catch (const SpecError& e) {
    CHECK(e.line() == 5);
  }
  CHECK_THROWS_AS(parse_spec("kind=group\n", "x"), SpecError);
  CHECK_THROWS_AS(parse_spec("p=2 e=1\nkind=builtin\nbuiltin=kS3@p3\n", "x"), SpecError);
  CHECK_THROWS_AS(parse_spec("p=2 e=1\nkind=builtin\nbuiltin=kS3@p2\nextra\n", "x"), SpecError);
}

TEST_CASE("task runner") {
  RunResult r = run("verify:center", config("kD8@p2"));
  CHECK(r.exit_code == 0);
  CHECK(r.report["verdicts"]["center"]["verdict"] == "pass");
  CHECK(r.report["verdicts"]["center"]["provenance"]["cap"] == 6);

  RunResult same = run("verify:same", config("kS3@p2"));
  CHECK(same.report["verdicts"]["same"]["verdict"] == "pass");
  CHECK(same.report["verdicts"]["same"]["parts"].size() == 2);

  RunResult nil = run("verify:nilpotents", config("u(sl2)@p3", 4));
  CHECK(nil.exit_code == 3);
  CHECK_FALSE(nil.message.empty());

  RunResult eq = run("verify:equiv", config("kD8@p2"));
  CHECK(eq.exit_code == 0);
  CHECK(eq.report["verdicts"]["equiv"]["beta_subgroup"].size() == 2);

  RunResult blocks = run("blocks", config("k(Z/2xZ/3)@F4"));
  CHECK(blocks.report["sections"]["blocks"]["blocks"].size() == 3);

  RunConfig f4 = config("kZ/2@p2");
  f4.field = 4;
  CHECK(run("info", f4).report["algebra"]["field"]["q"] == 4);
  f4.field = 9;
  CHECK_THROWS_AS(run("info", f4), PreconditionError);
  RunConfig bad = config("kZ/2@p2");
  bad.cap = 1;
  CHECK_THROWS_AS(run("info", bad), PreconditionError);
  CHECK_THROWS_AS(run("verify:nothing", config("kZ/2@p2")), PreconditionError);
}

TEST_CASE("determinism, cache and golden diffs") {
  RunConfig c = config("kS3@p2");
  const std::string a = dump_report(run("verify:all", c).report);
  CHECK(a == dump_report(run("verify:all", c).report));

  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "blockscope-unit-cache";
  fs::remove_all(dir);
  RunConfig cached = c;
  cached.cache = true;
  cached.cache_dir = dir.string();
  CHECK(dump_report(run("verify:all", cached).report) == a);
  CHECK(!fs::is_empty(dir));
  CHECK(dump_report(run("verify:all", cached).report) == a);
  fs::remove_all(dir);

  nlohmann::json report = nlohmann::json::parse(a);
  CHECK(compare_golden(report, report).empty());
  nlohmann::json corrupted = report;
  corrupted["verdicts"]["center"]["verdict"] = "fail";
  corrupted["verdicts"].erase("krull");
  corrupted["timing"] = 12.5;
  auto d = compare_golden(report, corrupted);
  REQUIRE(d.size() == 2);
  CHECK(d[0].rfind("~/verdicts/center/verdict", 0) == 0);
  CHECK(d[1] == "+/verdicts/krull");

  // Lowering the cap never turns a pass into a fail.
  RunConfig low = c;
  low.cap = 4;
  nlohmann::json lowered = run("verify:all", low).report;
  for (auto& [name, v] : report["verdicts"].items())
    if (v["verdict"] == "pass") CHECK(lowered["verdicts"][name]["verdict"] != "fail");
}
