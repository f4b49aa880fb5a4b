#include "doctest.h"
#include "padlab/report.hpp"
#include "padlab/suites.hpp"

using namespace padlab;

TEST_CASE("minimal report serializes to the fixed schema") {
  VerificationReport rep;
  rep.check_id = "demo";
  rep.params.p = 5;
  rep.params.precision = 40;
  rep.params.seed = 42;
  rep.finalize();
  std::string js = emit_report(rep, ReportFormat::json);
  CHECK(js.find("\"check_id\": \"demo\"") != std::string::npos);
  CHECK(js.find("\"verdict\": \"pass\"") != std::string::npos);
  CHECK(js.find("\"evidence\": []") != std::string::npos);
  CHECK(js.find("\"timing_ms\": 0") != std::string::npos);
  CHECK(js.find("\"n\": null") != std::string::npos);
  // top-level key order is pinned
  CHECK(js.find("check_id") < js.find("params"));
  CHECK(js.find("params") < js.find("verdict"));
  CHECK(js.find("verdict") < js.find("evidence"));
  CHECK(js.find("evidence") < js.find("timing_ms"));
}

TEST_CASE("violations flip the verdict") {
  VerificationReport rep;
  rep.check_id = "demo";
  rep.add_statement("norm", "p^0", "=", "p^0", "ok row");
  rep.add_violation("norm", "p^-1", "!=", "p^0", "bad row");
  rep.finalize();
  CHECK(rep.verdict == Verdict::fail);
  std::string js = emit_report(rep, ReportFormat::json);
  CHECK(js.find("violation:norm") != std::string::npos);
  std::string txt = emit_report(rep, ReportFormat::text);
  CHECK(txt.find("verdict  fail") != std::string::npos);
}

TEST_CASE("suite registry") {
  SUBCASE("known ids resolve and unknown ids do not") {
    CHECK(find_suite("lemma-3.1") != nullptr);
    CHECK(find_suite("theorem-3.4.i") != nullptr);
    CHECK(find_suite("lemma-9.9") == nullptr);
  }
  SUBCASE("lemma-3.1 runs and passes with reduced sampling") {
    const SuiteInfo* info = find_suite("lemma-3.1");
    SuiteOverrides over;
    over.samples = 5;
    over.precision = 20;
    auto rep = run_suite(*info, over);
    CHECK(rep.verdict == Verdict::pass);
    CHECK(rep.check_id == "lemma-3.1");
    CHECK(rep.params.samples == 5);
    CHECK(rep.timing_ms == 0);
  }
  SUBCASE("lemma-3.5 evidence rows carry exact p^0 statements") {
    const SuiteInfo* info = find_suite("lemma-3.5");
    auto rep = run_suite(*info, SuiteOverrides{});
    REQUIRE(rep.verdict == Verdict::pass);
    bool saw = false;
    for (const auto& row : rep.evidence)
      if (row.kind == "root-distance" && row.relation == "=" &&
          row.rhs_exponent == "p^0")
        saw = true;
    CHECK(saw);
  }
  SUBCASE("byte-identical reruns for a fixed seed") {
    const SuiteInfo* info = find_suite("theorem-3.4.i");
    SuiteOverrides over;
    over.samples = 10;
    over.iters = 10;
    over.seed = 42;
    std::string one = emit_report(run_suite(*info, over), ReportFormat::json);
    std::string two = emit_report(run_suite(*info, over), ReportFormat::json);
    CHECK(one == two);
    CHECK(one.find("\"verdict\": \"pass\"") != std::string::npos);
  }
  SUBCASE("not-representable path: theorem-3.4.ii at a = 3") {
    const SuiteInfo* info = find_suite("theorem-3.4.ii");
    SuiteOverrides over;
    over.a = std::string("3");  // c_pm are not cubes in Q_3 for a = 3
    over.samples = 5;
    over.iters = 5;
    auto rep = run_suite(*info, over);
    CHECK(rep.verdict == Verdict::not_representable);
  }
}

TEST_CASE("every registered suite passes at reduced sampling") {
  for (const SuiteInfo& info : suite_registry()) {
    CAPTURE(info.id);
    SuiteOverrides over;
    over.samples = std::min(info.defaults.samples, 12);
    if (info.id == "lemma-2.2") over.samples = 60;
    auto rep = run_suite(info, over, false);
    CHECK(rep.verdict == Verdict::pass);
  }
}
