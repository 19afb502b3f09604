#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "montype/cli.hpp"
#include "montype/error.hpp"
#include "montype/report.hpp"
#include "montype/text_io.hpp"

using namespace montype;

namespace {

std::string parse_error(std::string_view text) {
  try {
    parse_input(text);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    return e.what();
  }
  FAIL("expected a parse error");
  return {};
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(RunConfig config) {
  std::ostringstream out, err;
  const int code = run(config, out, err);
  return {code, out.str(), err.str()};
}

RunConfig config_for(const std::string& command, const std::string& fixture = "") {
  RunConfig c;
  c.command = command;
  if (!fixture.empty()) c.input = std::string(FIXTURE_DIR) + "/" + fixture;
  return c;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("ideal text") {
    const auto p = parse_input("# comment\nx1*x2*x3\n\nx3*x6*x7  # trailing\n");
    CHECK(p.kind == InputKind::Ideal);
    CHECK(p.ideal.size() == 2);
    CHECK(p.ideal.ambient() == 7);
    CHECK(p.complex[1] == VertexSet{3, 6, 7});
    CHECK(parse_ideal(p.ideal.to_string()) == p.ideal);
  }

  TEST_CASE("complex text") {
    const auto p = parse_input("{1,2}\n2 3\n{ 3, 1 }\n");
    CHECK(p.kind == InputKind::Complex);
    CHECK(p.complex.size() == 3);
    CHECK(p.complex[2] == VertexSet{1, 3});
    CHECK(p.ideal.to_string() == "x1*x2\nx2*x3\nx1*x3\n");
    CHECK(p.patches.empty());

    const auto patched = testing::fixture("ex65_patched.cmplx");
    CHECK(patched.base.size() == 4);
    CHECK(patched.complex.size() == 5);
    CHECK(format_patch(patched.patches[0]) == "patch {3,8,9} covers 2 3");
  }

  TEST_CASE("parse errors name the line") {
    CHECK(parse_error("x1*x2\nx2*y3\n").find("line 2") != std::string::npos);
    CHECK(parse_error("{1,2}\n{2,x}\n").find("line 2") != std::string::npos);
    CHECK(parse_error("{1,2}\npatch {3} covers 1\n").find("line 2") != std::string::npos);
    CHECK(parse_error("patch {3} covers 1 2\n{1,2}\n").find("line 1") != std::string::npos);
    CHECK_THROWS_AS(parse_input("x1^2\n"), Error);
    CHECK_THROWS_AS(parse_input("# nothing\n"), Error);
    CHECK(parse_error("{1,2}\nx1*x2\n").find("line 2") != std::string::npos);
    CHECK_THROWS_AS(read_input("/nonexistent/file.ideal"), Error);
  }

  TEST_CASE("classify report round-trips") {
    for (const char* name : {"ex42.ideal", "ex63.cmplx", "ex64_leaf.cmplx", "ex65.cmplx", "ex65_patched.cmplx",
                             "ex65_tilde_patched.cmplx", "gamma.ideal", "cycle5.ideal"}) {
      const auto r = classify_report(testing::fixture(name));
      const auto j = to_json(r);
      CHECK(classify_report_from_json(j) == r);
      CHECK(classify_report_from_json(json::parse(j.dump())) == r);
      CHECK_FALSE(to_text(r).empty());
    }
    const auto ex63 = classify_report(testing::fixture("ex63.cmplx"));
    REQUIRE(ex63.villarreal);
    CHECK(to_text(ex63).find("Villarreal: yes; peeled good leaves F6; odd simplicial cycle F1 F2 F3 F4 F5 (length 5)") !=
          std::string::npos);
    const auto square = classify_report(testing::fixture("ex42.ideal"));
    REQUIRE(square.deletion_map);
    CHECK(square.deletion_map->deleted == std::vector<Var>{1, 4, 6});
    CHECK(square.cycle_kind == CycleKind::SimplicialCycle);
    const auto gamma = classify_report(testing::fixture("gamma.ideal"));
    CHECK(gamma.leaf_order.has_value());
    CHECK_FALSE(gamma.good_leaf_order.has_value());
  }

  TEST_CASE("other reports round-trip") {
    const auto c = testing::fixture("ex64.cmplx").complex;
    for (auto mode : {CycleMode::Special, CycleMode::Berge}) {
      const auto r = cycle_report(c, mode, 5);
      CHECK(cycle_report_from_json(json::parse(to_json(r, c).dump())) == r);
    }
    for (const char* name : {"ex42.ideal", "cycle5.ideal"}) {
      const auto ideal = testing::fixture(name).ideal;
      const auto cert = verify_linear_type(ideal, 3);
      CHECK(certificate_from_json(json::parse(to_json(cert).dump())) == cert);
      const auto rr = rees_report(ideal, 3, true, {});
      CHECK(rees_report_from_json(json::parse(to_json(rr).dump())) == rr);
      const auto bare = rees_report(ideal, 3, false, {});
      CHECK_FALSE(bare.groebner_basis);
      CHECK(rees_report_from_json(to_json(bare)) == bare);
    }
    ScanConfig sc;
    sc.length = 4;
    sc.patches = 1;
    sc.trials = 2;
    sc.seed = 5;
    const auto scan = conjecture_scan(sc);
    CHECK(scan_report_from_json(json::parse(to_json(scan).dump())) == scan);
  }

  TEST_CASE("certificate json fields") {
    const auto j = to_json(verify_linear_type(testing::fixture("ex42.ideal").ideal, 3));
    CHECK(j["verdict"] == "NotLinearType");
    CHECK(j["witness"]["degree"] == 2);
    CHECK(j["witness"]["element"] == "-x1*T2*T4 +x4*T1*T3");
    CHECK(j.contains("stats"));
  }

  TEST_CASE("run: outputs and exit codes") {
    auto lt = config_for("linear-type", "ex42.ideal");
    lt.max_degree = 3;
    const auto a = run_cli(lt);
    CHECK(a.code == ExitOk);
    CHECK(a.out.find("NotLinearType") != std::string::npos);

    lt.json = true;
    const auto b = run_cli(lt);
    CHECK(b.code == ExitOk);
    CHECK(json::parse(b.out)["verdict"] == "NotLinearType");
    CHECK(run_cli(lt).out == b.out);

    auto cy = config_for("cycles", "ex64.cmplx");
    cy.max_length = 5;
    CHECK(run_cli(cy).out.find("[5] 1,{1,2},2,{2,3,7},3,{3,4,8},4,{4,5,6,7},5,{1,5,9},1") != std::string::npos);

    auto rees = config_for("rees", "cycle3.ideal");
    rees.emit_groebner = true;
    CHECK(run_cli(rees).out.find("+x1*T2 -x3*T1") != std::string::npos);

    auto small = config_for("linear-type", "cycle7.ideal");
    small.max_degree = 5;
    small.budget.max_terms = 3;
    const auto limited = run_cli(small);
    CHECK(limited.code == ExitResourceLimit);
    CHECK(limited.err.find("ResourceLimit") != std::string::npos);

    auto k1 = config_for("linear-type", "cycle3.ideal");
    k1.max_degree = 1;
    CHECK(run_cli(k1).code == ExitPrecondition);

    CHECK(run_cli(config_for("classify", "missing.ideal")).code == ExitPrecondition);
    CHECK(run_cli(config_for("frobnicate", "cycle3.ideal")).code == ExitPrecondition);

    auto scan = config_for("conjecture");
    scan.length = 5;
    scan.trials = 2;
    scan.seed = 9;
    scan.json = true;
    const auto s1 = run_cli(scan);
    CHECK(s1.code == ExitOk);
    scan.threads = 3;
    CHECK(run_cli(scan).out == s1.out);
  }
}
