#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "dsq/axioms.hpp"
#include "dsq/builders.hpp"
#include "dsq/structure_io.hpp"

using namespace dsq;

namespace {

bool has_violation(const AxiomReport& rep, const std::string& axiom) {
  return std::any_of(rep.violations.begin(), rep.violations.end(),
                     [&](const Violation& v) { return v.axiom == axiom; });
}

bool has_violation_at(const AxiomReport& rep, const std::string& axiom, const std::vector<int>& witness) {
  return std::any_of(rep.violations.begin(), rep.violations.end(),
                     [&](const Violation& v) { return v.axiom == axiom && v.witness == witness; });
}

}  // namespace

TEST_CASE("operation tables reject malformed input") {
  CHECK_THROWS_AS(OperationTable(2, {0, 1, 2, 0}), StructureError);
  CHECK_THROWS_AS(OperationTable(2, {0, 1, 0}), StructureError);
  CHECK_THROWS_AS(OperationTable(0, {}), StructureError);
  OperationTable t(2, {0, 0, 1, 1});
  CHECK(t.at(0, 1) == 0);
  CHECK(t.at(1, 0) == 1);
}

TEST_CASE("group construction verifies the axioms") {
  CHECK_THROWS_AS(Group(2, {0, 1, 1, 1}), StructureError);
  Group z4 = Group::cyclic(4);
  CHECK(z4.identity() == 0);
  CHECK(z4.mul(3, 2) == 1);
  CHECK(z4.inverse(1) == 3);
  Group s3 = Group::symmetric(3);
  CHECK(s3.order() == 6);
  for (int a = 0; a < 6; ++a)
    CHECK(s3.mul(a, s3.inverse(a)) == s3.identity());
}

TEST_CASE("involutive quandle checker on the dihedral, trivial and shifted tables") {
  CHECK(check_involutive_quandle(build_dihedral(5)).passed());
  CHECK(check_involutive_quandle(OperationTable::from_fn(4, [](int x, int) { return x; })).passed());

  auto shifted = OperationTable::from_fn(4, [](int x, int) { return (x + 1) % 4; });
  AxiomReport rep = check_involutive_quandle(shifted);
  CHECK_FALSE(rep.passed());
  CHECK(has_violation_at(rep, "idempotency", {0}));
}

TEST_CASE("z6 structure satisfies every axiom family") {
  auto d = build_z6_example();
  AxiomReport rep = check_disingquandle(d);
  CHECK(rep.passed());
  CHECK(rep.families_checked == 14);
  CHECK(rep.summary() == "PASS (all 14 axiom families)");

  // spot values from the defining formulas
  CHECK(d.r2.at(1, 0) == 3);
  CHECK(d.r1.at(4, 2) == 1);
}

TEST_CASE("singquandle checker on the z6 tables and on broken inputs") {
  auto d = build_z6_example();
  CHECK(check_singquandle(d.op1, d.r1, d.r2).passed());

  // trivial operation with constant R tables: the round-trip axioms fail
  auto triv = OperationTable::from_fn(2, [](int x, int) { return x; });
  auto zero = OperationTable::constant(2, 0);
  AxiomReport rep = check_singquandle(triv, zero, zero);
  CHECK_FALSE(rep.passed());
  CHECK(has_violation_at(rep, "2.2.1", {1, 0}));

  // order mismatch is a structural error
  CHECK_THROWS_AS(check_singquandle(triv, zero, OperationTable::constant(3, 0)), StructureError);

  // a non-quandle op is reported first under the folded family id
  auto shifted = OperationTable::from_fn(2, [](int x, int) { return 1 - x; });
  AxiomReport rep2 = check_singquandle(shifted, zero, zero);
  CHECK_FALSE(rep2.passed());
  CHECK(rep2.violations.front().axiom == "quandle");
}

TEST_CASE("affine B structures over Z7: the exhaustive verdict") {
  // Frozen from tests/oracles/bruteforce_oracle.py: every B passes, including
  // the three singled out for scrutiny.
  for (int b : {2, 4, 5})
    CHECK(check_disingquandle(build_affine_b(7, b)).passed());
  for (int b = 0; b < 7; ++b)
    CHECK(disingquandle_valid(build_affine_b(7, b)));
}

TEST_CASE("affine m structures pass exactly when 3m == 0 mod n") {
  // Frozen from tests/oracles/bruteforce_oracle.py.
  for (int n : {3, 5, 7, 9}) {
    for (int m = 0; m < n; ++m) {
      bool expected = (3 * m) % n == 0;
      CHECK(disingquandle_valid(build_affine_m(n, m)) == expected);
    }
  }
  CHECK(disingquandle_valid(build_affine_m(9, 0)));
  auto d = build_affine_m(9, 0);
  CHECK(d.r1.at(0, 1) == 1);      // R1 = y when m = 0
  CHECK(d.r2.at(1, 0) == 8);      // R2 = -x + 2y
}

TEST_CASE("trivial-operation structures with R = x+y+c fail the round-trip axioms") {
  // Frozen oracle verdict: no n, c makes R1 = R2 = x+y+c valid for n >= 2.
  for (int c : {0, 1}) {
    AxiomReport rep = check_disingquandle(build_trivial_disingquandle(2, c));
    CHECK_FALSE(rep.passed());
    CHECK((has_violation(rep, "2.2.1") || has_violation(rep, "2.2.2")));
  }
  CHECK(disingquandle_valid(build_trivial_disingquandle(1, 0)));  // one element
}

TEST_CASE("strict flag re-adds the literal printed identities") {
  auto d = build_z6_example();
  CheckOptions strict;
  strict.strict_223 = true;
  AxiomReport rep = check_disingquandle(d, strict);
  CHECK_FALSE(rep.passed());  // the literal identities fail even on z6
  CHECK(rep.families_checked == 15);
  CHECK(has_violation(rep, "2.2.1"));
}

TEST_CASE("op-swap symmetry on valid structures") {
  for (const auto& d : {build_z6_example(), build_affine_b(7, 4), build_affine_m(9, 3)}) {
    CHECK(check_disingquandle(d).passed());
    CHECK(check_disingquandle(d.swapped()).passed());
  }
}

TEST_CASE("report soundness: every violation re-evaluates to false at its witness") {
  std::vector<DisingquandleTable> broken;
  broken.push_back(build_trivial_disingquandle(2, 0));
  broken.push_back(build_affine_m(9, 1));
  broken.push_back(build_affine_m(5, 2));
  {
    auto zero = OperationTable::constant(2, 0);
    auto triv = OperationTable::from_fn(2, [](int x, int) { return x; });
    broken.emplace_back("const", triv, triv, zero, zero);
  }
  for (const auto& d : broken) {
    AxiomReport rep = check_disingquandle(d);
    CHECK_FALSE(rep.passed());
    for (const auto& v : rep.violations)
      CHECK_FALSE(axiom_holds_at(d, v));
  }

  auto good = build_z6_example();
  for (const auto& v : check_disingquandle(good).violations)
    CHECK_FALSE(axiom_holds_at(good, v));  // vacuous: no violations
}

TEST_CASE("structure file round trip and parse errors") {
  auto d = build_z6_example();
  std::string text = serialize(d);
  DisingquandleTable back = parse_disingquandle_text(text);
  CHECK(back.same_tables(d));
  CHECK(back.name == d.name);
  CHECK(serialize(back) == text);

  CHECK_THROWS_AS(parse_structure_text(""), ParseError);
  CHECK_THROWS_AS(parse_structure_text("disingquandle x\norder 2\nop1\n0 0\n"), ParseError);
  try {
    parse_structure_text("disingquandle x\norder 2\nop1\n0 0\n9 9\nop2\n0 0\n1 1\nr1\n0 0\n1 1\nr2\n0 0\n1 1\nend\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 5);
  }
}

TEST_CASE("shipped structure files match their builders") {
  const std::string dir = std::string(DSQ_DATA_DIR) + "/structures/";
  CHECK(parse_disingquandle_text(serialize(build_z6_example())).same_tables(build_z6_example()));
  auto z6 = std::get<DisingquandleTable>(load_structure_file(dir + "z6.dsq"));
  CHECK(z6.same_tables(build_z6_example()));
  auto z7b4 = std::get<DisingquandleTable>(load_structure_file(dir + "z7b4.dsq"));
  CHECK(z7b4.same_tables(build_affine_b(7, 4)));
  auto d5id = std::get<DisingquandleTable>(load_structure_file(dir + "d5id.dsq"));
  CHECK(d5id.same_tables(with_identity_pair("d5id", build_dihedral(5))));
  auto triv1 = std::get<DisingquandleTable>(load_structure_file(dir + "triv1.dsq"));
  CHECK(triv1.order() == 1);
  for (const auto& d : {z6, z7b4, d5id, triv1})
    CHECK(check_disingquandle(d).passed());
}

TEST_CASE("gfamily file round trip") {
  auto f = build_trivial_gfamily(Group::cyclic(2), 2);
  std::string text = serialize(f);
  auto parsed = parse_structure_text(text);
  auto* g = std::get_if<GFamily>(&parsed);
  REQUIRE(g != nullptr);
  CHECK(g->group().order() == 2);
  CHECK(g->set_order() == 2);
  CHECK(serialize(*g) == text);
}
