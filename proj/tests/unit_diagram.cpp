#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>

#include "dsq/diagram.hpp"
#include "dsq/structure_io.hpp"

using namespace dsq;

namespace {

const std::string kLinks = std::string(DSQ_DATA_DIR) + "/links/";

std::vector<std::string> corpus_files() {
  std::vector<std::string> files;
  for (const auto& e : std::filesystem::directory_iterator(kLinks))
    if (e.path().extension() == ".lnk")
      files.push_back(e.path().string());
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace

TEST_CASE("the L1 encoding parses to the documented shape") {
  Diagram d = load_diagram_file(kLinks + "L1.lnk");
  CHECK(d.name == "L1");
  CHECK(d.arcs.size() == 4);
  CHECK(d.singular.size() == 2);
  CHECK(d.classical.empty());
  REQUIRE(d.components.size() == 2);
  CHECK(d.components[0].second == 1);
  CHECK(d.components[1].second == 2);
  CHECK(validate_diagram(d).ok());
}

TEST_CASE("every shipped corpus file parses, validates and round-trips") {
  auto files = corpus_files();
  CHECK(files.size() >= 14);
  for (const auto& f : files) {
    CAPTURE(f);
    Diagram d = load_diagram_file(f);
    CHECK(validate_diagram(d).ok());
    Diagram again = parse_diagram_text(serialize(d));
    CHECK(again == d);
  }
}

TEST_CASE("a zero-crossing one-component file yields a free loop") {
  Diagram d = parse_diagram_text("link u\ncomponent c label 1\narc a component c\nloop c\nend\n");
  CHECK(d.loops == std::vector<std::string>{"c"});
  CHECK(d.arcs.size() == 1);
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_diagram_text("link bad\ncomponent c label 1\narc a component c\nxc a a nope\nend\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 4);
  }
  CHECK_THROWS_AS(parse_diagram_text("link bad\ncomponent c label 3\nend\n"), ParseError);
  CHECK_THROWS_AS(parse_diagram_text("link bad\ncomponent c label 1\narc a component d\nend\n"), ParseError);
}

TEST_CASE("validation catches structural damage") {
  // an arc used three times in terminating slots
  Diagram d;
  d.name = "broken";
  d.components = {{"c", 1}};
  d.arcs = {{"a", "c"}, {"b", "c"}};
  d.classical = {{"a", "a", "b"}, {"a", "b", "b"}, {"b", "a", "a"}};
  ValidationReport rep = validate_diagram(d);
  CHECK_FALSE(rep.ok());
  bool found = false;
  for (const auto& i : rep.issues)
    found = found || i.code == "arc-ends";
  CHECK(found);

  // a strand cycle spanning two components
  Diagram m;
  m.name = "mixed";
  m.components = {{"c1", 1}, {"c2", 2}};
  m.arcs = {{"a", "c1"}, {"b", "c2"}};
  m.classical = {{"a", "a", "b"}, {"b", "b", "a"}};
  ValidationReport rep2 = validate_diagram(m);
  CHECK_FALSE(rep2.ok());
  found = false;
  for (const auto& i : rep2.issues)
    found = found || i.code == "trace-mixed-components";
  CHECK(found);
}

TEST_CASE("kink on a free loop produces the one-crossing diagram") {
  Diagram u = load_diagram_file(kLinks + "unknot1.lnk");
  Diagram k = apply_kink(u, "a");
  CHECK(k.loops.empty());
  CHECK(k.arcs.size() == 1);
  REQUIRE(k.classical.size() == 1);
  CHECK(k.classical[0] == ClassicalCrossing{"a", "a", "a"});
  CHECK(validate_diagram(k).ok());
}

TEST_CASE("kink splits a used arc in two") {
  Diagram d = load_diagram_file(kLinks + "L1.lnk");
  Diagram k = apply_kink(d, "x");
  CHECK(k.arcs.size() == 5);
  CHECK(validate_diagram(k).ok());
  CHECK(k.classical.size() == 1);
  // kinking twice still validates
  CHECK(validate_diagram(apply_kink(k, "x")).ok());
  CHECK_THROWS_AS(apply_kink(d, "nope"), StructureError);
}

TEST_CASE("poke pushes one arc under another") {
  Diagram d = load_diagram_file(kLinks + "L2.lnk");
  Diagram p = apply_poke(d, "x", "y");
  CHECK(p.arcs.size() == d.arcs.size() + 2);
  CHECK(p.classical.size() == d.classical.size() + 2);
  CHECK(validate_diagram(p).ok());
  CHECK_THROWS_AS(apply_poke(d, "x", "x"), StructureError);

  Diagram u = load_diagram_file(kLinks + "hopf.lnk");
  Diagram q = apply_poke(u, "a", "b");
  CHECK(validate_diagram(q).ok());

  // poking a free loop under something keeps everything consistent
  Diagram two = parse_diagram_text(
      "link two\ncomponent c1 label 1\ncomponent c2 label 2\n"
      "arc a component c1\narc b component c2\nloop c1\nloop c2\nend\n");
  Diagram pk = apply_poke(two, "a", "b");
  CHECK(validate_diagram(pk).ok());
  CHECK(pk.loops == std::vector<std::string>{"c2"});
}

TEST_CASE("label swap flips every component") {
  Diagram d = load_diagram_file(kLinks + "L3.lnk");
  Diagram s = swap_labels(d);
  for (size_t i = 0; i < d.components.size(); ++i)
    CHECK(s.components[i].second == 3 - d.components[i].second);
  CHECK(validate_diagram(s).ok());
}
