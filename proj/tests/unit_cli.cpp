#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "dsq/cli.hpp"

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = dsq::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kData = DSQ_DATA_DIR;
const std::string kZ6 = kData + "/structures/z6.dsq";
const std::string kLinks = kData + "/links";

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("count prints the L1 result and exits cleanly") {
  auto r = run({"count", "--structure", kZ6, "--link", kLinks + "/L1.lnk"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "link=L1"));
  CHECK(contains(r.out, "structure=z6"));
  CHECK(contains(r.out, "count=36"));
}

TEST_CASE("check-structure passes z6 with the full family count") {
  auto r = run({"check-structure", kZ6});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "PASS (all 14 axiom families)"));

  auto strict = run({"check-structure", kZ6, "--strict-223"});
  CHECK(strict.code == 1);
  CHECK(contains(strict.out, "FAIL"));
}

TEST_CASE("check-link reports diagram shape") {
  auto r = run({"check-link", kLinks + "/L2.lnk"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "arcs=6"));
  CHECK(contains(r.out, "VALID"));
}

TEST_CASE("malformed files exit 2 with a line number") {
  std::string bad = std::string(DSQ_DATA_DIR) + "/../build-badlink.tmp";
  {
    std::ofstream f(bad);
    f << "link broken\ncomponent c label 1\narc a component c\nxc a a nope\nend\n";
  }
  auto r = run({"count", "--structure", kZ6, "--link", bad});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "line 4"));
  std::remove(bad.c_str());

  auto missing = run({"count", "--structure", kZ6, "--link", "/nonexistent.lnk"});
  CHECK(missing.code == 2);
}

TEST_CASE("usage errors exit 3") {
  CHECK(run({"count", "--structure", kZ6}).code == 3);          // missing --link
  CHECK(run({"no-such-verb"}).code == 3);
  CHECK(run({"build", "no-such-family"}).code == 3);
  CHECK(run({"enumerate", "--order", "9"}).code == 3);          // above the limit
  CHECK(run({"search", "affine", "--modulus", "7", "--family", "q"}).code == 3);
}

TEST_CASE("build emits a loadable structure and search finds the frozen verdict") {
  auto b = run({"--quiet", "build", "z6"});
  CHECK(b.code == 0);
  CHECK(contains(b.out, "disingquandle z6"));
  CHECK(contains(b.out, "end"));

  auto s = run({"search", "affine", "--modulus", "7", "--family", "B"});
  CHECK(s.code == 0);
  CHECK(contains(s.out, "passes=0 1 2 3 4 5 6"));

  auto m = run({"search", "affine", "--modulus", "9", "--family", "m"});
  CHECK(contains(m.out, "passes=0 3 6"));
}

TEST_CASE("color --list prints colorings; present prints relations") {
  auto c = run({"color", "--structure", kZ6, "--link", kLinks + "/L2.lnk", "--list"});
  CHECK(c.code == 0);
  CHECK(contains(c.out, "count=6"));
  CHECK(contains(c.out, "coloring="));

  auto p = run({"present", "--link", kLinks + "/dsq_example.lnk", "--simplify"});
  CHECK(p.code == 0);
  CHECK(contains(p.out, "generators: x y"));
  CHECK(contains(p.out, "R1(y *1 (x *2 y), (x *2 y) *2 (y *1 (x *2 y)))"));
}

TEST_CASE("corpus prints the grouped count table") {
  auto r = run({"corpus", "--structure", kZ6, "--dir", kLinks});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "| L"));
  CHECK(contains(r.out, "#Col"));
  CHECK(contains(r.out, "L2"));
  // grouped rows: L1 and its perturbations share the 36 row
  CHECK(contains(r.out, "L1, L1_ri, rv_after, rv_before"));
}

TEST_CASE("stdout is byte-identical across repeated runs and worker counts") {
  std::vector<std::string> base{"count", "--structure", kZ6, "--link", kLinks + "/L3.lnk"};
  auto a = run(base);
  auto b = run(base);
  CHECK(a.out == b.out);

  std::vector<std::string> j1{"--jobs", "1", "color", "--structure", kZ6, "--link", kLinks + "/L3.lnk", "--list"};
  std::vector<std::string> j7{"--jobs", "7", "color", "--structure", kZ6, "--link", kLinks + "/L3.lnk", "--list"};
  CHECK(run(j1).out == run(j7).out);

  std::vector<std::string> e1{"--jobs", "1", "enumerate", "--order", "2"};
  std::vector<std::string> e4{"--jobs", "4", "enumerate", "--order", "2"};
  CHECK(run(e1).out == run(e4).out);

  auto quiet = run({"--quiet", "count", "--structure", kZ6, "--link", kLinks + "/L3.lnk"});
  CHECK(quiet.out.find("# dsq") == std::string::npos);
}
