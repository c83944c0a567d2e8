//
// semilab - finite semirings, semimodules and their structure theory
//

#include <catch_amalgamated.hpp>

#include <filesystem>  // for path, temp_directory_path
#include <fstream>     // for ofstream
#include <sstream>     // for ostringstream

#include "semilab/cli.hpp"

namespace {
  struct Run {
    int         code;
    std::string out;
    std::string err;
  };

  Run run(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int const          code = semilab::cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::string temp_file(std::string const& name, std::string const& text) {
    auto const path = std::filesystem::temp_directory_path()
                      / ("semilab-test-" + name);
    std::ofstream(path) << text;
    return path.string();
  }

  bool contains(std::string const& hay, std::string const& needle) {
    return hay.find(needle) != std::string::npos;
  }
}  // namespace

TEST_CASE("catalog bni emits the B(3,1) block", "[cli]") {
  auto const r = run({"catalog", "bni", "--n", "3", "--i", "1"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out
          == "semiring\norder 3\nzero 0\none 1\nadd\n0 1 2\n1 2 1\n2 1 2\n"
             "mul\n0 0 0\n0 1 2\n0 2 2\n");
}

TEST_CASE("analyze B(3,1)", "[cli]") {
  auto const b31 = run({"catalog", "bni", "--n", "3", "--i", "1"}).out;
  auto const r   = run({"analyze", temp_file("b31.sr", b31)});
  REQUIRE(r.code == 0);
  REQUIRE(contains(r.out, "subsemimodules: 3 (exhaustive)"));
  REQUIRE(contains(r.out, "subtractive: 3"));
  REQUIRE(contains(r.out, "congruences: 4 (exhaustive)"));
  REQUIRE(contains(r.out, "ideal-semisimple: no"));
  REQUIRE(contains(r.out, "congruence-semisimple: no"));
  REQUIRE(contains(r.out, "C1: no"));
  REQUIRE(contains(r.out, "C2: yes"));
}

TEST_CASE("validate", "[cli]") {
  auto const b31 = run({"catalog", "bni", "--n", "3", "--i", "1"}).out;
  REQUIRE(run({"validate", temp_file("ok.sr", b31)}).code == 0);
  auto const bad = run({"validate",
                        temp_file("bad.sr", "semiring\norder 2\nzero 0\none 1\n"
                                            "add\n0 1\n1 1\nmul\n0 1\n0 1\n")});
  REQUIRE(bad.code == 1);
  REQUIRE(contains(bad.out, "invalid"));
  auto const parse = run({"validate", temp_file("parse.sr", "semiring\nx\n")});
  REQUIRE(parse.code == 2);
  REQUIRE(contains(parse.err, "line 2"));
  REQUIRE(run({"validate", "/nonexistent/file.sr"}).code == 2);
}

TEST_CASE("decompose", "[cli]") {
  auto const bb = run({"catalog", "product",
                       temp_file("b.sr", run({"catalog", "bni", "--n", "2",
                                              "--i", "1"})
                                             .out),
                       temp_file("b2.sr", run({"catalog", "bni", "--n", "2",
                                               "--i", "1"})
                                              .out)});
  REQUIRE(bb.code == 0);
  auto const r = run({"decompose", temp_file("bb.sr", bb.out)});
  REQUIRE(r.code == 0);
  REQUIRE(contains(r.out, "parts 2"));
}

TEST_CASE("audit", "[cli]") {
  auto const r = run({"audit", "--order", "2"});
  REQUIRE(r.code == 0);
  REQUIRE(contains(r.out, "audit green"));
  auto const j1 = run({"--threads", "1", "audit", "--order", "2", "--format",
                       "jsonl"});
  auto const j8 = run({"--threads", "8", "audit", "--order", "2", "--format",
                       "jsonl"});
  REQUIRE(j1.code == 0);
  REQUIRE(j1.out == j8.out);
  REQUIRE(contains(j1.out, "\"claim_id\""));
}

TEST_CASE("catalog subcommands", "[cli]") {
  std::string const m3 = "lattice\norder 5\nbottom 0\ntop 4\njoin\n"
                         "0 1 2 3 4\n1 1 4 4 4\n2 4 2 4 4\n3 4 4 3 4\n"
                         "4 4 4 4 4\n";
  auto const end = run({"catalog", "end", temp_file("m3.lat", m3)});
  REQUIRE(end.code == 0);
  REQUIRE(contains(end.out, "order 50"));
  auto const lat = run({"catalog", "lattice", temp_file("m3b.lat", m3)});
  REQUIRE(lat.code == 2);
  auto const b = run({"catalog", "bni", "--n", "2", "--i", "1"}).out;
  auto const m = run({"catalog", "matrix", temp_file("bm.sr", b), "--k", "2"});
  REQUIRE(m.code == 0);
  REQUIRE(contains(m.out, "order 16"));
}

TEST_CASE("usage errors", "[cli]") {
  REQUIRE(run({}).code == 2);
  REQUIRE(run({"bogus"}).code == 2);
  REQUIRE(run({"--limits", "nonsense=1", "audit"}).code == 2);
  REQUIRE(run({"catalog", "bni", "--n", "2", "--i", "5"}).code == 2);
  REQUIRE(run({"--help"}).code == 0);
}
