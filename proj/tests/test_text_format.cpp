//
// semilab - finite semirings, semimodules and their structure theory
//

#include <catch_amalgamated.hpp>

#include "semilab/catalog.hpp"
#include "semilab/errors.hpp"
#include "semilab/text_format.hpp"

using namespace semilab;

namespace {
  char const* const b31_block = R"(semiring
order 3
zero 0
one 1
add
0 1 2
1 2 1
2 1 2
mul
0 0 0
0 1 2
0 2 2
)";
}  // namespace

TEST_CASE("B(3,1) block", "[text]") {
  REQUIRE(format_semiring(make_B(3, 1)) == b31_block);
  auto const doc = parse_document(std::string(b31_block));
  REQUIRE(doc.semirings.size() == 1);
  REQUIRE(*doc.semirings[0] == make_B(3, 1));
}

TEST_CASE("round trips", "[text]") {
  auto const S = share(make_B(4, 2));
  auto const M = regular_module(S);
  std::string const text = format_semiring(*S) + "# a comment\n\n"
                           + format_semimodule(*M)
                           + format_lattice(pentagon_lattice())
                           + format_map(identity_map(M));
  auto const doc = parse_document(text);
  REQUIRE(doc.semirings.size() == 1);
  REQUIRE(doc.semimodules.size() == 1);
  REQUIRE(doc.semimodules[0]->add_table() == M->add_table());
  REQUIRE(doc.semimodules[0]->act_table() == M->act_table());
  REQUIRE(doc.lattices.size() == 1);
  REQUIRE(doc.lattices[0].join == pentagon_lattice().join);
  REQUIRE(doc.maps.size() == 1);
  REQUIRE(doc.maps[0].image == std::vector<elem_t>{0, 1, 2, 3});
}

TEST_CASE("parse errors carry line numbers", "[text]") {
  auto line_of = [](std::string const& text) -> std::size_t {
    try {
      parse_document(text);
    } catch (ParseError const& e) {
      return e.line();
    }
    return 0;
  };
  REQUIRE(line_of("order 3\n") == 1);
  REQUIRE(line_of("semiring\norder 2\nzero 0\none 1\nadd\n0 1\n1 x\n") == 7);
  REQUIRE(line_of("semiring\norder 2\nzero 0\none 1\nadd\n0 1\n") == 5);
  REQUIRE(line_of("semiring\nadd\n0 1\n") == 2);
  REQUIRE(line_of("semimodule\norder 1\n") == 1);
  REQUIRE(line_of("semiring\norder 2\nzero 0\none 1\nfoo 1\nadd\n0 1\n1 1\n"
                  "mul\n0 0\n0 1\n")
          == 1);
  REQUIRE(line_of("map\nsource 0\n") == 1);
}

TEST_CASE("invalid tables surface as validation errors", "[text]") {
  std::string const bad = "semiring\norder 2\nzero 0\none 1\nadd\n0 1\n1 1\n"
                          "mul\n0 1\n0 1\n";
  REQUIRE_THROWS_AS(parse_document(bad), AxiomViolation);
  std::string const ragged = "semiring\norder 2\nzero 0\none 1\nadd\n0 1\n1\n"
                             "mul\n0 0\n0 1\n";
  REQUIRE_THROWS_AS(parse_document(ragged), ShapeError);
}

TEST_CASE("missing files", "[text]") {
  REQUIRE_THROWS_AS(parse_file("/nonexistent/semilab.sr"), FileError);
}
