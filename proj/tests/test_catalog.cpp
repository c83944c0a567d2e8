//
// semilab - finite semirings, semimodules and their structure theory
//

#include <catch_amalgamated.hpp>

#include "semilab/catalog.hpp"
#include "semilab/errors.hpp"

using namespace semilab;

TEST_CASE("B(2,1) is the boolean semiring", "[catalog]") {
  auto const B = make_B(2, 1);
  REQUIRE(B.add_table().to_raw() == RawTable{{0, 1}, {1, 1}});
  REQUIRE(B.mul_table().to_raw() == RawTable{{0, 0}, {0, 1}});
  REQUIRE(B.zero() == 0);
  REQUIRE(B.one() == 1);
}

TEST_CASE("B(n,0) is Z_n", "[catalog]") {
  for (std::size_t n = 2; n <= 6; ++n) {
    auto const Z = make_B(n, 0);
    for (elem_t a = 0; a < n; ++a) {
      for (elem_t b = 0; b < n; ++b) {
        REQUIRE(Z.add(a, b) == (a + b) % n);
        REQUIRE(Z.mul(a, b) == (a * b) % n);
      }
    }
  }
}

TEST_CASE("B(n,i) follows the wrap-around rule", "[catalog]") {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (std::size_t i = 0; i < n; ++i) {
      auto const S    = make_B(n, i);
      auto       wrap = [&](std::size_t x) {
        while (x >= n) {
          x -= n - i;
        }
        return x;
      };
      for (elem_t a = 0; a < n; ++a) {
        for (elem_t b = 0; b < n; ++b) {
          REQUIRE(S.add(a, b) == wrap(a + b));
          REQUIRE(S.mul(a, b) == wrap(a * b));
        }
      }
    }
  }
  REQUIRE_THROWS_AS(make_B(2, 2), InvalidParameters);
  REQUIRE_THROWS_AS(make_B(1, 0), InvalidParameters);
}

TEST_CASE("lattices", "[catalog]") {
  auto const C = make_lattice_semiring(chain_lattice(4));
  for (elem_t a = 0; a < 4; ++a) {
    for (elem_t b = 0; b < 4; ++b) {
      REQUIRE(C.add(a, b) == std::max(a, b));
      REQUIRE(C.mul(a, b) == std::min(a, b));
    }
  }
  REQUIRE_THROWS_AS(make_lattice_semiring(diamond_lattice()),
                    NotDistributive);
  REQUIRE_THROWS_AS(make_lattice_semiring(pentagon_lattice()),
                    NotDistributive);
  auto const N5   = pentagon_lattice();
  auto const meet = lattice_meet(N5);
  REQUIRE(meet(1, 2) == 0);
  REQUIRE(meet(3, 1) == 1);
  REQUIRE(N5.join(1, 2) == 4);

  LatticeSpec bad = chain_lattice(3);
  bad.join.at(1, 2) = 1;
  REQUIRE_THROWS_AS(validate_lattice(bad), AxiomViolation);
}

TEST_CASE("endomorphism semirings of non-distributive lattices", "[catalog]") {
  // Carrier sizes counted by an independent brute-force script.
  Limits lim;
  REQUIRE(make_end_semiring(diamond_lattice(), false, lim)
              .semiring.order() == 50);
  REQUIRE(make_end_semiring(pentagon_lattice(), false, lim)
              .semiring.order() == 43);
  REQUIRE(make_end_semiring(diamond_lattice(), true, lim)
              .semiring.order() == 38);
  REQUIRE(make_end_semiring(pentagon_lattice(), true, lim)
              .semiring.order() == 27);

  auto const E = make_end_semiring(diamond_lattice(), false, lim);
  auto const& S = E.semiring;
  REQUIRE(E.maps[S.zero()] == std::vector<elem_t>(5, 0));
  REQUIRE(E.maps[S.one()] == std::vector<elem_t>{0, 1, 2, 3, 4});
  for (elem_t f = 0; f < S.order(); ++f) {
    for (elem_t g = 0; g < S.order(); ++g) {
      for (elem_t x = 0; x < 5; ++x) {
        REQUIRE(E.maps[S.mul(f, g)][x] == E.maps[f][E.maps[g][x]]);
      }
    }
  }
  lim.max_carrier = 10;
  REQUIRE_THROWS_AS(make_end_semiring(diamond_lattice(), false, lim),
                    LimitExceeded);
}

TEST_CASE("matrix semirings", "[catalog]") {
  Limits     lim;
  auto const B = make_B(2, 1);
  auto const M = make_matrix_semiring(B, 2, lim);
  REQUIRE(M.order() == 16);
  REQUIRE_FALSE(M.is_commutative());
  // Entries a b / c d read as the binary number abcd.
  auto idx = [](int a, int b, int c, int d) {
    return elem_t(a * 8 + b * 4 + c * 2 + d);
  };
  REQUIRE(M.one() == idx(1, 0, 0, 1));
  REQUIRE(M.zero() == 0);
  REQUIRE(M.mul(idx(0, 1, 0, 0), idx(0, 0, 1, 0)) == idx(1, 0, 0, 0));
  REQUIRE(M.mul(idx(0, 0, 1, 0), idx(0, 1, 0, 0)) == idx(0, 0, 0, 1));
  REQUIRE(M.add(idx(0, 1, 0, 0), idx(0, 0, 1, 0)) == idx(0, 1, 1, 0));
  lim.max_carrier = 15;
  REQUIRE_THROWS_AS(make_matrix_semiring(B, 2, lim), LimitExceeded);
}

TEST_CASE("products", "[catalog]") {
  auto const B  = make_B(2, 1);
  auto const Z3 = make_B(3, 0);
  auto const P  = make_product({B, Z3});
  REQUIRE(P.order() == 6);
  // (a, b) has index 3a + b.
  REQUIRE(P.add(3 * 1 + 2, 3 * 1 + 2) == 3 * 1 + 1);
  REQUIRE(P.mul(3 * 1 + 2, 3 * 0 + 2) == 3 * 0 + 1);
  REQUIRE(P.one() == 3 * 1 + 1);
  REQUIRE_THROWS_AS(make_product({}), InvalidParameters);
}
