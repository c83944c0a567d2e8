//
// semilab - finite semirings, semimodules and their structure theory
//

#include <catch_amalgamated.hpp>

#include "corpus.hpp"
#include "helpers.hpp"
#include "modules.hpp"
#include "oracle.hpp"
#include "semilab/catalog.hpp"
#include "semilab/errors.hpp"
#include "semilab/semisimple.hpp"
#include "semilab/summands.hpp"

using namespace semilab;
using helpers::mask;

namespace {
  // M is a direct sum of simple submodules (ideal- or congruence-simple).
  bool oracle_semisimple(oracle::Mod const& M, bool congruence) {
    std::vector<oracle::Mask> simple;
    for (auto L : oracle::submodules(M)) {
      auto const X = oracle::restrict(M, L);
      if (congruence ? oracle::congruence_simple(X)
                     : oracle::ideal_simple(X)) {
        simple.push_back(L);
      }
    }
    // Grow a direct sum one part at a time.
    auto rec = [&](auto& self, std::size_t from,
                   oracle::Mask sum) -> bool {
      if (sum == oracle::full(M.n)) {
        return true;
      }
      for (std::size_t i = from; i < simple.size(); ++i) {
        auto const K = simple[i];
        oracle::Mask next = 0;
        std::vector<int> hits(M.n, 0);
        for (int a = 0; a < M.n; ++a) {
          for (int b = 0; b < M.n; ++b) {
            if (M.in(sum, a) && M.in(K, b)) {
              ++hits[M.add[a][b]];
              next |= oracle::Mask(1) << M.add[a][b];
            }
          }
        }
        bool unique = true;
        for (int x = 0; x < M.n; ++x) {
          unique = unique && hits[x] <= 1;
        }
        if (unique && next != sum && self(self, i + 1, next)) {
          return true;
        }
      }
      return false;
    };
    return M.n > 1 && rec(rec, 0, oracle::Mask(1) << M.zero);
  }
}  // namespace

TEST_CASE("simplicity agrees with the oracle", "[semisimple]") {
  Limits lim;
  for (auto const& [name, S] : corpus::small(3)) {
    for (auto const& M : modules::family(S)) {
      INFO(name << " module of order " << M->order());
      auto const O = oracle::of(*M);
      auto const r = simplicity_profile(M, lim);
      REQUIRE(r.exhaustive);
      REQUIRE(r.crosschecked);
      REQUIRE(r.ideal_simple == oracle::ideal_simple(O));
      REQUIRE(r.congruence_simple == oracle::congruence_simple(O));
      REQUIRE(r.ideal_witness.has_value() == !r.ideal_simple);
      REQUIRE(r.congruence_witness.has_value() == !r.congruence_simple);
    }
  }
}

TEST_CASE("semisimplicity agrees with the oracle", "[semisimple]") {
  Limits lim;
  for (auto const& [name, S] : corpus::small(3)) {
    for (auto const& M : modules::family(S)) {
      INFO(name << " module of order " << M->order());
      auto const O = oracle::of(*M);
      auto const r = semisimplicity_profile(M, lim);
      REQUIRE(r.ideal_semisimple == oracle_semisimple(O, false));
      REQUIRE(r.congruence_semisimple == oracle_semisimple(O, true));
      if (r.ideal_witness) {
        REQUIRE(is_direct_sum(*M, *r.ideal_witness).direct);
      }
    }
  }
}

TEST_CASE("C1, C2 and C2' agree with the oracle", "[semisimple]") {
  Limits lim;
  for (auto const& [name, S] : corpus::small(3)) {
    for (auto const& M : modules::family(S)) {
      INFO(name << " module of order " << M->order());
      auto const O = oracle::of(*M);
      auto const c = condition_profile(M, lim);
      REQUIRE(c.exhaustive);
      REQUIRE(c.C1 == oracle::C1(O));
      REQUIRE(c.C2 == oracle::C2(O, false));
      REQUIRE(c.C2prime == oracle::C2(O, true));
      REQUIRE(c.c1_witness.has_value() == !c.C1);
    }
  }
}

TEST_CASE("C-profiles of the named examples", "[semisimple]") {
  Limits     lim;
  auto const b32 = condition_profile(make_B(3, 2), lim);
  REQUIRE(b32.C1);
  REQUIRE_FALSE(b32.C2);
  REQUIRE_FALSE(b32.C2prime);
  auto const b31 = condition_profile(make_B(3, 1), lim);
  REQUIRE_FALSE(b31.C1);
  REQUIRE(b31.C2);
  REQUIRE(b31.c1_witness == Subset(3, {0, 2}));
}

TEST_CASE("semiring simplicity is two-sided", "[semisimple]") {
  Limits lim;
  for (auto const& [name, S] : corpus::small(3)) {
    auto const s   = semiring_simplicity(S, lim);
    auto const add = oracle::raw(S.add_table());
    auto const mul = oracle::raw(S.mul_table());
    REQUIRE(s.congruence_simple
            == (oracle::semiring_congruences(add, mul).size() == 2));
  }
  auto const z3 = semiring_simplicity(make_B(3, 0), lim);
  REQUIRE(z3.ideal_simple);
  REQUIRE(z3.congruence_simple);
}

TEST_CASE("comsum on products of B", "[semisimple]") {
  Limits     lim;
  auto const B = make_B(2, 1);
  for (auto const& S : {make_product({B, B}), make_product({B, B, B})}) {
    auto const ss = semisimplicity_profile(S, lim);
    REQUIRE(ss.ideal_semisimple);
    REQUIRE(ss.congruence_semisimple);
    auto const r = comsum_check(S, *ss.ideal_witness, lim);
    REQUIRE(r.holds);
    for (auto const& c : r.certificates) {
      REQUIRE(c.is_sub_sum);
      REQUIRE(c.is_summand);
    }
  }
  REQUIRE_THROWS_AS(comsum_check(make_B(3, 1), {Subset(3, {0, 2})}, lim),
                    HypothesisUnmet);
}
