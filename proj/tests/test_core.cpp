//
// semilab - finite semirings, semimodules and their structure theory
//

#include <catch_amalgamated.hpp>

#include "corpus.hpp"
#include "helpers.hpp"
#include "oracle.hpp"
#include "semilab/core.hpp"
#include "semilab/errors.hpp"

using namespace semilab;
using helpers::mask;

namespace {
  // S, its left ideals and its Bourne quotients by subtractive left ideals.
  std::vector<ModulePtr> modules_of(SemiringTable const& S) {
    Limits                 lim;
    auto const             R = regular_module(share(S));
    std::vector<ModulePtr> out{R};
    for (auto const& L : enumerate_subsemimodules(R, lim).items) {
      if (L.members.size() > 1 && !L.members.is_full()) {
        out.push_back(restrict_module(R, L.members));
        if (L.is_subtractive()) {
          out.push_back(bourne_quotient(R, L.members).module);
        }
      }
    }
    return out;
  }
}  // namespace

TEST_CASE("validation rejects broken tables", "[core]") {
  RawTable add{{0, 1}, {1, 1}};
  SECTION("absorbing zero") {
    RawTable mul{{0, 1}, {0, 1}};
    REQUIRE_THROWS_AS(validate_semiring(add, mul, 0, 1), AxiomViolation);
    try {
      validate_semiring(add, mul, 0, 1);
    } catch (AxiomViolation const& e) {
      REQUIRE_FALSE(e.violations().empty());
      REQUIRE_FALSE(e.violations().front().law.empty());
    }
  }
  SECTION("ragged table") {
    RawTable mul{{0, 0}, {0}};
    REQUIRE_THROWS_AS(validate_semiring(add, mul, 0, 1), ShapeError);
  }
  SECTION("entry out of range") {
    RawTable mul{{0, 0}, {0, 2}};
    REQUIRE_THROWS_AS(validate_semiring(add, mul, 0, 1), ShapeError);
  }
  SECTION("zero equal to one") {
    RawTable tiny{{0}};
    REQUIRE_THROWS_AS(validate_semiring(tiny, tiny, 0, 0), Error);
  }
  SECTION("non-linear action") {
    auto     B = share(make_B(2, 1));
    RawTable madd{{0, 1, 2}, {1, 1, 2}, {2, 2, 2}};
    RawTable act{{0, 0, 0}, {0, 2, 1}};
    REQUIRE_THROWS_AS(validate_semimodule(B, madd, act, 0), AxiomViolation);
  }
}

TEST_CASE("semiring flags", "[core]") {
  auto const Z3 = make_B(3, 0);
  REQUIRE(Z3.is_commutative());
  REQUIRE(Z3.is_cancellative());
  REQUIRE_FALSE(Z3.is_zerosumfree());
  REQUIRE(Z3.v_set().is_full());
  auto const B31 = make_B(3, 1);
  REQUIRE(B31.is_zerosumfree());
  REQUIRE(B31.v_set() == Subset(3, {0}));
  REQUIRE(B31.k_set() == Subset(3, {0}));
}

TEST_CASE("substructures agree with the brute-force oracle", "[core]") {
  Limits lim;
  for (auto const& [name, S] : corpus::small(3)) {
    for (auto const& M : modules_of(S)) {
      INFO(name << " module of order " << M->order());
      auto const O    = oracle::of(*M);
      auto const subs = enumerate_subsemimodules(M, lim);
      REQUIRE(subs.exhaustive);
      std::vector<oracle::Mask> got;
      for (auto const& L : subs.items) {
        got.push_back(mask(L.members));
        REQUIRE(mask(L.closure) == oracle::closure(O, mask(L.members)));
        REQUIRE(L.is_subtractive()
                == oracle::is_subtractive(O, mask(L.members)));
        REQUIRE(helpers::labels(bourne_congruence(*M, L.members))
                == oracle::bourne(O, mask(L.members)));
      }
      REQUIRE(got == oracle::submodules(O));

      auto const sub_only = enumerate_subsemimodules(M, lim, true);
      REQUIRE(sub_only.size() == oracle::subtractive_submodules(O).size());

      std::vector<oracle::Labels> congs;
      for (auto const& p : enumerate_congruences(*M, lim).items) {
        congs.push_back(helpers::labels(p));
      }
      REQUIRE(helpers::as_set(congs)
              == helpers::as_set(oracle::congruences(O)));
      REQUIRE(congs.size() == oracle::congruences(O).size());
    }
  }
}

TEST_CASE("closure of arbitrary subsets", "[core]") {
  for (auto const& [name, S] : corpus::small(3)) {
    auto const M = regular_module(share(S));
    auto const O = oracle::of(*M);
    for (oracle::Mask m = 0; m <= oracle::full(O.n); ++m) {
      REQUIRE(mask(closure_members(*M, helpers::subset(O.n, m)))
              == oracle::closure(O, m));
    }
  }
}

TEST_CASE("two-sided congruences and ideals", "[core]") {
  Limits lim;
  for (auto const& [name, S] : corpus::small(3)) {
    INFO(name);
    auto const add = oracle::raw(S.add_table());
    auto const mul = oracle::raw(S.mul_table());
    std::vector<oracle::Labels> got;
    for (auto const& p : enumerate_congruences(S, lim).items) {
      got.push_back(helpers::labels(p));
    }
    REQUIRE(helpers::as_set(got)
            == helpers::as_set(oracle::semiring_congruences(add, mul)));

    std::vector<oracle::Mask> ideals, expected;
    for (auto const& I : enumerate_ideals(S, lim).items) {
      ideals.push_back(mask(I));
    }
    auto const O = oracle::regular(S);
    for (auto L : oracle::submodules(O)) {
      bool right = true;
      for (int a = 0; a < O.n; ++a) {
        for (int s = 0; s < O.n; ++s) {
          if (O.in(L, a) && !O.in(L, mul[a][s])) {
            right = false;
          }
        }
      }
      if (right) {
        expected.push_back(L);
      }
    }
    REQUIRE(ideals == expected);
  }
}

TEST_CASE("B(3,1) substructures", "[core]") {
  // Values checked against the oracle above and frozen here.
  Limits     lim;
  auto const R    = regular_module(share(make_B(3, 1)));
  auto const subs = enumerate_subsemimodules(R, lim);
  REQUIRE(subs.size() == 3);
  REQUIRE(subs.items[1].members == Subset(3, {0, 2}));
  for (auto const& L : subs.items) {
    REQUIRE(L.is_subtractive());
  }
  REQUIRE(enumerate_congruences(*R, lim).size() == 4);

  auto const q = bourne_quotient(R, Subset(3, {0, 2}));
  REQUIRE(q.module->order() == 2);
  REQUIRE(q.projection.image == std::vector<elem_t>{0, 1, 0});
  auto const x = q.module->zero() == 0 ? elem_t(1) : elem_t(0);
  REQUIRE(q.module->add(x, x) == q.module->zero());
}

TEST_CASE("generated subsemimodules and substructure errors", "[core]") {
  auto const R = regular_module(share(make_B(3, 1)));
  auto const g = generated_subsemimodule(R, Subset(3, {2}));
  REQUIRE(g.members == Subset(3, {0, 2}));
  REQUIRE(generated_subsemimodule(R, Subset(3, {1})).members.is_full());
  REQUIRE_THROWS_AS(make_substructure(R, Subset(3, {0, 1})), Error);
  auto const c = subtractive_closure(make_substructure(R, Subset(3, {0})));
  REQUIRE(c.members == Subset(3, {0}));
}

TEST_CASE("quotients by incompatible partitions are refused", "[core]") {
  auto const R = regular_module(share(make_B(3, 1)));
  auto const p = CongruencePartition::from_labels({0, 0, 1});
  REQUIRE_THROWS_AS(quotient_by_congruence(R, p), IncompatiblePartition);
}

TEST_CASE("congruence closure", "[core]") {
  auto const Z3 = make_B(3, 0);
  auto const R  = regular_module(share(Z3));
  REQUIRE(congruence_closure(*R, {{0, 1}}).is_universal());
  REQUIRE(congruence_closure(*R, {}).is_discrete());
  auto const B31 = make_B(3, 1);
  auto const p   = congruence_closure(B31, {{1, 2}});
  REQUIRE(p == CongruencePartition::from_labels({0, 1, 1}));
}

TEST_CASE("direct sums and restriction", "[core]") {
  auto const B  = share(make_B(2, 1));
  auto const R  = regular_module(B);
  auto const RR = direct_sum(R, R);
  REQUIRE(RR->order() == 4);
  REQUIRE(RR->add(1 * 2 + 0, 0 * 2 + 1) == 3);
  auto const sub = restrict_module(RR, Subset(4, {0, 3}));
  REQUIRE(sub->order() == 2);
  REQUIRE(zero_module(B)->is_zero());
}
