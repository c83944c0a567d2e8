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
#include "semilab/homs.hpp"

using namespace semilab;
using helpers::mask;

namespace {
  bool oracle_k_normal(oracle::Mod const& A,
                       oracle::Mod const& B,
                       std::vector<int> const& f) {
    for (int m = 0; m < A.n; ++m) {
      for (int p = 0; p < A.n; ++p) {
        if (f[m] != f[p]) {
          continue;
        }
        bool found = false;
        for (int k = 0; k < A.n && !found; ++k) {
          for (int l = 0; l < A.n && !found; ++l) {
            found = f[k] == B.zero && f[l] == B.zero
                    && A.add[m][k] == A.add[p][l];
          }
        }
        if (!found) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<int> ints(std::vector<elem_t> const& v) {
    return {v.begin(), v.end()};
  }

  std::vector<corpus::Named> hom_corpus() {
    std::vector<corpus::Named> out;
    for (auto const& e : corpus::small(3)) {
      if (e.second.order() <= 3) {
        out.push_back(e);
      }
    }
    out.emplace_back("B(4,3)", make_B(4, 3));
    return out;
  }
}  // namespace

TEST_CASE("Hom sets agree with the brute-force oracle", "[homs]") {
  Limits lim;
  for (auto const& [name, S] : hom_corpus()) {
    auto const fam = modules::family(S);
    for (auto const& A : fam) {
      for (auto const& B : fam) {
        INFO(name << ": " << A->order() << " -> " << B->order());
        auto const OA  = oracle::of(*A);
        auto const OB  = oracle::of(*B);
        auto const got = enumerate_homs(A, B, lim);
        REQUIRE(got.exhaustive);
        auto const want = oracle::homs(OA, OB);
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < want.size(); ++i) {
          auto const& f = got.items[i];
          REQUIRE(ints(f.image) == want[i]);
          auto const n = normality_profile(f);
          REQUIRE(n.k_normal == oracle_k_normal(OA, OB, want[i]));
          oracle::Mask im = 0;
          for (int x : want[i]) {
            im |= oracle::Mask(1) << x;
          }
          REQUIRE(n.i_normal == oracle::is_subtractive(OB, im));
          REQUIRE(n.normal == (n.k_normal && n.i_normal));
          if (is_injective(f)) {
            REQUIRE(n.k_normal);
          }
          if (is_surjective(f)) {
            REQUIRE(n.i_normal);
          }
          auto const ki = kernel_image(f);
          REQUIRE(ki.kernel.is_subtractive());
          REQUIRE(mask(ki.image.members) == im);
        }
        REQUIRE(find_isomorphism(A, B, lim).present()
                == oracle::isomorphic(OA, OB));
      }
    }
  }
}

TEST_CASE("normality of the named inclusions", "[homs]") {
  auto const R31 = regular_module(share(make_B(3, 1)));
  Subset const I(3, {0, 2});
  auto const inc = inclusion_map(restrict_module(R31, I), R31, I);
  auto const n   = normality_profile(inc);
  REQUIRE(n.k_normal);
  REQUIRE(n.i_normal);

  auto const R43 = regular_module(share(make_B(4, 3)));
  Subset const J(4, {0, 3});
  auto const inc2 = inclusion_map(restrict_module(R43, J), R43, J);
  auto const n2   = normality_profile(inc2);
  REQUIRE(n2.k_normal);
  REQUIRE_FALSE(n2.i_normal);
  REQUIRE(kernel_image(inc2).image_closure.members.is_full());
}

TEST_CASE("canonical projections are exact", "[homs]") {
  Limits lim;
  for (auto const& [name, S] : hom_corpus()) {
    auto const R = regular_module(share(S));
    for (auto const& L : enumerate_subsemimodules(R, lim).items) {
      INFO(name << " L = " << L.members.to_string());
      auto const sub = restrict_module(R, L.members);
      auto const f   = inclusion_map(sub, R, L.members);
      auto const q   = bourne_quotient(R, L.members);
      REQUIRE(normality_profile(q.projection).k_normal);
      REQUIRE(is_surjective(q.projection));
      auto const seq = SequenceSpec::short_sequence(f, q.projection);
      REQUIRE(is_exact(seq) == L.is_subtractive());
    }
  }
}

TEST_CASE("the M/L corollary: three readings agree", "[homs]") {
  Limits lim;
  for (auto const& [name, S] : hom_corpus()) {
    for (auto const& M : modules::family(S)) {
      auto const subs = enumerate_subsemimodules(M, lim).items;
      for (auto const& L : subs) {
        auto const Lm = restrict_module(M, L.members);
        auto const f  = inclusion_map(Lm, M, L.members);
        for (auto const& p : enumerate_congruences(*M, lim).items) {
          auto const g = quotient_by_congruence(M, p).projection;
          auto const c = check_exactness(f, g, lim);
          INFO(name << " L = " << L.members.to_string()
                    << " rho = " << p.to_string());
          REQUIRE(c.exhaustive);
          REQUIRE(c.exact == c.induced_isos);
          REQUIRE(c.exact == c.elementwise);
          if (c.exact) {
            REQUIRE(c.abstract_isos);
          }
          REQUIRE(c.normal_maps);
          REQUIRE(c.lemma_exact_1_2);
        }
      }
    }
  }
}

TEST_CASE("junction classification follows the definitions", "[homs]") {
  for (auto const& [name, S] : hom_corpus()) {
    auto const R = regular_module(share(S));
    auto const O = oracle::of(*R);
    oracle::Monoid const mono{O.add, O.zero};
    Limits lim;
    for (auto const& f : enumerate_homs(R, R, lim).items) {
      for (auto const& g : enumerate_homs(R, R, lim).items) {
        auto const j = classify_junction(R->add_table(), R->zero(), f.image,
                                         g.image, R->zero());
        REQUIRE(j.exact
                == oracle::exact_at(mono, ints(f.image), ints(g.image),
                                    O.zero));
        if (j.exact) {
          REQUIRE(j.proper_exact);
        }
        if (j.proper_exact) {
          REQUIRE(j.semi_exact);
        }
      }
    }
  }
}

TEST_CASE("retractions and sections agree with brute force", "[homs]") {
  Limits lim;
  for (auto const& [name, S] : hom_corpus()) {
    auto const R = regular_module(share(S));
    for (auto const& L : enumerate_subsemimodules(R, lim).items) {
      auto const sub = restrict_module(R, L.members);
      auto const f   = inclusion_map(sub, R, L.members);
      bool       ret = false;
      for (auto const& r : enumerate_homs(R, sub, lim).items) {
        ret = ret || compose(r, f).image == identity_map(sub).image;
      }
      auto const found = find_retraction(f, lim);
      REQUIRE(found.present() == ret);
      if (found.present()) {
        REQUIRE(compose(*found.witness, f) == identity_map(sub));
      }
      auto const q   = bourne_quotient(R, L.members);
      bool       sec = false;
      for (auto const& s : enumerate_homs(q.module, R, lim).items) {
        sec = sec || compose(q.projection, s) == identity_map(q.module);
      }
      REQUIRE(find_section(q.projection, lim).present() == sec);
    }
  }
}

TEST_CASE("B(3,1) splitting: retraction without section", "[homs]") {
  Limits       lim;
  auto const   R = regular_module(share(make_B(3, 1)));
  Subset const I(3, {0, 2});
  auto const   sub = restrict_module(R, I);
  auto const   f   = inclusion_map(sub, R, I);
  auto const   q   = bourne_quotient(R, I);
  auto const   sp  = splitting_profile(f, q.projection, lim);
  REQUIRE(sp.left.present());
  REQUIRE(compose(f, *sp.left.witness).image == std::vector<elem_t>{0, 2, 2});
  REQUIRE(sp.right.absent());
}

TEST_CASE("map algebra errors", "[homs]") {
  auto const R2 = regular_module(share(make_B(2, 1)));
  auto const R3 = regular_module(share(make_B(3, 1)));
  REQUIRE_THROWS_AS(make_linear_map(R3, R3, {0, 2, 1}), NotLinear);
  REQUIRE_THROWS_AS(make_linear_map(R3, R3, {0, 1}), ShapeError);
  auto const id = identity_map(R3);
  REQUIRE_THROWS_AS(compose(id, identity_map(R2)), NotComposable);
  REQUIRE(pointwise_sum(id, zero_map(R3, R3)) == id);
  REQUIRE_THROWS_AS(SequenceSpec::make({R3}, {id}), NotComposable);
}
