//
// semilab - finite semirings, semimodules and their structure theory
//

#include "semilab/projinj.hpp"

#include <map>  // for map
#include <set>  // for set

#include "semilab/core.hpp"      // for enumerate_subsemimodules, ...
#include "semilab/homs.hpp"      // for enumerate_homs, classify_junction
#include "semilab/summands.hpp"  // for summand_poset

namespace semilab {

  char const* to_string(Verdict v) noexcept {
    switch (v) {
      case Verdict::holds:
        return "holds";
      case Verdict::fails:
        return "fails";
      default:
        return "unknown";
    }
  }

  void combine(Decision& acc, Decision const& next, std::string const& label) {
    if (acc.fails()) {
      return;
    }
    if (next.fails()) {
      acc.verdict     = Verdict::fails;
      acc.certificate = label.empty() ? next.certificate
                                      : label + ": " + next.certificate;
    } else if (next.verdict == Verdict::unknown) {
      acc.verdict = Verdict::unknown;
      if (acc.certificate.empty()) {
        acc.certificate = label + ": limits reached";
      }
    }
  }

  namespace {
    struct HomMonoid {
      std::vector<LinearMap>                maps;
      std::map<std::vector<elem_t>, elem_t> index;
      OpTable                               add;
      elem_t                                zero = 0;
      bool                                  exhaustive = true;

      HomMonoid(ModulePtr const& A, ModulePtr const& B, Limits const& limits) {
        auto homs  = enumerate_homs(A, B, limits);
        exhaustive = homs.exhaustive;
        maps       = std::move(homs.items);
        for (elem_t i = 0; i < maps.size(); ++i) {
          index[maps[i].image] = i;
        }
        if (!exhaustive) {
          return;
        }
        std::size_t const n = maps.size();
        add                 = OpTable(n, n);
        for (elem_t i = 0; i < n; ++i) {
          for (elem_t j = 0; j < n; ++j) {
            add.at(i, j) = index.at(pointwise_sum(maps[i], maps[j]).image);
          }
        }
        zero = index.at(zero_map(A, B).image);
      }
    };

    // Exactness of 0 -> A -> B -> C -> 0 for monoid maps u: A -> B and
    // v: B -> C; returns the first junction that fails, or -1.
    int first_inexact(HomMonoid const&           A,
                      HomMonoid const&           B,
                      HomMonoid const&           C,
                      std::vector<elem_t> const& u,
                      std::vector<elem_t> const& v) {
      if (!classify_junction(A.add, A.zero, {A.zero}, u, B.zero).exact) {
        return 0;
      }
      if (!classify_junction(B.add, B.zero, u, v, C.zero).exact) {
        return 1;
      }
      std::vector<elem_t> to_zero(C.maps.size(), 0);
      if (!classify_junction(C.add, C.zero, v, to_zero, 0).exact) {
        return 2;
      }
      return -1;
    }

    char const* junction_name(int j) {
      static char const* names[] = {"first", "middle", "last"};
      return names[j];
    }

    std::vector<Subset> subtractive_sets(ModulePtr const& M,
                                         Limits const&    limits,
                                         bool&            exhaustive) {
      auto subs  = enumerate_subsemimodules(M, limits, true);
      exhaustive = subs.exhaustive;
      std::vector<Subset> out;
      for (auto& s : subs.items) {
        out.push_back(std::move(s.members));
      }
      return out;
    }

    Decision finish(bool exhaustive) {
      return {exhaustive ? Verdict::holds : Verdict::unknown,
              exhaustive ? "" : "limits reached"};
    }
  }  // namespace

  BoundedFamily bounded_family(SemiringPtr const& S, Limits const& limits) {
    BoundedFamily F;
    auto const    R = regular_module(S);
    std::vector<FamilyMember> base{{"S", R}};
    auto subs   = enumerate_submodule_sets(*R, limits);
    auto congs  = enumerate_congruences(*R, limits);
    F.exhaustive = subs.exhaustive && congs.exhaustive;
    for (auto const& L : subs.items) {
      base.push_back({"ideal" + L.to_string(), restrict_module(R, L)});
    }
    for (auto const& rho : congs.items) {
      base.push_back(
          {"S/" + rho.to_string(), quotient_by_congruence(R, rho).module});
    }

    auto admit = [&](FamilyMember m) {
      for (auto const& o : F.members) {
        if (o.module->order() != m.module->order()) {
          continue;
        }
        auto iso = find_isomorphism(o.module, m.module, limits);
        if (iso.status == Search::unknown) {
          F.exhaustive = false;
        }
        if (iso.present()) {
          return;
        }
      }
      F.members.push_back(std::move(m));
    };
    for (auto& m : base) {
      admit(std::move(m));
    }
    std::size_t const singles = F.members.size();
    for (std::size_t i = 0; i < singles; ++i) {
      for (std::size_t j = i; j < singles; ++j) {
        auto const& A = F.members[i];
        auto const& B = F.members[j];
        if (A.module->order() < 2 || B.module->order() < 2
            || A.module->order() * B.module->order()
                   > limits.max_family_carrier) {
          continue;
        }
        admit({A.name + "(+)" + B.name, direct_sum(A.module, B.module)});
      }
    }
    F.description = std::to_string(F.members.size())
                    + " semimodules: S, its left ideals, its quotients and "
                      "binary sums of at most "
                    + std::to_string(limits.max_family_carrier)
                    + " elements, up to isomorphism";
    return F;
  }

  Decision is_M_k_projective(ModulePtr const& P,
                             ModulePtr const& M,
                             Limits const&    limits) {
    bool       exhaustive = true;
    auto const Ls         = subtractive_sets(M, limits, exhaustive);
    auto const PM         = enumerate_homs(P, M, limits);
    exhaustive            = exhaustive && PM.exhaustive;
    for (auto const& L : Ls) {
      auto const q = bourne_quotient(M, L);
      std::set<std::vector<elem_t>> lifted;
      for (auto const& h : PM.items) {
        lifted.insert(compose(q.projection, h).image);
      }
      auto const PN = enumerate_homs(P, q.module, limits);
      exhaustive    = exhaustive && PN.exhaustive;
      for (auto const& g : PN.items) {
        if (!lifted.count(g.image)) {
          return {Verdict::fails,
                  "L = " + L.to_string() + ", g = [" + g.to_string()
                      + "] : P -> M/L has no lift"};
        }
      }
    }
    return finish(exhaustive);
  }

  Decision is_M_e_projective(ModulePtr const& P,
                             ModulePtr const& M,
                             Limits const&    limits) {
    bool       exhaustive = true;
    auto const Ls         = subtractive_sets(M, limits, exhaustive);
    HomMonoid const B(P, M, limits);
    exhaustive = exhaustive && B.exhaustive;
    for (auto const& L : Ls) {
      auto const      Lmod = restrict_module(M, L);
      auto const      f    = inclusion_map(Lmod, M, L);
      auto const      q    = bourne_quotient(M, L);
      HomMonoid const A(P, Lmod, limits);
      HomMonoid const C(P, q.module, limits);
      if (!A.exhaustive || !B.exhaustive || !C.exhaustive) {
        exhaustive = false;
        continue;
      }
      std::vector<elem_t> u, v;
      for (auto const& a : A.maps) {
        u.push_back(B.index.at(compose(f, a).image));
      }
      for (auto const& b : B.maps) {
        v.push_back(C.index.at(compose(q.projection, b).image));
      }
      if (int j = first_inexact(A, B, C, u, v); j >= 0) {
        return {Verdict::fails,
                "L = " + L.to_string() + ": induced Hom sequence not exact at "
                    + junction_name(j) + " term"};
      }
    }
    return finish(exhaustive);
  }

  Decision is_M_i_injective(ModulePtr const& J,
                            ModulePtr const& M,
                            Limits const&    limits) {
    bool       exhaustive = true;
    auto const Ls         = subtractive_sets(M, limits, exhaustive);
    auto const MJ         = enumerate_homs(M, J, limits);
    exhaustive            = exhaustive && MJ.exhaustive;
    for (auto const& L : Ls) {
      auto const Lmod = restrict_module(M, L);
      auto const f    = inclusion_map(Lmod, M, L);
      std::set<std::vector<elem_t>> restricted;
      for (auto const& h : MJ.items) {
        restricted.insert(compose(h, f).image);
      }
      auto const LJ = enumerate_homs(Lmod, J, limits);
      exhaustive    = exhaustive && LJ.exhaustive;
      for (auto const& g : LJ.items) {
        if (!restricted.count(g.image)) {
          return {Verdict::fails,
                  "L = " + L.to_string() + ", g = [" + g.to_string()
                      + "] : L -> J has no extension"};
        }
      }
    }
    return finish(exhaustive);
  }

  Decision is_M_e_injective(ModulePtr const& J,
                            ModulePtr const& M,
                            Limits const&    limits) {
    bool       exhaustive = true;
    auto const Ls         = subtractive_sets(M, limits, exhaustive);
    HomMonoid const B(M, J, limits);
    exhaustive = exhaustive && B.exhaustive;
    for (auto const& L : Ls) {
      auto const      Lmod = restrict_module(M, L);
      auto const      f    = inclusion_map(Lmod, M, L);
      auto const      q    = bourne_quotient(M, L);
      HomMonoid const A(q.module, J, limits);
      HomMonoid const C(Lmod, J, limits);
      if (!A.exhaustive || !B.exhaustive || !C.exhaustive) {
        exhaustive = false;
        continue;
      }
      std::vector<elem_t> u, v;
      for (auto const& a : A.maps) {
        u.push_back(B.index.at(compose(a, q.projection).image));
      }
      for (auto const& b : B.maps) {
        v.push_back(C.index.at(compose(b, f).image));
      }
      if (int j = first_inexact(A, B, C, u, v); j >= 0) {
        return {Verdict::fails,
                "L = " + L.to_string() + ": induced Hom sequence not exact at "
                    + junction_name(j) + " term"};
      }
    }
    return finish(exhaustive);
  }

  WitnessReplay sum_einj_witness_check(SemiringPtr const&   S,
                                       BoundedFamily const& family,
                                       Limits const&        limits) {
    WitnessReplay out;
    auto const    R    = regular_module(S);
    auto const    P    = summand_poset(R, limits);
    auto const    subs = enumerate_subsemimodules(R, limits, true);
    out.exhaustive     = subs.exhaustive && family.exhaustive;
    for (auto const& I : subs.items) {
      auto const* node = P.find(I.members);
      if (node == nullptr) {
        continue;
      }
      auto const Imod  = restrict_module(R, I.members);
      auto const f     = inclusion_map(Imod, R, I.members);
      auto const idx   = I.members.elements();
      // 1 = e_M + e_N with e_M in I and e_N in the complement
      elem_t const e_N = node->complement_projection.image[S->one()];
      // pi: S -> I along the complement, as a map into Imod
      std::vector<elem_t> pi_img(S->order());
      for (elem_t s = 0; s < S->order(); ++s) {
        auto const x = node->projection.image[s];
        for (elem_t k = 0; k < idx.size(); ++k) {
          if (idx[k] == x) {
            pi_img[s] = k;
          }
        }
      }
      LinearMap const pi{R, Imod, pi_img};
      for (auto const& member : family.members) {
        auto const& J    = member.module;
        auto const  homs = enumerate_homs(R, J, limits);
        out.exhaustive   = out.exhaustive && homs.exhaustive;
        for (auto const& h : homs.items) {
          ++out.checked;
          auto const g  = compose(h, f);
          auto const gp = compose(g, pi);
          std::vector<elem_t> h1_img(S->order());
          elem_t const        j0 = h.image[S->one()];
          for (elem_t s = 0; s < S->order(); ++s) {
            h1_img[s] = J->act(S->mul(s, e_N), j0);
          }
          LinearMap const h1{R, J, h1_img};
          std::string     why;
          if (!linearity_failure(*R, *J, gp.image).empty()
              || !(compose(gp, f) == g)) {
            why = "g o pi is not an extension of g";
          } else if (!linearity_failure(*R, *J, h1_img).empty()) {
            why = "h1 is not linear";
          } else if (!is_zero_map(compose(h1, f))) {
            why = "h1 does not vanish on I";
          } else if (!(pointwise_sum(gp, h1) == h)) {
            why = "g o pi + h1 != h";
          }
          if (!why.empty()) {
            out.failures.push_back("I = " + I.members.to_string() + ", J = "
                                   + member.name + ", h = [" + h.to_string()
                                   + "]: " + why);
          }
        }
      }
    }
    return out;
  }

}  // namespace semilab
