//
// semilab - finite semirings, semimodules and their structure theory
//

#include "semilab/semisimple.hpp"

#include "semilab/core.hpp"      // for enumerate_*, bourne_quotient
#include "semilab/errors.hpp"    // for CrosscheckFailure, HypothesisUnmet
#include "semilab/homs.hpp"      // for enumerate_homs
#include "semilab/summands.hpp"  // for summand_poset, is_direct_sum

namespace semilab {

  namespace {
    Subset zero_of(SemimoduleTable const& M) {
      return Subset(M.order(), {M.zero()});
    }

    // The test family of the map characterisations: M, its subsemimodules
    // and its quotients.
    std::vector<ModulePtr> test_family(ModulePtr const&                        M,
                                       std::vector<Subset> const&              subs,
                                       std::vector<CongruencePartition> const& congs) {
      std::vector<ModulePtr> out{M};
      for (auto const& L : subs) {
        out.push_back(restrict_module(M, L));
      }
      for (auto const& rho : congs) {
        out.push_back(quotient_by_congruence(M, rho).module);
      }
      return out;
    }
  }  // namespace

  SimplicityReport simplicity_profile(ModulePtr const& M,
                                      Limits const&    limits,
                                      bool             crosscheck) {
    SimplicityReport out;
    auto             subs  = enumerate_submodule_sets(*M, limits);
    auto             congs = enumerate_congruences(*M, limits);
    out.exhaustive         = subs.exhaustive && congs.exhaustive;
    out.num_subsemimodules = subs.size();
    out.num_congruences    = congs.size();
    if (M->order() == 1) {
      return out;
    }
    auto const zero = zero_of(*M);
    auto const full = Subset::full(M->order());
    for (auto const& L : subs.items) {
      if (L != zero && L != full) {
        out.ideal_witness = L;
        break;
      }
    }
    for (auto const& rho : congs.items) {
      if (!rho.is_discrete() && !rho.is_universal()) {
        out.congruence_witness = rho;
        break;
      }
    }
    out.ideal_simple      = out.exhaustive && !out.ideal_witness;
    out.congruence_simple = out.exhaustive && !out.congruence_witness;
    if (!crosscheck || !out.exhaustive) {
      return out;
    }

    bool maps_out_injective = true;
    bool maps_in_surjective = true;
    for (auto const& X : test_family(M, subs.items, congs.items)) {
      auto from = enumerate_homs(M, X, limits);
      auto to   = enumerate_homs(X, M, limits);
      if (!from.exhaustive || !to.exhaustive) {
        out.exhaustive = false;
        return out;
      }
      for (auto const& f : from.items) {
        if (!is_zero_map(f) && !is_injective(f)) {
          maps_out_injective = false;
        }
      }
      for (auto const& f : to.items) {
        if (!is_zero_map(f) && !is_surjective(f)) {
          maps_in_surjective = false;
        }
      }
    }
    if (maps_out_injective != out.congruence_simple) {
      throw CrosscheckFailure(
          "congruence-simplicity disagrees with the injectivity of maps out");
    }
    if (maps_in_surjective != out.ideal_simple) {
      throw CrosscheckFailure(
          "ideal-simplicity disagrees with the surjectivity of maps in");
    }
    out.crosschecked = true;
    return out;
  }

  SemiringSimplicity semiring_simplicity(SemiringTable const& S,
                                         Limits const&        limits) {
    SemiringSimplicity out;
    auto               ideals = enumerate_ideals(S, limits);
    auto               congs  = enumerate_congruences(S, limits);
    out.exhaustive            = ideals.exhaustive && congs.exhaustive;
    Subset const zero(S.order(), {S.zero()});
    Subset const full = Subset::full(S.order());
    for (auto const& I : ideals.items) {
      if (I != zero && I != full) {
        out.ideal_witness = I;
        break;
      }
    }
    for (auto const& rho : congs.items) {
      if (!rho.is_discrete() && !rho.is_universal()) {
        out.congruence_witness = rho;
        break;
      }
    }
    out.ideal_simple      = out.exhaustive && !out.ideal_witness;
    out.congruence_simple = out.exhaustive && !out.congruence_witness;
    return out;
  }

  namespace {
    // Direct decompositions of M into members of cands.
    std::optional<std::vector<Subset>>
    find_decomposition(SemimoduleTable const& M, std::vector<Subset> const& cands) {
      auto const          full = Subset::full(M.order());
      auto const          zero = zero_of(M);
      std::vector<Subset> parts;
      std::optional<std::vector<Subset>> found;
      auto rec = [&](auto&& self, std::size_t from, Subset const& sum) -> void {
        if (found) {
          return;
        }
        if (sum == full) {
          if (is_direct_sum(M, parts).direct) {
            found = parts;
          }
          return;
        }
        for (std::size_t i = from; i < cands.size() && !found; ++i) {
          if ((cands[i] & sum) != zero) {
            continue;
          }
          parts.push_back(cands[i]);
          self(self, i + 1, sum_of(M, sum, cands[i]));
          parts.pop_back();
        }
      };
      rec(rec, 0, zero);
      return found;
    }
  }  // namespace

  SemisimplicityReport semisimplicity_profile(ModulePtr const& M,
                                              Limits const&    limits) {
    SemisimplicityReport out;
    if (M->order() == 1) {
      return out;
    }
    auto subs      = enumerate_submodule_sets(*M, limits);
    out.exhaustive = subs.exhaustive;
    std::vector<Subset> ideal_cands, cong_cands;
    for (auto const& K : subs.items) {
      if (K.size() < 2) {
        continue;
      }
      auto r = simplicity_profile(restrict_module(M, K), limits, false);
      out.exhaustive = out.exhaustive && r.exhaustive;
      if (r.ideal_simple) {
        ideal_cands.push_back(K);
      }
      if (r.congruence_simple) {
        cong_cands.push_back(K);
      }
    }
    out.ideal_candidates      = ideal_cands.size();
    out.congruence_candidates = cong_cands.size();
    out.ideal_witness         = find_decomposition(*M, ideal_cands);
    out.congruence_witness    = find_decomposition(*M, cong_cands);
    out.ideal_semisimple      = out.ideal_witness.has_value();
    out.congruence_semisimple = out.congruence_witness.has_value();
    return out;
  }

  SemisimplicityReport semisimplicity_profile(SemiringTable const& S,
                                              Limits const&        limits) {
    return semisimplicity_profile(regular_module(share(S)), limits);
  }

  ConditionProfile condition_profile(ModulePtr const& N,
                                     Limits const&    limits) {
    ConditionProfile out;
    auto             subs = enumerate_subsemimodules(N, limits, true);
    auto const       P    = summand_poset(N, limits);
    out.exhaustive        = subs.exhaustive && P.exhaustive;
    std::vector<Subset> sub;
    for (auto const& s : subs.items) {
      sub.push_back(s.members);
    }

    out.C1 = true;
    for (auto const& M : sub) {
      if (!P.is_summand(M)) {
        out.C1         = false;
        out.c1_witness = M;
        break;
      }
    }

    out.C2      = true;
    out.C2prime = true;
    auto strict = [](Subset const& a, Subset const& b) {
      return a != b && a.is_subset_of(b);
    };
    for (auto const& M : sub) {
      auto const Mmod = restrict_module(N, M);
      auto const idx  = M.elements();
      for (auto const& L : sub) {
        if (!strict(L, M)) {
          continue;
        }
        bool maximal = true;
        for (auto const& K : sub) {
          if (strict(L, K) && strict(K, M)) {
            maximal = false;
            break;
          }
        }
        if (!maximal) {
          continue;
        }
        ++out.num_pairs;
        Subset Lm(Mmod->order());
        for (elem_t k = 0; k < idx.size(); ++k) {
          if (L.contains(idx[k])) {
            Lm.insert(k);
          }
        }
        auto const q = bourne_quotient(Mmod, Lm);
        auto const r = simplicity_profile(q.module, limits, false);
        out.exhaustive = out.exhaustive && r.exhaustive;
        if (!r.ideal_simple && out.C2) {
          out.C2         = false;
          out.c2_witness = std::make_pair(M, L);
        }
        if (!r.congruence_simple && out.C2prime) {
          out.C2prime         = false;
          out.c2prime_witness = std::make_pair(M, L);
        }
      }
    }
    return out;
  }

  ConditionProfile condition_profile(SemiringTable const& S,
                                     Limits const&        limits) {
    return condition_profile(regular_module(share(S)), limits);
  }

  ComsumReport comsum_check(SemiringTable const&       S,
                            std::vector<Subset> const& parts,
                            Limits const&              limits) {
    if (!S.is_commutative()) {
      throw HypothesisUnmet("comsum: S is not commutative");
    }
    auto const R = regular_module(share(S));
    if (!is_direct_sum(*R, parts).direct) {
      throw HypothesisUnmet("comsum: parts are not a direct decomposition");
    }
    auto const   P    = summand_poset(R, limits);
    auto const   subs = enumerate_subsemimodules(R, limits, true);
    Subset const zero(S.order(), {S.zero()});
    ComsumReport out;
    for (auto const& I : subs.items) {
      ComsumCertificate c{I.members, {}};
      std::vector<Subset> met;
      for (std::size_t a = 0; a < parts.size(); ++a) {
        if ((parts[a] & I.members) != zero) {
          c.parts.push_back(a);
          met.push_back(parts[a]);
        }
      }
      c.is_sub_sum = is_direct_sum(*R, I.members, met).direct;
      c.is_summand = P.is_summand(I.members);
      out.holds    = out.holds && c.is_sub_sum && c.is_summand;
      out.certificates.push_back(std::move(c));
    }
    out.holds = out.holds && subs.exhaustive;
    return out;
  }

}  // namespace semilab
