//
// semilab - finite semirings, semimodules and their structure theory
//

#ifndef SEMILAB_PROJINJ_HPP_
#define SEMILAB_PROJINJ_HPP_

#include <string>  // for string
#include <vector>  // for vector

#include "limits.hpp"  // for Limits
#include "tables.hpp"  // for ModulePtr, SemiringPtr

namespace semilab {

  enum class Verdict { holds, fails, unknown };

  char const* to_string(Verdict v) noexcept;

  struct Decision {
    Verdict     verdict = Verdict::unknown;
    //! On failure: the subsemimodule and map that refute the property.
    std::string certificate;

    bool holds() const noexcept {
      return verdict == Verdict::holds;
    }
    bool fails() const noexcept {
      return verdict == Verdict::fails;
    }
  };

  //! Conjunction over a list: first failure wins, then unknown.
  void combine(Decision& acc, Decision const& next, std::string const& label);

  struct FamilyMember {
    std::string name;
    ModulePtr   module;
  };

  //! The finite stand-in for "every S-semimodule": S, its left ideals, its
  //! quotients by left congruences and binary direct sums of these with at
  //! most limits.max_family_carrier elements, up to isomorphism.
  struct BoundedFamily {
    std::vector<FamilyMember> members;
    bool                      exhaustive = true;
    std::string               description;
  };

  BoundedFamily bounded_family(SemiringPtr const& S, Limits const& limits);

  //! P is M-k-projective: lifts through every normal surjection out of M.
  //! Normal surjections out of M are, up to isomorphism, the Bourne
  //! projections M -> M/L with L subtractive.
  Decision is_M_k_projective(ModulePtr const& P,
                             ModulePtr const& M,
                             Limits const&    limits);

  //! Hom(P, -) sends every 0 -> L -> M -> M/L -> 0 (L subtractive) to an
  //! exact sequence of commutative monoids.
  Decision is_M_e_projective(ModulePtr const& P,
                             ModulePtr const& M,
                             Limits const&    limits);

  //! J is M-i-injective: maps from every subtractive L <= M extend to M.
  Decision is_M_i_injective(ModulePtr const& J,
                            ModulePtr const& M,
                            Limits const&    limits);

  //! Hom(-, J) sends every 0 -> L -> M -> M/L -> 0 to an exact sequence.
  Decision is_M_e_injective(ModulePtr const& J,
                            ModulePtr const& M,
                            Limits const&    limits);

  //! Replays the explicit extension h1(s) = s e_N j0 of the e-injectivity
  //! argument for every summand subtractive left ideal of S and every J.
  struct WitnessReplay {
    std::size_t              checked = 0;
    std::vector<std::string> failures;
    bool                     exhaustive = true;
  };

  WitnessReplay sum_einj_witness_check(SemiringPtr const&   S,
                                       BoundedFamily const& family,
                                       Limits const&        limits);

}  // namespace semilab

#endif  // SEMILAB_PROJINJ_HPP_
