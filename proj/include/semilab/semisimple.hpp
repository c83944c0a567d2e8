//
// semilab - finite semirings, semimodules and their structure theory
//

#ifndef SEMILAB_SEMISIMPLE_HPP_
#define SEMILAB_SEMISIMPLE_HPP_

#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "limits.hpp"     // for Limits
#include "partition.hpp"  // for CongruencePartition
#include "subset.hpp"     // for Subset
#include "tables.hpp"     // for ModulePtr, SemiringTable

namespace semilab {

  struct SimplicityReport {
    bool ideal_simple      = false;
    bool congruence_simple = false;
    //! A proper non-zero subsemimodule, when not ideal-simple.
    std::optional<Subset> ideal_witness;
    //! A congruence other than the trivial two, when not congruence-simple.
    std::optional<CongruencePartition> congruence_witness;
    std::size_t num_subsemimodules = 0;
    std::size_t num_congruences    = 0;
    //! Lemma cross-checks were run (never for the zero semimodule).
    bool crosschecked = false;
    bool exhaustive   = true;
  };

  //! Decides both simplicities by enumeration and cross-checks them against
  //! the map characterisations over the test family (M, its subsemimodules
  //! and its quotients).  Throws CrosscheckFailure on disagreement.
  SimplicityReport simplicity_profile(ModulePtr const& M,
                                      Limits const&    limits,
                                      bool             crosscheck = true);

  //! Simplicity of S as a semiring: two-sided ideals and congruences.
  struct SemiringSimplicity {
    bool ideal_simple      = false;
    bool congruence_simple = false;
    std::optional<Subset>              ideal_witness;
    std::optional<CongruencePartition> congruence_witness;
    bool exhaustive = true;
  };

  SemiringSimplicity semiring_simplicity(SemiringTable const& S,
                                         Limits const&        limits);

  struct SemisimplicityReport {
    bool ideal_semisimple      = false;
    bool congruence_semisimple = false;
    std::optional<std::vector<Subset>> ideal_witness;
    std::optional<std::vector<Subset>> congruence_witness;
    //! Number of ideal-simple / congruence-simple subsemimodules searched.
    std::size_t ideal_candidates      = 0;
    std::size_t congruence_candidates = 0;
    bool        exhaustive            = true;
  };

  //! Searches for decompositions of M into simple subsemimodules.
  SemisimplicityReport semisimplicity_profile(ModulePtr const& M,
                                              Limits const&    limits);

  SemisimplicityReport semisimplicity_profile(SemiringTable const& S,
                                              Limits const&        limits);

  struct ConditionProfile {
    bool C1       = false;
    bool C2       = false;
    bool C2prime  = false;
    //! A subtractive subsemimodule that is not a summand.
    std::optional<Subset> c1_witness;
    //! (M, L) with M/L not ideal-simple / not congruence-simple.
    std::optional<std::pair<Subset, Subset>> c2_witness;
    std::optional<std::pair<Subset, Subset>> c2prime_witness;
    std::size_t num_pairs  = 0;
    bool        exhaustive = true;
  };

  //! C1, C2 and C2' for a semimodule N; maximality of L is taken among the
  //! proper subtractive subsemimodules of M.
  ConditionProfile condition_profile(ModulePtr const& N,
                                     Limits const&    limits);

  ConditionProfile condition_profile(SemiringTable const& S,
                                     Limits const&        limits);

  struct ComsumCertificate {
    Subset              ideal;
    std::vector<std::size_t> parts;  // indices of the parts it meets
    bool                is_sub_sum = false;
    bool                is_summand = false;
  };

  struct ComsumReport {
    std::vector<ComsumCertificate> certificates;
    bool                           holds = true;
  };

  //! Every subtractive ideal of a commutative S = S_1 (+) ... (+) S_k is the
  //! direct sum of the parts it meets and a direct summand.  Throws
  //! HypothesisUnmet unless S is commutative and \p parts is a direct
  //! decomposition of S.
  ComsumReport comsum_check(SemiringTable const&       S,
                            std::vector<Subset> const& parts,
                            Limits const&              limits);

}  // namespace semilab

#endif  // SEMILAB_SEMISIMPLE_HPP_
