//
// semilab - finite semirings, semimodules and their structure theory
//

#ifndef SEMILAB_CORE_HPP_
#define SEMILAB_CORE_HPP_

#include <utility>  // for pair
#include <vector>   // for vector

#include "limits.hpp"      // for Limits, Enumeration
#include "linear_map.hpp"  // for LinearMap
#include "partition.hpp"   // for CongruencePartition
#include "subset.hpp"      // for Subset
#include "tables.hpp"      // for ModulePtr, SemiringTable

namespace semilab {

  //! A subsemimodule of parent together with its subtractive closure.
  struct SubStructure {
    ModulePtr parent;
    Subset    members;
    Subset    closure;

    bool is_subtractive() const noexcept {
      return members == closure;
    }
  };

  //! {m : m + l = l' for some l, l' in L}.  L need not be closed.
  Subset closure_members(SemimoduleTable const& M, Subset const& L);

  //! Throws Error if L is not a subsemimodule.
  SubStructure make_substructure(ModulePtr M, Subset L);

  SubStructure generated_subsemimodule(ModulePtr M, Subset const& seed);

  //! The closure as a SubStructure; cross-checked against the kernel of the
  //! Bourne projection M -> M/L (throws CrosscheckFailure on mismatch).
  SubStructure subtractive_closure(SubStructure const& L);

  //! m == m' iff m + n = m' + n' for some n, n' in N.
  CongruencePartition bourne_congruence(SemimoduleTable const& M,
                                        Subset const&          N);

  struct Quotient {
    ModulePtr module;
    LinearMap projection;
  };

  //! Quotient on class ids; throws IncompatiblePartition.
  Quotient quotient_by_congruence(ModulePtr const&           M,
                                  CongruencePartition const& rho);

  inline Quotient bourne_quotient(ModulePtr const& M, Subset const& N) {
    return quotient_by_congruence(M, bourne_congruence(*M, N));
  }

  CongruencePartition
  congruence_closure(SemimoduleTable const&                 M,
                     std::vector<std::pair<elem_t, elem_t>> const& pairs);

  CongruencePartition
  congruence_closure(SemiringTable const&                   S,
                     std::vector<std::pair<elem_t, elem_t>> const& pairs);

  //! Ascending bitset order.
  Enumeration<SubStructure> enumerate_subsemimodules(ModulePtr const& M,
                                                     Limits const&    limits,
                                                     bool subtractive_only
                                                     = false);

  //! Member sets only; cheaper when closures are not needed.
  Enumeration<Subset> enumerate_submodule_sets(SemimoduleTable const& M,
                                               Limits const&          limits);

  Enumeration<CongruencePartition>
  enumerate_congruences(SemimoduleTable const& M, Limits const& limits);

  //! Two-sided congruences of the semiring.
  Enumeration<CongruencePartition>
  enumerate_congruences(SemiringTable const& S, Limits const& limits);

  //! Two-sided ideals of S.
  Enumeration<Subset> enumerate_ideals(SemiringTable const& S,
                                       Limits const&        limits);

  //! Sum L + K of two subsets of M.
  Subset sum_of(SemimoduleTable const& M, Subset const& L, Subset const& K);

}  // namespace semilab

#endif  // SEMILAB_CORE_HPP_
