//
// semilab - finite semirings, semimodules and their structure theory
//

// The search kernels: closure-of-subsets enumeration of substructures,
// join-closure enumeration of congruence lattices, axiom checking and
// isomorphism-free enumeration of small semirings.
//
// Every kernel comes as a pair.  The *_serial version is the reference
// implementation and is what the tests compare against; the *_omp version
// distributes the data-parallel inner loop with OpenMP and merges results
// back into canonical order, so both return identical values for any thread
// count.

#ifndef SEMILAB_KERNELS_HPP_
#define SEMILAB_KERNELS_HPP_

#include <cstddef>  // for size_t
#include <utility>  // for pair
#include <vector>   // for vector

#include "errors.hpp"     // for Violation
#include "limits.hpp"     // for Limits, Enumeration
#include "partition.hpp"  // for CongruencePartition, UnaryFamily
#include "subset.hpp"     // for Subset
#include "tables.hpp"     // for OpTable, SemimoduleTable, SemiringTable

namespace semilab::kernels {

  using ElemPair = std::pair<elem_t, elem_t>;

  ////////////////////////////////////////////////////////////////////////
  // Axioms
  ////////////////////////////////////////////////////////////////////////

  std::vector<Violation> semiring_violations_serial(OpTable const& add,
                                                    OpTable const& mul,
                                                    elem_t         zero,
                                                    elem_t         one,
                                                    std::size_t max_reported);

  //! Violations are reported in the same order as the serial kernel.
  std::vector<Violation> semiring_violations_omp(OpTable const& add,
                                                 OpTable const& mul,
                                                 elem_t         zero,
                                                 elem_t         one,
                                                 std::size_t    max_reported,
                                                 int            threads);

  ////////////////////////////////////////////////////////////////////////
  // Substructures
  ////////////////////////////////////////////////////////////////////////

  //! Smallest subset containing seed and zero, closed under + and action.
  Subset close(SemimoduleTable const& M, Subset const& seed);

  //! Every subsemimodule of M, in ascending Subset order.
  Enumeration<Subset> substructures_serial(SemimoduleTable const& M,
                                           Limits const&          limits);
  Enumeration<Subset> substructures_omp(SemimoduleTable const& M,
                                        Limits const&          limits);

  ////////////////////////////////////////////////////////////////////////
  // Congruences
  ////////////////////////////////////////////////////////////////////////

  //! Smallest fam-compatible partition coarser than \p base that relates
  //! every pair in \p pairs.  \p base must itself be compatible.
  CongruencePartition join_closure(UnaryFamily const&           fam,
                                   CongruencePartition const&   base,
                                   std::vector<ElemPair> const& pairs);

  //! Every fam-compatible partition, in canonical partition order.
  Enumeration<CongruencePartition> congruences_serial(UnaryFamily const& fam,
                                                      Limits const& limits);
  Enumeration<CongruencePartition> congruences_omp(UnaryFamily const& fam,
                                                   Limits const&      limits);

  ////////////////////////////////////////////////////////////////////////
  // Semirings of a given order
  ////////////////////////////////////////////////////////////////////////

  //! All semirings with carrier {0, ..., order-1}, zero 0 and one 1, up to
  //! isomorphism.  The representative of each class is the one whose
  //! (add, mul) table pair is lexicographically smallest among all
  //! relabellings fixing 0 and 1; output is sorted by that pair.
  Enumeration<SemiringTable> semirings_serial(std::size_t   order,
                                              bool          commutative_only,
                                              Limits const& limits);
  Enumeration<SemiringTable> semirings_omp(std::size_t   order,
                                           bool          commutative_only,
                                           Limits const& limits);

  //! True if (add, mul) is the canonical representative of its class.
  bool is_canonical(OpTable const& add, OpTable const& mul);

}  // namespace semilab::kernels

#endif  // SEMILAB_KERNELS_HPP_
