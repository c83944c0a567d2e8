//
// semilab - finite semirings, semimodules and their structure theory
//

#ifndef SEMILAB_CATALOG_HPP_
#define SEMILAB_CATALOG_HPP_

#include <optional>  // for optional
#include <vector>    // for vector

#include "limits.hpp"  // for Limits
#include "tables.hpp"  // for SemiringTable, OpTable

namespace semilab {

  //! B(n, i) on {0, ..., n-1}: sums and products that reach n wrap into
  //! [i, n) modulo n - i.  Throws InvalidParameters unless 0 <= i < n, n >= 2.
  SemiringTable make_B(std::size_t n, std::size_t i);

  struct LatticeSpec {
    std::size_t            order = 0;
    OpTable                join;
    std::optional<OpTable> meet;
    elem_t                 bottom = 0;
    elem_t                 top    = 0;
  };

  //! Checks the join semilattice laws, that bottom and top are the bounds
  //! and, when a meet is given, the absorption laws.  Throws AxiomViolation
  //! or ShapeError.
  void validate_lattice(LatticeSpec const& L);

  //! The meet determined by the join order.
  OpTable lattice_meet(LatticeSpec const& L);

  //! 0 < 1 < ... < n-1.
  LatticeSpec chain_lattice(std::size_t n);
  //! The diamond: bottom 0, atoms 1, 2, 3, top 4.
  LatticeSpec diamond_lattice();
  //! The pentagon: 0 < 1 < 3 < 4 and 0 < 2 < 4.
  LatticeSpec pentagon_lattice();

  //! add = join, mul = meet.  Throws NotDistributive with a failing triple.
  SemiringTable make_lattice_semiring(LatticeSpec const& L);

  struct EndConstruction {
    SemiringTable semiring;
    //! Element k of the semiring is the endomorphism maps[k].
    std::vector<std::vector<elem_t>> maps;
    bool                             preserve_top = false;
  };

  //! Endomorphisms of the join monoid (L, join, bottom) with pointwise join
  //! and composition, (f g)(x) = f(g(x)).  With \p preserve_top only the
  //! zero map and the maps fixing top are kept.  Throws LimitExceeded when
  //! the carrier would exceed limits.max_carrier.
  EndConstruction make_end_semiring(LatticeSpec const& L,
                                    bool               preserve_top,
                                    Limits const&      limits);

  //! k x k matrices over S; a matrix is indexed by its entries read row by
  //! row as base-|S| digits, most significant first.
  SemiringTable make_matrix_semiring(SemiringTable const& S,
                                     std::size_t          k,
                                     Limits const&        limits);

  //! Componentwise product; (a_1, ..., a_r) has mixed-radix index with the
  //! first factor most significant.  Throws InvalidParameters on an empty
  //! list.
  SemiringTable make_product(std::vector<SemiringTable> const& factors);

}  // namespace semilab

#endif  // SEMILAB_CATALOG_HPP_
