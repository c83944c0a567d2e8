//
// semilab - finite semirings, semimodules and their structure theory
//

#ifndef SEMILAB_SUMMANDS_HPP_
#define SEMILAB_SUMMANDS_HPP_

#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "homs.hpp"        // for Maybe
#include "limits.hpp"      // for Limits
#include "linear_map.hpp"  // for LinearMap
#include "subset.hpp"      // for Subset
#include "tables.hpp"      // for ModulePtr, SemiringTable

namespace semilab {

  struct DirectSumCheck {
    bool direct = false;
    //! Why not: an uncovered element, or an element with two
    //! representations (listed as the two tuples).
    std::string witness;
  };

  //! True iff every element of \p whole is uniquely a sum of one member from
  //! each part and nothing outside \p whole is such a sum.
  DirectSumCheck is_direct_sum(SemimoduleTable const&     M,
                               Subset const&              whole,
                               std::vector<Subset> const& parts);

  inline DirectSumCheck is_direct_sum(SemimoduleTable const&     M,
                                      std::vector<Subset> const& parts) {
    return is_direct_sum(M, Subset::full(M.order()), parts);
  }

  //! The endomorphism semiring: pointwise addition, (f g)(x) = f(g(x)).
  //! Element i is maps[i]; maps are sorted by image vector.
  struct EndSemiring {
    std::optional<SemiringTable> semiring;
    std::vector<LinearMap>       maps;
    //! End of the zero semimodule has 0 = 1 and is not a semiring.
    bool degenerate = false;
  };

  //! Throws LimitExceeded if Hom(M, M) is not exhaustively enumerable.
  EndSemiring end_semiring(ModulePtr const& M, Limits const& limits);

  struct CompElement {
    elem_t              t;
    std::vector<elem_t> complements;
  };

  //! Elements t with some u: t + u = 1, t u = 0 = u t.
  std::vector<CompElement> comp_elements(SemiringTable const& T);

  struct Summand {
    Subset    members;
    Subset    complement;
    LinearMap projection;             // alpha, image = members
    LinearMap complement_projection;  // alpha~, image = complement
  };

  struct GolanRecord {
    Subset members;
    bool   direct_summand = false;  // (1)
    bool   comp_image     = false;  // (2)
    bool   bourne_trivial = false;  // (3)
  };

  struct SummandPoset {
    ModulePtr            parent;
    std::vector<Summand> nodes;  // ascending by members
    bool                 exhaustive = true;
    //! Number of summands in a longest strictly increasing chain.
    std::size_t longest_chain = 0;

    Summand const* find(Subset const& members) const;
    bool           is_summand(Subset const& members) const {
      return find(members) != nullptr;
    }
  };

  SummandPoset summand_poset(ModulePtr const& M, Limits const& limits);

  //! The three conditions of the direct-summand lemma, evaluated for every
  //! subsemimodule of M independently.
  std::vector<GolanRecord> golan_16_6(ModulePtr const& M,
                                      Limits const&    limits);

  //! An idempotent endomorphism with image N.
  Maybe<LinearMap> retract_check(ModulePtr const& M,
                                 Subset const&    N,
                                 Limits const&    limits);

  struct Decomposition {
    ModulePtr              parent;
    std::vector<Subset>    parts;
    std::vector<LinearMap> idempotents;
  };

  //! Irreducible summands of M following the chain construction: a maximal
  //! chain of summands through the smallest non-trivial one, then
  //! K_{i+1} = D_{i+1} cap L_i.  Throws CrosscheckFailure if a produced
  //! part is not an irreducible summand or the projections misbehave, and
  //! Error for the zero semimodule.
  Decomposition irreducible_decomposition(ModulePtr const& M,
                                          Limits const&    limits);

  //! {0} is the only maximal summand of N and N != 0.
  bool is_irreducible(ModulePtr const& N, Limits const& limits);

  //! Projections e_i: M -> M onto each part along the others.
  std::vector<LinearMap> part_projections(ModulePtr const&           M,
                                          std::vector<Subset> const& parts);

  //! e_i e_j = 0 (i != j), e_i e_i = e_i, sum e_i = id.
  bool projections_orthogonal(ModulePtr const&              M,
                              std::vector<LinearMap> const& e);

  //! If M = L (+) K, L <= N and N subtractive then N = L (+) (K cap N).
  //! Returns the number of (L, K, N) triples checked and the failures.
  struct LemintReport {
    std::size_t              checked = 0;
    std::vector<std::string> failures;
    bool                     exhaustive = true;
  };

  LemintReport lemint_check(ModulePtr const& M, Limits const& limits);

}  // namespace semilab

#endif  // SEMILAB_SUMMANDS_HPP_
