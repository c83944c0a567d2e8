//
// semilab - finite semirings, semimodules and their structure theory
//

#ifndef SEMILAB_HOMS_HPP_
#define SEMILAB_HOMS_HPP_

#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "core.hpp"        // for SubStructure
#include "limits.hpp"      // for Limits, Enumeration, Search
#include "linear_map.hpp"  // for LinearMap

namespace semilab {

  //! Outcome of a witness search: present with a witness, absent after an
  //! exhaustive search, or unknown because a limit was hit.
  template <typename T>
  struct Maybe {
    Search           status = Search::unknown;
    std::optional<T> witness;

    bool present() const noexcept {
      return status == Search::present;
    }
    bool absent() const noexcept {
      return status == Search::absent;
    }
  };

  //! Hom_S(M, N) sorted by image vector.
  Enumeration<LinearMap> enumerate_homs(ModulePtr const& M,
                                        ModulePtr const& N,
                                        Limits const&    limits);

  //! Greedy generating set of M: ascending elements not yet generated.
  std::vector<elem_t> generating_set(SemimoduleTable const& M);

  //! First isomorphism A -> B in search order.
  Maybe<LinearMap> find_isomorphism(ModulePtr const& A,
                                    ModulePtr const& B,
                                    Limits const&    limits);

  struct KernelImage {
    SubStructure kernel;
    SubStructure image;
    SubStructure image_closure;
  };

  //! Throws CrosscheckFailure if the kernel is not subtractive.
  KernelImage kernel_image(LinearMap const& f);

  struct Normality {
    bool k_normal = false;
    bool i_normal = false;
    bool normal   = false;
  };

  //! f(m) = f(m') implies m + k = m' + k' for some k, k' in Ker f.  Works on
  //! bare commutative monoids: src_add is the source addition table.
  bool is_k_normal(OpTable const&             src_add,
                   std::vector<elem_t> const& image,
                   elem_t                     target_zero);

  Normality normality_profile(LinearMap const& f);

  //! objects[0] -> objects[1] -> ... with maps[i] : objects[i] ->
  //! objects[i+1].
  struct SequenceSpec {
    std::vector<ModulePtr> objects;
    std::vector<LinearMap> maps;

    //! Throws NotComposable.
    static SequenceSpec make(std::vector<ModulePtr> objects,
                             std::vector<LinearMap> maps);

    //! 0 -> L -> M -> N -> 0.
    static SequenceSpec short_sequence(LinearMap const& f,
                                       LinearMap const& g);
  };

  struct JunctionFlags {
    bool exact        = false;
    bool proper_exact = false;
    bool semi_exact   = false;
  };

  //! One entry per interior object objects[1 .. n-2].
  std::vector<JunctionFlags> classify_sequence(SequenceSpec const& seq);

  bool is_exact(SequenceSpec const& seq);

  //! Exactness of L -f-> M -g-> N for maps between bare commutative monoids
  //! given by addition tables.
  JunctionFlags classify_junction(OpTable const&             m_add,
                                  elem_t                     m_zero,
                                  std::vector<elem_t> const& f,
                                  std::vector<elem_t> const& g,
                                  elem_t                     n_zero);

  struct SplittingProfile {
    Maybe<LinearMap> left;
    Maybe<LinearMap> right;
  };

  //! For 0 -> L -f-> M -g-> N -> 0: a retraction f' with f' f = id and a
  //! section g' with g g' = id.
  SplittingProfile splitting_profile(LinearMap const& f,
                                     LinearMap const& g,
                                     Limits const&    limits);

  Maybe<LinearMap> find_retraction(LinearMap const& f, Limits const& limits);
  Maybe<LinearMap> find_section(LinearMap const& g, Limits const& limits);

  //! The three assertions of the M/L corollary for 0 -> L -> M -> N -> 0.
  //! (2) is read through the induced maps L -> Ker g and M/f(L) -> N; the
  //! abstract isomorphisms are also searched and must agree.
  struct ExactnessCheck {
    bool exact            = false;  // (1)
    bool induced_isos     = false;  // (2)
    bool elementwise      = false;  // (3)
    bool abstract_isos    = false;  // L ~ Ker g and N ~ M/f(L) abstractly
    bool normal_maps      = true;   // f, g normal whenever exact
    bool lemma_exact_1_2  = true;   // injective / surjective ends
    bool exhaustive       = true;
  };

  ExactnessCheck check_exactness(LinearMap const& f,
                                 LinearMap const& g,
                                 Limits const&    limits);

}  // namespace semilab

#endif  // SEMILAB_HOMS_HPP_
