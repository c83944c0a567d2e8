//
// semilab - finite semirings, semimodules and their structure theory
//

#ifndef SEMILAB_LINEAR_MAP_HPP_
#define SEMILAB_LINEAR_MAP_HPP_

#include <string>  // for string
#include <vector>  // for vector

#include "subset.hpp"  // for Subset, elem_t
#include "tables.hpp"  // for ModulePtr

namespace semilab {

  //! An S-linear map recorded by its image array.  Only make_linear_map and
  //! the library's own constructions produce these.
  struct LinearMap {
    ModulePtr           source;
    ModulePtr           target;
    std::vector<elem_t> image;

    elem_t operator()(elem_t x) const noexcept {
      return image[x];
    }

    //! "0 2 2"
    std::string to_string() const;

    friend bool operator==(LinearMap const& f, LinearMap const& g) {
      return f.image == g.image;
    }
  };

  //! Throws NotLinear naming the failing law, or ShapeError.
  LinearMap make_linear_map(ModulePtr                  source,
                            ModulePtr                  target,
                            std::vector<elem_t> const& image);

  //! The first failing law, or the empty string for a linear map.
  std::string linearity_failure(SemimoduleTable const&     source,
                                SemimoduleTable const&     target,
                                std::vector<elem_t> const& image);

  bool same_base(SemimoduleTable const& A, SemimoduleTable const& B);

  LinearMap identity_map(ModulePtr const& M);
  LinearMap zero_map(ModulePtr const& M, ModulePtr const& N);
  //! Inclusion of restrict_module(M, L) into M.
  LinearMap inclusion_map(ModulePtr const& sub, ModulePtr const& M,
                          Subset const& L);

  //! g o f; throws NotComposable.
  LinearMap compose(LinearMap const& g, LinearMap const& f);
  //! Pointwise f + g; throws NotComposable unless parallel.
  LinearMap pointwise_sum(LinearMap const& f, LinearMap const& g);

  bool is_injective(LinearMap const& f);
  bool is_surjective(LinearMap const& f);
  bool is_zero_map(LinearMap const& f);
  Subset kernel_of(LinearMap const& f);
  Subset image_of(LinearMap const& f);

}  // namespace semilab

#endif  // SEMILAB_LINEAR_MAP_HPP_
