//
// semilab - finite semirings, semimodules and their structure theory
//

#include "semilab/linear_map.hpp"

#include <sstream>  // for ostringstream

#include "semilab/errors.hpp"  // for NotLinear, NotComposable, ShapeError

namespace semilab {

  std::string LinearMap::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < image.size(); ++i) {
      os << (i == 0 ? "" : " ") << image[i];
    }
    return os.str();
  }

  bool same_base(SemimoduleTable const& A, SemimoduleTable const& B) {
    return A.base() == B.base() || *A.base() == *B.base();
  }

  std::string linearity_failure(SemimoduleTable const&     M,
                                SemimoduleTable const&     N,
                                std::vector<elem_t> const& f) {
    auto w = [](char const* law, std::initializer_list<elem_t> xs) {
      std::ostringstream os;
      os << law;
      for (auto x : xs) {
        os << " " << x;
      }
      return os.str();
    };
    if (f[M.zero()] != N.zero()) {
      return "zero not preserved";
    }
    for (elem_t a = 0; a < M.order(); ++a) {
      for (elem_t b = a; b < M.order(); ++b) {
        if (f[M.add(a, b)] != N.add(f[a], f[b])) {
          return w("additivity fails at", {a, b});
        }
      }
      for (elem_t s = 0; s < M.base()->order(); ++s) {
        if (f[M.act(s, a)] != N.act(s, f[a])) {
          return w("homogeneity fails at scalar/element", {s, a});
        }
      }
    }
    return "";
  }

  LinearMap make_linear_map(ModulePtr                  source,
                            ModulePtr                  target,
                            std::vector<elem_t> const& image) {
    if (!same_base(*source, *target)) {
      throw NotLinear("source and target have different base semirings");
    }
    if (image.size() != source->order()) {
      throw ShapeError("map has " + std::to_string(image.size())
                       + " images, source has "
                       + std::to_string(source->order()) + " elements");
    }
    for (auto y : image) {
      if (y >= target->order()) {
        throw ShapeError("map image " + std::to_string(y) + " out of range");
      }
    }
    if (auto why = linearity_failure(*source, *target, image); !why.empty()) {
      throw NotLinear(why);
    }
    return {std::move(source), std::move(target), image};
  }

  LinearMap identity_map(ModulePtr const& M) {
    std::vector<elem_t> img(M->order());
    for (elem_t x = 0; x < M->order(); ++x) {
      img[x] = x;
    }
    return {M, M, std::move(img)};
  }

  LinearMap zero_map(ModulePtr const& M, ModulePtr const& N) {
    return {M, N, std::vector<elem_t>(M->order(), N->zero())};
  }

  LinearMap inclusion_map(ModulePtr const& sub,
                          ModulePtr const& M,
                          Subset const&    L) {
    return {sub, M, L.elements()};
  }

  LinearMap compose(LinearMap const& g, LinearMap const& f) {
    if (f.target->order() != g.source->order()) {
      throw NotComposable("target of first map does not match source of "
                          "second");
    }
    std::vector<elem_t> img(f.image.size());
    for (std::size_t x = 0; x < img.size(); ++x) {
      img[x] = g.image[f.image[x]];
    }
    return {f.source, g.target, std::move(img)};
  }

  LinearMap pointwise_sum(LinearMap const& f, LinearMap const& g) {
    if (f.image.size() != g.image.size()
        || f.target->order() != g.target->order()) {
      throw NotComposable("maps are not parallel");
    }
    std::vector<elem_t> img(f.image.size());
    for (std::size_t x = 0; x < img.size(); ++x) {
      img[x] = f.target->add(f.image[x], g.image[x]);
    }
    return {f.source, f.target, std::move(img)};
  }

  bool is_injective(LinearMap const& f) {
    Subset seen(f.target->order());
    for (auto y : f.image) {
      if (seen.contains(y)) {
        return false;
      }
      seen.insert(y);
    }
    return true;
  }

  bool is_surjective(LinearMap const& f) {
    return image_of(f).is_full();
  }

  bool is_zero_map(LinearMap const& f) {
    for (auto y : f.image) {
      if (y != f.target->zero()) {
        return false;
      }
    }
    return true;
  }

  Subset kernel_of(LinearMap const& f) {
    Subset k(f.source->order());
    for (elem_t x = 0; x < f.image.size(); ++x) {
      if (f.image[x] == f.target->zero()) {
        k.insert(x);
      }
    }
    return k;
  }

  Subset image_of(LinearMap const& f) {
    Subset im(f.target->order());
    for (auto y : f.image) {
      im.insert(y);
    }
    return im;
  }

}  // namespace semilab
