//
// semilab - finite semirings, semimodules and their structure theory
//

#include "semilab/homs.hpp"

#include <algorithm>  // for sort, is_permutation

#include "semilab/errors.hpp"   // for CrosscheckFailure, NotComposable
#include "semilab/kernels.hpp"  // for close

namespace semilab {

  namespace {
    constexpr elem_t unset = static_cast<elem_t>(-1);

    // Backtracking over the images of a generating set.  Every assignment
    // is saturated through addition and the action, so a conflict prunes
    // the branch immediately and a full assignment of the generators is a
    // total linear map.
    class HomSearch {
     public:
      HomSearch(SemimoduleTable const& M,
                SemimoduleTable const& N,
                std::size_t            max_nodes,
                bool                   bijective)
          : _M(M),
            _N(N),
            _img(M.order(), unset),
            _used(N.order(), false),
            _max_nodes(max_nodes),
            _bijective(bijective) {
        _gens = generating_set(M);
        if (bijective) {
          _sig_m = additive_signatures(M.add_table());
          _sig_n = additive_signatures(N.add_table());
        }
      }

      // Calls found(image) for every map; found returns false to stop.
      template <typename Found>
      bool run(Found&& found) {
        if (!assign(_M.zero(), _N.zero()) || !propagate()) {
          return true;
        }
        return recurse(0, found);
      }

      bool exhausted_budget() const noexcept {
        return _out_of_budget;
      }

     private:
      bool assign(elem_t x, elem_t y) {
        if (_img[x] != unset) {
          return _img[x] == y;
        }
        if (_bijective && (_used[y] || _sig_m[x] != _sig_n[y])) {
          return false;
        }
        _img[x] = y;
        _used[y] = true;
        _known.push_back(x);
        return true;
      }

      bool propagate() {
        while (_done < _known.size()) {
          elem_t const a = _known[_done++];
          for (std::size_t i = 0; i < _done; ++i) {
            elem_t const b = _known[i];
            if (!assign(_M.add(a, b), _N.add(_img[a], _img[b]))) {
              return false;
            }
          }
          for (elem_t s = 0; s < _M.base()->order(); ++s) {
            if (!assign(_M.act(s, a), _N.act(s, _img[a]))) {
              return false;
            }
          }
        }
        return true;
      }

      void undo(std::size_t mark) {
        while (_known.size() > mark) {
          auto x = _known.back();
          _known.pop_back();
          _used[_img[x]] = false;
          _img[x]        = unset;
        }
        _done = std::min(_done, mark);
      }

      template <typename Found>
      bool recurse(std::size_t k, Found& found) {
        if (k == _gens.size()) {
          return found(_img);
        }
        elem_t const g = _gens[k];
        if (_img[g] != unset) {
          return recurse(k + 1, found);
        }
        for (elem_t y = 0; y < _N.order(); ++y) {
          if (++_nodes > _max_nodes) {
            _out_of_budget = true;
            return false;
          }
          std::size_t const mark = _known.size();
          std::size_t const done = _done;
          if (assign(g, y) && propagate()) {
            if (!recurse(k + 1, found)) {
              undo(mark);
              _done = done;
              return false;
            }
          }
          undo(mark);
          _done = done;
        }
        return true;
      }

      SemimoduleTable const& _M;
      SemimoduleTable const& _N;
      std::vector<elem_t>    _gens;
      std::vector<elem_t>    _img;
      std::vector<bool>      _used;
      std::vector<elem_t>    _known;
      std::size_t            _done      = 0;
      std::size_t            _nodes     = 0;
      std::size_t            _max_nodes = 0;
      bool                   _bijective = false;
      bool                   _out_of_budget = false;
      std::vector<std::pair<std::size_t, std::size_t>> _sig_m, _sig_n;
    };
  }  // namespace

  std::vector<elem_t> generating_set(SemimoduleTable const& M) {
    std::vector<elem_t> gens;
    Subset              span = kernels::close(M, Subset(M.order()));
    for (elem_t x = 0; x < M.order() && !span.is_full(); ++x) {
      if (!span.contains(x)) {
        gens.push_back(x);
        span.insert(x);
        span = kernels::close(M, span);
      }
    }
    return gens;
  }

  Enumeration<LinearMap> enumerate_homs(ModulePtr const& M,
                                        ModulePtr const& N,
                                        Limits const&    limits) {
    if (!same_base(*M, *N)) {
      throw NotLinear("Hom between semimodules over different semirings");
    }
    Enumeration<LinearMap> out;
    HomSearch              search(*M, *N, limits.max_hom_nodes, false);
    search.run([&](std::vector<elem_t> const& img) {
      if (out.items.size() >= limits.max_results) {
        out.exhaustive = false;
        return false;
      }
      out.items.push_back(LinearMap{M, N, img});
      return true;
    });
    if (search.exhausted_budget()) {
      out.exhaustive = false;
    }
    std::sort(out.items.begin(),
              out.items.end(),
              [](LinearMap const& f, LinearMap const& g) {
                return f.image < g.image;
              });
    return out;
  }

  Maybe<LinearMap> find_isomorphism(ModulePtr const& A,
                                    ModulePtr const& B,
                                    Limits const&    limits) {
    Maybe<LinearMap> out;
    out.status = Search::absent;
    if (A->order() != B->order() || !same_base(*A, *B)) {
      return out;
    }
    auto sa = additive_signatures(A->add_table());
    auto sb = additive_signatures(B->add_table());
    if (!std::is_permutation(sa.begin(), sa.end(), sb.begin(), sb.end())) {
      return out;
    }
    HomSearch search(*A, *B, limits.max_hom_nodes, true);
    search.run([&](std::vector<elem_t> const& img) {
      out.status  = Search::present;
      out.witness = LinearMap{A, B, img};
      return false;
    });
    if (!out.present() && search.exhausted_budget()) {
      out.status = Search::unknown;
    }
    return out;
  }

  KernelImage kernel_image(LinearMap const& f) {
    auto kernel = make_substructure(f.source, kernel_of(f));
    if (!kernel.is_subtractive()) {
      throw CrosscheckFailure("kernel " + kernel.members.to_string()
                              + " is not subtractive");
    }
    auto image = make_substructure(f.target, image_of(f));
    auto cl    = make_substructure(f.target, image.closure);
    return {std::move(kernel), std::move(image), std::move(cl)};
  }

  bool is_k_normal(OpTable const&             src_add,
                   std::vector<elem_t> const& image,
                   elem_t                     target_zero) {
    std::size_t const   n = image.size();
    std::vector<elem_t> ker;
    for (elem_t x = 0; x < n; ++x) {
      if (image[x] == target_zero) {
        ker.push_back(x);
      }
    }
    std::vector<Subset> shifts(n, Subset(n));
    for (elem_t x = 0; x < n; ++x) {
      for (auto k : ker) {
        shifts[x].insert(src_add(x, k));
      }
    }
    for (elem_t x = 0; x < n; ++x) {
      for (elem_t y = x + 1; y < n; ++y) {
        if (image[x] == image[y] && !shifts[x].intersects(shifts[y])) {
          return false;
        }
      }
    }
    return true;
  }

  Normality normality_profile(LinearMap const& f) {
    Normality out;
    out.k_normal = is_k_normal(
        f.source->add_table(), f.image, f.target->zero());
    auto const im = image_of(f);
    out.i_normal  = closure_members(*f.target, im) == im;
    out.normal    = out.k_normal && out.i_normal;
    return out;
  }

  SequenceSpec SequenceSpec::make(std::vector<ModulePtr> objects,
                                  std::vector<LinearMap> maps) {
    if (objects.size() != maps.size() + 1) {
      throw NotComposable("a sequence of n maps needs n+1 objects");
    }
    for (std::size_t i = 0; i < maps.size(); ++i) {
      if (maps[i].image.size() != objects[i]->order()
          || maps[i].target->order() != objects[i + 1]->order()) {
        throw NotComposable("map " + std::to_string(i)
                            + " does not fit between its objects");
      }
    }
    return {std::move(objects), std::move(maps)};
  }

  SequenceSpec SequenceSpec::short_sequence(LinearMap const& f,
                                            LinearMap const& g) {
    auto zero = zero_module(f.source->base());
    return make({zero, f.source, f.target, g.target, zero},
                {zero_map(zero, f.source), f, g, zero_map(g.target, zero)});
  }

  JunctionFlags classify_junction(OpTable const&             m_add,
                                  elem_t                     m_zero,
                                  std::vector<elem_t> const& f,
                                  std::vector<elem_t> const& g,
                                  elem_t                     n_zero) {
    std::size_t const n = g.size();
    Subset            fl(n), ker(n), closure(n);
    for (auto y : f) {
      fl.insert(y);
    }
    for (elem_t m = 0; m < n; ++m) {
      if (g[m] == n_zero) {
        ker.insert(m);
      }
      bool in = false;
      fl.for_each([&](elem_t l) { in = in || fl.contains(m_add(m, l)); });
      if (in) {
        closure.insert(m);
      }
    }
    (void) m_zero;
    JunctionFlags out;
    out.proper_exact = fl == ker;
    out.semi_exact   = closure == ker;
    out.exact        = out.proper_exact && is_k_normal(m_add, g, n_zero);
    return out;
  }

  std::vector<JunctionFlags> classify_sequence(SequenceSpec const& seq) {
    std::vector<JunctionFlags> out;
    for (std::size_t i = 1; i + 1 < seq.objects.size(); ++i) {
      out.push_back(classify_junction(seq.objects[i]->add_table(),
                                      seq.objects[i]->zero(),
                                      seq.maps[i - 1].image,
                                      seq.maps[i].image,
                                      seq.objects[i + 1]->zero()));
    }
    return out;
  }

  bool is_exact(SequenceSpec const& seq) {
    for (auto const& j : classify_sequence(seq)) {
      if (!j.exact) {
        return false;
      }
    }
    return true;
  }

  namespace {
    template <typename Pred>
    Maybe<LinearMap> first_hom(ModulePtr const& A,
                               ModulePtr const& B,
                               Limits const&    limits,
                               Pred&&           pred) {
      Maybe<LinearMap> out;
      auto             homs = enumerate_homs(A, B, limits);
      for (auto& h : homs.items) {
        if (pred(h)) {
          out.status  = Search::present;
          out.witness = std::move(h);
          return out;
        }
      }
      out.status = homs.exhaustive ? Search::absent : Search::unknown;
      return out;
    }
  }  // namespace

  Maybe<LinearMap> find_retraction(LinearMap const& f, Limits const& limits) {
    return first_hom(f.target, f.source, limits, [&](LinearMap const& r) {
      for (elem_t x = 0; x < f.image.size(); ++x) {
        if (r.image[f.image[x]] != x) {
          return false;
        }
      }
      return true;
    });
  }

  Maybe<LinearMap> find_section(LinearMap const& g, Limits const& limits) {
    return first_hom(g.target, g.source, limits, [&](LinearMap const& s) {
      for (elem_t y = 0; y < s.image.size(); ++y) {
        if (g.image[s.image[y]] != y) {
          return false;
        }
      }
      return true;
    });
  }

  SplittingProfile splitting_profile(LinearMap const& f,
                                     LinearMap const& g,
                                     Limits const&    limits) {
    return {find_retraction(f, limits), find_section(g, limits)};
  }

  ExactnessCheck check_exactness(LinearMap const& f,
                                 LinearMap const& g,
                                 Limits const&    limits) {
    ExactnessCheck out;
    auto const     seq   = SequenceSpec::short_sequence(f, g);
    auto const     flags = classify_sequence(seq);
    out.exact = flags[0].exact && flags[1].exact && flags[2].exact;

    auto const& M   = f.target;
    auto const  fl  = image_of(f);
    auto const  ker = kernel_of(g);
    bool const  inj = is_injective(f);
    bool const  sur = is_surjective(g);
    bool const  kn  = is_k_normal(M->add_table(), g.image, g.target->zero());

    out.elementwise     = inj && fl == ker && sur && kn;
    out.lemma_exact_1_2 = flags[0].exact == inj && flags[2].exact == sur;

    // (2) through induced maps: f corestricts to a bijection L -> Ker g,
    // and g factors through a bijection M/f(L) -> N.
    bool const  f_iso = inj && fl == ker;
    auto const  rho   = bourne_congruence(*M, fl);
    bool        g_iso = sur;
    for (elem_t a = 0; a < M->order() && g_iso; ++a) {
      for (elem_t b = a + 1; b < M->order() && g_iso; ++b) {
        g_iso = rho.related(a, b) == (g.image[a] == g.image[b]);
      }
    }
    out.induced_isos = f_iso && g_iso;

    auto const kmod = restrict_module(M, ker);
    auto const i1   = find_isomorphism(f.source, kmod, limits);
    auto const q    = quotient_by_congruence(M, rho);
    auto const i2   = find_isomorphism(q.module, g.target, limits);
    out.abstract_isos = i1.present() && i2.present();
    out.exhaustive    = i1.status != Search::unknown
                     && i2.status != Search::unknown;

    if (out.exact) {
      out.normal_maps = normality_profile(f).normal
                        && normality_profile(g).normal;
    }
    return out;
  }

}  // namespace semilab
