//
// semilab - finite semirings, semimodules and their structure theory
//

#include "semilab/summands.hpp"

#include <algorithm>  // for sort, lower_bound
#include <map>        // for map
#include <sstream>    // for ostringstream

#include "semilab/core.hpp"    // for enumerate_submodule_sets, ...
#include "semilab/errors.hpp"  // for LimitExceeded, CrosscheckFailure

namespace semilab {

  namespace {
    std::string tuple_string(std::vector<elem_t> const& t) {
      std::ostringstream os;
      os << "(";
      for (std::size_t i = 0; i < t.size(); ++i) {
        os << (i == 0 ? "" : ",") << t[i];
      }
      os << ")";
      return os.str();
    }

    // Calls f(tuple, sum) for every choice of one member per part.
    template <typename F>
    bool for_each_tuple(SemimoduleTable const&     M,
                        std::vector<Subset> const& parts,
                        F&&                        f) {
      std::vector<std::vector<elem_t>> elems;
      for (auto const& p : parts) {
        elems.push_back(p.elements());
        if (elems.back().empty()) {
          return true;
        }
      }
      std::vector<std::size_t> idx(parts.size(), 0);
      std::vector<elem_t>      tuple(parts.size());
      while (true) {
        elem_t sum = M.zero();
        for (std::size_t i = 0; i < parts.size(); ++i) {
          tuple[i] = elems[i][idx[i]];
          sum      = M.add(sum, tuple[i]);
        }
        if (!f(tuple, sum)) {
          return false;
        }
        std::size_t i = 0;
        while (i < parts.size() && ++idx[i] == elems[i].size()) {
          idx[i++] = 0;
        }
        if (i == parts.size()) {
          return true;
        }
      }
    }
  }  // namespace

  DirectSumCheck is_direct_sum(SemimoduleTable const&     M,
                               Subset const&              whole,
                               std::vector<Subset> const& parts) {
    DirectSumCheck                   out;
    std::vector<std::vector<elem_t>> rep(M.order());
    Subset                           covered(M.order());
    bool                             ok = for_each_tuple(
        M, parts, [&](std::vector<elem_t> const& t, elem_t sum) {
          if (!whole.contains(sum)) {
            out.witness = "sum " + tuple_string(t) + " = "
                          + std::to_string(sum) + " lies outside "
                          + whole.to_string();
            return false;
          }
          if (covered.contains(sum)) {
            out.witness = std::to_string(sum) + " = " + tuple_string(rep[sum])
                          + " = " + tuple_string(t);
            return false;
          }
          covered.insert(sum);
          rep[sum] = t;
          return true;
        });
    if (!ok) {
      return out;
    }
    if (parts.empty()) {
      covered.insert(M.zero());
    }
    if (covered != whole) {
      bool done = false;
      whole.for_each([&](elem_t x) {
        if (!done && !covered.contains(x)) {
          out.witness = std::to_string(x) + " is not a sum of the parts";
          done        = true;
        }
      });
      return out;
    }
    out.direct = true;
    return out;
  }

  EndSemiring end_semiring(ModulePtr const& M, Limits const& limits) {
    EndSemiring out;
    auto        homs = enumerate_homs(M, M, limits);
    if (!homs.exhaustive) {
      throw LimitExceeded("End(M): Hom enumeration hit the limits");
    }
    out.maps = std::move(homs.items);
    if (M->order() == 1) {
      out.degenerate = true;
      return out;
    }
    std::map<std::vector<elem_t>, elem_t> index;
    for (elem_t i = 0; i < out.maps.size(); ++i) {
      index[out.maps[i].image] = i;
    }
    std::size_t const n = out.maps.size();
    OpTable           add(n, n), mul(n, n);
    for (elem_t i = 0; i < n; ++i) {
      for (elem_t j = 0; j < n; ++j) {
        add.at(i, j) = index.at(pointwise_sum(out.maps[i], out.maps[j]).image);
        mul.at(i, j) = index.at(compose(out.maps[i], out.maps[j]).image);
      }
    }
    elem_t const zero = index.at(zero_map(M, M).image);
    elem_t const one  = index.at(identity_map(M).image);
    out.semiring = validate_semiring(std::move(add), std::move(mul), zero, one);
    return out;
  }

  std::vector<CompElement> comp_elements(SemiringTable const& T) {
    std::vector<CompElement> out;
    for (elem_t t = 0; t < T.order(); ++t) {
      CompElement c{t, {}};
      for (elem_t u = 0; u < T.order(); ++u) {
        if (T.add(t, u) == T.one() && T.mul(t, u) == T.zero()
            && T.mul(u, t) == T.zero()) {
          c.complements.push_back(u);
        }
      }
      if (!c.complements.empty()) {
        out.push_back(std::move(c));
      }
    }
    return out;
  }

  Summand const* SummandPoset::find(Subset const& members) const {
    auto it = std::lower_bound(
        nodes.begin(), nodes.end(), members, [](Summand const& s, Subset const& m) {
          return s.members < m;
        });
    return it != nodes.end() && it->members == members ? &*it : nullptr;
  }

  SummandPoset summand_poset(ModulePtr const& M, Limits const& limits) {
    SummandPoset P;
    P.parent = M;
    auto E   = end_semiring(M, limits);
    if (E.degenerate) {
      auto id = identity_map(M);
      P.nodes.push_back({Subset::full(1), Subset::full(1), id, id});
      P.longest_chain = 1;
      return P;
    }
    for (auto const& c : comp_elements(*E.semiring)) {
      auto const& alpha = E.maps[c.t];
      auto const& beta  = E.maps[c.complements.front()];
      auto        im    = image_of(alpha);
      bool        dup   = false;
      for (auto const& n : P.nodes) {
        dup = dup || n.members == im;
      }
      if (!dup) {
        P.nodes.push_back({im, image_of(beta), alpha, beta});
      }
    }
    std::sort(P.nodes.begin(), P.nodes.end(), [](auto const& a, auto const& b) {
      return a.members < b.members;
    });
    // longest chain by increasing size
    std::vector<std::size_t> order(P.nodes.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](auto a, auto b) {
      return P.nodes[a].members.size() < P.nodes[b].members.size();
    });
    std::vector<std::size_t> chain(P.nodes.size(), 1);
    for (std::size_t a = 0; a < order.size(); ++a) {
      for (std::size_t b = 0; b < a; ++b) {
        auto const& lo = P.nodes[order[b]].members;
        auto const& hi = P.nodes[order[a]].members;
        if (lo != hi && lo.is_subset_of(hi)) {
          chain[order[a]] = std::max(chain[order[a]], chain[order[b]] + 1);
        }
      }
      P.longest_chain = std::max(P.longest_chain, chain[order[a]]);
    }
    return P;
  }

  namespace {
    // No two distinct elements of X are related by the Bourne relation of N.
    bool bourne_trivial_on(SemimoduleTable const& M,
                           Subset const&          N,
                           Subset const&          X) {
      auto const rho = bourne_congruence(M, N);
      bool       ok  = true;
      X.for_each([&](elem_t a) {
        X.for_each([&](elem_t b) {
          if (a < b && rho.related(a, b)) {
            ok = false;
          }
        });
      });
      return ok;
    }
  }  // namespace

  std::vector<GolanRecord> golan_16_6(ModulePtr const& M,
                                      Limits const&    limits) {
    auto subs = enumerate_submodule_sets(*M, limits);
    if (!subs.exhaustive) {
      throw LimitExceeded("subsemimodule enumeration hit the limits");
    }
    auto const               P    = summand_poset(M, limits);
    auto const               full = Subset::full(M->order());
    std::vector<GolanRecord> out;
    for (auto const& N : subs.items) {
      GolanRecord r{N};
      r.comp_image = P.is_summand(N);
      for (auto const& K : subs.items) {
        if (!r.direct_summand && is_direct_sum(*M, {N, K}).direct) {
          r.direct_summand = true;
        }
        if (!r.bourne_trivial && sum_of(*M, N, K) == full
            && bourne_trivial_on(*M, N, K) && bourne_trivial_on(*M, K, N)) {
          r.bourne_trivial = true;
        }
        if (r.direct_summand && r.bourne_trivial) {
          break;
        }
      }
      out.push_back(std::move(r));
    }
    return out;
  }

  Maybe<LinearMap> retract_check(ModulePtr const& M,
                                 Subset const&    N,
                                 Limits const&    limits) {
    Maybe<LinearMap> out;
    auto             homs = enumerate_homs(M, M, limits);
    for (auto& a : homs.items) {
      if (image_of(a) == N && compose(a, a) == a) {
        out.status  = Search::present;
        out.witness = std::move(a);
        return out;
      }
    }
    out.status = homs.exhaustive ? Search::absent : Search::unknown;
    return out;
  }

  std::vector<LinearMap> part_projections(ModulePtr const&           M,
                                          std::vector<Subset> const& parts) {
    std::vector<std::vector<elem_t>> rep(M->order());
    for_each_tuple(*M, parts, [&](std::vector<elem_t> const& t, elem_t sum) {
      if (!rep[sum].empty()) {
        throw Error("part_projections: parts are not a direct sum");
      }
      rep[sum] = t;
      return true;
    });
    std::vector<LinearMap> out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      std::vector<elem_t> img(M->order());
      for (elem_t m = 0; m < M->order(); ++m) {
        if (rep[m].empty()) {
          throw Error("part_projections: parts do not cover the module");
        }
        img[m] = rep[m][i];
      }
      out.push_back(LinearMap{M, M, std::move(img)});
    }
    return out;
  }

  bool projections_orthogonal(ModulePtr const&              M,
                              std::vector<LinearMap> const& e) {
    if (e.empty()) {
      return M->order() == 1;
    }
    auto zero = zero_map(M, M);
    auto sum  = zero;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!linearity_failure(*M, *M, e[i].image).empty()) {
        return false;
      }
      for (std::size_t j = 0; j < e.size(); ++j) {
        auto c = compose(e[i], e[j]);
        if (i == j ? !(c == e[i]) : !(c == zero)) {
          return false;
        }
      }
      sum = pointwise_sum(sum, e[i]);
    }
    return sum == identity_map(M);
  }

  bool is_irreducible(ModulePtr const& N, Limits const& limits) {
    if (N->order() == 1) {
      return false;
    }
    return summand_poset(N, limits).nodes.size() == 2;
  }

  Decomposition irreducible_decomposition(ModulePtr const& M,
                                          Limits const&    limits) {
    if (M->order() == 1) {
      throw Error("the zero semimodule has no decomposition");
    }
    auto const   P    = summand_poset(M, limits);
    Subset const zero = Subset(M->order(), {M->zero()});
    Subset const full = Subset::full(M->order());
    auto strict_sub   = [](Subset const& a, Subset const& b) {
      return a != b && a.is_subset_of(b);
    };

    std::vector<Summand const*> chain;
    Summand const*              d0 = nullptr;
    for (auto const& n : P.nodes) {
      if (n.members != zero && n.members != full) {
        d0 = &n;
        break;
      }
    }
    if (d0 == nullptr) {
      chain = {P.find(zero), P.find(full)};
    } else {
      // upwards: smallest-first among the minimal summands above
      std::vector<Summand const*> up{d0};
      while (up.back()->members != full) {
        Summand const* next = nullptr;
        for (auto const& n : P.nodes) {
          if (!strict_sub(up.back()->members, n.members)) {
            continue;
          }
          bool minimal = true;
          for (auto const& o : P.nodes) {
            if (strict_sub(up.back()->members, o.members)
                && strict_sub(o.members, n.members)) {
              minimal = false;
              break;
            }
          }
          if (minimal) {
            next = &n;
            break;
          }
        }
        up.push_back(next);
      }
      std::vector<Summand const*> down{d0};
      while (down.back()->members != zero) {
        Summand const* next = nullptr;
        for (auto const& n : P.nodes) {
          if (!strict_sub(n.members, down.back()->members)) {
            continue;
          }
          bool maximal = true;
          for (auto const& o : P.nodes) {
            if (strict_sub(n.members, o.members)
                && strict_sub(o.members, down.back()->members)) {
              maximal = false;
              break;
            }
          }
          if (maximal) {
            next = &n;
            break;
          }
        }
        down.push_back(next);
      }
      chain.assign(down.rbegin(), down.rend());
      chain.insert(chain.end(), up.begin() + 1, up.end());
    }

    Decomposition D;
    D.parent = M;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      auto const& Di  = chain[i]->members;
      auto const& Li  = chain[i]->complement;
      auto const& Dn  = chain[i + 1]->members;
      Subset      Kn  = Dn & Li;
      if (!is_direct_sum(*M, Dn, {Di, Kn}).direct) {
        throw CrosscheckFailure("intersection lemma fails for D = "
                                + Dn.to_string() + " over "
                                + Di.to_string());
      }
      D.parts.push_back(std::move(Kn));
    }
    auto check = is_direct_sum(*M, D.parts);
    if (!check.direct) {
      throw CrosscheckFailure("irreducible parts are not a direct sum: "
                              + check.witness);
    }
    for (auto const& K : D.parts) {
      if (!P.is_summand(K) || !is_irreducible(restrict_module(M, K), limits)) {
        throw CrosscheckFailure("part " + K.to_string()
                                + " is not an irreducible summand");
      }
    }
    D.idempotents = part_projections(M, D.parts);
    if (!projections_orthogonal(M, D.idempotents)) {
      throw CrosscheckFailure("decomposition projections are not orthogonal "
                              "idempotents summing to the identity");
    }
    return D;
  }

  LemintReport lemint_check(ModulePtr const& M, Limits const& limits) {
    LemintReport out;
    auto         subs = enumerate_submodule_sets(*M, limits);
    out.exhaustive    = subs.exhaustive;
    std::vector<Subset> subtractive;
    for (auto const& N : subs.items) {
      if (closure_members(*M, N) == N) {
        subtractive.push_back(N);
      }
    }
    for (auto const& L : subs.items) {
      for (auto const& K : subs.items) {
        if (!is_direct_sum(*M, {L, K}).direct) {
          continue;
        }
        for (auto const& N : subtractive) {
          if (!L.is_subset_of(N)) {
            continue;
          }
          ++out.checked;
          auto r = is_direct_sum(*M, N, {L, K & N});
          if (!r.direct) {
            out.failures.push_back("M = " + L.to_string() + " + "
                                   + K.to_string() + ", N = " + N.to_string()
                                   + ": " + r.witness);
          }
        }
      }
    }
    return out;
  }

}  // namespace semilab
