//
// semilab - finite semirings, semimodules and their structure theory
//

#include "semilab/kernels.hpp"

#include <omp.h>  // for omp_get_max_threads

#include <algorithm>      // for sort, next_permutation
#include <numeric>        // for iota
#include <tuple>          // for tie
#include <unordered_set>  // for unordered_set

namespace semilab::kernels {

  namespace {
    int thread_count(int requested) {
      return requested > 0 ? requested : omp_get_max_threads();
    }

    ////////////////////////////////////////////////////////////////////////
    // Axioms, split per first coordinate so both kernels agree on order
    ////////////////////////////////////////////////////////////////////////

    void violations_for(elem_t                  a,
                        OpTable const&          add,
                        OpTable const&          mul,
                        elem_t                  zero,
                        elem_t                  one,
                        std::size_t             cap,
                        std::vector<Violation>& out) {
      auto report = [&](char const* law, std::vector<elem_t> w) {
        if (out.size() < cap) {
          out.push_back({law, std::move(w)});
        }
      };
      std::size_t const n = add.rows();
      if (add(zero, a) != a || add(a, zero) != a) {
        report("add-identity", {a});
      }
      if (mul(one, a) != a || mul(a, one) != a) {
        report("mul-identity", {a});
      }
      if (mul(zero, a) != zero || mul(a, zero) != zero) {
        report("zero-absorbing", {a});
      }
      for (elem_t b = 0; b < n; ++b) {
        if (add(a, b) != add(b, a)) {
          report("add-commutative", {a, b});
        }
        auto const ab_add = add(a, b);
        auto const ab_mul = mul(a, b);
        for (elem_t c = 0; c < n; ++c) {
          if (add(ab_add, c) != add(a, add(b, c))) {
            report("add-associative", {a, b, c});
          }
          if (mul(ab_mul, c) != mul(a, mul(b, c))) {
            report("mul-associative", {a, b, c});
          }
          if (mul(a, add(b, c)) != add(ab_mul, mul(a, c))) {
            report("left-distributive", {a, b, c});
          }
          if (mul(ab_add, c) != add(mul(a, c), mul(b, c))) {
            report("right-distributive", {a, b, c});
          }
          if (out.size() >= cap) {
            return;
          }
        }
      }
    }
  }  // namespace

  std::vector<Violation> semiring_violations_serial(OpTable const& add,
                                                    OpTable const& mul,
                                                    elem_t         zero,
                                                    elem_t         one,
                                                    std::size_t    cap) {
    std::vector<Violation> out;
    if (zero == one) {
      out.push_back({"zero-neq-one", {zero}});
    }
    for (elem_t a = 0; a < add.rows() && out.size() < cap; ++a) {
      violations_for(a, add, mul, zero, one, cap, out);
    }
    if (out.size() > cap) {
      out.resize(cap);
    }
    return out;
  }

  std::vector<Violation> semiring_violations_omp(OpTable const& add,
                                                 OpTable const& mul,
                                                 elem_t         zero,
                                                 elem_t         one,
                                                 std::size_t    cap,
                                                 int            threads) {
    std::size_t const                   n = add.rows();
    std::vector<std::vector<Violation>> per(n);
#pragma omp parallel for schedule(dynamic) num_threads(thread_count(threads))
    for (std::size_t a = 0; a < n; ++a) {
      violations_for(static_cast<elem_t>(a), add, mul, zero, one, cap, per[a]);
    }
    std::vector<Violation> out;
    if (zero == one) {
      out.push_back({"zero-neq-one", {zero}});
    }
    for (auto& v : per) {
      for (auto& x : v) {
        if (out.size() < cap) {
          out.push_back(std::move(x));
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Substructures
  ////////////////////////////////////////////////////////////////////////

  Subset close(SemimoduleTable const& M, Subset const& seed) {
    std::size_t const   r = M.base()->order();
    Subset              members = seed;
    std::vector<elem_t> elems;
    members.insert(M.zero());
    members.for_each([&](elem_t x) { elems.push_back(x); });
    std::vector<elem_t> work = elems;
    auto                push = [&](elem_t z) {
      if (!members.contains(z)) {
        members.insert(z);
        elems.push_back(z);
        work.push_back(z);
      }
    };
    while (!work.empty()) {
      elem_t x = work.back();
      work.pop_back();
      for (std::size_t i = 0; i < elems.size(); ++i) {
        push(M.add(x, elems[i]));
      }
      for (elem_t s = 0; s < r; ++s) {
        push(M.act(s, x));
      }
    }
    return members;
  }

  namespace {
    // Closures of L + {x} for every x outside L.
    std::vector<Subset> successors(SemimoduleTable const& M, Subset const& L) {
      std::vector<Subset> out;
      for (elem_t x = 0; x < M.order(); ++x) {
        if (!L.contains(x)) {
          Subset seed = L;
          seed.insert(x);
          out.push_back(close(M, seed));
        }
      }
      return out;
    }

    template <typename T, typename Hash, typename Expand>
    Enumeration<T> layered_search(T                   start,
                                  Limits const&       limits,
                                  Expand&&            expand,
                                  bool                parallel) {
      Enumeration<T>                 result;
      std::unordered_set<T, Hash>    found;
      std::vector<T>                 frontier{start};
      std::size_t                    steps = 0;
      found.insert(start);
      result.items.push_back(start);
      while (!frontier.empty()) {
        std::vector<std::vector<T>> produced(frontier.size());
        if (parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(thread_count(limits.threads))
          for (std::size_t i = 0; i < frontier.size(); ++i) {
            produced[i] = expand(frontier[i]);
          }
        } else {
          for (std::size_t i = 0; i < frontier.size(); ++i) {
            produced[i] = expand(frontier[i]);
          }
        }
        std::vector<T> next;
        for (auto& batch : produced) {
          steps += batch.size();
          for (auto& c : batch) {
            if (found.insert(c).second) {
              next.push_back(std::move(c));
            }
          }
        }
        std::sort(next.begin(), next.end());
        for (auto const& c : next) {
          result.items.push_back(c);
        }
        if (result.items.size() > limits.max_results
            || steps > limits.max_steps) {
          result.exhaustive = false;
          break;
        }
        frontier = std::move(next);
      }
      std::sort(result.items.begin(), result.items.end());
      if (result.items.size() > limits.max_results) {
        result.items.resize(limits.max_results);
        result.exhaustive = false;
      }
      return result;
    }
  }  // namespace

  Enumeration<Subset> substructures_serial(SemimoduleTable const& M,
                                           Limits const&          limits) {
    return layered_search<Subset, SubsetHash>(
        close(M, Subset(M.order())),
        limits,
        [&M](Subset const& L) { return successors(M, L); },
        false);
  }

  Enumeration<Subset> substructures_omp(SemimoduleTable const& M,
                                        Limits const&          limits) {
    return layered_search<Subset, SubsetHash>(
        close(M, Subset(M.order())),
        limits,
        [&M](Subset const& L) { return successors(M, L); },
        true);
  }

  ////////////////////////////////////////////////////////////////////////
  // Congruences
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class UnionFind {
     public:
      explicit UnionFind(std::vector<elem_t> const& labels)
          : _parent(labels.size()) {
        std::vector<elem_t> first(labels.size(), static_cast<elem_t>(-1));
        for (std::size_t x = 0; x < labels.size(); ++x) {
          auto& f = first[labels[x]];
          if (f == static_cast<elem_t>(-1)) {
            f = static_cast<elem_t>(x);
          }
          _parent[x] = f;
        }
      }

      elem_t find(elem_t x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }

      bool unite(elem_t a, elem_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return false;
        }
        if (a < b) {
          _parent[b] = a;
        } else {
          _parent[a] = b;
        }
        return true;
      }

     private:
      std::vector<elem_t> _parent;
    };
  }  // namespace

  CongruencePartition join_closure(UnaryFamily const&           fam,
                                   CongruencePartition const&   base,
                                   std::vector<ElemPair> const& pairs) {
    UnionFind             uf(base.labels());
    std::vector<ElemPair> queue(pairs);
    while (!queue.empty()) {
      auto [a, b] = queue.back();
      queue.pop_back();
      if (uf.unite(a, b)) {
        for (auto const& f : fam.maps) {
          if (f[a] != f[b]) {
            queue.emplace_back(f[a], f[b]);
          }
        }
      }
    }
    std::vector<elem_t> labels(fam.order);
    for (elem_t x = 0; x < fam.order; ++x) {
      labels[x] = uf.find(x);
    }
    return CongruencePartition::from_labels(labels);
  }

  namespace {
    std::vector<CongruencePartition> principal_congruences(
        UnaryFamily const& fam) {
      auto const delta = CongruencePartition::discrete(fam.order);
      std::unordered_set<CongruencePartition, PartitionHash> seen;
      std::vector<CongruencePartition>                      out;
      for (elem_t a = 0; a < fam.order; ++a) {
        for (elem_t b = a + 1; b < fam.order; ++b) {
          auto p = join_closure(fam, delta, {{a, b}});
          if (seen.insert(p).second) {
            out.push_back(std::move(p));
          }
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    Enumeration<CongruencePartition> congruences_impl(UnaryFamily const& fam,
                                                      Limits const& limits,
                                                      bool parallel) {
      auto const principal = principal_congruences(fam);
      auto       expand    = [&](CongruencePartition const& rho) {
        std::vector<CongruencePartition> out;
        auto const                       cls = rho.classes();
        for (auto const& theta : principal) {
          if (theta.refines(rho)) {
            continue;
          }
          std::vector<ElemPair> pairs;
          for (elem_t x = 0; x < fam.order; ++x) {
            // relate x to the first member of its theta-class
            for (elem_t y = 0; y < x; ++y) {
              if (theta.related(x, y)) {
                pairs.emplace_back(y, x);
                break;
              }
            }
          }
          out.push_back(join_closure(fam, rho, pairs));
        }
        return out;
      };
      return layered_search<CongruencePartition, PartitionHash>(
          CongruencePartition::discrete(fam.order), limits, expand, parallel);
    }
  }  // namespace

  Enumeration<CongruencePartition> congruences_serial(UnaryFamily const& fam,
                                                      Limits const& limits) {
    return congruences_impl(fam, limits, false);
  }

  Enumeration<CongruencePartition> congruences_omp(UnaryFamily const& fam,
                                                   Limits const&      limits) {
    return congruences_impl(fam, limits, true);
  }

  ////////////////////////////////////////////////////////////////////////
  // Semirings of a given order
  ////////////////////////////////////////////////////////////////////////

  namespace {
    constexpr elem_t unset = static_cast<elem_t>(-1);

    bool add_consistent(OpTable const& t) {
      std::size_t const n = t.rows();
      for (elem_t a = 0; a < n; ++a) {
        for (elem_t b = 0; b < n; ++b) {
          auto ab = t(a, b);
          if (ab == unset) {
            continue;
          }
          for (elem_t c = 0; c < n; ++c) {
            auto bc = t(b, c);
            if (bc == unset) {
              continue;
            }
            auto l = t(ab, c), r = t(a, bc);
            if (l != unset && r != unset && l != r) {
              return false;
            }
          }
        }
      }
      return true;
    }

    bool mul_consistent(OpTable const& add, OpTable const& mul) {
      std::size_t const n = add.rows();
      for (elem_t a = 0; a < n; ++a) {
        for (elem_t b = 0; b < n; ++b) {
          auto ab = mul(a, b);
          for (elem_t c = 0; c < n; ++c) {
            auto ac = mul(a, c);
            if (ab != unset) {
              auto bc = mul(b, c);
              if (bc != unset) {
                auto l = mul(ab, c), r = mul(a, bc);
                if (l != unset && r != unset && l != r) {
                  return false;
                }
              }
            }
            // a(b + c) = ab + ac
            auto lhs = mul(a, add(b, c));
            if (lhs != unset && ab != unset && ac != unset
                && lhs != add(ab, ac)) {
              return false;
            }
            // (a + b)c = ac + bc
            auto bc  = mul(b, c);
            auto rhs = mul(add(a, b), c);
            if (rhs != unset && ac != unset && bc != unset
                && rhs != add(ac, bc)) {
              return false;
            }
          }
        }
      }
      return true;
    }

    std::vector<OpTable> additive_monoids(std::size_t n) {
      OpTable t(n, n, unset);
      for (elem_t x = 0; x < n; ++x) {
        t.at(0, x) = x;
        t.at(x, 0) = x;
      }
      std::vector<std::pair<elem_t, elem_t>> cells;
      for (elem_t i = 1; i < n; ++i) {
        for (elem_t j = i; j < n; ++j) {
          cells.emplace_back(i, j);
        }
      }
      std::vector<OpTable> out;
      auto                 rec = [&](auto&& self, std::size_t k) -> void {
        if (k == cells.size()) {
          out.push_back(t);
          return;
        }
        auto [i, j] = cells[k];
        for (elem_t v = 0; v < n; ++v) {
          t.at(i, j) = v;
          t.at(j, i) = v;
          if (add_consistent(t)) {
            self(self, k + 1);
          }
        }
        t.at(i, j) = unset;
        t.at(j, i) = unset;
      };
      rec(rec, 0);
      return out;
    }

    std::vector<SemiringTable> multiplications(OpTable const& add,
                                               bool commutative_only) {
      std::size_t const n = add.rows();
      OpTable           mul(n, n, unset);
      for (elem_t x = 0; x < n; ++x) {
        mul.at(0, x) = 0;
        mul.at(x, 0) = 0;
      }
      for (elem_t x = 1; x < n; ++x) {
        mul.at(1, x) = x;
        mul.at(x, 1) = x;
      }
      std::vector<std::pair<elem_t, elem_t>> cells;
      for (elem_t i = 2; i < n; ++i) {
        for (elem_t j = commutative_only ? i : 2; j < n; ++j) {
          cells.emplace_back(i, j);
        }
      }
      std::vector<SemiringTable> out;
      auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == cells.size()) {
          if (is_canonical(add, mul)) {
            out.push_back(validate_semiring(add, mul, 0, 1));
          }
          return;
        }
        auto [i, j] = cells[k];
        for (elem_t v = 0; v < n; ++v) {
          mul.at(i, j) = v;
          if (commutative_only) {
            mul.at(j, i) = v;
          }
          if (mul_consistent(add, mul)) {
            self(self, k + 1);
          }
        }
        mul.at(i, j) = unset;
        if (commutative_only) {
          mul.at(j, i) = unset;
        }
      };
      rec(rec, 0);
      return out;
    }

    Enumeration<SemiringTable> semirings_impl(std::size_t   n,
                                              bool          commutative_only,
                                              Limits const& limits,
                                              bool          parallel) {
      Enumeration<SemiringTable> result;
      if (n < 2) {
        return result;  // zero != one needs two elements
      }
      auto const adds = additive_monoids(n);
      std::vector<std::vector<SemiringTable>> per(adds.size());
      if (parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(thread_count(limits.threads))
        for (std::size_t i = 0; i < adds.size(); ++i) {
          per[i] = multiplications(adds[i], commutative_only);
        }
      } else {
        for (std::size_t i = 0; i < adds.size(); ++i) {
          per[i] = multiplications(adds[i], commutative_only);
        }
      }
      for (auto& batch : per) {
        for (auto& S : batch) {
          if (result.items.size() >= limits.max_results) {
            result.exhaustive = false;
            return result;
          }
          result.items.push_back(std::move(S));
        }
      }
      std::sort(result.items.begin(),
                result.items.end(),
                [](SemiringTable const& a, SemiringTable const& b) {
                  return std::tie(a.add_table(), a.mul_table())
                         < std::tie(b.add_table(), b.mul_table());
                });
      return result;
    }
  }  // namespace

  bool is_canonical(OpTable const& add, OpTable const& mul) {
    std::size_t const   n = add.rows();
    std::vector<elem_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    OpTable padd(n, n), pmul(n, n);
    while (std::next_permutation(perm.begin() + 2, perm.end())) {
      for (elem_t a = 0; a < n; ++a) {
        for (elem_t b = 0; b < n; ++b) {
          padd.at(perm[a], perm[b]) = perm[add(a, b)];
          pmul.at(perm[a], perm[b]) = perm[mul(a, b)];
        }
      }
      if (std::tie(padd, pmul) < std::tie(add, mul)) {
        return false;
      }
    }
    return true;
  }

  Enumeration<SemiringTable> semirings_serial(std::size_t   order,
                                              bool          commutative_only,
                                              Limits const& limits) {
    return semirings_impl(order, commutative_only, limits, false);
  }

  Enumeration<SemiringTable> semirings_omp(std::size_t   order,
                                           bool          commutative_only,
                                           Limits const& limits) {
    return semirings_impl(order, commutative_only, limits, true);
  }

}  // namespace semilab::kernels
