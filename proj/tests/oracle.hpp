//
// semilab - finite semirings, semimodules and their structure theory
//

// Brute-force reference implementations for the tests.  Everything here
// works on plain integer tables and bitmasks and follows the textbook
// definitions literally; nothing calls into the engine's algorithms.

#ifndef SEMILAB_TESTS_ORACLE_HPP_
#define SEMILAB_TESTS_ORACLE_HPP_

#include <algorithm>  // for next_permutation, sort
#include <cstdint>    // for uint32_t
#include <optional>   // for optional
#include <set>        // for set
#include <vector>     // for vector

#include "semilab/tables.hpp"  // for SemimoduleTable, SemiringTable

namespace oracle {

  using Table = std::vector<std::vector<int>>;
  using Mask  = std::uint32_t;

  struct Mod {
    int   n = 0;  // carrier size
    int   s = 0;  // number of scalars
    int   zero = 0;
    Table add;
    Table act;  // act[s][m]

    bool in(Mask L, int x) const {
      return (L >> x) & 1U;
    }
  };

  inline Table raw(semilab::OpTable const& t) {
    Table out(t.rows(), std::vector<int>(t.cols()));
    for (std::size_t r = 0; r < t.rows(); ++r) {
      for (std::size_t c = 0; c < t.cols(); ++c) {
        out[r][c] = static_cast<int>(t(r, c));
      }
    }
    return out;
  }

  inline Mod of(semilab::SemimoduleTable const& M) {
    return {static_cast<int>(M.order()), static_cast<int>(M.base()->order()),
            static_cast<int>(M.zero()), raw(M.add_table()),
            raw(M.act_table())};
  }

  inline Mod regular(semilab::SemiringTable const& S) {
    int n = static_cast<int>(S.order());
    return {n, n, static_cast<int>(S.zero()), raw(S.add_table()),
            raw(S.mul_table())};
  }

  inline Mask full(int n) {
    return n == 32 ? ~Mask(0) : (Mask(1) << n) - 1;
  }

  inline bool is_submodule(Mod const& M, Mask L) {
    if (!M.in(L, M.zero)) {
      return false;
    }
    for (int a = 0; a < M.n; ++a) {
      if (!M.in(L, a)) {
        continue;
      }
      for (int b = 0; b < M.n; ++b) {
        if (M.in(L, b) && !M.in(L, M.add[a][b])) {
          return false;
        }
      }
      for (int s = 0; s < M.s; ++s) {
        if (!M.in(L, M.act[s][a])) {
          return false;
        }
      }
    }
    return true;
  }

  //! All submodules, ascending as integers.
  inline std::vector<Mask> submodules(Mod const& M) {
    std::vector<Mask> out;
    for (Mask L = 0; L <= full(M.n); ++L) {
      if (is_submodule(M, L)) {
        out.push_back(L);
      }
    }
    return out;
  }

  //! m + l in L for some l in L forces m in L.
  inline bool is_subtractive(Mod const& M, Mask L) {
    for (int m = 0; m < M.n; ++m) {
      for (int l = 0; l < M.n; ++l) {
        if (M.in(L, l) && M.in(L, M.add[m][l]) && !M.in(L, m)) {
          return false;
        }
      }
    }
    return true;
  }

  //! {m : m + l = l' for some l, l' in L}.
  inline Mask closure(Mod const& M, Mask L) {
    Mask out = 0;
    for (int m = 0; m < M.n; ++m) {
      for (int l = 0; l < M.n; ++l) {
        if (M.in(L, l) && M.in(L, M.add[m][l])) {
          out |= Mask(1) << m;
        }
      }
    }
    return out;
  }

  // Partitions as label vectors in restricted growth form.
  using Labels = std::vector<int>;

  inline bool compatible(Mod const& M, Labels const& p) {
    for (int a = 0; a < M.n; ++a) {
      for (int b = a + 1; b < M.n; ++b) {
        if (p[a] != p[b]) {
          continue;
        }
        for (int z = 0; z < M.n; ++z) {
          if (p[M.add[a][z]] != p[M.add[b][z]]) {
            return false;
          }
        }
        for (int s = 0; s < M.s; ++s) {
          if (p[M.act[s][a]] != p[M.act[s][b]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  template <typename F>
  void for_each_partition(int n, F&& f) {
    Labels p(n, 0);
    auto   rec = [&](auto& self, int i, int maxl) -> void {
      if (i == n) {
        f(p);
        return;
      }
      for (int l = 0; l <= maxl + 1; ++l) {
        p[i] = l;
        self(self, i + 1, std::max(maxl, l));
      }
    };
    if (n == 0) {
      f(p);
      return;
    }
    p[0] = 0;
    rec(rec, 1, 0);
  }

  inline std::vector<Labels> congruences(Mod const& M) {
    std::vector<Labels> out;
    for_each_partition(M.n, [&](Labels const& p) {
      if (compatible(M, p)) {
        out.push_back(p);
      }
    });
    return out;
  }

  //! Two-sided congruences of a semiring.
  inline std::vector<Labels> semiring_congruences(Table const& add,
                                                  Table const& mul) {
    int                 n = static_cast<int>(add.size());
    std::vector<Labels> out;
    for_each_partition(n, [&](Labels const& p) {
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          if (p[a] != p[b]) {
            continue;
          }
          for (int z = 0; z < n; ++z) {
            if (p[add[a][z]] != p[add[b][z]] || p[mul[a][z]] != p[mul[b][z]]
                || p[mul[z][a]] != p[mul[z][b]]) {
              return;
            }
          }
        }
      }
      out.push_back(p);
    });
    return out;
  }

  //! Labels of the Bourne relation of L.
  inline Labels bourne(Mod const& M, Mask L) {
    Labels p(M.n, -1);
    int    next = 0;
    for (int a = 0; a < M.n; ++a) {
      if (p[a] != -1) {
        continue;
      }
      p[a] = next;
      for (int b = a + 1; b < M.n; ++b) {
        for (int x = 0; x < M.n && p[b] == -1; ++x) {
          for (int y = 0; y < M.n; ++y) {
            if (M.in(L, x) && M.in(L, y) && M.add[a][x] == M.add[b][y]) {
              p[b] = next;
              break;
            }
          }
        }
      }
      ++next;
    }
    return p;
  }

  inline Mod quotient(Mod const& M, Labels const& p) {
    int k = *std::max_element(p.begin(), p.end()) + 1;
    std::vector<int> rep(k, -1);
    for (int a = 0; a < M.n; ++a) {
      if (rep[p[a]] == -1) {
        rep[p[a]] = a;
      }
    }
    Mod Q{k, M.s, p[M.zero], Table(k, std::vector<int>(k)),
          Table(M.s, std::vector<int>(k))};
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        Q.add[a][b] = p[M.add[rep[a]][rep[b]]];
      }
      for (int s = 0; s < M.s; ++s) {
        Q.act[s][a] = p[M.act[s][rep[a]]];
      }
    }
    return Q;
  }

  inline Mod restrict(Mod const& M, Mask L) {
    std::vector<int> el, idx(M.n, -1);
    for (int x = 0; x < M.n; ++x) {
      if (M.in(L, x)) {
        idx[x] = static_cast<int>(el.size());
        el.push_back(x);
      }
    }
    int k = static_cast<int>(el.size());
    Mod R{k, M.s, idx[M.zero], Table(k, std::vector<int>(k)),
          Table(M.s, std::vector<int>(k))};
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        R.add[a][b] = idx[M.add[el[a]][el[b]]];
      }
      for (int s = 0; s < M.s; ++s) {
        R.act[s][a] = idx[M.act[s][el[a]]];
      }
    }
    return R;
  }

  inline bool is_linear(Mod const& A, Mod const& B, std::vector<int> const& f) {
    if (f[A.zero] != B.zero) {
      return false;
    }
    for (int a = 0; a < A.n; ++a) {
      for (int b = 0; b < A.n; ++b) {
        if (f[A.add[a][b]] != B.add[f[a]][f[b]]) {
          return false;
        }
      }
      for (int s = 0; s < A.s; ++s) {
        if (f[A.act[s][a]] != B.act[s][f[a]]) {
          return false;
        }
      }
    }
    return true;
  }

  //! Every map A -> B tried; the linear ones returned in lexicographic order.
  inline std::vector<std::vector<int>> homs(Mod const& A, Mod const& B) {
    std::vector<std::vector<int>> out;
    std::vector<int>              f(A.n, 0);
    while (true) {
      if (is_linear(A, B, f)) {
        out.push_back(f);
      }
      int i = A.n - 1;
      while (i >= 0 && f[i] == B.n - 1) {
        f[i--] = 0;
      }
      if (i < 0) {
        break;
      }
      ++f[i];
    }
    return out;
  }

  inline bool isomorphic(Mod const& A, Mod const& B) {
    if (A.n != B.n || A.s != B.s) {
      return false;
    }
    std::vector<int> f(A.n);
    for (int i = 0; i < A.n; ++i) {
      f[i] = i;
    }
    do {
      if (is_linear(A, B, f)) {
        return true;
      }
    } while (std::next_permutation(f.begin(), f.end()));
    return false;
  }

  //! M = L (+) K: every element is uniquely l + k.
  inline bool is_direct(Mod const& M, Mask L, Mask K) {
    std::vector<int> hits(M.n, 0);
    for (int l = 0; l < M.n; ++l) {
      for (int k = 0; k < M.n; ++k) {
        if (M.in(L, l) && M.in(K, k)) {
          ++hits[M.add[l][k]];
        }
      }
    }
    return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
  }

  inline bool is_summand(Mod const& M, Mask L) {
    if (!is_submodule(M, L)) {
      return false;
    }
    for (Mask K : submodules(M)) {
      if (is_direct(M, L, K)) {
        return true;
      }
    }
    return false;
  }

  //! Image of an idempotent endomorphism.
  inline bool is_retract(Mod const& M, Mask L) {
    for (auto const& f : homs(M, M)) {
      Mask im = 0;
      bool idem = true;
      for (int x = 0; x < M.n; ++x) {
        im |= Mask(1) << f[x];
        idem = idem && f[f[x]] == f[x];
      }
      if (idem && im == L) {
        return true;
      }
    }
    return false;
  }

  inline bool ideal_simple(Mod const& M) {
    return M.n > 1 && submodules(M).size() == 2;
  }

  inline bool congruence_simple(Mod const& M) {
    return M.n > 1 && congruences(M).size() == 2;
  }

  inline std::vector<Mask> subtractive_submodules(Mod const& M) {
    std::vector<Mask> out;
    for (Mask L : submodules(M)) {
      if (is_subtractive(M, L)) {
        out.push_back(L);
      }
    }
    return out;
  }

  //! Every subtractive submodule is a direct summand.
  inline bool C1(Mod const& M) {
    for (Mask L : subtractive_submodules(M)) {
      if (!is_summand(M, L)) {
        return false;
      }
    }
    return true;
  }

  //! For every submodule N and every L maximal among the proper subtractive
  //! submodules of N, N/L is ideal-simple (congruence-simple if \p prime).
  inline bool C2(Mod const& M, bool prime) {
    for (Mask N : submodules(M)) {
      Mod const         X   = restrict(M, N);
      auto const        sub = subtractive_submodules(X);
      std::vector<Mask> proper;
      for (Mask L : sub) {
        if (L != full(X.n)) {
          proper.push_back(L);
        }
      }
      for (Mask L : proper) {
        bool maximal = true;
        for (Mask K : proper) {
          if (K != L && (K & L) == L) {
            maximal = false;
          }
        }
        if (!maximal) {
          continue;
        }
        Mod const Q = quotient(X, bourne(X, L));
        if (!(prime ? congruence_simple(Q) : ideal_simple(Q))) {
          return false;
        }
      }
    }
    return true;
  }

  //! P lifts through M -> M/L for every subtractive L.
  inline bool k_projective(Mod const& P, Mod const& M) {
    for (Mask L : subtractive_submodules(M)) {
      Labels const p = bourne(M, L);
      Mod const    Q = quotient(M, p);
      auto const   up = homs(P, M);
      for (auto const& g : homs(P, Q)) {
        bool lifted = false;
        for (auto const& h : up) {
          bool ok = true;
          for (int x = 0; x < P.n && ok; ++x) {
            ok = p[h[x]] == g[x];
          }
          if (ok) {
            lifted = true;
            break;
          }
        }
        if (!lifted) {
          return false;
        }
      }
    }
    return true;
  }

  //! Maps from every subtractive L <= M into J extend to M.
  inline bool i_injective(Mod const& J, Mod const& M) {
    auto const all = homs(M, J);
    for (Mask L : subtractive_submodules(M)) {
      Mod const R = restrict(M, L);
      std::vector<int> el;
      for (int x = 0; x < M.n; ++x) {
        if (M.in(L, x)) {
          el.push_back(x);
        }
      }
      std::set<std::vector<int>> restricted;
      for (auto const& h : all) {
        std::vector<int> r;
        for (int x : el) {
          r.push_back(h[x]);
        }
        restricted.insert(r);
      }
      for (auto const& f : homs(R, J)) {
        if (!restricted.count(f)) {
          return false;
        }
      }
    }
    return true;
  }

  // Exactness of A -f-> B -g-> C for maps between commutative monoids:
  // f(A) = g^{-1}(0) and g(b) = g(b') implies b + k = b' + k' for some
  // k, k' in g^{-1}(0).
  struct Monoid {
    Table add;
    int   zero;
  };

  inline bool exact_at(Monoid const& B,
                       std::vector<int> const& f,
                       std::vector<int> const& g,
                       int c_zero) {
    int const         n = static_cast<int>(B.add.size());
    std::vector<bool> im(n, false), ker(n, false);
    for (int x : f) {
      im[x] = true;
    }
    for (int b = 0; b < n; ++b) {
      ker[b] = g[b] == c_zero;
    }
    if (im != ker) {
      return false;
    }
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (g[b] != g[c]) {
          continue;
        }
        bool found = false;
        for (int k = 0; k < n && !found; ++k) {
          for (int l = 0; l < n && !found; ++l) {
            found = ker[k] && ker[l] && B.add[b][k] == B.add[c][l];
          }
        }
        if (!found) {
          return false;
        }
      }
    }
    return true;
  }

  //! Hom monoid with pointwise addition.
  struct HomMonoid {
    std::vector<std::vector<int>> maps;
    Monoid                        monoid;

    int index(std::vector<int> const& f) const {
      return static_cast<int>(
          std::find(maps.begin(), maps.end(), f) - maps.begin());
    }
  };

  inline HomMonoid hom_monoid(Mod const& A, Mod const& B) {
    HomMonoid H;
    H.maps  = homs(A, B);
    int n   = static_cast<int>(H.maps.size());
    H.monoid.add.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        std::vector<int> s(A.n);
        for (int x = 0; x < A.n; ++x) {
          s[x] = B.add[H.maps[i][x]][H.maps[j][x]];
        }
        H.monoid.add[i][j] = H.index(s);
      }
    }
    H.monoid.zero = H.index(std::vector<int>(A.n, B.zero));
    return H;
  }

  //! 0 -> X -f-> Y -g-> Z -> 0 is exact at all three interior positions.
  inline bool short_exact(Monoid const&           X,
                          Monoid const&           Y,
                          Monoid const&           Z,
                          std::vector<int> const& f,
                          std::vector<int> const& g) {
    int const        nz = static_cast<int>(Z.add.size());
    std::vector<int> zero_in(1, X.zero), to_zero_z(nz, 0);
    return exact_at(X, zero_in, f, Y.zero) && exact_at(Y, f, g, Z.zero)
           && exact_at(Z, g, to_zero_z, 0);
  }

  //! Hom(P, -) keeps 0 -> L -> M -> M/L -> 0 exact for every subtractive L.
  inline bool e_projective(Mod const& P, Mod const& M) {
    HomMonoid const HM = hom_monoid(P, M);
    for (Mask L : subtractive_submodules(M)) {
      Mod const        R = restrict(M, L);
      Labels const     p = bourne(M, L);
      Mod const        Q = quotient(M, p);
      std::vector<int> el;
      for (int x = 0; x < M.n; ++x) {
        if (M.in(L, x)) {
          el.push_back(x);
        }
      }
      HomMonoid const HL = hom_monoid(P, R);
      HomMonoid const HQ = hom_monoid(P, Q);
      std::vector<int> f, g;
      for (auto const& h : HL.maps) {
        std::vector<int> c(P.n);
        for (int x = 0; x < P.n; ++x) {
          c[x] = el[h[x]];
        }
        f.push_back(HM.index(c));
      }
      for (auto const& h : HM.maps) {
        std::vector<int> c(P.n);
        for (int x = 0; x < P.n; ++x) {
          c[x] = p[h[x]];
        }
        g.push_back(HQ.index(c));
      }
      if (!short_exact(HL.monoid, HM.monoid, HQ.monoid, f, g)) {
        return false;
      }
    }
    return true;
  }

  //! Hom(-, J) keeps 0 -> L -> M -> M/L -> 0 exact for every subtractive L.
  inline bool e_injective(Mod const& J, Mod const& M) {
    HomMonoid const HM = hom_monoid(M, J);
    for (Mask L : subtractive_submodules(M)) {
      Mod const        R = restrict(M, L);
      Labels const     p = bourne(M, L);
      Mod const        Q = quotient(M, p);
      std::vector<int> el;
      for (int x = 0; x < M.n; ++x) {
        if (M.in(L, x)) {
          el.push_back(x);
        }
      }
      HomMonoid const HL = hom_monoid(R, J);
      HomMonoid const HQ = hom_monoid(Q, J);
      // Hom(M/L, J) -> Hom(M, J) -> Hom(L, J)
      std::vector<int> f, g;
      for (auto const& h : HQ.maps) {
        std::vector<int> c(M.n);
        for (int x = 0; x < M.n; ++x) {
          c[x] = h[p[x]];
        }
        f.push_back(HM.index(c));
      }
      for (auto const& h : HM.maps) {
        std::vector<int> c;
        for (int x : el) {
          c.push_back(h[x]);
        }
        g.push_back(HL.index(c));
      }
      if (!short_exact(HQ.monoid, HM.monoid, HL.monoid, f, g)) {
        return false;
      }
    }
    return true;
  }

  //! Number of semirings on {0, .., n-1} with zero 0 and one 1 up to
  //! isomorphism, by exhaustive search over all tables.
  std::size_t count_semirings(int n, bool commutative_only);

}  // namespace oracle

#endif  // SEMILAB_TESTS_ORACLE_HPP_
