//
// semilab - finite semirings, semimodules and their structure theory
//

#include "semilab/catalog.hpp"

#include <algorithm>  // for find

#include "semilab/errors.hpp"  // for InvalidParameters, NotDistributive, ...

namespace semilab {

  SemiringTable make_B(std::size_t n, std::size_t i) {
    if (n < 2 || i >= n) {
      throw InvalidParameters("B(n, i) needs n >= 2 and 0 <= i < n, got n = "
                              + std::to_string(n)
                              + ", i = " + std::to_string(i));
    }
    auto wrap = [&](std::size_t x) -> elem_t {
      return x < n ? x : i + (x - i) % (n - i);
    };
    OpTable add(n, n), mul(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        add.at(a, b) = wrap(a + b);
        mul.at(a, b) = wrap(a * b);
      }
    }
    return validate_semiring(std::move(add), std::move(mul), 0, 1);
  }

  namespace {
    bool leq(LatticeSpec const& L, elem_t a, elem_t b) {
      return L.join(a, b) == b;
    }
  }  // namespace

  void validate_lattice(LatticeSpec const& L) {
    std::size_t const n = L.order;
    if (n == 0 || L.join.rows() != n || L.join.cols() != n || L.bottom >= n
        || L.top >= n) {
      throw ShapeError("lattice: join must be order x order with bounds in "
                       "range");
    }
    if (L.meet && (L.meet->rows() != n || L.meet->cols() != n)) {
      throw ShapeError("lattice: meet must be order x order");
    }
    for (auto x : L.join.data()) {
      if (x >= n) {
        throw ShapeError("lattice: join entry out of range");
      }
    }
    std::vector<Violation> v;
    auto const&            J = L.join;
    for (elem_t a = 0; a < n; ++a) {
      if (J(a, a) != a) {
        v.push_back({"join-idempotent", {a}});
      }
      if (J(L.bottom, a) != a) {
        v.push_back({"bottom-identity", {a}});
      }
      if (J(L.top, a) != L.top) {
        v.push_back({"top-absorbing", {a}});
      }
      for (elem_t b = 0; b < n; ++b) {
        if (J(a, b) != J(b, a)) {
          v.push_back({"join-commutative", {a, b}});
        }
        for (elem_t c = 0; c < n; ++c) {
          if (J(J(a, b), c) != J(a, J(b, c))) {
            v.push_back({"join-associative", {a, b, c}});
          }
        }
      }
    }
    if (v.empty() && L.meet) {
      auto const& M = *L.meet;
      for (auto x : M.data()) {
        if (x >= n) {
          throw ShapeError("lattice: meet entry out of range");
        }
      }
      auto const expected = lattice_meet(L);
      for (elem_t a = 0; a < n; ++a) {
        for (elem_t b = 0; b < n; ++b) {
          if (J(a, M(a, b)) != a || M(a, J(a, b)) != a) {
            v.push_back({"absorption", {a, b}});
          } else if (M(a, b) != expected(a, b)) {
            v.push_back({"meet-is-infimum", {a, b}});
          }
        }
      }
    }
    if (!v.empty()) {
      throw AxiomViolation(std::move(v));
    }
  }

  OpTable lattice_meet(LatticeSpec const& L) {
    std::size_t const n = L.order;
    OpTable           meet(n, n);
    for (elem_t a = 0; a < n; ++a) {
      for (elem_t b = 0; b < n; ++b) {
        // In a finite join semilattice with bottom, the join of all lower
        // bounds is the greatest lower bound.
        elem_t m = L.bottom;
        for (elem_t c = 0; c < n; ++c) {
          if (leq(L, c, a) && leq(L, c, b)) {
            m = L.join(m, c);
          }
        }
        meet.at(a, b) = m;
      }
    }
    return meet;
  }

  LatticeSpec chain_lattice(std::size_t n) {
    if (n == 0) {
      throw InvalidParameters("chain lattice needs at least one element");
    }
    LatticeSpec L{n, OpTable(n, n), std::nullopt, 0, static_cast<elem_t>(n - 1)};
    for (elem_t a = 0; a < n; ++a) {
      for (elem_t b = 0; b < n; ++b) {
        L.join.at(a, b) = std::max(a, b);
      }
    }
    return L;
  }

  namespace {
    // A lattice of five elements given by its strict order relation.
    LatticeSpec from_order(std::vector<std::pair<elem_t, elem_t>> const& lt) {
      std::size_t const n = 5;
      std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
      for (elem_t a = 0; a < n; ++a) {
        le[a][a] = true;
        le[0][a] = true;
        le[a][n - 1] = true;
      }
      for (auto [a, b] : lt) {
        le[a][b] = true;
      }
      LatticeSpec L{n, OpTable(n, n), std::nullopt, 0, n - 1};
      for (elem_t a = 0; a < n; ++a) {
        for (elem_t b = 0; b < n; ++b) {
          // the least common upper bound
          for (elem_t c = 0; c < n; ++c) {
            if (!le[a][c] || !le[b][c]) {
              continue;
            }
            bool least = true;
            for (elem_t d = 0; d < n; ++d) {
              if (le[a][d] && le[b][d] && !le[c][d]) {
                least = false;
              }
            }
            if (least) {
              L.join.at(a, b) = c;
            }
          }
        }
      }
      return L;
    }
  }  // namespace

  LatticeSpec diamond_lattice() {
    return from_order({});
  }

  LatticeSpec pentagon_lattice() {
    return from_order({{1, 3}});
  }

  SemiringTable make_lattice_semiring(LatticeSpec const& L) {
    validate_lattice(L);
    OpTable const meet = L.meet ? *L.meet : lattice_meet(L);
    std::size_t const n = L.order;
    for (elem_t a = 0; a < n; ++a) {
      for (elem_t b = 0; b < n; ++b) {
        for (elem_t c = 0; c < n; ++c) {
          if (meet(a, L.join(b, c)) != L.join(meet(a, b), meet(a, c))) {
            throw NotDistributive(a, b, c);
          }
        }
      }
    }
    return validate_semiring(L.join, meet, L.bottom, L.top);
  }

  EndConstruction make_end_semiring(LatticeSpec const& L,
                                    bool               preserve_top,
                                    Limits const&      limits) {
    validate_lattice(L);
    std::size_t const n = L.order;
    auto const&       J = L.join;

    std::vector<std::vector<elem_t>> maps;
    std::vector<elem_t>              f(n, 0);
    // Assign f(0), f(1), ... in turn; after f(x) is fixed every pair whose
    // join lies in the assigned prefix is checked.
    auto rec = [&](auto&& self, elem_t x) -> void {
      if (x == n) {
        if (!preserve_top || f[L.top] == L.top
            || std::all_of(f.begin(), f.end(),
                           [&](elem_t y) { return y == L.bottom; })) {
          if (maps.size() >= limits.max_carrier) {
            throw LimitExceeded("End construction exceeds max_carrier = "
                                + std::to_string(limits.max_carrier));
          }
          maps.push_back(f);
        }
        return;
      }
      for (elem_t y = 0; y < n; ++y) {
        if (x == L.bottom && y != L.bottom) {
          continue;
        }
        f[x]    = y;
        bool ok = true;
        for (elem_t a = 0; a <= x && ok; ++a) {
          for (elem_t b = 0; b <= x && ok; ++b) {
            elem_t const c = J(a, b);
            if ((a == x || b == x || c == x) && c <= x
                && f[c] != J(f[a], f[b])) {
              ok = false;
            }
          }
        }
        if (ok) {
          self(self, x + 1);
        }
      }
    };
    rec(rec, 0);

    std::size_t const m = maps.size();
    auto index = [&](std::vector<elem_t> const& g) -> elem_t {
      return std::find(maps.begin(), maps.end(), g) - maps.begin();
    };
    OpTable             add(m, m), mul(m, m);
    std::vector<elem_t> g(n);
    for (elem_t i = 0; i < m; ++i) {
      for (elem_t j = 0; j < m; ++j) {
        for (elem_t x = 0; x < n; ++x) {
          g[x] = J(maps[i][x], maps[j][x]);
        }
        add.at(i, j) = index(g);
        for (elem_t x = 0; x < n; ++x) {
          g[x] = maps[i][maps[j][x]];
        }
        mul.at(i, j) = index(g);
      }
    }
    std::vector<elem_t> zero(n, L.bottom), id(n);
    for (elem_t x = 0; x < n; ++x) {
      id[x] = x;
    }
    auto S = validate_semiring(std::move(add), std::move(mul), index(zero),
                               index(id));
    return {std::move(S), std::move(maps), preserve_top};
  }

  SemiringTable make_matrix_semiring(SemiringTable const& S,
                                     std::size_t          k,
                                     Limits const&        limits) {
    if (k == 0) {
      throw InvalidParameters("matrix size must be positive");
    }
    std::size_t const n     = S.order();
    std::size_t const cells = k * k;
    std::size_t       order = 1;
    for (std::size_t c = 0; c < cells; ++c) {
      order *= n;
      if (order > limits.max_carrier) {
        throw LimitExceeded("matrix semiring exceeds max_carrier = "
                            + std::to_string(limits.max_carrier));
      }
    }
    auto digits = [&](std::size_t x) {
      std::vector<elem_t> d(cells);
      for (std::size_t c = cells; c-- > 0;) {
        d[c] = x % n;
        x /= n;
      }
      return d;
    };
    auto number = [&](std::vector<elem_t> const& d) {
      std::size_t x = 0;
      for (auto v : d) {
        x = x * n + v;
      }
      return static_cast<elem_t>(x);
    };
    std::vector<std::vector<elem_t>> entries(order);
    for (std::size_t x = 0; x < order; ++x) {
      entries[x] = digits(x);
    }
    OpTable             add(order, order), mul(order, order);
    std::vector<elem_t> c(cells);
    for (std::size_t x = 0; x < order; ++x) {
      auto const& A = entries[x];
      for (std::size_t y = 0; y < order; ++y) {
        auto const& B = entries[y];
        for (std::size_t e = 0; e < cells; ++e) {
          c[e] = S.add(A[e], B[e]);
        }
        add.at(x, y) = number(c);
        for (std::size_t r = 0; r < k; ++r) {
          for (std::size_t col = 0; col < k; ++col) {
            elem_t v = S.zero();
            for (std::size_t t = 0; t < k; ++t) {
              v = S.add(v, S.mul(A[r * k + t], B[t * k + col]));
            }
            c[r * k + col] = v;
          }
        }
        mul.at(x, y) = number(c);
      }
    }
    std::vector<elem_t> zero(cells, S.zero()), one(cells, S.zero());
    for (std::size_t r = 0; r < k; ++r) {
      one[r * k + r] = S.one();
    }
    return validate_semiring(std::move(add), std::move(mul), number(zero),
                             number(one));
  }

  SemiringTable make_product(std::vector<SemiringTable> const& factors) {
    if (factors.empty()) {
      throw InvalidParameters("product of an empty list");
    }
    std::size_t order = 1;
    for (auto const& F : factors) {
      order *= F.order();
    }
    auto split = [&](std::size_t x) {
      std::vector<elem_t> d(factors.size());
      for (std::size_t f = factors.size(); f-- > 0;) {
        d[f] = x % factors[f].order();
        x /= factors[f].order();
      }
      return d;
    };
    auto join = [&](std::vector<elem_t> const& d) {
      std::size_t x = 0;
      for (std::size_t f = 0; f < factors.size(); ++f) {
        x = x * factors[f].order() + d[f];
      }
      return static_cast<elem_t>(x);
    };
    OpTable             add(order, order), mul(order, order);
    std::vector<elem_t> s(factors.size()), p(factors.size());
    for (std::size_t x = 0; x < order; ++x) {
      auto const a = split(x);
      for (std::size_t y = 0; y < order; ++y) {
        auto const b = split(y);
        for (std::size_t f = 0; f < factors.size(); ++f) {
          s[f] = factors[f].add(a[f], b[f]);
          p[f] = factors[f].mul(a[f], b[f]);
        }
        add.at(x, y) = join(s);
        mul.at(x, y) = join(p);
      }
    }
    std::vector<elem_t> zero, one;
    for (auto const& F : factors) {
      zero.push_back(F.zero());
      one.push_back(F.one());
    }
    return validate_semiring(std::move(add), std::move(mul), join(zero),
                             join(one));
  }

}  // namespace semilab
