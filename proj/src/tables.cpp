//
// semilab - finite semirings, semimodules and their structure theory
//

#include "semilab/tables.hpp"

#include <algorithm>  // for max
#include <map>        // for map
#include <sstream>    // for ostringstream

#include "semilab/kernels.hpp"  // for axiom_violations_*

namespace semilab {

  ////////////////////////////////////////////////////////////////////////
  // Errors / helpers
  ////////////////////////////////////////////////////////////////////////

  std::string Violation::to_string() const {
    std::ostringstream os;
    os << law << "(";
    for (std::size_t i = 0; i < witness.size(); ++i) {
      os << (i == 0 ? "" : ",") << witness[i];
    }
    os << ")";
    return os.str();
  }

  namespace {
    std::string describe(std::vector<Violation> const& v) {
      std::ostringstream os;
      os << "axiom violation";
      for (std::size_t i = 0; i < v.size() && i < 4; ++i) {
        os << (i == 0 ? ": " : ", ") << v[i].to_string();
      }
      if (v.size() > 4) {
        os << ", ... (" << v.size() << " total)";
      }
      return os.str();
    }
  }  // namespace

  AxiomViolation::AxiomViolation(std::vector<Violation> v)
      : Error(describe(v)), _violations(std::move(v)) {}

  NotDistributive::NotDistributive(elem_t a, elem_t b, elem_t c)
      : Error("lattice is not distributive at (" + std::to_string(a) + ","
              + std::to_string(b) + "," + std::to_string(c) + ")"),
        _witness{a, b, c} {}

  std::string Subset::to_string() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for_each([&](elem_t x) {
      os << (first ? "" : ",") << x;
      first = false;
    });
    os << "}";
    return os.str();
  }

  char const* to_string(Search s) noexcept {
    switch (s) {
      case Search::present:
        return "present";
      case Search::absent:
        return "absent";
      default:
        return "unknown";
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // OpTable
  ////////////////////////////////////////////////////////////////////////

  OpTable OpTable::from_raw(RawTable const&     raw,
                            std::size_t        rows,
                            std::size_t        cols,
                            std::size_t        bound,
                            std::string const& name) {
    if (raw.size() != rows) {
      throw ShapeError(name + " table has " + std::to_string(raw.size())
                       + " rows, expected " + std::to_string(rows));
    }
    OpTable t(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      if (raw[r].size() != cols) {
        throw ShapeError(name + " table row " + std::to_string(r) + " has "
                         + std::to_string(raw[r].size())
                         + " entries, expected " + std::to_string(cols));
      }
      for (std::size_t c = 0; c < cols; ++c) {
        if (raw[r][c] >= bound) {
          throw ShapeError(name + " table entry (" + std::to_string(r) + ","
                           + std::to_string(c) + ") = "
                           + std::to_string(raw[r][c]) + " out of range");
        }
        t.at(r, c) = raw[r][c];
      }
    }
    return t;
  }

  RawTable OpTable::to_raw() const {
    RawTable out(_rows, std::vector<elem_t>(_cols));
    for (std::size_t r = 0; r < _rows; ++r) {
      for (std::size_t c = 0; c < _cols; ++c) {
        out[r][c] = (*this)(r, c);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Semirings
  ////////////////////////////////////////////////////////////////////////

  std::vector<Violation> semiring_violations(OpTable const& add,
                                             OpTable const& mul,
                                             elem_t         zero,
                                             elem_t         one,
                                             std::size_t    max_reported) {
    if (add.rows() >= 32) {
      return kernels::semiring_violations_omp(
          add, mul, zero, one, max_reported, 0);
    }
    return kernels::semiring_violations_serial(
        add, mul, zero, one, max_reported);
  }

  std::pair<Subset, Subset> v_and_k_sets(OpTable const& add, elem_t zero) {
    std::size_t const n = add.rows();
    Subset            v(n), k(n);
    for (elem_t s = 0; s < n; ++s) {
      for (elem_t t = 0; t < n; ++t) {
        if (add(s, t) == zero) {
          v.insert(s);
          break;
        }
      }
    }
    // x is cancellable iff y -> x + y is injective.
    for (elem_t x = 0; x < n; ++x) {
      Subset seen(n);
      bool   injective = true;
      for (elem_t y = 0; y < n && injective; ++y) {
        if (seen.contains(add(x, y))) {
          injective = false;
        }
        seen.insert(add(x, y));
      }
      if (injective) {
        k.insert(x);
      }
    }
    return {v, k};
  }

  SemiringTable validate_semiring(OpTable add,
                                  OpTable mul,
                                  elem_t  zero,
                                  elem_t  one) {
    std::size_t const n = add.rows();
    if (n == 0 || add.cols() != n || mul.rows() != n || mul.cols() != n) {
      throw ShapeError("semiring tables must be non-empty and square of equal "
                       "size");
    }
    if (zero >= n || one >= n) {
      throw ShapeError("zero/one index out of range");
    }
    for (auto x : add.data()) {
      if (x >= n) {
        throw ShapeError("add table entry out of range");
      }
    }
    for (auto x : mul.data()) {
      if (x >= n) {
        throw ShapeError("mul table entry out of range");
      }
    }
    auto v = semiring_violations(add, mul, zero, one);
    if (!v.empty()) {
      throw AxiomViolation(std::move(v));
    }
    SemiringTable S;
    S._add  = std::move(add);
    S._mul  = std::move(mul);
    S._zero = zero;
    S._one  = one;
    S._commutative = true;
    for (elem_t a = 0; a < n && S._commutative; ++a) {
      for (elem_t b = a + 1; b < n; ++b) {
        if (S._mul(a, b) != S._mul(b, a)) {
          S._commutative = false;
          break;
        }
      }
    }
    std::tie(S._v, S._k) = v_and_k_sets(S._add, zero);
    S._zerosumfree       = S._v.size() == 1;
    S._cancellative      = S._k.is_full();
    return S;
  }

  SemiringTable validate_semiring(RawTable const& add,
                                  RawTable const& mul,
                                  elem_t          zero,
                                  elem_t          one) {
    std::size_t const n = add.size();
    return validate_semiring(OpTable::from_raw(add, n, n, n, "add"),
                             OpTable::from_raw(mul, n, n, n, "mul"),
                             zero,
                             one);
  }

  std::string canonical_string(SemiringTable const& S) {
    std::ostringstream os;
    auto               dump = [&](OpTable const& t) {
      for (std::size_t r = 0; r < t.rows(); ++r) {
        os << (r == 0 ? "" : "/");
        for (std::size_t c = 0; c < t.cols(); ++c) {
          os << (c == 0 ? "" : " ") << t(r, c);
        }
      }
    };
    os << "add=";
    dump(S.add_table());
    os << ";mul=";
    dump(S.mul_table());
    os << ";zero=" << S.zero() << ";one=" << S.one();
    return os.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Semimodules
  ////////////////////////////////////////////////////////////////////////

  std::vector<Violation> semimodule_violations(SemiringTable const& S,
                                               OpTable const&       add,
                                               OpTable const&       act,
                                               elem_t               zero,
                                               std::size_t max_reported) {
    std::vector<Violation> out;
    auto                   report = [&](char const* law, std::vector<elem_t> w) {
      if (out.size() < max_reported) {
        out.push_back({law, std::move(w)});
      }
    };
    std::size_t const n = add.rows();
    std::size_t const r = S.order();
    for (elem_t a = 0; a < n; ++a) {
      if (add(zero, a) != a || add(a, zero) != a) {
        report("add-identity", {a});
      }
      for (elem_t b = 0; b < n; ++b) {
        if (add(a, b) != add(b, a)) {
          report("add-commutative", {a, b});
        }
        for (elem_t c = 0; c < n; ++c) {
          if (add(add(a, b), c) != add(a, add(b, c))) {
            report("add-associative", {a, b, c});
          }
        }
      }
    }
    for (elem_t m = 0; m < n; ++m) {
      if (act(S.one(), m) != m) {
        report("unit-action", {m});
      }
      if (act(S.zero(), m) != zero) {
        report("zero-scalar", {m});
      }
    }
    for (elem_t s = 0; s < r; ++s) {
      if (act(s, zero) != zero) {
        report("zero-vector", {s});
      }
      for (elem_t m = 0; m < n; ++m) {
        for (elem_t m2 = 0; m2 < n; ++m2) {
          if (act(s, add(m, m2)) != add(act(s, m), act(s, m2))) {
            report("vector-distributive", {s, m, m2});
          }
        }
        for (elem_t t = 0; t < r; ++t) {
          if (act(S.add(s, t), m) != add(act(s, m), act(t, m))) {
            report("scalar-distributive", {s, t, m});
          }
          if (act(S.mul(s, t), m) != act(s, act(t, m))) {
            report("action-associative", {s, t, m});
          }
        }
      }
    }
    return out;
  }

  ModulePtr validate_semimodule(SemiringPtr base,
                                OpTable     add,
                                OpTable     act,
                                elem_t      zero) {
    if (!base) {
      throw ShapeError("semimodule without a base semiring");
    }
    std::size_t const n = add.rows();
    if (n == 0 || add.cols() != n || act.rows() != base->order()
        || act.cols() != n) {
      throw ShapeError("semimodule tables have inconsistent shapes");
    }
    if (zero >= n) {
      throw ShapeError("semimodule zero out of range");
    }
    for (auto x : add.data()) {
      if (x >= n) {
        throw ShapeError("semimodule add entry out of range");
      }
    }
    for (auto x : act.data()) {
      if (x >= n) {
        throw ShapeError("semimodule act entry out of range");
      }
    }
    auto v = semimodule_violations(*base, add, act, zero);
    if (!v.empty()) {
      throw AxiomViolation(std::move(v));
    }
    auto M   = std::make_shared<SemimoduleTable>();
    M->_base = std::move(base);
    M->_add  = std::move(add);
    M->_act  = std::move(act);
    M->_zero = zero;
    return M;
  }

  ModulePtr validate_semimodule(SemiringPtr     base,
                                RawTable const& add,
                                RawTable const& act,
                                elem_t          zero) {
    std::size_t const n = add.size();
    std::size_t const r = base ? base->order() : 0;
    return validate_semimodule(base,
                               OpTable::from_raw(add, n, n, n, "add"),
                               OpTable::from_raw(act, r, n, n, "act"),
                               zero);
  }

  ModulePtr regular_module(SemiringPtr S) {
    auto add = S->add_table();
    auto act = S->mul_table();
    auto z   = S->zero();
    return validate_semimodule(std::move(S), std::move(add), std::move(act), z);
  }

  ModulePtr zero_module(SemiringPtr S) {
    OpTable add(1, 1, 0);
    OpTable act(S->order(), 1, 0);
    return validate_semimodule(std::move(S), std::move(add), std::move(act), 0);
  }

  ModulePtr restrict_module(ModulePtr const& M, Subset const& L) {
    auto const members = L.elements();
    std::vector<elem_t> index(M->order(), 0);
    for (std::size_t k = 0; k < members.size(); ++k) {
      index[members[k]] = static_cast<elem_t>(k);
    }
    std::size_t const n = members.size();
    std::size_t const r = M->base()->order();
    OpTable           add(n, n), act(r, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto x = M->add(members[i], members[j]);
        if (!L.contains(x)) {
          throw Error("restrict_module: subset not closed under addition");
        }
        add.at(i, j) = index[x];
      }
      for (elem_t s = 0; s < r; ++s) {
        auto x = M->act(s, members[i]);
        if (!L.contains(x)) {
          throw Error("restrict_module: subset not closed under the action");
        }
        act.at(s, i) = index[x];
      }
    }
    if (!L.contains(M->zero())) {
      throw Error("restrict_module: subset does not contain zero");
    }
    return validate_semimodule(
        M->base(), std::move(add), std::move(act), index[M->zero()]);
  }

  ModulePtr direct_sum(ModulePtr const& A, ModulePtr const& B) {
    if (A->base() != B->base() && !(*A->base() == *B->base())) {
      throw Error("direct_sum: semimodules over different semirings");
    }
    std::size_t const na = A->order(), nb = B->order(), n = na * nb;
    std::size_t const r = A->base()->order();
    OpTable           add(n, n), act(r, n);
    for (elem_t a1 = 0; a1 < na; ++a1) {
      for (elem_t b1 = 0; b1 < nb; ++b1) {
        auto x = a1 * nb + b1;
        for (elem_t a2 = 0; a2 < na; ++a2) {
          for (elem_t b2 = 0; b2 < nb; ++b2) {
            add.at(x, a2 * nb + b2) = static_cast<elem_t>(
                A->add(a1, a2) * nb + B->add(b1, b2));
          }
        }
        for (elem_t s = 0; s < r; ++s) {
          act.at(s, x)
              = static_cast<elem_t>(A->act(s, a1) * nb + B->act(s, b1));
        }
      }
    }
    return validate_semimodule(A->base(),
                               std::move(add),
                               std::move(act),
                               static_cast<elem_t>(A->zero() * nb + B->zero()));
  }

  std::vector<std::pair<std::size_t, std::size_t>>
  additive_signatures(OpTable const& add) {
    std::size_t const n = add.rows();
    std::vector<std::pair<std::size_t, std::size_t>> sig(n);
    for (elem_t x = 0; x < n; ++x) {
      std::map<elem_t, std::size_t> seen;
      elem_t                        y    = x;
      std::size_t                   step = 0;
      while (seen.find(y) == seen.end()) {
        seen[y] = step++;
        y       = add(y, x);
      }
      sig[x] = {seen[y], step - seen[y]};
    }
    return sig;
  }

}  // namespace semilab
