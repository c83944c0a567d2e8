//
// semilab - finite semirings, semimodules and their structure theory
//

#ifndef SEMILAB_TABLES_HPP_
#define SEMILAB_TABLES_HPP_

#include <compare>  // for strong_ordering
#include <cstddef>  // for size_t
#include <memory>   // for shared_ptr
#include <string>   // for string
#include <vector>   // for vector

#include "errors.hpp"  // for Violation
#include "subset.hpp"  // for elem_t, Subset

namespace semilab {

  using RawTable = std::vector<std::vector<elem_t>>;

  //! Dense rows x cols operation table.
  class OpTable {
   public:
    OpTable() = default;
    OpTable(std::size_t rows, std::size_t cols, elem_t fill = 0)
        : _rows(rows), _cols(cols), _data(rows * cols, fill) {}

    //! Throws ShapeError if \p raw is ragged, not rows x cols, or has an
    //! entry >= bound.
    static OpTable from_raw(RawTable const& raw,
                            std::size_t        rows,
                            std::size_t        cols,
                            std::size_t        bound,
                            std::string const& name);

    elem_t operator()(std::size_t r, std::size_t c) const noexcept {
      return _data[r * _cols + c];
    }

    elem_t& at(std::size_t r, std::size_t c) noexcept {
      return _data[r * _cols + c];
    }

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }
    std::vector<elem_t> const& data() const noexcept {
      return _data;
    }

    RawTable to_raw() const;

    friend bool operator==(OpTable const&, OpTable const&) = default;
    friend std::strong_ordering operator<=>(OpTable const& a,
                                            OpTable const& b) = default;

   private:
    std::size_t         _rows = 0;
    std::size_t         _cols = 0;
    std::vector<elem_t> _data;
  };

  //! A validated finite semiring.  Only validate_semiring constructs these,
  //! so every instance satisfies the axioms and carries correct flags.
  class SemiringTable {
   public:
    std::size_t order() const noexcept {
      return _add.rows();
    }
    elem_t add(elem_t a, elem_t b) const noexcept {
      return _add(a, b);
    }
    elem_t mul(elem_t a, elem_t b) const noexcept {
      return _mul(a, b);
    }
    elem_t zero() const noexcept {
      return _zero;
    }
    elem_t one() const noexcept {
      return _one;
    }
    OpTable const& add_table() const noexcept {
      return _add;
    }
    OpTable const& mul_table() const noexcept {
      return _mul;
    }

    bool is_commutative() const noexcept {
      return _commutative;
    }
    bool is_zerosumfree() const noexcept {
      return _zerosumfree;
    }
    bool is_cancellative() const noexcept {
      return _cancellative;
    }
    //! Elements with an additive inverse.
    Subset const& v_set() const noexcept {
      return _v;
    }
    //! Additively cancellable elements.
    Subset const& k_set() const noexcept {
      return _k;
    }

    friend bool operator==(SemiringTable const& a, SemiringTable const& b) {
      return a._add == b._add && a._mul == b._mul && a._zero == b._zero
             && a._one == b._one;
    }

   private:
    friend SemiringTable validate_semiring(OpTable, OpTable, elem_t, elem_t);

    OpTable _add;
    OpTable _mul;
    elem_t  _zero = 0;
    elem_t  _one  = 0;
    bool    _commutative  = false;
    bool    _zerosumfree  = false;
    bool    _cancellative = false;
    Subset  _v;
    Subset  _k;
  };

  using SemiringPtr = std::shared_ptr<SemiringTable const>;

  //! All axiom failures of a candidate semiring, at most \p max_reported.
  std::vector<Violation> semiring_violations(OpTable const& add,
                                             OpTable const& mul,
                                             elem_t         zero,
                                             elem_t         one,
                                             std::size_t    max_reported = 16);

  //! Throws AxiomViolation (with every violation found) or ShapeError.
  SemiringTable validate_semiring(OpTable add,
                                  OpTable mul,
                                  elem_t  zero,
                                  elem_t  one);

  SemiringTable validate_semiring(RawTable const& add,
                                  RawTable const& mul,
                                  elem_t          zero,
                                  elem_t          one);

  //! (V(S), K+(S)): elements with an additive inverse, cancellable elements.
  std::pair<Subset, Subset> v_and_k_sets(OpTable const& add, elem_t zero);

  inline std::pair<Subset, Subset> v_and_k_sets(SemiringTable const& S) {
    return {S.v_set(), S.k_set()};
  }

  //! Left semimodule over a finite semiring.  act(s, m) is s.m.
  class SemimoduleTable {
   public:
    SemiringPtr const& base() const noexcept {
      return _base;
    }
    std::size_t order() const noexcept {
      return _add.rows();
    }
    elem_t add(elem_t a, elem_t b) const noexcept {
      return _add(a, b);
    }
    elem_t act(elem_t s, elem_t m) const noexcept {
      return _act(s, m);
    }
    elem_t zero() const noexcept {
      return _zero;
    }
    OpTable const& add_table() const noexcept {
      return _add;
    }
    OpTable const& act_table() const noexcept {
      return _act;
    }
    bool is_zero() const noexcept {
      return order() == 1;
    }

   private:
    friend std::shared_ptr<SemimoduleTable const>
    validate_semimodule(SemiringPtr, OpTable, OpTable, elem_t);

    SemiringPtr _base;
    OpTable     _add;
    OpTable     _act;
    elem_t      _zero = 0;
  };

  using ModulePtr = std::shared_ptr<SemimoduleTable const>;

  std::vector<Violation> semimodule_violations(SemiringTable const& base,
                                               OpTable const&       add,
                                               OpTable const&       act,
                                               elem_t               zero,
                                               std::size_t max_reported = 16);

  ModulePtr validate_semimodule(SemiringPtr base,
                                OpTable     add,
                                OpTable     act,
                                elem_t      zero);

  ModulePtr validate_semimodule(SemiringPtr     base,
                                RawTable const& add,
                                RawTable const& act,
                                elem_t          zero);

  inline SemiringPtr share(SemiringTable S) {
    return std::make_shared<SemiringTable const>(std::move(S));
  }

  //! S as a left module over itself.
  ModulePtr regular_module(SemiringPtr S);

  //! The one-element semimodule.
  ModulePtr zero_module(SemiringPtr S);

  //! The subsemimodule on the members of \p L (which must be closed),
  //! re-indexed in ascending order: element k of the result is the k-th
  //! member of L.
  ModulePtr restrict_module(ModulePtr const& M, Subset const& L);

  //! External direct sum; (a, b) has index a * |B| + b.
  ModulePtr direct_sum(ModulePtr const& A, ModulePtr const& B);

  //! Additive index/period signature of each element: x, 2x, 3x, ...
  //! enters a cycle after `index` steps with length `period`.  Preserved by
  //! isomorphisms.
  std::vector<std::pair<std::size_t, std::size_t>>
  additive_signatures(OpTable const& add);

  //! Compact identifier "add:<rows>|mul:<rows>" used by reports.
  std::string canonical_string(SemiringTable const& S);

}  // namespace semilab

#endif  // SEMILAB_TABLES_HPP_
