//
// semilab - finite semirings, semimodules and their structure theory
//

#ifndef SEMILAB_PARTITION_HPP_
#define SEMILAB_PARTITION_HPP_

#include <compare>  // for strong_ordering
#include <cstddef>  // for size_t
#include <utility>  // for pair
#include <vector>   // for vector

#include "subset.hpp"  // for elem_t, Subset
#include "tables.hpp"  // for SemiringTable, SemimoduleTable

namespace semilab {

  //! A partition of {0, ..., n-1} stored as normalised class labels: classes
  //! are numbered in order of their smallest member, so equal partitions
  //! have equal label vectors.
  class CongruencePartition {
   public:
    CongruencePartition() = default;

    //! Normalises arbitrary labels.
    static CongruencePartition from_labels(std::vector<elem_t> const& labels);
    static CongruencePartition discrete(std::size_t n);
    static CongruencePartition universal(std::size_t n);
    static CongruencePartition from_classes(std::size_t                n,
                                            std::vector<Subset> const& cls);

    std::size_t order() const noexcept {
      return _class_of.size();
    }
    std::size_t num_classes() const noexcept {
      return _num_classes;
    }
    elem_t class_of(elem_t x) const noexcept {
      return _class_of[x];
    }
    std::vector<elem_t> const& labels() const noexcept {
      return _class_of;
    }
    bool related(elem_t a, elem_t b) const noexcept {
      return _class_of[a] == _class_of[b];
    }
    bool is_discrete() const noexcept {
      return _num_classes == order();
    }
    bool is_universal() const noexcept {
      return _num_classes <= 1;
    }
    //! True if every class of *this lies inside a class of \p coarser.
    bool refines(CongruencePartition const& coarser) const noexcept;

    Subset              class_members(elem_t c) const;
    std::vector<Subset> classes() const;

    //! "{{0,2},{1}}"
    std::string to_string() const;

    friend bool operator==(CongruencePartition const&,
                           CongruencePartition const&) = default;

    //! Canonical order: more classes first (the discrete partition leads),
    //! then lexicographic labels.
    friend std::strong_ordering operator<=>(CongruencePartition const& a,
                                            CongruencePartition const& b) {
      if (auto c = b._num_classes <=> a._num_classes; c != 0) {
        return c;
      }
      return a._class_of <=> b._class_of;
    }

   private:
    std::vector<elem_t> _class_of;
    std::size_t         _num_classes = 0;
  };

  struct PartitionHash {
    std::size_t operator()(CongruencePartition const& p) const noexcept;
  };

  //! The translations of an algebra: a congruence is exactly an equivalence
  //! relation invariant under every map in the family.
  struct UnaryFamily {
    std::size_t                      order = 0;
    std::vector<std::vector<elem_t>> maps;
  };

  //! x -> x + z for every z, and x -> s.x for every scalar s.
  UnaryFamily translations(SemimoduleTable const& M);

  //! x -> x + z, x -> z.x and x -> x.z for every z (two-sided congruences).
  UnaryFamily translations(SemiringTable const& S);

  bool is_compatible(UnaryFamily const& fam, CongruencePartition const& rho);

}  // namespace semilab

#endif  // SEMILAB_PARTITION_HPP_
