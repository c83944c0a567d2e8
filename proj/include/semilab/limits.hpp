//
// semilab - finite semirings, semimodules and their structure theory
//

#ifndef SEMILAB_LIMITS_HPP_
#define SEMILAB_LIMITS_HPP_

#include <cstddef>  // for size_t
#include <string>   // for string
#include <vector>   // for vector

namespace semilab {

  //! Search budgets.  Every enumeration honours these and reports whether it
  //! finished; nothing is ever silently truncated.
  struct Limits {
    //! Maximum number of objects an enumeration may return.
    std::size_t max_results = 200'000;
    //! Maximum number of closure computations in one enumeration.
    std::size_t max_steps = 50'000'000;
    //! Maximum number of backtracking nodes in one Hom-set search.
    std::size_t max_hom_nodes = 5'000'000;
    //! Largest carrier built by derived constructions (End, M_k, sums).
    std::size_t max_carrier = 4096;
    //! Largest direct sum admitted into the bounded test family.
    std::size_t max_family_carrier = 16;
    //! OpenMP threads; 0 means the runtime default, 1 the serial kernels.
    int threads = 0;

    //! Apply one "key=value" override; throws InvalidParameters on unknown
    //! keys or non-positive values.
    void set(std::string const& key_value);
  };

  //! Result of an enumeration together with its exhaustiveness marker.
  template <typename T>
  struct Enumeration {
    std::vector<T> items;
    bool           exhaustive = true;

    std::size_t size() const noexcept {
      return items.size();
    }
  };

  //! Three-valued outcome of a search: found, exhaustively absent, or not
  //! decided within limits.
  enum class Search { present, absent, unknown };

  char const* to_string(Search s) noexcept;

}  // namespace semilab

#endif  // SEMILAB_LIMITS_HPP_
