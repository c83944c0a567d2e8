//
// semilab - finite semirings, semimodules and their structure theory
//

#ifndef SEMILAB_TESTS_HELPERS_HPP_
#define SEMILAB_TESTS_HELPERS_HPP_

#include <set>     // for set
#include <vector>  // for vector

#include "oracle.hpp"
#include "semilab/partition.hpp"  // for CongruencePartition
#include "semilab/subset.hpp"     // for Subset

namespace helpers {

  inline oracle::Mask mask(semilab::Subset const& s) {
    oracle::Mask m = 0;
    s.for_each([&](semilab::elem_t x) { m |= oracle::Mask(1) << x; });
    return m;
  }

  inline semilab::Subset subset(std::size_t n, oracle::Mask m) {
    semilab::Subset s(n);
    for (std::size_t x = 0; x < n; ++x) {
      if ((m >> x) & 1U) {
        s.insert(static_cast<semilab::elem_t>(x));
      }
    }
    return s;
  }

  inline oracle::Labels labels(semilab::CongruencePartition const& p) {
    return {p.labels().begin(), p.labels().end()};
  }

  template <typename T>
  std::set<T> as_set(std::vector<T> const& v) {
    return {v.begin(), v.end()};
  }

}  // namespace helpers

#endif  // SEMILAB_TESTS_HELPERS_HPP_
