//
// semilab - finite semirings, semimodules and their structure theory
//

#ifndef SEMILAB_TESTS_CORPUS_HPP_
#define SEMILAB_TESTS_CORPUS_HPP_

#include <string>   // for string
#include <utility>  // for pair
#include <vector>   // for vector

#include "semilab/auditor.hpp"  // for enumerate_semirings
#include "semilab/catalog.hpp"  // for make_B, make_product
#include "semilab/tables.hpp"   // for SemiringTable

namespace corpus {

  using Named = std::pair<std::string, semilab::SemiringTable>;

  inline semilab::SemiringTable boolean() {
    return semilab::make_B(2, 1);
  }

  //! Every semiring of order <= \p bound plus the small named examples.
  inline std::vector<Named> small(std::size_t bound = 3) {
    using namespace semilab;
    std::vector<Named> out;
    Limits             lim;
    lim.threads = 1;
    for (std::size_t n = 2; n <= bound; ++n) {
      auto const e = enumerate_semirings(n, false, lim);
      for (std::size_t k = 0; k < e.items.size(); ++k) {
        out.emplace_back("S" + std::to_string(n) + "." + std::to_string(k + 1),
                         e.items[k]);
      }
    }
    out.emplace_back("B(4,3)", make_B(4, 3));
    out.emplace_back("B(5,2)", make_B(5, 2));
    out.emplace_back("Z4", make_B(4, 0));
    out.emplace_back("BxB", make_product({boolean(), boolean()}));
    out.emplace_back("BxZ2", make_product({boolean(), make_B(2, 0)}));
    return out;
  }

}  // namespace corpus

#endif  // SEMILAB_TESTS_CORPUS_HPP_
