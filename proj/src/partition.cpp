//
// semilab - finite semirings, semimodules and their structure theory
//

#include "semilab/partition.hpp"

#include <algorithm>  // for max
#include <sstream>    // for ostringstream

namespace semilab {

  CongruencePartition
  CongruencePartition::from_labels(std::vector<elem_t> const& labels) {
    CongruencePartition p;
    p._class_of.resize(labels.size());
    elem_t max_label = 0;
    for (auto l : labels) {
      max_label = std::max(max_label, l);
    }
    constexpr elem_t    unset = static_cast<elem_t>(-1);
    std::vector<elem_t> remap(labels.empty() ? 0 : max_label + 1, unset);
    elem_t              next = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (remap[labels[i]] == unset) {
        remap[labels[i]] = next++;
      }
      p._class_of[i] = remap[labels[i]];
    }
    p._num_classes = next;
    return p;
  }

  CongruencePartition CongruencePartition::discrete(std::size_t n) {
    CongruencePartition p;
    p._class_of.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      p._class_of[i] = static_cast<elem_t>(i);
    }
    p._num_classes = n;
    return p;
  }

  CongruencePartition CongruencePartition::universal(std::size_t n) {
    CongruencePartition p;
    p._class_of.assign(n, 0);
    p._num_classes = n == 0 ? 0 : 1;
    return p;
  }

  CongruencePartition
  CongruencePartition::from_classes(std::size_t                n,
                                    std::vector<Subset> const& cls) {
    std::vector<elem_t> labels(n, 0);
    std::vector<bool>   covered(n, false);
    for (std::size_t c = 0; c < cls.size(); ++c) {
      cls[c].for_each([&](elem_t x) {
        labels[x]  = static_cast<elem_t>(c);
        covered[x] = true;
      });
    }
    // uncovered elements are singletons
    elem_t next = static_cast<elem_t>(cls.size());
    for (std::size_t x = 0; x < n; ++x) {
      if (!covered[x]) {
        labels[x] = next++;
      }
    }
    return from_labels(labels);
  }

  bool CongruencePartition::refines(
      CongruencePartition const& coarser) const noexcept {
    for (std::size_t a = 0; a < order(); ++a) {
      // a is related to the first member of its class
      for (std::size_t b = 0; b < a; ++b) {
        if (_class_of[a] == _class_of[b]) {
          if (!coarser.related(static_cast<elem_t>(a),
                               static_cast<elem_t>(b))) {
            return false;
          }
          break;
        }
      }
    }
    return true;
  }

  Subset CongruencePartition::class_members(elem_t c) const {
    Subset s(order());
    for (std::size_t x = 0; x < order(); ++x) {
      if (_class_of[x] == c) {
        s.insert(static_cast<elem_t>(x));
      }
    }
    return s;
  }

  std::vector<Subset> CongruencePartition::classes() const {
    std::vector<Subset> out(_num_classes, Subset(order()));
    for (std::size_t x = 0; x < order(); ++x) {
      out[_class_of[x]].insert(static_cast<elem_t>(x));
    }
    return out;
  }

  std::string CongruencePartition::to_string() const {
    std::ostringstream os;
    os << "{";
    auto cls = classes();
    for (std::size_t c = 0; c < cls.size(); ++c) {
      os << (c == 0 ? "" : ",") << cls[c].to_string();
    }
    os << "}";
    return os.str();
  }

  std::size_t
  PartitionHash::operator()(CongruencePartition const& p) const noexcept {
    std::size_t h = p.order();
    for (auto x : p.labels()) {
      h = h * 1000003u ^ x;
    }
    return h;
  }

  UnaryFamily translations(SemimoduleTable const& M) {
    UnaryFamily fam;
    fam.order           = M.order();
    std::size_t const n = M.order();
    for (elem_t z = 0; z < n; ++z) {
      if (z == M.zero()) {
        continue;
      }
      std::vector<elem_t> f(n);
      for (elem_t x = 0; x < n; ++x) {
        f[x] = M.add(x, z);
      }
      fam.maps.push_back(std::move(f));
    }
    auto const& S = *M.base();
    for (elem_t s = 0; s < S.order(); ++s) {
      if (s == S.one()) {
        continue;
      }
      std::vector<elem_t> f(n);
      for (elem_t x = 0; x < n; ++x) {
        f[x] = M.act(s, x);
      }
      fam.maps.push_back(std::move(f));
    }
    return fam;
  }

  UnaryFamily translations(SemiringTable const& S) {
    UnaryFamily fam;
    fam.order           = S.order();
    std::size_t const n = S.order();
    for (elem_t z = 0; z < n; ++z) {
      std::vector<elem_t> plus(n), left(n), right(n);
      for (elem_t x = 0; x < n; ++x) {
        plus[x]  = S.add(x, z);
        left[x]  = S.mul(z, x);
        right[x] = S.mul(x, z);
      }
      if (z != S.zero()) {
        fam.maps.push_back(std::move(plus));
      }
      if (z != S.one()) {
        fam.maps.push_back(std::move(left));
        if (!S.is_commutative()) {
          fam.maps.push_back(std::move(right));
        }
      }
    }
    return fam;
  }

  bool is_compatible(UnaryFamily const& fam, CongruencePartition const& rho) {
    if (rho.order() != fam.order) {
      return false;
    }
    // It suffices to check each element against its class representative.
    std::vector<elem_t> rep(rho.num_classes(), 0);
    std::vector<bool>   has(rho.num_classes(), false);
    for (elem_t x = 0; x < fam.order; ++x) {
      if (!has[rho.class_of(x)]) {
        has[rho.class_of(x)] = true;
        rep[rho.class_of(x)] = x;
      }
    }
    for (auto const& f : fam.maps) {
      for (elem_t x = 0; x < fam.order; ++x) {
        if (!rho.related(f[x], f[rep[rho.class_of(x)]])) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace semilab
