//
// semilab - finite semirings, semimodules and their structure theory
//

#ifndef SEMILAB_SUBSET_HPP_
#define SEMILAB_SUBSET_HPP_

#include <bit>               // for popcount, countr_zero
#include <compare>           // for strong_ordering
#include <cstddef>           // for size_t
#include <cstdint>           // for uint64_t, uint32_t
#include <functional>        // for hash
#include <initializer_list>  // for initializer_list
#include <string>            // for string
#include <vector>            // for vector

namespace semilab {

  using elem_t = std::uint32_t;

  //! A subset of the carrier {0, ..., universe - 1}, stored as machine words.
  //! Iteration is always in ascending element order.  Subsets over the same
  //! universe are totally ordered by their value as a binary integer (element
  //! i contributes 2^i), which is the canonical order used for reports.
  class Subset {
   public:
    Subset() = default;
    explicit Subset(std::size_t universe)
        : _universe(universe), _words((universe + 63) / 64, 0) {}

    Subset(std::size_t universe, std::initializer_list<elem_t> elems)
        : Subset(universe) {
      for (auto e : elems) {
        insert(e);
      }
    }

    static Subset full(std::size_t universe) {
      Subset s(universe);
      for (std::size_t i = 0; i < universe; ++i) {
        s.insert(static_cast<elem_t>(i));
      }
      return s;
    }

    static Subset from(std::size_t universe, std::vector<elem_t> const& elems) {
      Subset s(universe);
      for (auto e : elems) {
        s.insert(e);
      }
      return s;
    }

    std::size_t universe() const noexcept {
      return _universe;
    }

    bool contains(elem_t x) const noexcept {
      return (_words[x >> 6] >> (x & 63)) & 1U;
    }

    void insert(elem_t x) noexcept {
      _words[x >> 6] |= std::uint64_t(1) << (x & 63);
    }

    void erase(elem_t x) noexcept {
      _words[x >> 6] &= ~(std::uint64_t(1) << (x & 63));
    }

    std::size_t size() const noexcept {
      std::size_t n = 0;
      for (auto w : _words) {
        n += std::popcount(w);
      }
      return n;
    }

    bool empty() const noexcept {
      for (auto w : _words) {
        if (w != 0) {
          return false;
        }
      }
      return true;
    }

    bool is_full() const noexcept {
      return size() == _universe;
    }

    bool is_subset_of(Subset const& that) const noexcept {
      for (std::size_t i = 0; i < _words.size(); ++i) {
        if ((_words[i] & ~that._words[i]) != 0) {
          return false;
        }
      }
      return true;
    }

    bool intersects(Subset const& that) const noexcept {
      for (std::size_t i = 0; i < _words.size(); ++i) {
        if ((_words[i] & that._words[i]) != 0) {
          return true;
        }
      }
      return false;
    }

    Subset& operator|=(Subset const& that) noexcept {
      for (std::size_t i = 0; i < _words.size(); ++i) {
        _words[i] |= that._words[i];
      }
      return *this;
    }

    Subset& operator&=(Subset const& that) noexcept {
      for (std::size_t i = 0; i < _words.size(); ++i) {
        _words[i] &= that._words[i];
      }
      return *this;
    }

    friend Subset operator|(Subset a, Subset const& b) {
      a |= b;
      return a;
    }

    friend Subset operator&(Subset a, Subset const& b) {
      a &= b;
      return a;
    }

    template <typename Func>
    void for_each(Func&& f) const {
      for (std::size_t i = 0; i < _words.size(); ++i) {
        auto w = _words[i];
        while (w != 0) {
          auto bit = std::countr_zero(w);
          f(static_cast<elem_t>(i * 64 + bit));
          w &= w - 1;
        }
      }
    }

    std::vector<elem_t> elements() const {
      std::vector<elem_t> out;
      out.reserve(size());
      for_each([&out](elem_t x) { out.push_back(x); });
      return out;
    }

    //! Smallest member, or universe() if empty.
    elem_t first() const noexcept {
      for (std::size_t i = 0; i < _words.size(); ++i) {
        if (_words[i] != 0) {
          return static_cast<elem_t>(i * 64 + std::countr_zero(_words[i]));
        }
      }
      return static_cast<elem_t>(_universe);
    }

    //! "{0,2,3}"
    std::string to_string() const;

    std::size_t hash() const noexcept {
      std::size_t h = _universe;
      for (auto w : _words) {
        h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6)
             + (h >> 2);
      }
      return h;
    }

    friend bool operator==(Subset const&, Subset const&) = default;

    friend std::strong_ordering operator<=>(Subset const& a, Subset const& b) {
      if (auto c = a._universe <=> b._universe; c != 0) {
        return c;
      }
      for (std::size_t i = a._words.size(); i-- > 0;) {
        if (auto c = a._words[i] <=> b._words[i]; c != 0) {
          return c;
        }
      }
      return std::strong_ordering::equal;
    }

   private:
    std::size_t                _universe = 0;
    std::vector<std::uint64_t> _words;
  };

  struct SubsetHash {
    std::size_t operator()(Subset const& s) const noexcept {
      return s.hash();
    }
  };

}  // namespace semilab

#endif  // SEMILAB_SUBSET_HPP_
