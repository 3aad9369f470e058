#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace hyperring {

/// Index of a carrier element (declaration order of the input document).
using Element = unsigned;

/// Largest carrier the engine represents; subsets are 64-bit masks.
inline constexpr std::size_t kMaxCarrier = 64;

/// A subset of a carrier of at most kMaxCarrier elements.
class Subset {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    Element operator*() const { return static_cast<Element>(std::countr_zero(rest_)); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr Subset() = default;
  static constexpr Subset from_bits(std::uint64_t bits) { return Subset(bits); }
  static constexpr Subset singleton(Element e) { return Subset(std::uint64_t{1} << e); }
  static constexpr Subset full(std::size_t n) {
    return Subset(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static Subset of(std::initializer_list<Element> elems) {
    Subset s;
    for (Element e : elems) s.insert(e);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(Element e) const { return (bits_ >> e) & 1U; }
  constexpr bool subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(Subset other) const { return (bits_ & other.bits_) != 0; }
  /// Smallest member; undefined on the empty set.
  constexpr Element first() const { return static_cast<Element>(std::countr_zero(bits_)); }

  constexpr void insert(Element e) { bits_ |= std::uint64_t{1} << e; }
  constexpr void erase(Element e) { bits_ &= ~(std::uint64_t{1} << e); }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }
  std::vector<Element> elements() const { return {begin(), end()}; }

  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  /// Set difference.
  constexpr Subset operator-(Subset o) const { return Subset(bits_ & ~o.bits_); }
  constexpr Subset& operator|=(Subset o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr Subset& operator&=(Subset o) {
    bits_ &= o.bits_;
    return *this;
  }

  constexpr bool operator==(const Subset&) const = default;
  /// Raw mask order; use canonical_less for report ordering.
  constexpr auto operator<=>(const Subset&) const = default;

 private:
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

/// Report order: by size, then lexicographically by sorted member list.
bool canonical_less(Subset a, Subset b);

}  // namespace hyperring
