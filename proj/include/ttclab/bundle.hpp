#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <iterator>

namespace ttclab {

inline constexpr int kMaxObjects = 64;

// A set of object indices packed into a 64-bit mask.
class Bundle {
 public:
  constexpr Bundle() = default;
  constexpr explicit Bundle(std::uint64_t bits) : bits_(bits) {}

  static constexpr Bundle single(int object) {
    return Bundle(std::uint64_t{1} << object);
  }
  static constexpr Bundle all(int num_objects) {
    return num_objects >= kMaxObjects
               ? Bundle(~std::uint64_t{0})
               : Bundle((std::uint64_t{1} << num_objects) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int object) const { return (bits_ >> object) & 1u; }
  constexpr bool subset_of(Bundle other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(Bundle other) const {
    return (bits_ & other.bits_) != 0;
  }
  constexpr Bundle with(int object) const { return *this | single(object); }
  constexpr Bundle without(int object) const { return *this - single(object); }
  // Smallest index in the set; undefined on the empty set.
  constexpr int lowest() const { return std::countr_zero(bits_); }

  constexpr Bundle operator|(Bundle o) const { return Bundle(bits_ | o.bits_); }
  constexpr Bundle operator&(Bundle o) const { return Bundle(bits_ & o.bits_); }
  constexpr Bundle operator^(Bundle o) const { return Bundle(bits_ ^ o.bits_); }
  constexpr Bundle operator-(Bundle o) const {
    return Bundle(bits_ & ~o.bits_);
  }
  constexpr Bundle& operator|=(Bundle o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr Bundle& operator&=(Bundle o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr Bundle& operator-=(Bundle o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  friend constexpr bool operator==(Bundle, Bundle) = default;
  friend constexpr auto operator<=>(Bundle, Bundle) = default;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  std::uint64_t bits_ = 0;
};

// Calls fn on every subset of `of`, starting from the empty set. Stops early
// when fn returns false; returns whether the walk completed.
template <typename Fn>
bool for_each_subset(Bundle of, Fn&& fn) {
  std::uint64_t sub = 0;
  const std::uint64_t mask = of.bits();
  while (true) {
    if (!fn(Bundle(sub))) return false;
    if (sub == mask) return true;
    sub = (sub - mask) & mask;
  }
}

}  // namespace ttclab
