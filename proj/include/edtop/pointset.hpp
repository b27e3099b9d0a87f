#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace edtop {

// Hard cap on the number of points in a single space; subset sweeps are 2^n.
inline constexpr int kMaxPoints = 16;

// A subset of the universe {0,...,n-1}, stored as a membership bitmask.
// The universe size is part of the value: {0} over 2 points and {0} over
// 3 points are distinct sets. Equality is extensional.
class PointSet {
 public:
  using mask_type = std::uint32_t;

  constexpr PointSet() = default;

  static constexpr mask_type universe_mask(int n) {
    return n == 0 ? 0u : (mask_type{1} << n) - 1u;
  }

  static constexpr PointSet empty_set(int n) { return PointSet(n, 0); }
  static constexpr PointSet full_set(int n) { return PointSet(n, universe_mask(n)); }

  static constexpr PointSet from_mask(int n, mask_type mask) {
    assert(n >= 0 && n <= kMaxPoints);
    assert((mask & ~universe_mask(n)) == 0);
    return PointSet(n, mask);
  }

  static constexpr PointSet of(int n, std::initializer_list<int> points) {
    mask_type m = 0;
    for (int p : points) {
      assert(p >= 0 && p < n);
      m |= mask_type{1} << p;
    }
    return PointSet(n, m);
  }

  constexpr int universe_size() const { return n_; }
  constexpr mask_type mask() const { return mask_; }

  constexpr bool contains(int point) const {
    assert(point >= 0 && point < n_);
    return (mask_ >> point) & 1u;
  }

  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool is_empty() const { return mask_ == 0; }
  constexpr bool is_full() const { return mask_ == universe_mask(n_); }

  constexpr PointSet complement() const {
    return PointSet(n_, universe_mask(n_) & ~mask_);
  }

  constexpr bool subset_of(const PointSet& other) const {
    assert(n_ == other.n_);
    return (mask_ & ~other.mask_) == 0;
  }

  constexpr bool intersects(const PointSet& other) const {
    assert(n_ == other.n_);
    return (mask_ & other.mask_) != 0;
  }

  friend constexpr PointSet operator|(const PointSet& a, const PointSet& b) {
    assert(a.n_ == b.n_);
    return PointSet(a.n_, a.mask_ | b.mask_);
  }

  friend constexpr PointSet operator&(const PointSet& a, const PointSet& b) {
    assert(a.n_ == b.n_);
    return PointSet(a.n_, a.mask_ & b.mask_);
  }

  std::vector<int> points() const {
    std::vector<int> out;
    for (int p = 0; p < n_; ++p)
      if (contains(p)) out.push_back(p);
    return out;
  }

  // Roster notation: "{}", "{0}", "{0,2}".
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int p = 0; p < n_; ++p) {
      if (!contains(p)) continue;
      if (!first) s += ",";
      s += std::to_string(p);
      first = false;
    }
    s += "}";
    return s;
  }

  friend constexpr bool operator==(const PointSet&, const PointSet&) = default;

 private:
  constexpr PointSet(int n, mask_type mask)
      : n_(static_cast<std::uint8_t>(n)), mask_(mask) {}

  std::uint8_t n_ = 0;
  mask_type mask_ = 0;
};

// Enumeration order for quantified set variables: ascending mask value.
inline constexpr bool mask_less(const PointSet& a, const PointSet& b) {
  return a.mask() < b.mask();
}

// Normalized storage order for open-set families: cardinality, then mask.
inline constexpr bool card_mask_less(const PointSet& a, const PointSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.mask() < b.mask();
}

}  // namespace edtop
