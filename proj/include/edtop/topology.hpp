#pragma once

#include <algorithm>
#include <array>
#include <span>
#include <unordered_set>
#include <vector>

#include "edtop/errors.hpp"
#include "edtop/pointset.hpp"

namespace edtop {

// A validated finite topology on {0,...,n-1}.
//
// Every finite topology is Alexandrov: each point x has a minimal open
// neighborhood u(x), the intersection of all opens containing x, and a set
// is open exactly when it contains u(x) for each of its points. The minimal
// neighborhoods are precomputed at construction, so interior and closure are
// O(n) membership scans instead of scans over the open-set family:
//
//   interior(A) = { x : u(x) subset of A }
//   closure(A)  = { x : u(x) meets A }
//
// Instances are immutable after construction and safe to share across threads.
class Topology {
 public:
  // Validates that `family` is a topology on n points: empty and full sets
  // present, closed under pairwise union and intersection. All violations
  // found are reported together in one topology_error; union/intersection
  // violations name the first offending pair in normalized order.
  static Topology build_from_opens(int n, std::span<const PointSet> family) {
    check_point_cap(n);
    std::vector<violation> bad;
    for (const PointSet& s : family) {
      if (s.universe_size() != n) {
        bad.push_back({violation_kind::universe_mismatch,
                       "set " + s.to_string() + " lives in a " +
                           std::to_string(s.universe_size()) +
                           "-point universe, expected " + std::to_string(n)});
        throw topology_error(std::move(bad));
      }
    }

    std::vector<PointSet> opens(family.begin(), family.end());
    std::sort(opens.begin(), opens.end(), card_mask_less);
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());

    std::unordered_set<PointSet::mask_type> members;
    for (const PointSet& s : opens) members.insert(s.mask());

    const bool has_empty = members.count(0) != 0;
    const bool has_full = members.count(PointSet::universe_mask(n)) != 0;
    if (!has_empty || !has_full) {
      std::string which;
      if (!has_empty) which += "empty set";
      if (!has_empty && !has_full) which += " and ";
      if (!has_full) which += "full set X";
      bad.push_back({violation_kind::missing_empty_or_full, which + " absent"});
    }

    bool union_ok = true, inter_ok = true;
    for (std::size_t i = 0; i < opens.size() && (union_ok || inter_ok); ++i) {
      for (std::size_t j = i + 1; j < opens.size() && (union_ok || inter_ok); ++j) {
        if (union_ok && !members.count(opens[i].mask() | opens[j].mask())) {
          union_ok = false;
          bad.push_back({violation_kind::not_closed_under_union,
                         opens[i].to_string() + " union " + opens[j].to_string() +
                             " = " + (opens[i] | opens[j]).to_string() +
                             " is not in the family"});
        }
        if (inter_ok && !members.count(opens[i].mask() & opens[j].mask())) {
          inter_ok = false;
          bad.push_back({violation_kind::not_closed_under_intersection,
                         opens[i].to_string() + " intersect " + opens[j].to_string() +
                             " = " + (opens[i] & opens[j]).to_string() +
                             " is not in the family"});
        }
      }
    }
    if (!bad.empty()) throw topology_error(std::move(bad));

    // A family closed under union/intersection with empty and X present is
    // exactly the up-closed family of its own minimal neighborhoods.
    Topology t;
    t.n_ = n;
    for (int x = 0; x < n; ++x) {
      PointSet::mask_type u = PointSet::universe_mask(n);
      for (const PointSet& s : opens)
        if (s.contains(x)) u &= s.mask();
      t.min_[x] = u;
    }
    t.opens_ = std::move(opens);
    return t;
  }

  static Topology build_from_opens(int n, std::initializer_list<PointSet> family) {
    return build_from_opens(n, std::span<const PointSet>(family.begin(), family.size()));
  }

  // Builds the Alexandrov topology of a preorder given as row masks:
  // bit y of rows[x] set means y belongs to the minimal neighborhood of x.
  // Opens are the up-closed sets { A : x in A implies rows[x] subset of A }.
  static Topology build_from_preorder(int n, std::span<const PointSet::mask_type> rows) {
    check_point_cap(n);
    if (static_cast<int>(rows.size()) != n)
      throw std::invalid_argument("preorder must have exactly n rows");
    std::vector<violation> bad;
    for (int x = 0; x < n; ++x) {
      if (rows[x] & ~PointSet::universe_mask(n))
        throw std::invalid_argument("preorder row mentions a point outside the universe");
      if (!((rows[x] >> x) & 1u)) {
        bad.push_back({violation_kind::not_reflexive,
                       "point " + std::to_string(x) + " does not reach itself"});
        break;
      }
    }
    for (int x = 0; x < n && bad.empty(); ++x) {
      for (int y = 0; y < n && bad.empty(); ++y) {
        if (!((rows[x] >> y) & 1u)) continue;
        PointSet::mask_type missing = rows[y] & ~rows[x];
        if (missing) {
          int z = std::countr_zero(missing);
          bad.push_back({violation_kind::not_transitive,
                         std::to_string(x) + " reaches " + std::to_string(y) +
                             " and " + std::to_string(y) + " reaches " +
                             std::to_string(z) + ", but " + std::to_string(x) +
                             " does not reach " + std::to_string(z)});
        }
      }
    }
    if (!bad.empty()) throw topology_error(std::move(bad));
    return from_min_neighborhoods_unchecked(n, rows);
  }

  // Convenience overload for an n-by-n 0/1 matrix, matrix[x][y] == 1 meaning
  // y is in the minimal neighborhood of x.
  static Topology build_from_preorder(int n, const std::vector<std::vector<int>>& matrix) {
    check_point_cap(n);
    if (static_cast<int>(matrix.size()) != n)
      throw std::invalid_argument("preorder matrix must have n rows");
    std::array<PointSet::mask_type, kMaxPoints> rows{};
    for (int x = 0; x < n; ++x) {
      if (static_cast<int>(matrix[x].size()) != n)
        throw std::invalid_argument("preorder matrix must be n by n");
      for (int y = 0; y < n; ++y) {
        if (matrix[x][y] != 0 && matrix[x][y] != 1)
          throw std::invalid_argument("preorder matrix entries must be 0 or 1");
        if (matrix[x][y]) rows[x] |= PointSet::mask_type{1} << y;
      }
    }
    return build_from_preorder(n, std::span<const PointSet::mask_type>(rows.data(), n));
  }

  // Trusted path for enumeration: rows must already be reflexive and
  // transitive. Derives the opens family by an up-closedness sweep.
  static Topology from_min_neighborhoods_unchecked(int n, std::span<const PointSet::mask_type> rows) {
    Topology t;
    t.n_ = n;
    for (int x = 0; x < n; ++x) t.min_[x] = rows[x];
    const PointSet::mask_type limit = PointSet::universe_mask(n);
    for (PointSet::mask_type m = 0;; ++m) {
      if (t.up_closed(m)) t.opens_.push_back(PointSet::from_mask(n, m));
      if (m == limit) break;
    }
    std::sort(t.opens_.begin(), t.opens_.end(), card_mask_less);
    return t;
  }

  int point_count() const { return n_; }

  // The open-set family in normalized order: cardinality, then mask value.
  const std::vector<PointSet>& opens() const { return opens_; }

  // Complements of the opens, in the same order as opens().
  std::vector<PointSet> closed_sets() const {
    std::vector<PointSet> out;
    out.reserve(opens_.size());
    for (const PointSet& s : opens_) out.push_back(s.complement());
    return out;
  }

  PointSet min_neighborhood(int x) const {
    assert(x >= 0 && x < n_);
    return PointSet::from_mask(n_, min_[x]);
  }

  // Row masks of the specialization preorder; round-trips through
  // build_from_preorder to an identical opens family.
  std::vector<PointSet::mask_type> specialization_preorder() const {
    return std::vector<PointSet::mask_type>(min_.begin(), min_.begin() + n_);
  }

  PointSet interior(const PointSet& a) const {
    check_universe(a);
    PointSet::mask_type r = 0;
    for (int x = 0; x < n_; ++x)
      if ((min_[x] & ~a.mask()) == 0) r |= PointSet::mask_type{1} << x;
    return PointSet::from_mask(n_, r);
  }

  PointSet closure(const PointSet& a) const {
    check_universe(a);
    PointSet::mask_type r = 0;
    for (int x = 0; x < n_; ++x)
      if (min_[x] & a.mask()) r |= PointSet::mask_type{1} << x;
    return PointSet::from_mask(n_, r);
  }

  bool is_open(const PointSet& a) const {
    check_universe(a);
    return up_closed(a.mask());
  }

  bool is_closed(const PointSet& a) const { return is_open(a.complement()); }

  PointSet empty_set() const { return PointSet::empty_set(n_); }
  PointSet full_set() const { return PointSet::full_set(n_); }

  friend bool operator==(const Topology& a, const Topology& b) {
    return a.n_ == b.n_ && a.opens_ == b.opens_;
  }

 private:
  Topology() = default;

  static void check_point_cap(int n) {
    if (n < 0 || n > kMaxPoints)
      throw cap_exceeded("point count " + std::to_string(n) + " outside [0, " +
                         std::to_string(kMaxPoints) + "]");
  }

  void check_universe(const PointSet& a) const {
    if (a.universe_size() != n_) throw universe_mismatch(n_, a.universe_size());
  }

  bool up_closed(PointSet::mask_type m) const {
    for (int x = 0; x < n_; ++x)
      if (((m >> x) & 1u) && (min_[x] & ~m)) return false;
    return true;
  }

  int n_ = 0;
  std::array<PointSet::mask_type, kMaxPoints> min_{};
  std::vector<PointSet> opens_;
};

// Distinct sets reachable from `start` by repeated closure and complement,
// in breadth-first discovery order (closure child before complement child).
// Classical bound: never more than 14 sets.
inline std::vector<PointSet> kuratowski_orbit(const Topology& t, const PointSet& start) {
  std::vector<PointSet> orbit;
  std::unordered_set<PointSet::mask_type> seen;
  orbit.push_back(start);
  seen.insert(start.mask());
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    const PointSet s = orbit[i];
    for (const PointSet& next : {t.closure(s), s.complement()}) {
      if (seen.insert(next.mask()).second) orbit.push_back(next);
    }
  }
  return orbit;
}

}  // namespace edtop
