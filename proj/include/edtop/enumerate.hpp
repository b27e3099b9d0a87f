#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "edtop/topology.hpp"

namespace edtop {

// Enumeration caps: n=6 and n=7 have 209527 and 9535241 labeled topologies,
// so they sit behind the `extended` flag.
inline constexpr int kEnumDefaultCap = 5;
inline constexpr int kEnumHardCap = 7;

// Receives (position index, topology); return false to stop the stream.
using TopologyVisitor = std::function<bool(std::size_t, const Topology&)>;

namespace detail {

inline void check_enum_cap(int n, bool extended) {
  if (n < 0 || n > kEnumHardCap)
    throw cap_exceeded("point count " + std::to_string(n) + " outside [0, " +
                       std::to_string(kEnumHardCap) + "]");
  if (n > kEnumDefaultCap && !extended)
    throw cap_exceeded("point count " + std::to_string(n) +
                       " exceeds the default cap " +
                       std::to_string(kEnumDefaultCap) +
                       " (enable extended enumeration)");
}

inline PointSet::mask_type permute_mask(PointSet::mask_type m, const int* perm) {
  PointSet::mask_type r = 0;
  for (int p = 0; m; ++p, m >>= 1)
    if (m & 1u) r |= PointSet::mask_type{1} << perm[p];
  return r;
}

inline std::vector<PointSet::mask_type> family_encoding(const Topology& t) {
  std::vector<PointSet::mask_type> enc;
  enc.reserve(t.opens().size());
  for (const PointSet& s : t.opens()) enc.push_back(s.mask());
  std::sort(enc.begin(), enc.end());
  return enc;
}

}  // namespace detail

// Identifies a topology up to homeomorphism: the lexicographically least,
// over all point permutations, of the ascending list of open-set masks.
struct CanonicalKey {
  int n = 0;
  std::vector<PointSet::mask_type> masks;

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend bool operator<(const CanonicalKey& a, const CanonicalKey& b) {
    if (a.n != b.n) return a.n < b.n;
    return a.masks < b.masks;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < masks.size(); ++i) {
      if (i) s += ",";
      s += PointSet::from_mask(n, masks[i]).to_string();
    }
    s += "]";
    return s;
  }
};

// Brute-force permutation minimum; n! is at most 5040 at the cap.
inline CanonicalKey canonical_form(const Topology& t) {
  const int n = t.point_count();
  if (n > kEnumHardCap)
    throw cap_exceeded("canonical_form capped at " + std::to_string(kEnumHardCap) +
                       " points");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<PointSet::mask_type> best;
  std::vector<PointSet::mask_type> cur;
  cur.reserve(t.opens().size());
  do {
    cur.clear();
    for (const PointSet& s : t.opens())
      cur.push_back(detail::permute_mask(s.mask(), perm.data()));
    std::sort(cur.begin(), cur.end());
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return CanonicalKey{n, std::move(best)};
}

// Streams every labeled topology on {0,...,n-1} exactly once, in
// deterministic order, by backtracking over minimal-neighborhood rows.
// Row x is a mask containing x; validity is the pairwise condition
// y in row[x] implies row[y] subset of row[x], which is exactly
// reflexivity plus transitivity of the induced preorder.
inline void enumerate_topologies(int n, const TopologyVisitor& visit,
                                 bool extended = false) {
  detail::check_enum_cap(n, extended);
  std::vector<PointSet::mask_type> rows(static_cast<std::size_t>(n), 0);
  std::size_t index = 0;
  const PointSet::mask_type top = PointSet::universe_mask(n);

  std::function<bool(int)> rec = [&](int x) -> bool {
    if (x == n) {
      const Topology t = Topology::from_min_neighborhoods_unchecked(
          n, std::span<const PointSet::mask_type>(rows.data(), rows.size()));
      return visit(index++, t);
    }
    const PointSet::mask_type self = PointSet::mask_type{1} << x;
    for (PointSet::mask_type m = self; m <= top; ++m) {
      if (!(m & self)) continue;
      bool ok = true;
      for (int y = 0; y < x; ++y) {
        if ((m >> y) & 1u) {
          if (rows[y] & ~m) { ok = false; break; }
        }
        if ((rows[y] >> x) & 1u) {
          if (m & ~rows[y]) { ok = false; break; }
        }
      }
      if (!ok) continue;
      rows[x] = m;
      if (!rec(x + 1)) return false;
    }
    return true;
  };
  rec(0);
}

// One representative per homeomorphism class: the labeled topology whose own
// encoding equals its canonical key. Index counts emitted classes.
inline void enumerate_homeo_classes(int n, const TopologyVisitor& visit,
                                    bool extended = false) {
  std::size_t classes = 0;
  bool keep_going = true;
  enumerate_topologies(
      n,
      [&](std::size_t, const Topology& t) {
        if (detail::family_encoding(t) != canonical_form(t).masks) return true;
        keep_going = visit(classes++, t);
        return keep_going;
      },
      extended);
  (void)keep_going;
}

}  // namespace edtop
