#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include <edtop/enumerate.hpp>

#include "support/family_oracle.hpp"

using edtop::PointSet;
using edtop::Topology;

namespace {

std::uint64_t count_labeled(int n, bool extended = false) {
  std::uint64_t count = 0;
  edtop::enumerate_topologies(
      n, [&](std::size_t, const Topology&) { ++count; return true; }, extended);
  return count;
}

std::uint64_t count_classes(int n, bool extended = false) {
  std::uint64_t count = 0;
  edtop::enumerate_homeo_classes(
      n, [&](std::size_t, const Topology&) { ++count; return true; }, extended);
  return count;
}

}  // namespace

TEST_CASE("labeled counts match the independent family enumerator") {
  for (int n = 0; n <= 4; ++n) {
    const auto reference = testsupport::closed_families(n);
    CHECK(count_labeled(n) == reference.size());
  }
}

TEST_CASE("labeled counts, frozen") {
  CHECK(count_labeled(0) == 1);
  CHECK(count_labeled(1) == 1);
  CHECK(count_labeled(2) == 4);
  CHECK(count_labeled(3) == 29);
  CHECK(count_labeled(4) == 355);
  CHECK(count_labeled(5) == 6942);
}

TEST_CASE("the two enumeration routes produce the same set of topologies") {
  for (int n = 0; n <= 4; ++n) {
    std::set<std::vector<std::uint32_t>> from_preorders;
    edtop::enumerate_topologies(n, [&](std::size_t, const Topology& t) {
      CHECK(from_preorders.insert(testsupport::ascending_masks(t)).second);
      return true;
    });
    std::set<std::vector<std::uint32_t>> from_families;
    for (const auto& fam : testsupport::closed_families(n))
      from_families.insert(fam);
    REQUIRE(from_preorders == from_families);
  }
}

TEST_CASE("emission order at n=2 is documented and stable") {
  std::vector<std::vector<PointSet>> seen;
  std::vector<std::size_t> indices;
  edtop::enumerate_topologies(2, [&](std::size_t index, const Topology& t) {
    indices.push_back(index);
    seen.push_back(t.opens());
    return true;
  });
  REQUIRE(seen.size() == 4);
  CHECK(indices == std::vector<std::size_t>{0, 1, 2, 3});
  // discrete, then {∅,{0},X}, then {∅,{1},X}, then indiscrete
  CHECK(seen[0].size() == 4);
  CHECK(seen[1] == std::vector<PointSet>{PointSet::empty_set(2),
                                         PointSet::of(2, {0}),
                                         PointSet::full_set(2)});
  CHECK(seen[2] == std::vector<PointSet>{PointSet::empty_set(2),
                                         PointSet::of(2, {1}),
                                         PointSet::full_set(2)});
  CHECK(seen[3].size() == 2);
}

TEST_CASE("enumeration is repeatable") {
  std::vector<std::vector<PointSet>> first, second;
  edtop::enumerate_topologies(3, [&](std::size_t, const Topology& t) {
    first.push_back(t.opens());
    return true;
  });
  edtop::enumerate_topologies(3, [&](std::size_t, const Topology& t) {
    second.push_back(t.opens());
    return true;
  });
  CHECK(first == second);
}

TEST_CASE("visitor can stop the stream early") {
  std::size_t calls = 0;
  edtop::enumerate_topologies(3, [&](std::size_t, const Topology&) {
    return ++calls < 5;
  });
  CHECK(calls == 5);
}

TEST_CASE("point-count caps") {
  CHECK_THROWS_AS(count_labeled(6), edtop::cap_exceeded);
  CHECK_THROWS_AS(count_labeled(-1), edtop::cap_exceeded);
  CHECK_THROWS_AS(count_labeled(8, true), edtop::cap_exceeded);
  CHECK_NOTHROW(count_labeled(3, true));
}

TEST_CASE("homeomorphism class counts") {
  CHECK(count_classes(0) == 1);
  CHECK(count_classes(1) == 1);
  CHECK(count_classes(2) == 3);
  CHECK(count_classes(3) == 9);
  CHECK(count_classes(4) == 33);
  CHECK(count_classes(5) == 139);
}

TEST_CASE("canonical form is a relabeling invariant") {
  // relabel each 3-point topology by a fixed permutation; keys must agree
  const int perm[3] = {2, 0, 1};
  edtop::enumerate_topologies(3, [&](std::size_t, const Topology& t) {
    const auto rows = t.specialization_preorder();
    std::vector<PointSet::mask_type> relabeled(3, 0);
    for (int x = 0; x < 3; ++x) {
      PointSet::mask_type m = 0;
      for (int y = 0; y < 3; ++y)
        if ((rows[x] >> y) & 1u) m |= PointSet::mask_type{1} << perm[y];
      relabeled[perm[x]] = m;
    }
    const Topology u = Topology::build_from_preorder(
        3, std::span<const PointSet::mask_type>(relabeled.data(), 3));
    REQUIRE(edtop::canonical_form(t) == edtop::canonical_form(u));
    return true;
  });
}

TEST_CASE("distinct classes have distinct keys") {
  std::set<std::string> keys;
  edtop::enumerate_homeo_classes(3, [&](std::size_t, const Topology& t) {
    CHECK(keys.insert(edtop::canonical_form(t).to_string()).second);
    return true;
  });
  CHECK(keys.size() == 9);
}

TEST_CASE("class representatives are canonical and enumerated among all") {
  edtop::enumerate_homeo_classes(3, [&](std::size_t, const Topology& rep) {
    // a representative's own encoding equals its canonical key
    const auto key = edtop::canonical_form(rep);
    CHECK(testsupport::ascending_masks(rep) == key.masks);
    return true;
  });
}

TEST_CASE("every topology's canonical key is realized by some class rep") {
  std::set<std::vector<std::uint32_t>> reps;
  edtop::enumerate_homeo_classes(3, [&](std::size_t, const Topology& t) {
    reps.insert(testsupport::ascending_masks(t));
    return true;
  });
  edtop::enumerate_topologies(3, [&](std::size_t, const Topology& t) {
    REQUIRE(reps.count(edtop::canonical_form(t).masks) == 1);
    return true;
  });
}

TEST_CASE("canonical key printing") {
  const Topology s = Topology::build_from_opens(
      2, {PointSet::empty_set(2), PointSet::of(2, {1}), PointSet::full_set(2)});
  // {∅,{1},X} relabels to {∅,{0},X}, whose encoding is the smaller one
  CHECK(edtop::canonical_form(s).to_string() == "[{},{0},{0,1}]");
}
