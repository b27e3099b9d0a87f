#include <catch2/catch_amalgamated.hpp>

#include <edtop/pointset.hpp>

using edtop::PointSet;

TEST_CASE("factories and membership") {
  const PointSet e = PointSet::empty_set(3);
  const PointSet x = PointSet::full_set(3);
  CHECK(e.is_empty());
  CHECK(e.size() == 0);
  CHECK(x.is_full());
  CHECK(x.size() == 3);
  CHECK(x.mask() == 0b111u);

  const PointSet s = PointSet::of(3, {0, 2});
  CHECK(s.contains(0));
  CHECK_FALSE(s.contains(1));
  CHECK(s.contains(2));
  CHECK(s.size() == 2);
  CHECK(s == PointSet::from_mask(3, 0b101u));
}

TEST_CASE("universe size participates in equality") {
  CHECK(PointSet::of(2, {0}) != PointSet::of(3, {0}));
  CHECK(PointSet::of(3, {0}) == PointSet::of(3, {0}));
}

TEST_CASE("zero-point universe") {
  const PointSet e = PointSet::empty_set(0);
  CHECK(e.is_empty());
  CHECK(e.is_full());  // the empty space's only subset is both
  CHECK(PointSet::universe_mask(0) == 0u);
  CHECK(e.complement() == e);
  CHECK(e.to_string() == "{}");
}

TEST_CASE("boolean operations") {
  const PointSet a = PointSet::of(4, {0, 1});
  const PointSet b = PointSet::of(4, {1, 2});
  CHECK((a | b) == PointSet::of(4, {0, 1, 2}));
  CHECK((a & b) == PointSet::of(4, {1}));
  CHECK(a.complement() == PointSet::of(4, {2, 3}));
  CHECK(a.complement().complement() == a);
  CHECK((a & a.complement()).is_empty());
  CHECK((a | a.complement()).is_full());
}

TEST_CASE("subset and intersection predicates") {
  const PointSet a = PointSet::of(4, {1});
  const PointSet b = PointSet::of(4, {1, 3});
  CHECK(a.subset_of(b));
  CHECK_FALSE(b.subset_of(a));
  CHECK(a.subset_of(a));
  CHECK(PointSet::empty_set(4).subset_of(a));
  CHECK(a.intersects(b));
  CHECK_FALSE(a.intersects(PointSet::of(4, {0, 2})));
}

TEST_CASE("points roster and printing") {
  CHECK(PointSet::of(4, {0, 2}).points() == std::vector<int>{0, 2});
  CHECK(PointSet::of(4, {0, 2}).to_string() == "{0,2}");
  CHECK(PointSet::empty_set(4).to_string() == "{}");
  CHECK(PointSet::full_set(2).to_string() == "{0,1}");
}

TEST_CASE("ordering helpers") {
  const PointSet a = PointSet::of(3, {0});    // mask 1
  const PointSet b = PointSet::of(3, {1});    // mask 2
  const PointSet c = PointSet::of(3, {0, 1});  // mask 3
  CHECK(edtop::mask_less(a, b));
  CHECK(edtop::mask_less(b, c));
  CHECK_FALSE(edtop::mask_less(c, a));

  // card_mask_less sorts by size first, mask second
  CHECK(edtop::card_mask_less(b, c));
  CHECK(edtop::card_mask_less(a, b));
  const PointSet big = PointSet::of(3, {2});  // mask 4, size 1
  CHECK(edtop::card_mask_less(big, c));
}
