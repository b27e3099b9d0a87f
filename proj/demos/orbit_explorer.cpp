// Walks every subset of a finite topology and prints its closure, interior,
// and the size of its closure/complement orbit (always at most 14).
//
//   orbit_explorer [topology.json]
//
// Without an argument it uses the smallest space where the bound is
// interesting: three points whose opens are {}, {0}, {1}, {0,1} and X.

#include <iostream>

#include <edtop/edtop.hpp>

int main(int argc, char** argv) {
  edtop::Topology t =
      argc > 1 ? edtop::load_topology(argv[1])
               : edtop::Topology::build_from_opens(
                     3, {edtop::PointSet::empty_set(3), edtop::PointSet::of(3, {0}),
                         edtop::PointSet::of(3, {1}), edtop::PointSet::of(3, {0, 1}),
                         edtop::PointSet::full_set(3)});

  std::cout << "opens:";
  for (const auto& o : t.opens()) std::cout << " " << o.to_string();
  std::cout << "\nextremally disconnected: "
            << (edtop::is_extremally_disconnected(t) ? "yes" : "no") << "\n\n";

  const int n = t.point_count();
  std::size_t largest = 0;
  const auto limit = edtop::PointSet::universe_mask(n);
  for (edtop::PointSet::mask_type m = 0;; ++m) {
    const edtop::PointSet a = edtop::PointSet::from_mask(n, m);
    const auto orbit = edtop::kuratowski_orbit(t, a);
    largest = std::max(largest, orbit.size());
    std::cout << a.to_string() << "  cl=" << t.closure(a).to_string()
              << "  int=" << t.interior(a).to_string()
              << "  orbit=" << orbit.size();
    const edtop::PointSet regularized = t.interior(t.closure(a));
    if (a == regularized) std::cout << "  regular open";
    std::cout << "\n";
    if (m == limit) break;
  }
  std::cout << "\nlargest orbit: " << largest << " (bound is 14)\n";
  return 0;
}
