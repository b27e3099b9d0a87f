#pragma once

// Seeded random preorder topologies for property tests beyond the
// exhaustive range. Deterministic for a fixed seed.

#include <random>
#include <vector>

#include <edtop/topology.hpp>

namespace testsupport {

// Identity matrix plus random edges, then the transitive closure, so the
// result always satisfies build_from_preorder's validation.
inline edtop::Topology random_preorder_topology(int n, std::mt19937& rng,
                                                double density = 0.3) {
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  std::bernoulli_distribution edge(density);
  for (int i = 0; i < n; ++i) {
    m[i][i] = 1;
    for (int j = 0; j < n; ++j)
      if (i != j && edge(rng)) m[i][j] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (m[i][k])
        for (int j = 0; j < n; ++j)
          if (m[k][j]) m[i][j] = 1;
  return edtop::Topology::build_from_preorder(n, m);
}

inline edtop::PointSet random_subset(int n, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(
      0, edtop::PointSet::universe_mask(n));
  return edtop::PointSet::from_mask(n, dist(rng));
}

}  // namespace testsupport
