#pragma once

#include <cstdint>
#include <vector>

#include "trifold/multigraph.hpp"
#include "trifold/triangulation.hpp"

namespace trifold::testing {

// All fully-glued triangulations on n tetrahedra (n <= 2 stays small); the
// independent source of the reference manifolds used across the suite.
std::vector<Triangulation> enumerate_complete_gluings(int n);

// Closed-manifold members of the above.
std::vector<Triangulation> enumerate_closed(int n);

// Seeded rejection sampling of closed triangulations with n tetrahedra.
std::vector<Triangulation> sample_closed(int n, int want, std::uint32_t seed,
                                         int max_attempts = 400000);

// Reference triangulations, selected from the enumeration by their homology:
// the 1-tetrahedron 3-sphere (trivial H1, orientable) and the 2-tetrahedron
// real projective space (H1 = Z/2).
Triangulation s3_one_tet();
Triangulation rp3_two_tet();

// Minimum width over all elimination orders; exact for small simple graphs.
int brute_force_treewidth(const Multigraph& g);

}  // namespace trifold::testing
