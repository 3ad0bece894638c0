#pragma once

#include <array>
#include <string>
#include <vector>

#include "trifold/triangulation.hpp"

namespace trifold {

// Unordered vertex pairs of a tetrahedron, indexed 0..5:
// {0,1} {0,2} {0,3} {1,2} {1,3} {2,3}.
int edge_slot(int a, int b);
std::pair<int, int> slot_endpoints(int slot);

// One incidence of a quotient edge, oriented tail -> head inside `tet`.
struct LinkStep {
    int tet = -1;
    int tail = -1;
    int head = -1;
    // Face of `tet` crossed to reach the next incidence around the edge, and
    // the face through which this incidence was entered. -1 at the open ends
    // of a boundary edge's link.
    int exit_face = -1;
    int entry_face = -1;
};

// The cyclic (or, on the boundary, linear) sequence of tetrahedron
// incidences around one quotient edge.
struct EdgeLink {
    std::vector<LinkStep> steps;
    bool closed = false;      // the walk returned to its start through gluings
    bool consistent = true;   // never re-entered an incidence with reversed direction
};

struct SkeletonSummary {
    int v = 0;  // quotient vertices
    int e = 0;  // quotient edges
    int f = 0;  // quotient triangles
    int n = 0;  // tetrahedra

    std::vector<int> edge_valences;        // per quotient edge, with multiplicity
    std::vector<EdgeLink> edge_links;      // per quotient edge
    std::vector<int> vertex_link_euler;    // per quotient vertex
    std::vector<bool> vertex_link_connected;
    std::vector<bool> vertex_link_closed;  // no boundary sides in the link

    // Quotient-class ids per incidence. Class representatives are the
    // lexicographically least incidences, so labels are deterministic.
    std::vector<std::array<int, 4>> vertex_class;    // [tet][corner]
    std::vector<std::array<int, 6>> edge_class;      // [tet][slot]
    std::vector<std::array<int, 4>> triangle_class;  // [tet][face]

    // Endpoint vertex classes of each quotient edge (tail, head of the
    // representative incidence); equal for loop edges.
    std::vector<std::pair<int, int>> edge_endpoints;

    bool all_faces_glued = false;

    int max_edge_valence() const;
    long long valence_sum() const;
};

SkeletonSummary compute_skeleton(const Triangulation& t);

struct ClosedCheck {
    bool closed = false;
    std::string diagnostic;  // names the first failing simplex when not closed
};

// Closed 3-manifold test: every face glued, every edge link a consistent
// circle, every vertex link a connected surface of Euler characteristic 2.
ClosedCheck is_closed_manifold(const Triangulation& t);
ClosedCheck is_closed_manifold(const Triangulation& t, const SkeletonSummary& sk);

}  // namespace trifold
