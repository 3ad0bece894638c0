#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "trifold/multigraph.hpp"
#include "trifold/permutation.hpp"

namespace trifold {

// One side of a face identification: face `face` of tetrahedron `tet` is
// glued to face perm[face] of tetrahedron `partner_tet` via `perm`.
struct Gluing {
    int partner_tet = -1;
    int partner_face = -1;
    Permutation4 perm;
};

// A generalized triangulation: n labeled tetrahedra with triangular faces
// identified in pairs by simplicial isomorphisms. Face k of a tetrahedron is
// the triangle omitting vertex k. Not necessarily a simplicial complex:
// self-gluings (both faces on one tetrahedron) and parallel gluings between
// one pair of tetrahedra are allowed.
class Triangulation {
public:
    Triangulation() = default;
    explicit Triangulation(int tets) : gluings_(static_cast<std::size_t>(tets)) {}

    int size() const { return static_cast<int>(gluings_.size()); }

    const std::optional<Gluing>& gluing(int tet, int face) const {
        return gluings_[static_cast<std::size_t>(tet)][static_cast<std::size_t>(face)];
    }

    bool is_glued(int tet, int face) const { return gluing(tet, face).has_value(); }

    // Installs both directions of the identification; faces must be free.
    void glue(int tet, int face, int partner_tet, int partner_face, const Permutation4& perm);
    void unglue(int tet, int face);

    // True when every stored gluing has a matching inverse on the partner
    // side and no face is identified twice. Constructors maintain this; the
    // parser re-checks documents.
    bool involutive(std::string* diagnostic = nullptr) const;

    int glued_face_pairs() const;
    int boundary_face_count() const;

    // Per-tetrahedron signs (+1/-1) making every gluing orientation-reversing;
    // set by orient().
    const std::optional<std::vector<int>>& orientation() const { return orientation_; }
    void set_orientation(std::vector<int> signs) { orientation_ = std::move(signs); }
    void clear_orientation() { orientation_.reset(); }

    bool operator==(const Triangulation& o) const;

private:
    std::vector<std::array<std::optional<Gluing>, 4>> gluings_;
    std::optional<std::vector<int>> orientation_;
};

// Gluing-table text format. Line 1: "tri <n>". Then one line per tetrahedron:
// "<i>: A0 A1 A2 A3" where each Ak is "-" (boundary) or "j/abcd" (glued to
// tetrahedron j by the permutation with digits abcd). '#' starts a comment.
Triangulation parse_triangulation(const std::string& text);
Triangulation read_triangulation_file(const std::string& path);
std::string write_triangulation(const Triangulation& t);

// One node per tetrahedron, one edge per gluing map. Edge ids follow the
// scan order (tet, face) over the lesser side of each identification.
Multigraph dual_graph(const Triangulation& t);

// Assigns per-tetrahedron signs by BFS propagation (tetrahedron 0 gets +1 in
// each connected component). Requires a closed triangulation; throws
// non_orientable_error when the parity constraints contradict.
Triangulation orient(const Triangulation& t);

// Subdivides each tetrahedron into the 24 flag tetrahedra and re-applies the
// original gluings on the subdivided boundary triangles.
Triangulation barycentric_subdivision(const Triangulation& t);

}  // namespace trifold
