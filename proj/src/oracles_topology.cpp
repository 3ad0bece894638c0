#include <algorithm>
#include <map>

#include "trifold/errors.hpp"
#include "trifold/oracles.hpp"

namespace trifold {

namespace {

// Direction of each edge-class incidence relative to ascending corner order:
// +1 when the link walk traverses (tet, slot) from the smaller corner to the
// larger one.
std::vector<std::array<int, 6>> edge_orientations(const SkeletonSummary& sk) {
    std::vector<std::array<int, 6>> orient(static_cast<std::size_t>(sk.n), {0, 0, 0, 0, 0, 0});
    for (const auto& link : sk.edge_links)
        for (const auto& s : link.steps) {
            int slot = edge_slot(s.tail, s.head);
            orient[static_cast<std::size_t>(s.tet)][static_cast<std::size_t>(slot)] = s.tail < s.head ? 1 : -1;
        }
    return orient;
}

void require_coherent_edges(const SkeletonSummary& sk) {
    for (const auto& link : sk.edge_links)
        if (!link.consistent)
            throw precondition_error("edge identified with itself in reverse; no quotient cell structure");
}

// Representative (lexicographically least) incidence per triangle class.
std::vector<std::pair<int, int>> triangle_reps(const SkeletonSummary& sk) {
    std::vector<std::pair<int, int>> rep(static_cast<std::size_t>(sk.f), {-1, -1});
    for (int tet = 0; tet < sk.n; ++tet)
        for (int f = 0; f < 4; ++f) {
            int cls = sk.triangle_class[static_cast<std::size_t>(tet)][static_cast<std::size_t>(f)];
            if (rep[static_cast<std::size_t>(cls)].first == -1) rep[static_cast<std::size_t>(cls)] = {tet, f};
        }
    return rep;
}

std::array<int, 3> face_corners(int f) {
    std::array<int, 3> c{};
    int idx = 0;
    for (int v = 0; v < 4; ++v)
        if (v != f) c[static_cast<std::size_t>(idx++)] = v;
    return c;
}

}  // namespace

HomologyResult homology(const Triangulation& t) { return homology(t, compute_skeleton(t)); }

HomologyResult homology(const Triangulation& t, const SkeletonSummary& sk) {
    require_coherent_edges(sk);
    const auto orient = edge_orientations(sk);
    const auto trep = triangle_reps(sk);

    // boundary_3 : C3 (tetrahedra) -> C2 (triangle classes)
    SparseIntMat d3(sk.f, sk.n);
    for (int tet = 0; tet < sk.n; ++tet) {
        for (int f = 0; f < 4; ++f) {
            int cls = sk.triangle_class[static_cast<std::size_t>(tet)][static_cast<std::size_t>(f)];
            int base_sign = (f % 2 == 0) ? 1 : -1;
            int rho = 1;
            if (trep[static_cast<std::size_t>(cls)] != std::make_pair(tet, f)) {
                // Compare this face's ascending corners with the class
                // representative through the gluing map.
                const auto& g = t.gluing(tet, f);
                auto c = face_corners(f);
                rho = sign3(g->perm[c[0]], g->perm[c[1]], g->perm[c[2]]);
            }
            d3.add(cls, tet, base_sign * rho);
        }
    }

    // boundary_2 : C2 -> C1 (edge classes)
    SparseIntMat d2(sk.e, sk.f);
    for (int cls = 0; cls < sk.f; ++cls) {
        auto [tet, f] = trep[static_cast<std::size_t>(cls)];
        auto c = face_corners(f);
        for (int j = 0; j < 3; ++j) {
            int a = c[static_cast<std::size_t>((j + 1) % 3)], b = c[static_cast<std::size_t>((j + 2) % 3)];
            if (j == 1) std::swap(a, b);  // keep omitted-vertex sign convention
            // Boundary of [c0,c1,c2]: +[c1,c2] - [c0,c2] + [c0,c1].
            int sign = (j % 2 == 0) ? 1 : -1;
            int x = std::min(a, b), y = std::max(a, b);
            int slot = edge_slot(x, y);
            int ecls = sk.edge_class[static_cast<std::size_t>(tet)][static_cast<std::size_t>(slot)];
            int dir = orient[static_cast<std::size_t>(tet)][static_cast<std::size_t>(slot)];
            d2.add(ecls, cls, sign * dir);
        }
    }

    // boundary_1 : C1 -> C0 (vertex classes)
    SparseIntMat d1(sk.v, sk.e);
    for (int e = 0; e < sk.e; ++e) {
        auto [tail_cls, head_cls] = sk.edge_endpoints[static_cast<std::size_t>(e)];
        d1.add(head_cls, e, 1);
        d1.add(tail_cls, e, -1);
    }

    if (!is_zero(multiply(d1, d2)) || !is_zero(multiply(d2, d3)))
        throw std::logic_error("homology: boundary composition is nonzero");

    auto f1 = smith_invariant_factors(d1);
    auto f2 = smith_invariant_factors(d2);
    auto f3 = smith_invariant_factors(d3);
    int r1 = static_cast<int>(f1.size());
    int r2 = static_cast<int>(f2.size());
    int r3 = static_cast<int>(f3.size());

    auto torsion_of = [](const std::vector<mpz_class>& f) {
        std::vector<mpz_class> t;
        for (const auto& x : f)
            if (x > 1) t.push_back(x);
        return t;
    };

    HomologyResult out;
    out.h[0].rank = sk.v - r1;
    out.h[0].torsion = {};
    out.h[1].rank = (sk.e - r1) - r2;
    out.h[1].torsion = torsion_of(f2);
    out.h[2].rank = (sk.f - r2) - r3;
    out.h[2].torsion = torsion_of(f3);
    out.h[3].rank = sk.n - r3;
    out.h[3].torsion = {};
    return out;
}

GroupPresentation pi1_presentation(const Triangulation& t) {
    return pi1_presentation(t, compute_skeleton(t));
}

GroupPresentation pi1_presentation(const Triangulation&, const SkeletonSummary& sk) {
    require_coherent_edges(sk);
    const auto orient = edge_orientations(sk);
    const auto trep = triangle_reps(sk);

    // Spanning tree of the 1-skeleton, grown from the least vertex class and
    // scanning edge classes in ascending order.
    std::vector<char> in_tree(static_cast<std::size_t>(sk.e), 0);
    std::vector<char> reached(static_cast<std::size_t>(sk.v), 0);
    if (sk.v > 0) reached[0] = 1;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int e = 0; e < sk.e; ++e) {
            if (in_tree[static_cast<std::size_t>(e)]) continue;
            auto [a, b] = sk.edge_endpoints[static_cast<std::size_t>(e)];
            if (reached[static_cast<std::size_t>(a)] == reached[static_cast<std::size_t>(b)]) continue;
            in_tree[static_cast<std::size_t>(e)] = 1;
            reached[static_cast<std::size_t>(a)] = reached[static_cast<std::size_t>(b)] = 1;
            grew = true;
        }
    }
    for (int v = 0; v < sk.v; ++v)
        if (!reached[static_cast<std::size_t>(v)])
            throw precondition_error("pi1_presentation: triangulation is disconnected");

    std::vector<int> gen_of(static_cast<std::size_t>(sk.e), -1);
    int gens = 0;
    for (int e = 0; e < sk.e; ++e)
        if (!in_tree[static_cast<std::size_t>(e)]) gen_of[static_cast<std::size_t>(e)] = gens++;

    GroupPresentation p;
    p.generator_count = gens;
    for (int cls = 0; cls < sk.f; ++cls) {
        auto [tet, f] = trep[static_cast<std::size_t>(cls)];
        auto c = face_corners(f);
        std::vector<int> word;
        // Boundary loop c0 -> c1 -> c2 -> c0 read in vertex order.
        const int path[3][2] = {{c[0], c[1]}, {c[1], c[2]}, {c[2], c[0]}};
        for (const auto& step : path) {
            int x = step[0], y = step[1];
            int slot = edge_slot(std::min(x, y), std::max(x, y));
            int ecls = sk.edge_class[static_cast<std::size_t>(tet)][static_cast<std::size_t>(slot)];
            if (in_tree[static_cast<std::size_t>(ecls)]) continue;
            int dir = orient[static_cast<std::size_t>(tet)][static_cast<std::size_t>(slot)];  // walk direction vs ascending
            int sign = (x < y) ? dir : -dir;
            word.push_back(sign * (gen_of[static_cast<std::size_t>(ecls)] + 1));
        }
        // Free reduction.
        std::vector<int> reduced;
        for (int letter : word) {
            if (!reduced.empty() && reduced.back() == -letter)
                reduced.pop_back();
            else
                reduced.push_back(letter);
        }
        if (!reduced.empty()) p.relators.push_back(std::move(reduced));
    }
    return p;
}

AbelianGroup abelianization(const GroupPresentation& p) {
    SparseIntMat m(static_cast<int>(p.relators.size()), p.generator_count);
    for (std::size_t r = 0; r < p.relators.size(); ++r)
        for (int letter : p.relators[r]) {
            int g = std::abs(letter) - 1;
            m.add(static_cast<int>(r), g, letter > 0 ? 1 : -1);
        }
    auto factors = smith_invariant_factors(m);
    AbelianGroup out;
    out.rank = p.generator_count - static_cast<int>(factors.size());
    for (const auto& f : factors)
        if (f > 1) out.torsion.push_back(f);
    return out;
}

}  // namespace trifold
