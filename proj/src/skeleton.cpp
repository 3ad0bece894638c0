#include "trifold/skeleton.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "trifold/errors.hpp"

namespace trifold {

namespace {

constexpr int kSlotPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
};

// Renumbers union-find roots to dense ids in the order roots first appear,
// which makes class 0 the class of the lexicographically least incidence.
std::vector<int> dense_labels(UnionFind& uf, std::size_t n, int* count) {
    std::vector<int> label(n, -1);
    int next = 0;
    for (std::size_t i = 0; i < n; ++i) {
        int r = uf.find(static_cast<int>(i));
        if (label[static_cast<std::size_t>(r)] == -1) label[static_cast<std::size_t>(r)] = next++;
        label[i] = label[static_cast<std::size_t>(r)];
    }
    *count = next;
    return label;
}

}  // namespace

int edge_slot(int a, int b) {
    if (a > b) std::swap(a, b);
    for (int s = 0; s < 6; ++s)
        if (kSlotPairs[s][0] == a && kSlotPairs[s][1] == b) return s;
    return -1;
}

std::pair<int, int> slot_endpoints(int slot) {
    return {kSlotPairs[slot][0], kSlotPairs[slot][1]};
}

int SkeletonSummary::max_edge_valence() const {
    int m = 0;
    for (int v : edge_valences) m = std::max(m, v);
    return m;
}

long long SkeletonSummary::valence_sum() const {
    long long s = 0;
    for (int v : edge_valences) s += v;
    return s;
}

SkeletonSummary compute_skeleton(const Triangulation& t) {
    std::string diag;
    if (!t.involutive(&diag)) throw precondition_error("compute_skeleton: " + diag);

    SkeletonSummary sk;
    const int n = t.size();
    sk.n = n;
    sk.vertex_class.assign(static_cast<std::size_t>(n), {-1, -1, -1, -1});
    sk.edge_class.assign(static_cast<std::size_t>(n), {-1, -1, -1, -1, -1, -1});
    sk.triangle_class.assign(static_cast<std::size_t>(n), {-1, -1, -1, -1});
    if (n == 0) {
        sk.all_faces_glued = true;
        return sk;
    }

    // --- Vertex classes: union-find over (tet, corner) across gluings.
    UnionFind vuf(static_cast<std::size_t>(4 * n));
    for (int tet = 0; tet < n; ++tet)
        for (int f = 0; f < 4; ++f) {
            const auto& g = t.gluing(tet, f);
            if (!g) continue;
            for (int c = 0; c < 4; ++c) {
                if (c == f) continue;
                vuf.unite(4 * tet + c, 4 * g->partner_tet + g->perm[c]);
            }
        }
    auto vlabel = dense_labels(vuf, static_cast<std::size_t>(4 * n), &sk.v);
    for (int tet = 0; tet < n; ++tet)
        for (int c = 0; c < 4; ++c)
            sk.vertex_class[static_cast<std::size_t>(tet)][static_cast<std::size_t>(c)] = vlabel[static_cast<std::size_t>(4 * tet + c)];

    // --- Triangle classes: glued pairs merge, boundary faces stay alone.
    UnionFind tuf(static_cast<std::size_t>(4 * n));
    bool all_glued = true;
    for (int tet = 0; tet < n; ++tet)
        for (int f = 0; f < 4; ++f) {
            const auto& g = t.gluing(tet, f);
            if (!g) {
                all_glued = false;
                continue;
            }
            tuf.unite(4 * tet + f, 4 * g->partner_tet + g->partner_face);
        }
    sk.all_faces_glued = all_glued;
    auto tlabel = dense_labels(tuf, static_cast<std::size_t>(4 * n), &sk.f);
    for (int tet = 0; tet < n; ++tet)
        for (int f = 0; f < 4; ++f)
            sk.triangle_class[static_cast<std::size_t>(tet)][static_cast<std::size_t>(f)] = tlabel[static_cast<std::size_t>(4 * tet + f)];

    // --- Edge classes and links, by walking around each edge.
    //
    // An incidence is entered as an oriented pair (tail, head). From it the
    // walk exits through one of the two faces containing the edge; crossing
    // the gluing yields the next oriented incidence. Revisiting an incidence
    // with the direction reversed means the edge is identified with itself in
    // reverse (an invalid edge for a manifold): flagged, not fatal.
    std::vector<std::array<int, 6>> visited(static_cast<std::size_t>(n), {0, 0, 0, 0, 0, 0});
    int next_edge = 0;
    for (int tet0 = 0; tet0 < n; ++tet0) {
        for (int slot0 = 0; slot0 < 6; ++slot0) {
            if (visited[static_cast<std::size_t>(tet0)][static_cast<std::size_t>(slot0)]) continue;
            int edge_id = next_edge++;

            auto [a0, b0] = slot_endpoints(slot0);
            EdgeLink link;
            bool consistent = true;

            // One directed step: exits (tet,(tail,head)) through exit_face.
            auto cross = [&](const LinkStep& s) -> LinkStep {
                const auto& g = t.gluing(s.tet, s.exit_face);
                LinkStep nxt;
                nxt.tet = g->partner_tet;
                nxt.tail = g->perm[s.tail];
                nxt.head = g->perm[s.head];
                nxt.entry_face = g->perm[s.exit_face];
                // Exit through the other face containing the edge.
                for (int v = 0; v < 4; ++v)
                    if (v != nxt.tail && v != nxt.head && v != nxt.entry_face) nxt.exit_face = v;
                return nxt;
            };

            // Walk forward from the representative incidence. The first exit
            // face is the lesser of the two candidates; this fixes the
            // traversal direction for all downstream consumers.
            LinkStep start;
            start.tet = tet0;
            start.tail = a0;
            start.head = b0;
            for (int v = 0; v < 4; ++v)
                if (v != a0 && v != b0) {
                    start.exit_face = v;
                    break;
                }
            for (int v = 3; v >= 0; --v)
                if (v != a0 && v != b0) {
                    start.entry_face = v;
                    break;
                }

            auto mark = [&](const LinkStep& s) {
                int slot = edge_slot(s.tail, s.head);
                auto& seen = visited[static_cast<std::size_t>(s.tet)][static_cast<std::size_t>(slot)];
                if (seen) {
                    consistent = false;  // second visit: the walk logic only revisits on reversal
                } else {
                    seen = 1;
                    sk.edge_class[static_cast<std::size_t>(s.tet)][static_cast<std::size_t>(slot)] = edge_id;
                }
            };

            LinkStep cur = start;
            bool closed_cycle = false;
            while (true) {
                if (!t.is_glued(cur.tet, cur.exit_face)) {
                    mark(cur);
                    cur.exit_face = -1;  // boundary end
                    link.steps.push_back(cur);
                    break;
                }
                LinkStep nxt = cross(cur);
                mark(cur);
                link.steps.push_back(cur);
                int nslot = edge_slot(nxt.tail, nxt.head);
                if (nxt.tet == tet0 && nslot == slot0) {
                    if (nxt.tail == a0 && nxt.head == b0) {
                        closed_cycle = true;
                        link.steps.front().entry_face = nxt.entry_face;
                    } else {
                        consistent = false;  // returned reversed
                    }
                    break;
                }
                if (visited[static_cast<std::size_t>(nxt.tet)][static_cast<std::size_t>(nslot)]) {
                    consistent = false;  // hit an already-consumed incidence out of order
                    break;
                }
                cur = nxt;
            }

            // Boundary edge: also walk backwards to collect the incidences on
            // the other side of the starting one.
            if (!closed_cycle && consistent) {
                LinkStep back = start;
                std::swap(back.exit_face, back.entry_face);
                std::vector<LinkStep> prefix;
                while (t.is_glued(back.tet, back.exit_face)) {
                    LinkStep nxt = cross(back);
                    int nslot = edge_slot(nxt.tail, nxt.head);
                    if (visited[static_cast<std::size_t>(nxt.tet)][static_cast<std::size_t>(nslot)]) {
                        consistent = false;
                        break;
                    }
                    mark(nxt);
                    // Reverse the step so it reads in forward orientation.
                    std::swap(nxt.exit_face, nxt.entry_face);
                    prefix.push_back(nxt);
                    back = nxt;
                    std::swap(back.exit_face, back.entry_face);
                }
                if (consistent) {
                    if (!prefix.empty()) {
                        prefix.back().entry_face = -1;
                        std::reverse(prefix.begin(), prefix.end());
                        link.steps.insert(link.steps.begin(), prefix.begin(), prefix.end());
                    } else {
                        link.steps.front().entry_face = -1;
                    }
                }
            }

            link.closed = closed_cycle;
            link.consistent = consistent;
            sk.edge_links.push_back(std::move(link));
            sk.edge_valences.push_back(static_cast<int>(sk.edge_links.back().steps.size()));
            const auto& rep = sk.edge_links.back().steps.empty()
                                  ? start
                                  : sk.edge_links.back().steps.front();
            sk.edge_endpoints.emplace_back(
                sk.vertex_class[static_cast<std::size_t>(rep.tet)][static_cast<std::size_t>(rep.tail)],
                sk.vertex_class[static_cast<std::size_t>(rep.tet)][static_cast<std::size_t>(rep.head)]);
        }
    }
    sk.e = next_edge;

    // --- Vertex links. The link of a quotient vertex is the surface tiled by
    // one triangle per (tet, corner) incidence; its cells are identified
    // across the face gluings. Euler characteristic and connectivity decide
    // the sphere test (dimension 2: connected + chi = 2 + closed).
    {
        // Link vertices: (tet, corner, other) with other != corner.
        auto lv_index = [&](int tet, int corner, int other) {
            return (tet * 4 + corner) * 4 + other;
        };
        UnionFind lv(static_cast<std::size_t>(16 * n));
        // Link edges: (tet, corner, face) with face != corner.
        auto le_index = lv_index;
        UnionFind le(static_cast<std::size_t>(16 * n));
        UnionFind face_conn(static_cast<std::size_t>(4 * n));  // link triangles
        std::vector<bool> le_glued(static_cast<std::size_t>(16 * n), false);

        for (int tet = 0; tet < n; ++tet)
            for (int f = 0; f < 4; ++f) {
                const auto& g = t.gluing(tet, f);
                if (!g) continue;
                for (int c = 0; c < 4; ++c) {
                    if (c == f) continue;
                    int pc = g->perm[c];
                    le.unite(le_index(tet, c, f), le_index(g->partner_tet, pc, g->partner_face));
                    le_glued[static_cast<std::size_t>(le_index(tet, c, f))] = true;
                    face_conn.unite(4 * tet + c, 4 * g->partner_tet + pc);
                    for (int u = 0; u < 4; ++u) {
                        if (u == c || u == f) continue;
                        lv.unite(lv_index(tet, c, u), lv_index(g->partner_tet, pc, g->perm[u]));
                    }
                }
            }

        // Propagate the glued flag over link-edge classes.
        std::vector<bool> class_glued(static_cast<std::size_t>(16 * n), false);
        for (int i = 0; i < 16 * n; ++i)
            if (le_glued[static_cast<std::size_t>(i)]) class_glued[static_cast<std::size_t>(le.find(i))] = true;

        std::vector<long long> vcount(static_cast<std::size_t>(sk.v), 0), ecount(static_cast<std::size_t>(sk.v), 0), fcount(static_cast<std::size_t>(sk.v), 0);
        std::vector<bool> has_boundary(static_cast<std::size_t>(sk.v), false);
        std::vector<int> comp_of(static_cast<std::size_t>(sk.v), -1);
        std::vector<bool> connected(static_cast<std::size_t>(sk.v), true);

        std::vector<bool> seen_lv(static_cast<std::size_t>(16 * n), false), seen_le(static_cast<std::size_t>(16 * n), false);
        for (int tet = 0; tet < n; ++tet)
            for (int c = 0; c < 4; ++c) {
                int vc = sk.vertex_class[static_cast<std::size_t>(tet)][static_cast<std::size_t>(c)];
                fcount[static_cast<std::size_t>(vc)] += 1;
                int root = face_conn.find(4 * tet + c);
                if (comp_of[static_cast<std::size_t>(vc)] == -1)
                    comp_of[static_cast<std::size_t>(vc)] = root;
                else if (comp_of[static_cast<std::size_t>(vc)] != root)
                    connected[static_cast<std::size_t>(vc)] = false;
                for (int u = 0; u < 4; ++u) {
                    if (u == c) continue;
                    int lr = lv.find(lv_index(tet, c, u));
                    if (!seen_lv[static_cast<std::size_t>(lr)]) {
                        seen_lv[static_cast<std::size_t>(lr)] = true;
                        vcount[static_cast<std::size_t>(vc)] += 1;
                    }
                    int er = le.find(le_index(tet, c, u));
                    if (!seen_le[static_cast<std::size_t>(er)]) {
                        seen_le[static_cast<std::size_t>(er)] = true;
                        ecount[static_cast<std::size_t>(vc)] += 1;
                        if (!class_glued[static_cast<std::size_t>(er)]) has_boundary[static_cast<std::size_t>(vc)] = true;
                    }
                }
            }

        sk.vertex_link_euler.resize(static_cast<std::size_t>(sk.v));
        sk.vertex_link_connected.resize(static_cast<std::size_t>(sk.v));
        sk.vertex_link_closed.resize(static_cast<std::size_t>(sk.v));
        for (int v = 0; v < sk.v; ++v) {
            sk.vertex_link_euler[static_cast<std::size_t>(v)] =
                static_cast<int>(vcount[static_cast<std::size_t>(v)] - ecount[static_cast<std::size_t>(v)] + fcount[static_cast<std::size_t>(v)]);
            sk.vertex_link_connected[static_cast<std::size_t>(v)] = connected[static_cast<std::size_t>(v)];
            sk.vertex_link_closed[static_cast<std::size_t>(v)] = !has_boundary[static_cast<std::size_t>(v)];
        }
    }

    return sk;
}

ClosedCheck is_closed_manifold(const Triangulation& t) {
    return is_closed_manifold(t, compute_skeleton(t));
}

ClosedCheck is_closed_manifold(const Triangulation& t, const SkeletonSummary& sk) {
    for (int tet = 0; tet < t.size(); ++tet)
        for (int f = 0; f < 4; ++f)
            if (!t.is_glued(tet, f))
                return {false, "boundary face: tet " + std::to_string(tet) + " face " + std::to_string(f)};
    for (int e = 0; e < sk.e; ++e) {
        const auto& link = sk.edge_links[static_cast<std::size_t>(e)];
        if (!link.consistent)
            return {false, "edge " + std::to_string(e) + " is identified with itself in reverse"};
        if (!link.closed)
            return {false, "edge " + std::to_string(e) + " has a non-circular link"};
    }
    for (int v = 0; v < sk.v; ++v) {
        if (!sk.vertex_link_closed[static_cast<std::size_t>(v)])
            return {false, "vertex " + std::to_string(v) + " has a link with boundary"};
        if (!sk.vertex_link_connected[static_cast<std::size_t>(v)])
            return {false, "vertex " + std::to_string(v) + " has a disconnected link"};
        if (sk.vertex_link_euler[static_cast<std::size_t>(v)] != 2)
            return {false, "vertex " + std::to_string(v) + " has link Euler characteristic " +
                               std::to_string(sk.vertex_link_euler[static_cast<std::size_t>(v)])};
    }
    return {true, ""};
}

}  // namespace trifold
