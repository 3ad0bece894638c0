#include <set>

#include "doctest.h"
#include "enumeration.hpp"
#include "trifold/errors.hpp"
#include "trifold/oracles.hpp"
#include "trifold/skeleton.hpp"
#include "trifold/triangulation.hpp"

using namespace trifold;
using namespace trifold::testing;

namespace {

// The two-tetrahedron example: two gluings between the tetrahedra plus one
// self-gluing, leaving two boundary faces.
const char* kTwoTetTable =
    "# two tetrahedra, three gluings\n"
    "tri 2\n"
    "0: 1/2103 1/0123 - -\n"
    "1: 1/3120 0/0123 0/2103 1/3120\n";

}  // namespace

TEST_CASE("permutation basics") {
    auto p = Permutation4::from_digits("2103");
    CHECK(p[0] == 2);
    CHECK(p[3] == 3);
    CHECK(p.of(p.inverse()) == Permutation4());
    CHECK(Permutation4().sign() == 1);
    CHECK(Permutation4(1, 0, 2, 3).sign() == -1);
    CHECK(p.digits() == "2103");
    CHECK_THROWS_AS(Permutation4::from_digits("2104"), parse_error);
    CHECK_THROWS_AS(Permutation4::from_digits("2100"), parse_error);
    CHECK_THROWS_AS(Permutation4::from_digits("210"), parse_error);
}

TEST_CASE("parse two-tetrahedron table") {
    auto t = parse_triangulation(kTwoTetTable);
    CHECK(t.size() == 2);
    CHECK(t.glued_face_pairs() == 3);
    CHECK(t.boundary_face_count() == 2);
    CHECK(t.involutive());

    auto g = dual_graph(t);
    CHECK(g.node_count == 2);
    REQUIRE(g.edges.size() == 3);
    int cross = 0, loops = 0;
    for (auto [a, b] : g.edges) {
        if (a == b) ++loops;
        else ++cross;
    }
    CHECK(cross == 2);  // double edge between the tetrahedra
    CHECK(loops == 1);  // self-gluing at tet 1

    // Round trip through the writer.
    auto again = parse_triangulation(write_triangulation(t));
    CHECK(again == t);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_triangulation("tri 1\n0: 1/0123 - - -\n"), parse_error);  // out of range
    CHECK_THROWS_AS(parse_triangulation("tri 2\n0: 1/0123 - - -\n1: - - - -\n"), parse_error);  // non-involutive
    CHECK_THROWS_AS(parse_triangulation("tri 1\n0: 0/1023 0/1023 - -\n"), parse_error);  // inconsistent pairing
    CHECK_THROWS_AS(parse_triangulation("tri 1\n0: junk - - -\n"), parse_error);
    CHECK_THROWS_AS(parse_triangulation("0: - - - -\n"), parse_error);  // missing header
    CHECK_THROWS_AS(parse_triangulation("tri 1\n"), parse_error);       // missing row
    CHECK_THROWS_AS(parse_triangulation("tri 1\n0: - - -\n"), parse_error);  // short row
}

TEST_CASE("empty gluing set is a valid triangulation") {
    auto t = parse_triangulation("tri 1\n0: - - - -\n");
    CHECK(t.size() == 1);
    CHECK(t.boundary_face_count() == 4);
    auto sk = compute_skeleton(t);
    CHECK(sk.v == 4);
    CHECK(sk.e == 6);
    CHECK(sk.f == 4);
    CHECK(sk.n == 1);
    CHECK_FALSE(is_closed_manifold(t).closed);

    auto g = dual_graph(t);
    CHECK(g.node_count == 1);
    CHECK(g.edges.empty());
}

TEST_CASE("reference 3-sphere") {
    auto t = s3_one_tet();
    auto sk = compute_skeleton(t);
    CHECK(sk.v == 1);
    CHECK(sk.e == 2);
    CHECK(sk.f == 2);
    CHECK(sk.n == 1);
    CHECK(sk.e == sk.v + sk.n);
    CHECK(sk.valence_sum() == 6);
    CHECK(is_closed_manifold(t).closed);

    auto h = homology(t);
    CHECK(h.h[0].str() == "Z");
    CHECK(h.h[1].str() == "0");
    CHECK(h.h[2].str() == "0");
    CHECK(h.h[3].str() == "Z");
}

TEST_CASE("reference projective space") {
    auto t = rp3_two_tet();
    auto sk = compute_skeleton(t);
    CHECK(sk.n == 2);
    CHECK(sk.valence_sum() == 12);  // sum of valences = 6n
    CHECK(sk.e == sk.v + sk.n);
    CHECK(is_closed_manifold(t).closed);

    auto h = homology(t);
    CHECK(h.h[1].str() == "Z/2");
    CHECK(h.h[0].str() == "Z");
    CHECK(h.h[3].str() == "Z");
}

TEST_CASE("two tetrahedra glued along one face are not closed") {
    Triangulation t(2);
    t.glue(0, 0, 1, 0, Permutation4());
    auto check = is_closed_manifold(t);
    CHECK_FALSE(check.closed);
    CHECK(check.diagnostic.find("boundary face") != std::string::npos);
}

TEST_CASE("closed counting identities on the enumeration") {
    for (int n = 1; n <= 2; ++n) {
        auto all = enumerate_closed(n);
        CHECK(!all.empty());
        for (const auto& t : all) {
            auto sk = compute_skeleton(t);
            CHECK(sk.f == 2 * sk.n);
            CHECK(sk.e == sk.v + sk.n);
            CHECK(sk.valence_sum() == 6 * sk.n);
            auto g = dual_graph(t);
            CHECK(static_cast<int>(g.edges.size()) == 2 * sk.n);
            for (int v = 0; v < g.node_count; ++v) CHECK(g.degree(v) == 4);
        }
    }
}

TEST_CASE("orientation") {
    auto s3 = orient(s3_one_tet());
    REQUIRE(s3.orientation().has_value());
    CHECK((*s3.orientation())[0] == 1);

    auto rp3 = orient(rp3_two_tet());
    REQUIRE(rp3.orientation().has_value());

    // Exactly two consistent orientations on a connected closed orientable
    // input: the computed one and its global flip.
    {
        auto t = rp3_two_tet();
        const auto& base = *orient(t).orientation();
        int count = 0;
        for (int s0 : {1, -1}) {
            // Try to propagate with tet 0 forced to s0.
            std::vector<int> sign(static_cast<std::size_t>(t.size()), 0);
            sign[0] = s0;
            bool ok = true;
            std::vector<int> stack{0};
            while (!stack.empty() && ok) {
                int cur = stack.back();
                stack.pop_back();
                for (int f = 0; f < 4; ++f) {
                    const auto& g = t.gluing(cur, f);
                    if (!g) continue;
                    int want = -sign[static_cast<std::size_t>(cur)] * g->perm.sign();
                    int& ps = sign[static_cast<std::size_t>(g->partner_tet)];
                    if (ps == 0) {
                        ps = want;
                        stack.push_back(g->partner_tet);
                    } else if (ps != want) {
                        ok = false;
                    }
                }
            }
            if (ok) {
                ++count;
                if (s0 == base[0]) CHECK(sign == base);
            }
        }
        CHECK(count == 2);
    }

    // orient is idempotent.
    auto once = orient(s3_one_tet());
    auto twice = orient(once);
    CHECK(*once.orientation() == *twice.orientation());

    // Some 1-tetrahedron closed triangulation is non-orientable.
    bool found_non_orientable = false;
    for (const auto& t : enumerate_closed(1)) {
        try {
            orient(t);
        } catch (const non_orientable_error&) {
            found_non_orientable = true;
        }
    }
    CHECK(found_non_orientable);
}

TEST_CASE("barycentric subdivision") {
    auto s3 = s3_one_tet();
    auto once = barycentric_subdivision(s3);
    CHECK(once.size() == 24);
    CHECK(is_closed_manifold(once).closed);
    auto twice = barycentric_subdivision(once);
    CHECK(twice.size() == 576);

    // Boundary case: one unglued tetrahedron keeps its boundary, subdivided.
    auto lone = parse_triangulation("tri 1\n0: - - - -\n");
    auto sub = barycentric_subdivision(lone);
    CHECK(sub.size() == 24);
    CHECK(sub.boundary_face_count() == 24);  // each boundary triangle splits into 6

    // Homology is preserved (projective space keeps its Z/2).
    auto rp3 = rp3_two_tet();
    auto rp3_sub = barycentric_subdivision(rp3);
    CHECK(rp3_sub.size() == 48);
    CHECK(is_closed_manifold(rp3_sub).closed);
    CHECK(homology(rp3_sub) == homology(rp3));

    // Orientability is preserved.
    CHECK_NOTHROW(orient(rp3_sub));
}

TEST_CASE("skeleton on sampled closed triangulations") {
    auto sample = sample_closed(3, 6, 12345);
    for (const auto& t : sample) {
        auto sk = compute_skeleton(t);
        CHECK(sk.e == sk.v + sk.n);
        CHECK(sk.valence_sum() == 6 * sk.n);
        CHECK(t.involutive());
    }
}
