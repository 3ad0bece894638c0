#include "doctest.h"
#include "enumeration.hpp"
#include "trifold/errors.hpp"
#include "trifold/oracles.hpp"
#include "trifold/skeleton.hpp"

using namespace trifold;
using namespace trifold::testing;

namespace {

std::vector<std::vector<mpz_class>> to_dense(const SparseIntMat& a) {
    std::vector<std::vector<mpz_class>> m(static_cast<std::size_t>(a.rows),
                                          std::vector<mpz_class>(static_cast<std::size_t>(a.cols), 0));
    for (int r = 0; r < a.rows; ++r)
        for (const auto& [c, v] : a.row_data[static_cast<std::size_t>(r)]) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
    return m;
}

// U * A * V == D, with U and V unimodular.
void check_smith_transforms(const std::vector<std::vector<mpz_class>>& a) {
    auto ds = dense_smith(a);
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            mpz_class sum = 0;
            for (int k = 0; k < rows; ++k)
                for (int l = 0; l < cols; ++l)
                    sum += ds.u[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * a[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] * ds.v[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)];
            CHECK(sum == ds.d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
            if (i != j) CHECK(ds.d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == 0);
        }
    // Divisibility order along the diagonal.
    for (int i = 0; i + 1 < std::min(rows, cols); ++i) {
        const auto& x = ds.d[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
        const auto& y = ds.d[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i + 1)];
        if (x != 0) CHECK(y % x == 0);
        else CHECK(y == 0);
    }
}

}  // namespace

TEST_CASE("smith normal form") {
    SparseIntMat a(2, 2);
    a.add(0, 0, 2);
    a.add(1, 1, 6);
    auto f = smith_invariant_factors(a);
    REQUIRE(f.size() == 2);
    CHECK(f[0] == 2);
    CHECK(f[1] == 6);

    // A matrix needing the gcd fix: diag(4, 6) -> (2, 12).
    SparseIntMat b(2, 2);
    b.add(0, 0, 4);
    b.add(1, 1, 6);
    auto fb = smith_invariant_factors(b);
    REQUIRE(fb.size() == 2);
    CHECK(fb[0] == 2);
    CHECK(fb[1] == 12);

    check_smith_transforms({{mpz_class(4), mpz_class(0)}, {mpz_class(0), mpz_class(6)}});
    check_smith_transforms({{mpz_class(2), mpz_class(4), mpz_class(4)},
                            {mpz_class(-6), mpz_class(6), mpz_class(12)},
                            {mpz_class(10), mpz_class(4), mpz_class(16)}});

    // Sparse and dense paths agree on a random-ish integer matrix.
    std::vector<std::vector<mpz_class>> m = {{3, 1, -4, 2},
                                             {0, 5, 6, -2},
                                             {7, 1, 0, 3}};
    SparseIntMat s(3, 4);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 4; ++c) s.add(r, c, m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
    auto fs = smith_invariant_factors(s);
    auto dd = dense_smith(m);
    std::vector<mpz_class> fd;
    for (int i = 0; i < 3; ++i)
        if (dd.d[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] != 0) fd.push_back(dd.d[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]);
    CHECK(fs == fd);
    check_smith_transforms(m);
}

TEST_CASE("homology of reference manifolds") {
    auto s3 = s3_one_tet();
    auto h = homology(s3);
    CHECK(h.h[0].str() == "Z");
    CHECK(h.h[1].str() == "0");
    CHECK(h.h[2].str() == "0");
    CHECK(h.h[3].str() == "Z");

    // Disjoint union doubles H0 and H3.
    Triangulation two(2);
    for (int f = 0; f < 4; ++f) {
        const auto& g = s3.gluing(0, f);
        if (!two.is_glued(0, f)) two.glue(0, f, g->partner_tet, g->partner_face, g->perm);
        if (!two.is_glued(1, f)) two.glue(1, f, 1, g->partner_face, g->perm);
    }
    auto h2 = homology(two);
    CHECK(h2.h[0].str() == "Z + Z");
    CHECK(h2.h[3].str() == "Z + Z");

    // Euler characteristic of any closed 3-manifold vanishes:
    // rank alternating sum equals zero when torsion is ignored.
    auto rp3 = rp3_two_tet();
    auto hr = homology(rp3);
    CHECK(hr.h[0].rank - hr.h[1].rank + hr.h[2].rank - hr.h[3].rank == 0);
    CHECK(hr.h[1].str() == "Z/2");
    CHECK(hr.h[2].str() == "0");  // closed orientable: H2 torsion-free with rank b1
}

TEST_CASE("pi1 presentation consistency") {
    for (const auto& t : {s3_one_tet(), rp3_two_tet(), barycentric_subdivision(rp3_two_tet())}) {
        auto sk = compute_skeleton(t);
        auto p = pi1_presentation(t, sk);
        auto h = homology(t, sk);
        CHECK(abelianization(p) == h.h[1]);
    }
    // Disconnected input is rejected.
    Triangulation two(2);
    auto s3 = s3_one_tet();
    for (int f = 0; f < 4; ++f) {
        const auto& g = s3.gluing(0, f);
        if (!two.is_glued(0, f)) two.glue(0, f, g->partner_tet, g->partner_face, g->perm);
        if (!two.is_glued(1, f)) two.glue(1, f, 1, g->partner_face, g->perm);
    }
    CHECK_THROWS_AS(pi1_presentation(two), precondition_error);
}

TEST_CASE("hom_count basics") {
    GroupPresentation trivial;
    trivial.generator_count = 0;
    CHECK(hom_count(trivial, GroupTable::builtin("S3")) == 1);
    CHECK(hom_count(trivial, GroupTable::builtin("Z4")) == 1);

    // <x | x^2>
    GroupPresentation z2;
    z2.generator_count = 1;
    z2.relators = {{1, 1}};
    CHECK(hom_count(z2, GroupTable::builtin("Z2")) == 2);
    CHECK(hom_count(z2, GroupTable::builtin("Z3")) == 1);
    CHECK(hom_count(z2, GroupTable::builtin("S3")) == 4);  // identity + 3 transpositions
    CHECK(hom_count(z2, GroupTable::builtin("Q8")) == 2);  // 1 and -1

    // Free group of rank 2: |G|^2 homomorphisms.
    GroupPresentation free2;
    free2.generator_count = 2;
    CHECK(hom_count(free2, GroupTable::builtin("S3")) == 36);

    // Abelian targets only see H1: #Hom(Z/d, Z/k) = gcd(d, k).
    GroupPresentation z4;
    z4.generator_count = 1;
    z4.relators = {{1, 1, 1, 1}};
    CHECK(hom_count(z4, GroupTable::builtin("Z2")) == 2);
    CHECK(hom_count(z4, GroupTable::builtin("Z4")) == 4);
    CHECK(hom_count(z4, GroupTable::builtin("Z3")) == 1);
    CHECK(hom_count(z4, GroupTable::builtin("Z2xZ2")) == 4);
}

TEST_CASE("hom_count against closed form for abelian targets") {
    // #Hom(pi1, Z/k) depends only on H1 = sum Z/d_i + Z^r:
    // product of gcd(d_i, k) times k^r.
    for (const auto& t : {s3_one_tet(), rp3_two_tet()}) {
        auto p = pi1_presentation(t);
        auto ab = abelianization(p);
        for (const auto& name : {"Z2", "Z3", "Z4"}) {
            auto g = GroupTable::builtin(name);
            mpz_class expected = 1;
            for (const auto& d : ab.torsion) {
                mpz_class gg;
                mpz_class k(g.order);
                mpz_gcd(gg.get_mpz_t(), d.get_mpz_t(), k.get_mpz_t());
                expected *= gg;
            }
            for (int i = 0; i < ab.rank; ++i) expected *= g.order;
            CHECK(hom_count(p, g) == expected);
        }
    }
}

TEST_CASE("group tables") {
    for (const auto& name : {"Z2", "Z3", "Z4", "Z2xZ2", "S3", "Q8"}) {
        auto g = GroupTable::builtin(name);
        CHECK_NOTHROW(g.validate());
    }
    CHECK(GroupTable::builtin("S3").order == 6);
    CHECK(GroupTable::builtin("Q8").order == 8);

    // Z2 from a table file.
    auto g = GroupTable::parse("group 2\n0 1\n1 0\n");
    CHECK(g.order == 2);
    CHECK(g.mul(1, 1) == 0);

    // No identity at index 0.
    CHECK_THROWS_AS(GroupTable::parse("group 2\n1 0\n0 1\n"), precondition_error);
    // Not associative / not a group.
    CHECK_THROWS_AS(GroupTable::parse("group 3\n0 1 2\n1 0 0\n2 0 1\n"), precondition_error);
}
