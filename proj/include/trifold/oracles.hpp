#pragma once

#include <gmpxx.h>

#include <array>
#include <string>
#include <vector>

#include "trifold/skeleton.hpp"
#include "trifold/triangulation.hpp"

namespace trifold {

// Sparse integer matrix, row-major, used for boundary maps and relator
// exponent matrices.
struct SparseIntMat {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, mpz_class>>> row_data;  // (col, value), sorted

    SparseIntMat() = default;
    SparseIntMat(int r, int c) : rows(r), cols(c), row_data(static_cast<std::size_t>(r)) {}
    void add(int r, int c, const mpz_class& v);
    mpz_class at(int r, int c) const;
};

// Product of two sparse matrices; used by the chain-complex sanity check.
SparseIntMat multiply(const SparseIntMat& a, const SparseIntMat& b);
bool is_zero(const SparseIntMat& a);

// Nonzero diagonal entries of the Smith normal form, in divisibility order.
// Unit-pivot elimination first, general gcd reduction on the small residue.
std::vector<mpz_class> smith_invariant_factors(const SparseIntMat& a);

// Dense Smith normal form that also returns unimodular U, V with U*A*V = D;
// for the test-mode verification of the oracle itself.
struct DenseSmith {
    std::vector<std::vector<mpz_class>> d, u, v;
};
DenseSmith dense_smith(const std::vector<std::vector<mpz_class>>& a);

struct AbelianGroup {
    std::vector<mpz_class> torsion;  // invariant factors > 1, divisibility order
    int rank = 0;

    bool operator==(const AbelianGroup& o) const { return torsion == o.torsion && rank == o.rank; }
    std::string str() const;
};

struct HomologyResult {
    std::array<AbelianGroup, 4> h;  // dimensions 0..3

    bool operator==(const HomologyResult& o) const { return h == o.h; }
};

// Integral homology of the quotient cell complex, via boundary matrices with
// orientation-comparison signs and exact Smith normal form. The composite
// boundary maps are asserted to vanish on every call.
HomologyResult homology(const Triangulation& t);
HomologyResult homology(const Triangulation& t, const SkeletonSummary& sk);

// Relators are words over signed generator indices: +g means generator g-1,
// -g its inverse (g >= 1).
struct GroupPresentation {
    int generator_count = 0;
    std::vector<std::vector<int>> relators;
};

// Edge-path presentation: generators are the quotient edges outside a BFS
// spanning tree of the 1-skeleton, one relator per quotient triangle.
GroupPresentation pi1_presentation(const Triangulation& t);
GroupPresentation pi1_presentation(const Triangulation& t, const SkeletonSummary& sk);

// Abelianization invariants of a presentation (Smith normal form of the
// relator exponent matrix); cross-checked against homology H1 in tests.
AbelianGroup abelianization(const GroupPresentation& p);

// Finite group as a multiplication table; identity must sit at index 0.
struct GroupTable {
    std::string name;
    int order = 0;
    std::vector<int> table;  // row-major: table[a*order+b] = a*b

    int mul(int a, int b) const { return table[static_cast<std::size_t>(a * order + b)]; }
    int inverse(int a) const;
    // Throws precondition_error unless the table is a group with identity 0.
    void validate() const;

    static GroupTable builtin(const std::string& name);  // Z2 Z3 Z4 Z2xZ2 S3 Q8
    static GroupTable parse(const std::string& text);
    static GroupTable from_file(const std::string& path);
};

// Exact number of assignments generators -> G satisfying every relator.
// Backtracking with forced-value propagation on relators with a single
// undetermined generator; the explored-node guard throws when the search
// exceeds ~1e8 steps.
mpz_class hom_count(const GroupPresentation& p, const GroupTable& g);

}  // namespace trifold
