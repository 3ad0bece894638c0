#include <algorithm>
#include <map>
#include <set>

#include "trifold/errors.hpp"
#include "trifold/oracles.hpp"

namespace trifold {

void SparseIntMat::add(int r, int c, const mpz_class& v) {
    if (v == 0) return;
    auto& row = row_data[static_cast<std::size_t>(r)];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& p, int col) { return p.first < col; });
    if (it != row.end() && it->first == c) {
        it->second += v;
        if (it->second == 0) row.erase(it);
    } else {
        row.insert(it, {c, v});
    }
}

mpz_class SparseIntMat::at(int r, int c) const {
    const auto& row = row_data[static_cast<std::size_t>(r)];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& p, int col) { return p.first < col; });
    if (it != row.end() && it->first == c) return it->second;
    return 0;
}

SparseIntMat multiply(const SparseIntMat& a, const SparseIntMat& b) {
    SparseIntMat out(a.rows, b.cols);
    for (int r = 0; r < a.rows; ++r) {
        std::map<int, mpz_class> acc;
        for (const auto& [k, va] : a.row_data[static_cast<std::size_t>(r)])
            for (const auto& [c, vb] : b.row_data[static_cast<std::size_t>(k)]) acc[c] += va * vb;
        for (auto& [c, v] : acc)
            if (v != 0) out.row_data[static_cast<std::size_t>(r)].emplace_back(c, v);
    }
    return out;
}

bool is_zero(const SparseIntMat& a) {
    for (const auto& row : a.row_data)
        if (!row.empty()) return false;
    return true;
}

namespace {

// Working form for the elimination: rows and columns as maps for O(log) edits.
struct WorkMat {
    std::vector<std::map<int, mpz_class>> rows;
    std::vector<std::set<int>> cols;  // column -> set of rows with a nonzero

    explicit WorkMat(const SparseIntMat& a)
        : rows(static_cast<std::size_t>(a.rows)), cols(static_cast<std::size_t>(a.cols)) {
        for (int r = 0; r < a.rows; ++r)
            for (const auto& [c, v] : a.row_data[static_cast<std::size_t>(r)]) {
                rows[static_cast<std::size_t>(r)][c] = v;
                cols[static_cast<std::size_t>(c)].insert(r);
            }
    }

    void set(int r, int c, const mpz_class& v) {
        auto& row = rows[static_cast<std::size_t>(r)];
        if (v == 0) {
            row.erase(c);
            cols[static_cast<std::size_t>(c)].erase(r);
        } else {
            row[c] = v;
            cols[static_cast<std::size_t>(c)].insert(r);
        }
    }

    // row r2 += k * row r1
    void add_row(int r2, int r1, const mpz_class& k) {
        if (k == 0) return;
        for (const auto& [c, v] : rows[static_cast<std::size_t>(r1)]) {
            mpz_class nv = k * v;
            auto it = rows[static_cast<std::size_t>(r2)].find(c);
            if (it != rows[static_cast<std::size_t>(r2)].end()) nv += it->second;
            set(r2, c, nv);
        }
    }
};

}  // namespace

std::vector<mpz_class> smith_invariant_factors(const SparseIntMat& a) {
    WorkMat w(a);
    std::vector<char> row_done(static_cast<std::size_t>(a.rows), 0), col_done(static_cast<std::size_t>(a.cols), 0);
    std::vector<mpz_class> factors;

    // Phase 1: eliminate with +-1 pivots, chosen to minimize fill. Boundary
    // matrices of triangulations are almost entirely unit entries, so this
    // phase usually clears everything.
    while (true) {
        int best_r = -1, best_c = -1;
        long long best_score = -1;
        for (int r = 0; r < a.rows; ++r) {
            if (row_done[static_cast<std::size_t>(r)]) continue;
            for (const auto& [c, v] : w.rows[static_cast<std::size_t>(r)]) {
                if (col_done[static_cast<std::size_t>(c)]) continue;
                if (v != 1 && v != -1) continue;
                long long score = static_cast<long long>(w.rows[static_cast<std::size_t>(r)].size() - 1) *
                                  static_cast<long long>(w.cols[static_cast<std::size_t>(c)].size() - 1);
                if (best_score < 0 || score < best_score) {
                    best_score = score;
                    best_r = r;
                    best_c = c;
                    if (score == 0) break;
                }
            }
            if (best_score == 0) break;
        }
        if (best_r < 0) break;

        const mpz_class pivot = w.rows[static_cast<std::size_t>(best_r)][best_c];
        // Clear the pivot column with row operations.
        auto rows_in_col = std::vector<int>(w.cols[static_cast<std::size_t>(best_c)].begin(), w.cols[static_cast<std::size_t>(best_c)].end());
        for (int r : rows_in_col) {
            if (r == best_r) continue;
            mpz_class k = -w.rows[static_cast<std::size_t>(r)][best_c] / pivot;
            w.add_row(r, best_r, k);
        }
        // The pivot row is then cleared by column operations, which touch no
        // other rows; just retire it.
        for (const auto& [c, v] : w.rows[static_cast<std::size_t>(best_r)]) w.cols[static_cast<std::size_t>(c)].erase(best_r);
        w.rows[static_cast<std::size_t>(best_r)].clear();
        row_done[static_cast<std::size_t>(best_r)] = 1;
        col_done[static_cast<std::size_t>(best_c)] = 1;
        factors.emplace_back(1);
    }

    // Phase 2: densify what is left (normally a handful of rows) and run the
    // classical gcd-based reduction.
    std::vector<int> live_rows, live_cols;
    for (int r = 0; r < a.rows; ++r)
        if (!row_done[static_cast<std::size_t>(r)] && !w.rows[static_cast<std::size_t>(r)].empty()) live_rows.push_back(r);
    {
        std::set<int> cols;
        for (int r : live_rows)
            for (const auto& [c, v] : w.rows[static_cast<std::size_t>(r)]) cols.insert(c);
        live_cols.assign(cols.begin(), cols.end());
    }
    if (!live_rows.empty()) {
        std::vector<std::vector<mpz_class>> m(live_rows.size(),
                                              std::vector<mpz_class>(live_cols.size(), 0));
        std::map<int, int> col_pos;
        for (std::size_t i = 0; i < live_cols.size(); ++i) col_pos[live_cols[i]] = static_cast<int>(i);
        for (std::size_t i = 0; i < live_rows.size(); ++i)
            for (const auto& [c, v] : w.rows[static_cast<std::size_t>(live_rows[i])]) m[i][static_cast<std::size_t>(col_pos[c])] = v;

        auto ds = dense_smith(m);
        for (std::size_t i = 0; i < ds.d.size() && i < (ds.d.empty() ? 0 : ds.d[0].size()); ++i) {
            mpz_class v = ds.d[i][i];
            if (v != 0) factors.push_back(abs(v));
        }
    }

    // Normalize to divisibility order.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
            if (factors[i + 1] % factors[i] == 0) continue;
            mpz_class g, l;
            mpz_gcd(g.get_mpz_t(), factors[i].get_mpz_t(), factors[i + 1].get_mpz_t());
            l = factors[i] / g * factors[i + 1];
            factors[i] = g;
            factors[i + 1] = l;
            changed = true;
        }
    }
    std::sort(factors.begin(), factors.end());
    return factors;
}

DenseSmith dense_smith(const std::vector<std::vector<mpz_class>>& a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
    DenseSmith out;
    out.d = a;
    out.u.assign(static_cast<std::size_t>(rows), std::vector<mpz_class>(static_cast<std::size_t>(rows), 0));
    out.v.assign(static_cast<std::size_t>(cols), std::vector<mpz_class>(static_cast<std::size_t>(cols), 0));
    for (int i = 0; i < rows; ++i) out.u[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    for (int i = 0; i < cols; ++i) out.v[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    auto& d = out.d;
    auto& u = out.u;
    auto& v = out.v;

    auto row_op = [&](int r2, int r1, const mpz_class& k) {  // r2 += k*r1
        for (int c = 0; c < cols; ++c) d[static_cast<std::size_t>(r2)][static_cast<std::size_t>(c)] += k * d[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c)];
        for (int c = 0; c < rows; ++c) u[static_cast<std::size_t>(r2)][static_cast<std::size_t>(c)] += k * u[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c)];
    };
    auto col_op = [&](int c2, int c1, const mpz_class& k) {  // c2 += k*c1
        for (int r = 0; r < rows; ++r) d[static_cast<std::size_t>(r)][static_cast<std::size_t>(c2)] += k * d[static_cast<std::size_t>(r)][static_cast<std::size_t>(c1)];
        for (int r = 0; r < cols; ++r) v[static_cast<std::size_t>(r)][static_cast<std::size_t>(c2)] += k * v[static_cast<std::size_t>(r)][static_cast<std::size_t>(c1)];
    };
    auto swap_rows = [&](int r1, int r2) {
        std::swap(d[static_cast<std::size_t>(r1)], d[static_cast<std::size_t>(r2)]);
        std::swap(u[static_cast<std::size_t>(r1)], u[static_cast<std::size_t>(r2)]);
    };
    auto swap_cols = [&](int c1, int c2) {
        for (int r = 0; r < rows; ++r) std::swap(d[static_cast<std::size_t>(r)][static_cast<std::size_t>(c1)], d[static_cast<std::size_t>(r)][static_cast<std::size_t>(c2)]);
        for (int r = 0; r < cols; ++r) std::swap(v[static_cast<std::size_t>(r)][static_cast<std::size_t>(c1)], v[static_cast<std::size_t>(r)][static_cast<std::size_t>(c2)]);
    };

    int k = 0;
    while (k < rows && k < cols) {
        // Find the entry of least absolute value in the remaining block.
        int pr = -1, pc = -1;
        mpz_class best;
        for (int r = k; r < rows; ++r)
            for (int c = k; c < cols; ++c) {
                if (d[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] == 0) continue;
                mpz_class av = abs(d[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
                if (pr == -1 || av < best) {
                    best = av;
                    pr = r;
                    pc = c;
                }
            }
        if (pr == -1) break;
        swap_rows(k, pr);
        swap_cols(k, pc);

        bool clean = true;
        for (int r = k + 1; r < rows; ++r) {
            if (d[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] == 0) continue;
            mpz_class q = d[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] / d[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
            row_op(r, k, -q);
            if (d[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] != 0) clean = false;
        }
        for (int c = k + 1; c < cols; ++c) {
            if (d[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)] == 0) continue;
            mpz_class q = d[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)] / d[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
            col_op(c, k, -q);
            if (d[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)] != 0) clean = false;
        }
        if (!clean) continue;  // smaller remainders appeared; repick the pivot
        ++k;
    }

    // Positive diagonal in divisibility order.
    int diag = std::min(rows, cols);
    for (int i = 0; i < diag; ++i)
        if (d[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] < 0) {
            for (int c = 0; c < cols; ++c) d[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = -d[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            for (int c = 0; c < rows; ++c) u[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = -u[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
        }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i + 1 < diag; ++i) {
            mpz_class &x = d[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)], &y = d[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i + 1)];
            if (x == 0 && y != 0) {
                swap_rows(i, i + 1);
                swap_cols(i, i + 1);
                changed = true;
                continue;
            }
            if (x == 0 || y % x == 0) continue;
            // Standard 2x2 fix: (x, y) -> (gcd, lcm) via row/column ops.
            col_op(i, i + 1, 1);
            mpz_class g, s_ignored;
            while (d[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i)] != 0) {
                mpz_class q = d[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] / d[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i)];
                row_op(i, i + 1, -q);
                swap_rows(i, i + 1);
            }
            mpz_class q2 = d[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] / d[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
            col_op(i + 1, i, -q2);
            if (d[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] < 0) {
                for (int c = 0; c < cols; ++c) d[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = -d[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
                for (int c = 0; c < rows; ++c) u[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = -u[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            }
            if (d[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i + 1)] < 0) {
                for (int c = 0; c < cols; ++c) d[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(c)] = -d[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(c)];
                for (int c = 0; c < rows; ++c) u[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(c)] = -u[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(c)];
            }
            changed = true;
        }
    }
    return out;
}

std::string AbelianGroup::str() const {
    std::string s;
    for (int i = 0; i < rank; ++i) s += s.empty() ? "Z" : " + Z";
    for (const auto& t : torsion) s += (s.empty() ? "Z/" : " + Z/") + t.get_str();
    return s.empty() ? "0" : s;
}

}  // namespace trifold
