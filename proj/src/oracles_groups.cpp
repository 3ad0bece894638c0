#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "trifold/errors.hpp"
#include "trifold/oracles.hpp"

namespace trifold {

int GroupTable::inverse(int a) const {
    for (int b = 0; b < order; ++b)
        if (mul(a, b) == 0) return b;
    throw precondition_error("group table: element " + std::to_string(a) + " has no inverse");
}

void GroupTable::validate() const {
    if (order <= 0 || static_cast<int>(table.size()) != order * order)
        throw precondition_error("group table: bad shape");
    for (int v : table)
        if (v < 0 || v >= order) throw precondition_error("group table: entry out of range");
    for (int a = 0; a < order; ++a)
        if (mul(0, a) != a || mul(a, 0) != a)
            throw precondition_error("group table: index 0 is not an identity");
    for (int a = 0; a < order; ++a) {
        bool has_inv = false;
        for (int b = 0; b < order; ++b)
            if (mul(a, b) == 0 && mul(b, a) == 0) has_inv = true;
        if (!has_inv) throw precondition_error("group table: element " + std::to_string(a) + " not invertible");
    }
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            for (int c = 0; c < order; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw precondition_error("group table: not associative");
}

namespace {

GroupTable cyclic(int k, const std::string& name) {
    GroupTable g;
    g.name = name;
    g.order = k;
    g.table.resize(static_cast<std::size_t>(k * k));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) g.table[static_cast<std::size_t>(a * k + b)] = (a + b) % k;
    return g;
}

GroupTable klein4() {
    GroupTable g;
    g.name = "Z2xZ2";
    g.order = 4;
    g.table.resize(16);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) g.table[static_cast<std::size_t>(a * 4 + b)] = a ^ b;
    return g;
}

GroupTable sym3() {
    // Permutations of {0,1,2} with the identity first.
    const std::array<std::array<int, 3>, 6> perms = {{{0, 1, 2},
                                                      {1, 0, 2},
                                                      {0, 2, 1},
                                                      {2, 1, 0},
                                                      {1, 2, 0},
                                                      {2, 0, 1}}};
    auto index_of = [&](const std::array<int, 3>& p) {
        for (int i = 0; i < 6; ++i)
            if (perms[static_cast<std::size_t>(i)] == p) return i;
        return -1;
    };
    GroupTable g;
    g.name = "S3";
    g.order = 6;
    g.table.resize(36);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            std::array<int, 3> comp{};
            for (int i = 0; i < 3; ++i) comp[static_cast<std::size_t>(i)] = perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)])];
            g.table[static_cast<std::size_t>(a * 6 + b)] = index_of(comp);
        }
    return g;
}

GroupTable quaternion8() {
    // Elements 0..7 as (+-1, +-i, +-j, +-k): index = 2*axis + (negative?1:0),
    // axis 0=1, 1=i, 2=j, 3=k.
    auto mul_q = [](int a, int b) {
        int ax = a / 2, an = a % 2, bx = b / 2, bn = b % 2;
        // axis multiplication table with sign: i*j=k, j*k=i, k*i=j.
        static const int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sign[4][4] = {{+1, +1, +1, +1},
                                       {+1, -1, +1, -1},
                                       {+1, -1, -1, +1},
                                       {+1, +1, -1, -1}};
        int rx = axis[ax][bx];
        int rs = sign[ax][bx];
        int neg = (an + bn + (rs < 0 ? 1 : 0)) % 2;
        return 2 * rx + neg;
    };
    GroupTable g;
    g.name = "Q8";
    g.order = 8;
    g.table.resize(64);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) g.table[static_cast<std::size_t>(a * 8 + b)] = mul_q(a, b);
    return g;
}

}  // namespace

GroupTable GroupTable::builtin(const std::string& name) {
    GroupTable g;
    if (name == "Z2")
        g = cyclic(2, "Z2");
    else if (name == "Z3")
        g = cyclic(3, "Z3");
    else if (name == "Z4")
        g = cyclic(4, "Z4");
    else if (name == "Z2xZ2")
        g = klein4();
    else if (name == "S3")
        g = sym3();
    else if (name == "Q8")
        g = quaternion8();
    else
        throw precondition_error("unknown builtin group: " + name);
    g.validate();
    return g;
}

GroupTable GroupTable::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    GroupTable g;
    bool have_header = false;
    int row = 0;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        std::istringstream ls(line);
        if (!have_header) {
            std::string kw;
            if (!(ls >> kw >> g.order) || kw != "group" || g.order <= 0)
                throw parse_error("group file line " + std::to_string(lineno) + ": expected 'group <k>'");
            g.table.assign(static_cast<std::size_t>(g.order * g.order), -1);
            have_header = true;
            continue;
        }
        if (row >= g.order) throw parse_error("group file: too many rows");
        for (int c = 0; c < g.order; ++c) {
            int v;
            if (!(ls >> v)) throw parse_error("group file line " + std::to_string(lineno) + ": row needs " + std::to_string(g.order) + " entries");
            if (v < 0 || v >= g.order) throw parse_error("group file line " + std::to_string(lineno) + ": entry out of range");
            g.table[static_cast<std::size_t>(row * g.order + c)] = v;
        }
        ++row;
    }
    if (!have_header || row != g.order) throw parse_error("group file: incomplete table");
    g.name = "custom" + std::to_string(g.order);
    g.validate();
    return g;
}

GroupTable GroupTable::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

namespace {

struct HomSearch {
    const GroupPresentation& p;
    const GroupTable& g;
    std::vector<int> assign;                   // -1 = unassigned
    std::vector<std::vector<int>> gen_relators;  // generator -> relator ids
    std::vector<int> unassigned_in;            // relator -> count of distinct unassigned gens
    long long steps = 0;
    static constexpr long long kStepGuard = 100000000;

    explicit HomSearch(const GroupPresentation& pres, const GroupTable& grp) : p(pres), g(grp) {
        assign.assign(static_cast<std::size_t>(p.generator_count), -1);
        gen_relators.resize(static_cast<std::size_t>(p.generator_count));
        unassigned_in.resize(p.relators.size());
        for (std::size_t r = 0; r < p.relators.size(); ++r) {
            std::vector<int> distinct;
            for (int letter : p.relators[r]) {
                int gen = std::abs(letter) - 1;
                if (std::find(distinct.begin(), distinct.end(), gen) == distinct.end()) {
                    distinct.push_back(gen);
                    gen_relators[static_cast<std::size_t>(gen)].push_back(static_cast<int>(r));
                }
            }
            unassigned_in[r] = static_cast<int>(distinct.size());
        }
    }

    bool relator_holds(int r) const {
        int prod = 0;
        for (int letter : p.relators[static_cast<std::size_t>(r)]) {
            int gen = std::abs(letter) - 1;
            int val = assign[static_cast<std::size_t>(gen)];
            prod = g.mul(prod, letter > 0 ? val : g.inverse(val));
        }
        return prod == 0;
    }

    // If exactly one generator of relator r is unassigned and it occurs once,
    // its value is forced; returns (gen, value) or (-1, violated ? -2 : -1).
    std::pair<int, int> forced_value(int r) const {
        const auto& rel = p.relators[static_cast<std::size_t>(r)];
        int unknown = -1, occurrences = 0, pos = -1;
        for (std::size_t i = 0; i < rel.size(); ++i) {
            int gen = std::abs(rel[i]) - 1;
            if (assign[static_cast<std::size_t>(gen)] >= 0) continue;
            if (unknown != -1 && unknown != gen) return {-1, -1};
            unknown = gen;
            ++occurrences;
            pos = static_cast<int>(i);
        }
        if (unknown == -1 || occurrences != 1) return {-1, -1};
        // prefix * u^e * suffix = identity
        int prefix = 0, suffix = 0;
        for (int i = 0; i < pos; ++i) {
            int letter = rel[static_cast<std::size_t>(i)];
            int val = assign[static_cast<std::size_t>(std::abs(letter) - 1)];
            prefix = g.mul(prefix, letter > 0 ? val : g.inverse(val));
        }
        for (std::size_t i = static_cast<std::size_t>(pos) + 1; i < rel.size(); ++i) {
            int letter = rel[i];
            int val = assign[static_cast<std::size_t>(std::abs(letter) - 1)];
            suffix = g.mul(suffix, letter > 0 ? val : g.inverse(val));
        }
        int u = g.mul(g.inverse(prefix), g.inverse(suffix));
        if (rel[static_cast<std::size_t>(pos)] < 0) u = g.inverse(u);
        return {unknown, u};
    }

    void set(int gen, int value, std::vector<int>& trail) {
        assign[static_cast<std::size_t>(gen)] = value;
        trail.push_back(gen);
        for (int r : gen_relators[static_cast<std::size_t>(gen)]) --unassigned_in[static_cast<std::size_t>(r)];
    }

    void undo(std::vector<int>& trail, std::size_t mark) {
        while (trail.size() > mark) {
            int gen = trail.back();
            trail.pop_back();
            assign[static_cast<std::size_t>(gen)] = -1;
            for (int r : gen_relators[static_cast<std::size_t>(gen)]) ++unassigned_in[static_cast<std::size_t>(r)];
        }
    }

    mpz_class count() {
        std::vector<int> trail;
        return dfs(trail);
    }

    mpz_class dfs(std::vector<int>& trail) {
        if (++steps > kStepGuard)
            throw precondition_error("hom_count: search guard exceeded (1e8 steps)");
        std::size_t mark = trail.size();

        // Propagate forced values and check completed relators.
        bool progress = true;
        while (progress) {
            progress = false;
            for (std::size_t r = 0; r < p.relators.size(); ++r) {
                if (unassigned_in[r] == 0) continue;
                auto [gen, val] = forced_value(static_cast<int>(r));
                if (gen >= 0) {
                    set(gen, val, trail);
                    progress = true;
                }
            }
        }
        for (std::size_t r = 0; r < p.relators.size(); ++r)
            if (unassigned_in[r] == 0 && !relator_holds(static_cast<int>(r))) {
                undo(trail, mark);
                return 0;
            }

        // Branch on the unassigned generator with the most constrained
        // relator (fewest unassigned generators), lowest id on ties.
        int pick = -1, pick_score = -1;
        for (int gen = 0; gen < p.generator_count; ++gen) {
            if (assign[static_cast<std::size_t>(gen)] >= 0) continue;
            int score = 1 << 20;
            for (int r : gen_relators[static_cast<std::size_t>(gen)]) score = std::min(score, unassigned_in[static_cast<std::size_t>(r)]);
            if (pick == -1 || score < pick_score) {
                pick = gen;
                pick_score = score;
            }
        }
        if (pick == -1) {
            undo(trail, mark);
            return 1;
        }

        mpz_class total = 0;
        for (int val = 0; val < g.order; ++val) {
            std::size_t sub = trail.size();
            set(pick, val, trail);
            total += dfs(trail);
            undo(trail, sub);
        }
        undo(trail, mark);
        return total;
    }
};

}  // namespace

mpz_class hom_count(const GroupPresentation& p, const GroupTable& g) {
    for (const auto& rel : p.relators)
        for (int letter : rel)
            if (letter == 0 || std::abs(letter) > p.generator_count)
                throw precondition_error("hom_count: relator letter out of range");
    HomSearch search(p, g);
    return search.count();
}

}  // namespace trifold
