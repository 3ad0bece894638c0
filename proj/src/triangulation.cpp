#include "trifold/triangulation.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "trifold/errors.hpp"
#include "trifold/skeleton.hpp"

namespace trifold {

void Triangulation::glue(int tet, int face, int partner_tet, int partner_face,
                         const Permutation4& perm) {
    if (perm[face] != partner_face)
        throw precondition_error("gluing permutation must map the omitted vertex to the omitted vertex");
    if (tet == partner_tet && face == partner_face)
        throw precondition_error("cannot glue a face to itself");
    if (is_glued(tet, face) || is_glued(partner_tet, partner_face))
        throw precondition_error("face already glued");
    gluings_[static_cast<std::size_t>(tet)][static_cast<std::size_t>(face)] =
        Gluing{partner_tet, partner_face, perm};
    gluings_[static_cast<std::size_t>(partner_tet)][static_cast<std::size_t>(partner_face)] =
        Gluing{tet, face, perm.inverse()};
    orientation_.reset();
}

void Triangulation::unglue(int tet, int face) {
    auto& g = gluings_[static_cast<std::size_t>(tet)][static_cast<std::size_t>(face)];
    if (!g) return;
    gluings_[static_cast<std::size_t>(g->partner_tet)][static_cast<std::size_t>(g->partner_face)].reset();
    g.reset();
    orientation_.reset();
}

bool Triangulation::involutive(std::string* diagnostic) const {
    for (int t = 0; t < size(); ++t) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = gluing(t, f);
            if (!g) continue;
            if (g->partner_tet < 0 || g->partner_tet >= size()) {
                if (diagnostic) *diagnostic = "tet index out of range at (" + std::to_string(t) + "," + std::to_string(f) + ")";
                return false;
            }
            if (g->perm[f] != g->partner_face) {
                if (diagnostic) *diagnostic = "permutation does not carry face " + std::to_string(f) + " of tet " + std::to_string(t) + " to its partner face";
                return false;
            }
            const auto& back = gluing(g->partner_tet, g->partner_face);
            if (!back || back->partner_tet != t || back->partner_face != f ||
                !(back->perm == g->perm.inverse())) {
                if (diagnostic) *diagnostic = "non-involutive gluing at tet " + std::to_string(t) + " face " + std::to_string(f);
                return false;
            }
        }
    }
    return true;
}

int Triangulation::glued_face_pairs() const {
    int c = 0;
    for (int t = 0; t < size(); ++t)
        for (int f = 0; f < 4; ++f)
            if (is_glued(t, f)) ++c;
    return c / 2;
}

int Triangulation::boundary_face_count() const {
    return 4 * size() - 2 * glued_face_pairs();
}

bool Triangulation::operator==(const Triangulation& o) const {
    if (size() != o.size()) return false;
    for (int t = 0; t < size(); ++t)
        for (int f = 0; f < 4; ++f) {
            const auto& a = gluing(t, f);
            const auto& b = o.gluing(t, f);
            if (a.has_value() != b.has_value()) return false;
            if (a && (a->partner_tet != b->partner_tet || a->partner_face != b->partner_face ||
                      a->perm != b->perm))
                return false;
        }
    return true;
}

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

[[noreturn]] void fail(int lineno, const std::string& msg) {
    throw parse_error("line " + std::to_string(lineno) + ": " + msg);
}

}  // namespace

Triangulation parse_triangulation(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    int n = -1;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_comment(line);
        if (blank(line)) continue;
        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        if (kw != "tri") fail(lineno, "expected header 'tri <n>'");
        if (!(ls >> n) || n < 0) fail(lineno, "bad tetrahedron count");
        std::string rest;
        if (ls >> rest) fail(lineno, "trailing text after header");
        break;
    }
    if (n < 0) throw parse_error("missing 'tri <n>' header");

    // First pass collects the raw table; gluings are installed afterwards so
    // involutivity can be reported with line numbers.
    struct RawEntry {
        int partner = -1;
        Permutation4 perm;
        bool glued = false;
        int lineno = 0;
    };
    std::vector<std::array<RawEntry, 4>> raw(static_cast<std::size_t>(n));
    std::vector<bool> seen(static_cast<std::size_t>(n), false);

    while (std::getline(in, line)) {
        ++lineno;
        line = strip_comment(line);
        if (blank(line)) continue;
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head.empty() || head.back() != ':') fail(lineno, "expected '<tet>:' row label");
        int tet = -1;
        try {
            tet = std::stoi(head.substr(0, head.size() - 1));
        } catch (...) {
            fail(lineno, "bad tetrahedron label '" + head + "'");
        }
        if (tet < 0 || tet >= n) fail(lineno, "tet index out of range: " + std::to_string(tet));
        if (seen[static_cast<std::size_t>(tet)]) fail(lineno, "duplicate row for tet " + std::to_string(tet));
        seen[static_cast<std::size_t>(tet)] = true;

        for (int f = 0; f < 4; ++f) {
            std::string cell;
            if (!(ls >> cell)) fail(lineno, "row needs 4 entries");
            if (cell == "-") continue;
            auto slash = cell.find('/');
            if (slash == std::string::npos) fail(lineno, "entry must be '-' or 'j/abcd': '" + cell + "'");
            int partner = -1;
            try {
                partner = std::stoi(cell.substr(0, slash));
            } catch (...) {
                fail(lineno, "bad partner index in '" + cell + "'");
            }
            if (partner < 0 || partner >= n) fail(lineno, "tet index out of range: " + std::to_string(partner));
            Permutation4 p;
            try {
                p = Permutation4::from_digits(cell.substr(slash + 1));
            } catch (const parse_error& e) {
                fail(lineno, e.what());
            }
            auto& entry = raw[static_cast<std::size_t>(tet)][static_cast<std::size_t>(f)];
            entry = RawEntry{partner, p, true, lineno};
        }
        std::string extra;
        if (ls >> extra) fail(lineno, "trailing text after 4 entries");
    }
    for (int t = 0; t < n; ++t)
        if (!seen[static_cast<std::size_t>(t)]) throw parse_error("missing row for tet " + std::to_string(t));

    Triangulation result(n);
    for (int t = 0; t < n; ++t) {
        for (int f = 0; f < 4; ++f) {
            const auto& entry = raw[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)];
            if (!entry.glued) continue;
            int pf = entry.perm[f];
            if (t == entry.partner && f == pf)
                fail(entry.lineno, "face glued to itself");
            const auto& back = raw[static_cast<std::size_t>(entry.partner)][static_cast<std::size_t>(pf)];
            if (!back.glued)
                fail(entry.lineno, "non-involutive: partner face (" + std::to_string(entry.partner) +
                                       "," + std::to_string(pf) + ") is unglued");
            if (back.partner != t || !(back.perm == entry.perm.inverse()))
                fail(entry.lineno, "non-involutive: partner face (" + std::to_string(entry.partner) +
                                       "," + std::to_string(pf) + ") disagrees");
        }
    }
    // Install each identification once.
    for (int t = 0; t < n; ++t) {
        for (int f = 0; f < 4; ++f) {
            const auto& entry = raw[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)];
            if (!entry.glued || result.is_glued(t, f)) continue;
            result.glue(t, f, entry.partner, entry.perm[f], entry.perm);
        }
    }
    return result;
}

Triangulation read_triangulation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_triangulation(buf.str());
}

std::string write_triangulation(const Triangulation& t) {
    std::ostringstream out;
    out << "tri " << t.size() << "\n";
    for (int i = 0; i < t.size(); ++i) {
        out << i << ":";
        for (int f = 0; f < 4; ++f) {
            const auto& g = t.gluing(i, f);
            if (!g)
                out << " -";
            else
                out << " " << g->partner_tet << "/" << g->perm.digits();
        }
        out << "\n";
    }
    return out.str();
}

Multigraph dual_graph(const Triangulation& t) {
    Multigraph g(t.size());
    for (int i = 0; i < t.size(); ++i) {
        for (int f = 0; f < 4; ++f) {
            const auto& gl = t.gluing(i, f);
            if (!gl) continue;
            // Emit each identification once, from its lesser (tet, face) side.
            if (gl->partner_tet < i) continue;
            if (gl->partner_tet == i && gl->partner_face < f) continue;
            g.add_edge(i, gl->partner_tet);
        }
    }
    return g;
}

Triangulation orient(const Triangulation& t) {
    auto check = is_closed_manifold(t);
    if (!check.closed) throw not_closed_error("orient: " + check.diagnostic);

    std::vector<int> sign(static_cast<std::size_t>(t.size()), 0);
    for (int start = 0; start < t.size(); ++start) {
        if (sign[static_cast<std::size_t>(start)] != 0) continue;
        sign[static_cast<std::size_t>(start)] = 1;
        std::vector<int> queue{start};
        while (!queue.empty()) {
            int cur = queue.back();
            queue.pop_back();
            for (int f = 0; f < 4; ++f) {
                const auto& g = t.gluing(cur, f);
                if (!g) continue;
                // A gluing is orientation-reversing on the shared triangle
                // exactly when sign * partner_sign * parity == -1.
                int want = -sign[static_cast<std::size_t>(cur)] * g->perm.sign();
                int& ps = sign[static_cast<std::size_t>(g->partner_tet)];
                if (ps == 0) {
                    ps = want;
                    queue.push_back(g->partner_tet);
                } else if (ps != want) {
                    throw non_orientable_error("orientation contradiction at tet " +
                                               std::to_string(cur) + " face " + std::to_string(f));
                }
            }
        }
    }
    Triangulation out = t;
    out.set_orientation(std::move(sign));
    return out;
}

namespace {

// Flags of a tetrahedron, encoded as vertex orderings (a,b,c,d): vertex a,
// edge {a,b}, face {a,b,c}. The 24 orderings index the subdivided tetrahedra.
const std::array<std::array<int, 4>, 24>& flag_table() {
    static const auto table = [] {
        std::array<std::array<int, 4>, 24> t{};
        int idx = 0;
        std::array<int, 4> p{0, 1, 2, 3};
        do {
            t[static_cast<std::size_t>(idx++)] = p;
        } while (std::next_permutation(p.begin(), p.end()));
        return t;
    }();
    return table;
}

int flag_index(const std::array<int, 4>& flag) {
    const auto& table = flag_table();
    for (int i = 0; i < 24; ++i)
        if (table[static_cast<std::size_t>(i)] == flag) return i;
    return -1;
}

}  // namespace

Triangulation barycentric_subdivision(const Triangulation& t) {
    const auto& flags = flag_table();
    Triangulation out(24 * t.size());
    auto sub_id = [&](int tet, int flag) { return tet * 24 + flag; };

    for (int tet = 0; tet < t.size(); ++tet) {
        for (int fi = 0; fi < 24; ++fi) {
            auto flag = flags[static_cast<std::size_t>(fi)];
            int id = sub_id(tet, fi);
            // Subtet vertices: 0 = original vertex flag[0], 1 = midpoint of
            // {flag[0],flag[1]}, 2 = center of {flag[0..2]}, 3 = tet center.
            // Internal walls swap one flag entry; the gluing map fixes the
            // three shared barycenters, so it is the identity permutation.
            struct Wall {
                int face;
                std::array<int, 4> partner_flag;
            };
            std::array<Wall, 3> walls = {
                Wall{0, {flag[1], flag[0], flag[2], flag[3]}},
                Wall{1, {flag[0], flag[2], flag[1], flag[3]}},
                Wall{2, {flag[0], flag[1], flag[3], flag[2]}},
            };
            for (const auto& w : walls) {
                int pid = sub_id(tet, flag_index(w.partner_flag));
                if (!out.is_glued(id, w.face))
                    out.glue(id, w.face, pid, w.face, Permutation4());
            }
            // Face 3 of the subtet lies on the original boundary triangle
            // omitting flag[3].
            const auto& g = t.gluing(tet, flag[3]);
            if (g && !out.is_glued(id, 3)) {
                const auto& p = g->perm;
                std::array<int, 4> pf{p[flag[0]], p[flag[1]], p[flag[2]], p[flag[3]]};
                int pid = sub_id(g->partner_tet, flag_index(pf));
                out.glue(id, 3, pid, 3, Permutation4());
            }
        }
    }
    return out;
}

}  // namespace trifold
