#include "trifold/tree_decomposition.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "trifold/errors.hpp"

namespace trifold {

std::vector<std::vector<int>> Multigraph::simple_adjacency() const {
    std::vector<std::set<int>> adj(static_cast<std::size_t>(node_count));
    for (const auto& [a, b] : edges) {
        if (a == b) continue;
        adj[static_cast<std::size_t>(a)].insert(b);
        adj[static_cast<std::size_t>(b)].insert(a);
    }
    std::vector<std::vector<int>> out(static_cast<std::size_t>(node_count));
    for (int v = 0; v < node_count; ++v) out[static_cast<std::size_t>(v)].assign(adj[static_cast<std::size_t>(v)].begin(), adj[static_cast<std::size_t>(v)].end());
    return out;
}

DecompositionCheck validate_decomposition(const Multigraph& g, const TreeDecomposition& x) {
    const int bags = static_cast<int>(x.bags.size());
    if (bags == 0) {
        if (g.node_count == 0 && g.edges.empty()) return {true, ""};
        return {false, "tree shape: no bags"};
    }
    if (x.tree_edges.size() + 1 != static_cast<std::size_t>(bags))
        return {false, "tree shape: " + std::to_string(x.tree_edges.size()) + " edges for " +
                           std::to_string(bags) + " bags"};
    {
        std::vector<int> parent(static_cast<std::size_t>(bags));
        for (int i = 0; i < bags; ++i) parent[static_cast<std::size_t>(i)] = i;
        auto find = [&](int a) {
            while (parent[static_cast<std::size_t>(a)] != a) a = parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            return a;
        };
        for (const auto& [a, b] : x.tree_edges) {
            if (a < 0 || b < 0 || a >= bags || b >= bags)
                return {false, "tree shape: edge endpoint out of range"};
            int ra = find(a), rb = find(b);
            if (ra == rb) return {false, "tree shape: cycle through bag " + std::to_string(a)};
            parent[static_cast<std::size_t>(ra)] = rb;
        }
    }
    for (const auto& bag : x.bags)
        for (int v : bag)
            if (v < 0 || v >= g.node_count)
                return {false, "bag contains unknown vertex " + std::to_string(v)};

    std::vector<char> covered(static_cast<std::size_t>(g.node_count), 0);
    for (const auto& bag : x.bags)
        for (int v : bag) covered[static_cast<std::size_t>(v)] = 1;
    for (int v = 0; v < g.node_count; ++v)
        if (!covered[static_cast<std::size_t>(v)])
            return {false, "vertex coverage: vertex " + std::to_string(v) + " in no bag"};

    for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
        auto [a, b] = g.edges[ei];
        bool ok = false;
        for (const auto& bag : x.bags) {
            bool ha = std::find(bag.begin(), bag.end(), a) != bag.end();
            bool hb = std::find(bag.begin(), bag.end(), b) != bag.end();
            if (ha && hb) {
                ok = true;
                break;
            }
        }
        if (!ok)
            return {false, "edge coverage: edge {" + std::to_string(a) + "," + std::to_string(b) +
                               "} in no bag"};
    }

    // Subtree property: the bags containing v must induce a connected
    // subgraph of the tree.
    std::vector<std::vector<int>> tree_adj(static_cast<std::size_t>(bags));
    for (const auto& [a, b] : x.tree_edges) {
        tree_adj[static_cast<std::size_t>(a)].push_back(b);
        tree_adj[static_cast<std::size_t>(b)].push_back(a);
    }
    for (int v = 0; v < g.node_count; ++v) {
        std::vector<char> has(static_cast<std::size_t>(bags), 0);
        int first = -1, total = 0;
        for (int i = 0; i < bags; ++i) {
            if (std::find(x.bags[static_cast<std::size_t>(i)].begin(), x.bags[static_cast<std::size_t>(i)].end(), v) != x.bags[static_cast<std::size_t>(i)].end()) {
                has[static_cast<std::size_t>(i)] = 1;
                ++total;
                if (first == -1) first = i;
            }
        }
        if (total <= 1) continue;
        std::vector<int> stack{first};
        std::vector<char> seen(static_cast<std::size_t>(bags), 0);
        seen[static_cast<std::size_t>(first)] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            for (int nxt : tree_adj[static_cast<std::size_t>(cur)]) {
                if (!has[static_cast<std::size_t>(nxt)] || seen[static_cast<std::size_t>(nxt)]) continue;
                seen[static_cast<std::size_t>(nxt)] = 1;
                ++reached;
                stack.push_back(nxt);
            }
        }
        if (reached != total)
            return {false, "subtree property: vertex " + std::to_string(v) + " spans a disconnected set of bags"};
    }
    return {true, ""};
}

TreeDecomposition heuristic_decomposition(const Multigraph& g, Strategy strategy) {
    const int n = g.node_count;
    TreeDecomposition out;
    if (n == 0) return out;

    auto adj_lists = g.simple_adjacency();
    std::vector<std::set<int>> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = std::set<int>(adj_lists[static_cast<std::size_t>(v)].begin(), adj_lists[static_cast<std::size_t>(v)].end());

    auto fill_cost = [&](int v) {
        long long missing = 0;
        const auto& nb = adj[static_cast<std::size_t>(v)];
        for (auto it = nb.begin(); it != nb.end(); ++it)
            for (auto jt = std::next(it); jt != nb.end(); ++jt)
                if (!adj[static_cast<std::size_t>(*it)].count(*jt)) ++missing;
        return missing;
    };

    std::vector<char> eliminated(static_cast<std::size_t>(n), 0);
    std::vector<int> order;
    std::vector<std::vector<int>> bag_of(static_cast<std::size_t>(n));
    order.reserve(static_cast<std::size_t>(n));

    for (int round = 0; round < n; ++round) {
        int best = -1;
        long long best_cost = 0;
        for (int v = 0; v < n; ++v) {
            if (eliminated[static_cast<std::size_t>(v)]) continue;
            long long cost = strategy == Strategy::MinDegree
                                 ? static_cast<long long>(adj[static_cast<std::size_t>(v)].size())
                                 : fill_cost(v);
            if (best == -1 || cost < best_cost) {
                best = v;
                best_cost = cost;
            }
        }
        order.push_back(best);
        auto& bag = bag_of[static_cast<std::size_t>(best)];
        bag.push_back(best);
        bag.insert(bag.end(), adj[static_cast<std::size_t>(best)].begin(), adj[static_cast<std::size_t>(best)].end());
        // Fill in the neighborhood, then remove the vertex.
        for (int a : adj[static_cast<std::size_t>(best)])
            for (int b : adj[static_cast<std::size_t>(best)]) {
                if (a >= b) continue;
                adj[static_cast<std::size_t>(a)].insert(b);
                adj[static_cast<std::size_t>(b)].insert(a);
            }
        for (int a : adj[static_cast<std::size_t>(best)]) adj[static_cast<std::size_t>(a)].erase(best);
        adj[static_cast<std::size_t>(best)].clear();
        eliminated[static_cast<std::size_t>(best)] = 1;
    }

    // Bag i belongs to the i-th eliminated vertex; attach it to the bag of
    // its earliest-eliminated neighbor among the later vertices.
    std::vector<int> position(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    out.bags.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) out.bags[static_cast<std::size_t>(position[static_cast<std::size_t>(v)])] = bag_of[static_cast<std::size_t>(v)];
    for (int i = 0; i < n; ++i) {
        int v = order[static_cast<std::size_t>(i)];
        int attach = -1;
        for (int u : bag_of[static_cast<std::size_t>(v)]) {
            if (u == v) continue;
            if (attach == -1 || position[static_cast<std::size_t>(u)] < position[static_cast<std::size_t>(attach)]) attach = u;
        }
        if (attach != -1)
            out.tree_edges.emplace_back(i, position[static_cast<std::size_t>(attach)]);
        else if (i + 1 < n)
            out.tree_edges.emplace_back(i, i + 1);  // disconnected component: chain the bags
    }
    return out;
}

Multigraph read_pace_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Multigraph g;
    bool have_header = false;
    long long m_declared = 0, m_seen = 0;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (!have_header) {
            std::string p, tw;
            long long n = 0;
            if (!(ls >> p >> tw >> n >> m_declared) || p != "p" || tw != "tw" || n < 0)
                throw parse_error("pace graph line " + std::to_string(lineno) + ": bad header");
            g.node_count = static_cast<int>(n);
            have_header = true;
            continue;
        }
        long long u = 0, v = 0;
        if (!(ls >> u >> v))
            throw parse_error("pace graph line " + std::to_string(lineno) + ": bad edge");
        if (u < 1 || v < 1 || u > g.node_count || v > g.node_count)
            throw parse_error("pace graph line " + std::to_string(lineno) + ": endpoint out of range");
        g.add_edge(static_cast<int>(u) - 1, static_cast<int>(v) - 1);
        ++m_seen;
    }
    if (!have_header) throw parse_error("pace graph: missing 'p tw' header");
    if (m_seen != m_declared)
        throw parse_error("pace graph: header declares " + std::to_string(m_declared) +
                          " edges, found " + std::to_string(m_seen));
    return g;
}

std::string write_pace_graph(const Multigraph& g) {
    std::ostringstream out;
    out << "p tw " << g.node_count << " " << g.edges.size() << "\n";
    for (const auto& [a, b] : g.edges) out << a + 1 << " " << b + 1 << "\n";
    return out.str();
}

TreeDecomposition read_pace_decomposition(const std::string& text, int* graph_nodes) {
    std::istringstream in(text);
    std::string line;
    TreeDecomposition x;
    bool have_header = false;
    long long bags_declared = 0, width_plus1 = 0, nodes = 0;
    int lineno = 0;
    std::vector<char> seen_bag;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "s") {
            std::string td;
            if (!(ls >> td >> bags_declared >> width_plus1 >> nodes) || td != "td")
                throw parse_error("pace td line " + std::to_string(lineno) + ": bad header");
            x.bags.assign(static_cast<std::size_t>(bags_declared), {});
            seen_bag.assign(static_cast<std::size_t>(bags_declared), 0);
            have_header = true;
        } else if (tag == "b") {
            if (!have_header) throw parse_error("pace td: bag before header");
            long long idx = 0;
            if (!(ls >> idx) || idx < 1 || idx > bags_declared)
                throw parse_error("pace td line " + std::to_string(lineno) + ": bad bag index");
            if (seen_bag[static_cast<std::size_t>(idx - 1)])
                throw parse_error("pace td line " + std::to_string(lineno) + ": duplicate bag");
            seen_bag[static_cast<std::size_t>(idx - 1)] = 1;
            long long v = 0;
            while (ls >> v) {
                if (v < 1 || v > nodes)
                    throw parse_error("pace td line " + std::to_string(lineno) + ": vertex out of range");
                x.bags[static_cast<std::size_t>(idx - 1)].push_back(static_cast<int>(v) - 1);
            }
            if (static_cast<long long>(x.bags[static_cast<std::size_t>(idx - 1)].size()) > width_plus1)
                throw parse_error("pace td line " + std::to_string(lineno) +
                                  ": bag exceeds declared width");
        } else {
            if (!have_header) throw parse_error("pace td: edge before header");
            long long a = 0, b = 0;
            std::istringstream ls2(line);
            if (!(ls2 >> a >> b) || a < 1 || b < 1 || a > bags_declared || b > bags_declared)
                throw parse_error("pace td line " + std::to_string(lineno) + ": bad tree edge");
            x.tree_edges.emplace_back(static_cast<int>(a) - 1, static_cast<int>(b) - 1);
        }
    }
    if (!have_header) throw parse_error("pace td: missing 's td' header");
    if (graph_nodes) *graph_nodes = static_cast<int>(nodes);
    return x;
}

std::string write_pace_decomposition(const TreeDecomposition& x, int graph_nodes) {
    std::ostringstream out;
    out << "s td " << x.bags.size() << " " << x.width() + 1 << " " << graph_nodes << "\n";
    for (std::size_t i = 0; i < x.bags.size(); ++i) {
        out << "b " << i + 1;
        auto bag = x.bags[i];
        std::sort(bag.begin(), bag.end());
        for (int v : bag) out << " " << v + 1;
        out << "\n";
    }
    for (const auto& [a, b] : x.tree_edges) out << a + 1 << " " << b + 1 << "\n";
    return out.str();
}

}  // namespace trifold
