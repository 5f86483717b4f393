#include "pretzel/aux_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

#include "pretzel/disjoint_set.hpp"

namespace pretzel {

AuxGraph build_graph(const SignSeq& seq) {
    return build_graph(seq, pair_iterative(seq, Direction::Ccw), pair_iterative(seq, Direction::Cw));
}

AuxGraph build_graph(const SignSeq& seq, const BandMatching& a, const BandMatching& b) {
    AuxGraph g;
    g.signs = seq;
    g.size = seq.size();
    for (const BandPair& p : a.pairs) g.edges_a.push_back({p.minus, p.plus, Direction::Ccw});
    for (const BandPair& p : b.pairs) g.edges_b.push_back({p.plus, p.minus, Direction::Cw});
    return g;
}

namespace {

struct Adjacency {
    // (neighbour, edge id) per vertex; parallel edges stay distinct.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> out;
};

std::vector<std::size_t> tree_path(const Adjacency& adj, std::size_t from, std::size_t to) {
    std::vector<std::size_t> parent(adj.out.size(), adj.out.size());
    std::deque<std::size_t> queue{from};
    parent[from] = from;
    while (!queue.empty()) {
        const std::size_t v = queue.front();
        queue.pop_front();
        if (v == to) break;
        for (auto [w, id] : adj.out[v]) {
            if (parent[w] != adj.out.size()) continue;
            parent[w] = v;
            queue.push_back(w);
        }
    }
    std::vector<std::size_t> path{to};
    while (path.back() != from) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

PathVerdict is_path(const AuxGraph& g) {
    PathVerdict verdict;
    const std::size_t n = g.size;
    if (n == 0) {
        verdict.reason = "graph has no vertices";
        return verdict;
    }
    std::vector<DirectedEdge> edges = g.edges_a;
    edges.insert(edges.end(), g.edges_b.begin(), g.edges_b.end());
    for (const DirectedEdge& e : edges) {
        if (e.tail >= n || e.head >= n) throw std::invalid_argument("edge endpoint out of range");
    }

    // Cycles first: union-find flags the closing edge, BFS over the edges
    // already placed recovers the rest of the cycle.
    DisjointSet sets(n);
    Adjacency forest{std::vector<std::vector<std::pair<std::size_t, std::size_t>>>(n)};
    for (std::size_t id = 0; id < edges.size(); ++id) {
        const auto [u, v, family] = edges[id];
        if (u == v) {
            verdict.cycle = {u};
            verdict.reason = "loop at vertex " + std::to_string(u);
            return verdict;
        }
        if (!sets.unite(u, v)) {
            verdict.cycle = tree_path(forest, v, u);
            verdict.reason = "cycle of length " + std::to_string(verdict.cycle.size());
            return verdict;
        }
        forest.out[u].emplace_back(v, id);
        forest.out[v].emplace_back(u, id);
    }

    std::vector<std::size_t> degree(n, 0);
    for (const DirectedEdge& e : edges) {
        ++degree[e.tail];
        ++degree[e.head];
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (degree[v] > 2) {
            verdict.branch_vertex = v;
            verdict.reason = "vertex " + std::to_string(v) + " has degree " + std::to_string(degree[v]);
            return verdict;
        }
    }

    if (sets.set_count() > 1) {
        std::map<std::size_t, std::vector<std::size_t>> blocks;
        for (std::size_t v = 0; v < n; ++v) blocks[sets.find(v)].push_back(v);
        for (auto& [root, members] : blocks) verdict.components.push_back(std::move(members));
        std::sort(verdict.components.begin(), verdict.components.end());
        verdict.reason = "disconnected into " + std::to_string(verdict.components.size()) + " parts";
        return verdict;
    }

    // Connected, acyclic, degree <= 2: walk from the lowest-numbered end.
    std::size_t start = 0;
    while (degree[start] > 1) ++start;
    verdict.path.push_back(start);
    std::size_t prev = n, cur = start;
    while (verdict.path.size() < n) {
        for (auto [w, id] : forest.out[cur]) {
            if (w == prev) continue;
            prev = cur;
            cur = w;
            break;
        }
        verdict.path.push_back(cur);
    }
    verdict.is_path = true;
    return verdict;
}

std::vector<std::size_t> gap_set(const AuxGraph& g, const DirectedEdge& edge) {
    const auto& family = edge.family == Direction::Ccw ? g.edges_a : g.edges_b;
    if (std::find(family.begin(), family.end(), edge) == family.end())
        throw std::invalid_argument("edge " + std::to_string(edge.tail) + "->" +
                                    std::to_string(edge.head) + " is not in the graph");
    std::vector<std::size_t> out;
    for (std::size_t v = (edge.tail + 1) % g.size; v != edge.head; v = (v + 1) % g.size)
        out.push_back(v);
    return out;
}

std::string to_dot(const AuxGraph& g) {
    std::ostringstream os;
    os << "digraph \"G(" << g.signs.str() << ")\" {\n";
    os << "  node [shape=circle];\n";
    for (std::size_t v = 0; v < g.size; ++v) {
        const char label = g.signs.size() == g.size ? to_char(g.signs[v]) : '?';
        os << "  " << v << " [label=\"" << label << "\"];\n";
    }
    for (const DirectedEdge& e : g.edges_a)
        os << "  " << e.tail << " -> " << e.head << " [style=solid, label=\"A\"];\n";
    for (const DirectedEdge& e : g.edges_b)
        os << "  " << e.tail << " -> " << e.head << " [style=dashed, label=\"B\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace pretzel
