#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pretzel/pairing.hpp"
#include "pretzel/sign_seq.hpp"

namespace pretzel {

/// A edges run minus -> plus, B edges run plus -> minus.
struct DirectedEdge {
    std::size_t tail = 0;
    std::size_t head = 0;
    Direction family = Direction::Ccw;

    friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
};

/// Twist boxes as vertices, joined by the A and B band pairings.
///
/// Fields are public so tests can assemble graphs that no sign sequence
/// produces; build_graph is the only constructor that guarantees the
/// orientation and degree invariants.
struct AuxGraph {
    SignSeq signs;
    std::size_t size = 0;
    std::vector<DirectedEdge> edges_a;
    std::vector<DirectedEdge> edges_b;

    std::size_t edge_count() const noexcept { return edges_a.size() + edges_b.size(); }
};

AuxGraph build_graph(const SignSeq& seq);
/// From matchings already computed by pair_iterative.
AuxGraph build_graph(const SignSeq& seq, const BandMatching& a, const BandMatching& b);

/// Outcome of the path check. Exactly one witness is filled: `path` when the
/// graph is a path, otherwise `cycle`, `branch_vertex`, or `components`.
struct PathVerdict {
    bool is_path = false;
    std::vector<std::size_t> path;
    std::vector<std::size_t> cycle;  // closed walk, first vertex not repeated
    std::vector<std::vector<std::size_t>> components;
    std::size_t branch_vertex = 0;
    std::string reason;
};

/// Connected, acyclic and max degree 2. Uses the count argument: a connected
/// graph on V vertices with V-1 edges is a tree.
PathVerdict is_path(const AuxGraph& g);

/// Vertices strictly between the edge's endpoints, walking counterclockwise
/// from its tail. Throws std::invalid_argument if the edge is not in g.
std::vector<std::size_t> gap_set(const AuxGraph& g, const DirectedEdge& edge);

/// Graphviz rendering: vertex labels are the signs, A edges solid, B edges
/// dashed.
std::string to_dot(const AuxGraph& g);

}  // namespace pretzel
