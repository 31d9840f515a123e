#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "strangedual/intmat.hpp"

#include "json.hpp"

namespace strangedual::diagrams {

enum class EdgeKind { Solid, DoubleDotted };

struct MarkedEdge {
    std::size_t i, j;  // i < j
    EdgeKind kind;
    bool operator==(const MarkedEdge&) const = default;
};

// Undirected graph with Solid / DoubleDotted edge marks; no self-loops, at
// most one edge per vertex pair.  Vertices are 0-based.
class MarkedGraph {
public:
    explicit MarkedGraph(std::vector<std::string> labels);

    std::size_t n() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<MarkedEdge>& edges() const { return edges_; }

    void add_edge(std::size_t i, std::size_t j, EdgeKind kind);

private:
    std::vector<std::string> labels_;
    std::vector<MarkedEdge> edges_;
};

// Quiver of the full strong exceptional collection on the weighted projective
// line with weights (p1, p2, p3): three arrow chains feeding W, the source O,
// and two relation arrows O -> W.  Arrows are (source, target) pairs.
struct Quiver {
    std::vector<std::string> labels;
    std::vector<std::pair<std::size_t, std::size_t>> solid_arrows;
    std::vector<std::pair<std::size_t, std::size_t>> relation_arrows;
    std::size_t o_vertex = 0;
    std::size_t w_vertex = 0;

    std::size_t n() const { return labels.size(); }
};

// Star-shaped diagram with hub a1, three arms, a second hub joined to the
// hub-adjacent vertex of each arm and to a pendant vertex, plus one
// double-dotted edge between the two hubs.  Vertex k (0-based) carries label
// a(k+1); the numbering fixes the distinguished-basis order.  Requires each
// gamma_i >= 2.
MarkedGraph that_diagram(int g1, int g2, int g3);

// The exceptional-collection quiver for weights (p1, p2, p3), each >= 2.
// Vertex order: O, U1^(1..p1-1), U2^(1..p2-1), U3^(1..p3-1), W.
Quiver lp_quiver(int p1, int p2, int p3);

// Configuration of (-2)-curves at infinity: a star of three chains, all
// Solid.  Vertex order: E_inf, then each arm from the hub outwards
// (E_{d_i-1}^i first, E_1^i last).  Requires each delta_i >= 2.
MarkedGraph divisor_graph(int d1, int d2, int d3);

// Gram matrix of a marked graph: diagonal -2, +1 for a Solid edge, -2 for a
// DoubleDotted edge, 0 otherwise.
IntMat gram_from_marked_graph(const MarkedGraph& g);

// Matrix as nested JSON arrays.
nlohmann::ordered_json matrix_json(const IntMat& m);

}  // namespace strangedual::diagrams
