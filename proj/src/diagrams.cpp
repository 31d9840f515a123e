#include "strangedual/diagrams.hpp"

#include <stdexcept>

namespace strangedual::diagrams {

MarkedGraph::MarkedGraph(std::vector<std::string> labels) : labels_(std::move(labels)) {}

void MarkedGraph::add_edge(std::size_t i, std::size_t j, EdgeKind kind) {
    if (i == j) throw std::invalid_argument("MarkedGraph: self-loop");
    if (i > j) std::swap(i, j);
    if (j >= n()) throw std::out_of_range("MarkedGraph: vertex out of range");
    for (const auto& e : edges_)
        if (e.i == i && e.j == j)
            throw std::invalid_argument("MarkedGraph: duplicate edge");
    edges_.push_back({i, j, kind});
}

MarkedGraph that_diagram(int g1, int g2, int g3) {
    if (g1 < 2 || g2 < 2 || g3 < 2)
        throw std::domain_error("that_diagram: every arm order must be >= 2");
    const std::size_t mu = static_cast<std::size_t>(g1 + g2 + g3);

    std::vector<std::string> labels(mu);
    for (std::size_t v = 0; v < mu; ++v) labels[v] = "a" + std::to_string(v + 1);
    MarkedGraph g(std::move(labels));

    // 1-based vertex arithmetic below, matching the a_k labels.
    auto E = [&g](std::size_t i, std::size_t j) { g.add_edge(i - 1, j - 1, EdgeKind::Solid); };

    // Arms chained away from the hub a1.
    for (int v = 2; v <= g1; ++v) E(v == 2 ? 1 : v - 1, v);
    for (int v = g1 + 1; v <= g1 + g2 - 1; ++v) E(v == g1 + 1 ? 1 : v - 1, v);
    for (int v = g1 + g2; v <= g1 + g2 + g3 - 2; ++v) E(v == g1 + g2 ? 1 : v - 1, v);

    // Second hub a_{mu-1}: joined to each hub-adjacent arm vertex and the pendant.
    E(2, mu - 1);
    E(g1 + 1, mu - 1);
    E(g1 + g2, mu - 1);
    E(mu - 1, mu);

    g.add_edge(0, mu - 2, EdgeKind::DoubleDotted);  // a1 -- a_{mu-1}
    return g;
}

Quiver lp_quiver(int p1, int p2, int p3) {
    if (p1 < 2 || p2 < 2 || p3 < 2)
        throw std::domain_error("lp_quiver: every weight must be >= 2");
    const int p[3] = {p1, p2, p3};

    Quiver q;
    q.labels.emplace_back("O");
    std::size_t chain_start[3];
    for (int i = 0; i < 3; ++i) {
        chain_start[i] = q.labels.size();
        for (int j = 1; j <= p[i] - 1; ++j)
            q.labels.push_back("U" + std::to_string(i + 1) + "_" + std::to_string(j));
    }
    q.labels.emplace_back("W");
    q.o_vertex = 0;
    q.w_vertex = q.labels.size() - 1;

    for (int i = 0; i < 3; ++i) {
        const std::size_t first = chain_start[i];
        const std::size_t last = first + static_cast<std::size_t>(p[i]) - 2;
        for (std::size_t v = first; v < last; ++v) q.solid_arrows.emplace_back(v, v + 1);
        q.solid_arrows.emplace_back(q.o_vertex, last);
        q.solid_arrows.emplace_back(last, q.w_vertex);
    }
    q.relation_arrows.emplace_back(q.o_vertex, q.w_vertex);
    q.relation_arrows.emplace_back(q.o_vertex, q.w_vertex);
    return q;
}

MarkedGraph divisor_graph(int d1, int d2, int d3) {
    if (d1 < 2 || d2 < 2 || d3 < 2)
        throw std::domain_error("divisor_graph: every order must be >= 2");
    const int d[3] = {d1, d2, d3};

    std::vector<std::string> labels;
    labels.emplace_back("E_inf");
    for (int i = 0; i < 3; ++i)
        for (int j = d[i] - 1; j >= 1; --j)
            labels.push_back("E" + std::to_string(i + 1) + "_" + std::to_string(j));

    MarkedGraph g(std::move(labels));
    std::size_t idx = 1;
    for (int i = 0; i < 3; ++i) {
        g.add_edge(0, idx, EdgeKind::Solid);  // hub to E_{d_i-1}^i
        for (int j = 1; j < d[i] - 1; ++j, ++idx) g.add_edge(idx, idx + 1, EdgeKind::Solid);
        ++idx;
    }
    return g;
}

IntMat gram_from_marked_graph(const MarkedGraph& g) {
    IntMat m(g.n(), g.n());
    for (std::size_t i = 0; i < g.n(); ++i) m(i, i) = -2;
    for (const auto& e : g.edges()) {
        const int v = e.kind == EdgeKind::Solid ? 1 : -2;
        m(e.i, e.j) = v;
        m(e.j, e.i) = v;
    }
    return m;
}

nlohmann::ordered_json matrix_json(const IntMat& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_long(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace strangedual::diagrams
