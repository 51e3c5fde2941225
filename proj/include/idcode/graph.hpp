#pragma once

#include <algorithm>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "idcode/detail/tokens.hpp"
#include "idcode/errors.hpp"
#include "idcode/vertex_set.hpp"

namespace idcode {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph with bitset adjacency. Vertex ids are 0-based.
class Graph {
public:
    /// Builds a graph from an edge list. Self-loops are rejected; repeated edges collapse.
    Graph(std::size_t vertex_count, const std::vector<Edge>& edges) : adjacency_(vertex_count, VertexSet(vertex_count)) {
        if (vertex_count == 0) throw InvalidOrder("a graph needs at least one vertex");
        for (auto [u, v] : edges) {
            if (u >= vertex_count || v >= vertex_count) throw std::out_of_range("edge endpoint outside the graph");
            if (u == v) throw std::invalid_argument("self-loops are not allowed");
            adjacency_[u].insert(v);
            adjacency_[v].insert(u);
        }
    }

    /// Builds a graph directly from symmetric loop-free adjacency rows.
    explicit Graph(std::vector<VertexSet> adjacency) : adjacency_(std::move(adjacency)) {
        if (adjacency_.empty()) throw InvalidOrder("a graph needs at least one vertex");
        for (Vertex v = 0; v < adjacency_.size(); ++v) {
            if (adjacency_[v].universe() != adjacency_.size())
                throw std::invalid_argument("adjacency row has the wrong universe");
            if (adjacency_[v].contains(v)) throw std::invalid_argument("self-loops are not allowed");
            adjacency_[v].for_each([&](Vertex u) {
                if (!adjacency_[u].contains(v)) throw std::invalid_argument("adjacency is not symmetric");
            });
        }
    }

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }

    bool adjacent(Vertex u, Vertex v) const { return adjacency_.at(u).contains(v); }

    /// N(v)
    const VertexSet& neighborhood(Vertex v) const { return adjacency_.at(v); }

    /// N[v] = N(v) + v
    VertexSet closed_neighborhood(Vertex v) const {
        VertexSet s = adjacency_.at(v);
        s.insert(v);
        return s;
    }

    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

    std::size_t edge_count() const noexcept {
        std::size_t total = 0;
        for (const auto& row : adjacency_) total += row.size();
        return total / 2;
    }

    /// Edges with u < v, in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (Vertex u = 0; u < adjacency_.size(); ++u)
            adjacency_[u].for_each([&](Vertex v) {
                if (u < v) out.emplace_back(u, v);
            });
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

private:
    std::vector<VertexSet> adjacency_;
};

inline Graph make_complete(std::size_t k) {
    if (k == 0) throw InvalidOrder("complete graph order must be positive");
    std::vector<VertexSet> rows;
    rows.reserve(k);
    for (Vertex v = 0; v < k; ++v) {
        VertexSet row = VertexSet::full(k);
        row.erase(v);
        rows.push_back(std::move(row));
    }
    return Graph(std::move(rows));
}

/// Direct (tensor) product; vertex (a, b) gets id a * |V(g2)| + b.
inline Graph direct_product(const Graph& g1, const Graph& g2) {
    const std::size_t n1 = g1.vertex_count();
    const std::size_t n2 = g2.vertex_count();
    std::vector<VertexSet> rows(n1 * n2, VertexSet(n1 * n2));
    for (Vertex a = 0; a < n1; ++a)
        for (Vertex b = 0; b < n2; ++b) {
            auto& row = rows[a * n2 + b];
            g1.neighborhood(a).for_each([&](Vertex c) {
                g2.neighborhood(b).for_each([&](Vertex d) { row.insert(static_cast<Vertex>(c * n2 + d)); });
            });
        }
    return Graph(std::move(rows));
}

/// All unordered pairs {u, v}, u < v, with N[u] = N[v].
inline std::vector<Edge> find_twins(const Graph& g) {
    std::vector<VertexSet> closed;
    closed.reserve(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) closed.push_back(g.closed_neighborhood(v));
    // Twins are always adjacent, so only neighbors need comparing.
    std::vector<Edge> out;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        g.neighborhood(u).for_each([&](Vertex v) {
            if (u < v && closed[u] == closed[v]) out.emplace_back(u, v);
        });
    return out;
}

// Text format: `graph <V>` then `edge <u> <v>` lines, ids 1-based, `#` comments.

inline Graph read_graph(std::istream& in) {
    std::optional<std::size_t> count;
    std::vector<Edge> edges;
    std::size_t last_line = 0;
    detail::for_each_record(in, [&](const std::vector<detail::Token>& toks, std::size_t line_no) {
        last_line = line_no;
        if (!count) {
            if (toks[0].text != "graph") throw ParseError(line_no, toks[0].column, "expected 'graph <V>' header");
            if (toks.size() != 2) throw ParseError(line_no, toks[0].column, "header takes exactly one vertex count");
            const long long v = detail::parse_integer(toks[1], line_no);
            if (v <= 0) throw ParseError(line_no, toks[1].column, "vertex count must be positive");
            count = static_cast<std::size_t>(v);
            return;
        }
        if (toks[0].text != "edge") throw ParseError(line_no, toks[0].column, "expected 'edge <u> <v>'");
        if (toks.size() != 3) throw ParseError(line_no, toks[0].column, "edge takes exactly two endpoints");
        Vertex ends[2];
        for (int k = 0; k < 2; ++k) {
            const long long id = detail::parse_integer(toks[k + 1], line_no);
            if (id < 1 || static_cast<std::size_t>(id) > *count)
                throw ParseError(line_no, toks[k + 1].column, "vertex id out of range 1.." + std::to_string(*count));
            ends[k] = static_cast<Vertex>(id - 1);
        }
        if (ends[0] == ends[1]) throw ParseError(line_no, toks[2].column, "self-loop");
        edges.emplace_back(ends[0], ends[1]);
    });
    if (!count) throw ParseError(last_line + 1, 1, "missing 'graph <V>' header");
    return Graph(*count, edges);
}

inline void write_graph(std::ostream& out, const Graph& g) {
    out << "graph " << g.vertex_count() << '\n';
    for (auto [u, v] : g.edges()) out << "edge " << u + 1 << ' ' << v + 1 << '\n';
}

}  // namespace idcode
