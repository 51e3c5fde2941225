#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "idcode/errors.hpp"
#include "idcode/graph.hpp"

namespace idcode {

/// 1-based position (i, j) in K_n x K_m: column i, row j.
struct Coord {
    int col = 0;
    int row = 0;
    friend auto operator<=>(const Coord&, const Coord&) = default;
};

struct ProductShape {
    int n = 0;  // order of the first factor (number of columns)
    int m = 0;  // order of the second factor (number of rows)
    friend bool operator==(const ProductShape&, const ProductShape&) = default;
};

/// K_n x K_m with row/column structure. Vertex (i, j) has id (i-1)*m + (j-1).
///
/// Adjacency is answered from coordinates; the explicit Graph is materialized
/// on first request and shared between copies.
class ProductGraph {
public:
    ProductGraph(int n, int m) : shape_{n, m}, cache_(std::make_shared<Cache>()) {
        if (n < 1 || m < 1) throw InvalidOrder("clique orders must be positive");
    }

    int n() const noexcept { return shape_.n; }
    int m() const noexcept { return shape_.m; }
    ProductShape shape() const noexcept { return shape_; }
    std::size_t vertex_count() const noexcept {
        return static_cast<std::size_t>(shape_.n) * static_cast<std::size_t>(shape_.m);
    }

    Vertex vertex(Coord c) const {
        if (c.col < 1 || c.col > shape_.n || c.row < 1 || c.row > shape_.m)
            throw std::out_of_range("coordinate outside K_n x K_m");
        return static_cast<Vertex>((c.col - 1) * shape_.m + (c.row - 1));
    }
    Vertex vertex(int i, int j) const { return vertex(Coord{i, j}); }

    Coord coord(Vertex v) const {
        if (v >= vertex_count()) throw std::out_of_range("vertex id outside K_n x K_m");
        return {static_cast<int>(v / shape_.m) + 1, static_cast<int>(v % shape_.m) + 1};
    }

    bool adjacent(Coord a, Coord b) const noexcept { return a.col != b.col && a.row != b.row; }
    bool adjacent(Vertex u, Vertex v) const { return adjacent(coord(u), coord(v)); }

    /// C_i, ascending ids.
    std::vector<Vertex> column(int i) const {
        std::vector<Vertex> out;
        for (int j = 1; j <= shape_.m; ++j) out.push_back(vertex(i, j));
        return out;
    }
    /// R_j, ascending ids.
    std::vector<Vertex> row(int j) const {
        std::vector<Vertex> out;
        for (int i = 1; i <= shape_.n; ++i) out.push_back(vertex(i, j));
        return out;
    }

    /// The image of v under (i, j) -> (j, i) in K_m x K_n.
    Vertex transpose(Vertex v) const {
        const Coord c = coord(v);
        return static_cast<Vertex>((c.row - 1) * shape_.n + (c.col - 1));
    }

    const Graph& graph() const {
        std::call_once(cache_->once, [&] {
            std::vector<VertexSet> rows(vertex_count(), VertexSet(vertex_count()));
            for (int i = 1; i <= shape_.n; ++i)
                for (int j = 1; j <= shape_.m; ++j) {
                    auto& r = rows[vertex(i, j)];
                    for (int k = 1; k <= shape_.n; ++k)
                        if (k != i)
                            for (int l = 1; l <= shape_.m; ++l)
                                if (l != j) r.insert(vertex(k, l));
                }
            cache_->graph = std::make_unique<Graph>(std::move(rows));
        });
        return *cache_->graph;
    }

private:
    struct Cache {
        std::once_flag once;
        std::unique_ptr<Graph> graph;
    };

    ProductShape shape_;
    std::shared_ptr<Cache> cache_;
};

inline ProductGraph make_clique_product(int n, int m) { return ProductGraph(n, m); }

}  // namespace idcode
