#pragma once

#include <algorithm>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "idcode/detail/tokens.hpp"
#include "idcode/errors.hpp"
#include "idcode/graph.hpp"
#include "idcode/product_graph.hpp"
#include "idcode/vertex_set.hpp"

namespace idcode {

/// A candidate codeword set over the vertices of a graph or clique product.
class CodeSet {
public:
    /// An empty code over vertex ids [0, universe) of an unspecified graph.
    explicit CodeSet(std::size_t universe) : members_(universe) {}
    explicit CodeSet(const Graph& g) : members_(g.vertex_count()) {}
    explicit CodeSet(const ProductGraph& p) : members_(p.vertex_count()), shape_(p.shape()) {}

    CodeSet(const Graph& g, std::span<const Vertex> vertices) : CodeSet(g) {
        for (Vertex v : vertices) insert(v);
    }
    CodeSet(const ProductGraph& p, std::span<const Vertex> vertices) : CodeSet(p) {
        for (Vertex v : vertices) insert(v);
    }
    CodeSet(const ProductGraph& p, std::span<const Coord> coords) : CodeSet(p) {
        for (Coord c : coords) members_.insert(p.vertex(c));
    }
    CodeSet(const ProductGraph& p, std::initializer_list<Coord> coords)
        : CodeSet(p, std::span<const Coord>(coords.begin(), coords.size())) {}

    static CodeSet all(const Graph& g) {
        CodeSet c(g);
        c.members_ = VertexSet::full(g.vertex_count());
        return c;
    }
    static CodeSet all(const ProductGraph& p) {
        CodeSet c(p);
        c.members_ = VertexSet::full(p.vertex_count());
        return c;
    }

    std::size_t universe() const noexcept { return members_.universe(); }
    const std::optional<ProductShape>& shape() const noexcept { return shape_; }
    const VertexSet& members() const noexcept { return members_; }

    void insert(Vertex v) { members_.insert(v); }
    void erase(Vertex v) { members_.erase(v); }
    bool contains(Vertex v) const noexcept { return members_.contains(v); }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    std::vector<Vertex> vertices() const { return members_.to_vector(); }

    /// Codewords as (i, j) pairs, sorted by column then row. Product codes only.
    std::vector<Coord> coords() const {
        const ProductShape s = require_shape();
        std::vector<Coord> out;
        members_.for_each([&](Vertex v) {
            out.push_back({static_cast<int>(v / s.m) + 1, static_cast<int>(v % s.m) + 1});
        });
        return out;
    }

    /// The same codewords seen in K_m x K_n.
    CodeSet transposed() const {
        const ProductShape s = require_shape();
        const ProductGraph t(s.m, s.n);
        CodeSet out(t);
        for (Coord c : coords()) out.members_.insert(t.vertex(c.row, c.col));
        return out;
    }

    friend bool operator==(const CodeSet& a, const CodeSet& b) {
        return a.members_ == b.members_ && a.shape_ == b.shape_;
    }

private:
    ProductShape require_shape() const {
        if (!shape_) throw OwnershipMismatch("code set is not attached to a clique product");
        return *shape_;
    }

    VertexSet members_;
    std::optional<ProductShape> shape_;
};

inline void check_owner(const Graph& g, const CodeSet& c) {
    if (c.universe() != g.vertex_count()) throw OwnershipMismatch("code set belongs to a different graph");
}

inline void check_owner(const ProductGraph& p, const CodeSet& c) {
    if (c.universe() != p.vertex_count() || (c.shape() && *c.shape() != p.shape()))
        throw OwnershipMismatch("code set belongs to a different product");
}

// Code files: one codeword per line, `i j` for products or a single vertex id
// for plain graphs, 1-based, `#` comments allowed.

inline CodeSet read_code(std::istream& in, const ProductGraph& p) {
    CodeSet code(p);
    detail::for_each_record(in, [&](const std::vector<detail::Token>& toks, std::size_t line_no) {
        if (toks.size() != 2) throw ParseError(line_no, toks[0].column, "expected a codeword 'i j'");
        const long long i = detail::parse_integer(toks[0], line_no);
        const long long j = detail::parse_integer(toks[1], line_no);
        if (i < 1 || i > p.n()) throw ParseError(line_no, toks[0].column, "column out of range 1.." + std::to_string(p.n()));
        if (j < 1 || j > p.m()) throw ParseError(line_no, toks[1].column, "row out of range 1.." + std::to_string(p.m()));
        code.insert(p.vertex(static_cast<int>(i), static_cast<int>(j)));
    });
    return code;
}

inline CodeSet read_code(std::istream& in, const Graph& g) {
    CodeSet code(g);
    detail::for_each_record(in, [&](const std::vector<detail::Token>& toks, std::size_t line_no) {
        if (toks.size() != 1) throw ParseError(line_no, toks[0].column, "expected a single vertex id");
        const long long v = detail::parse_integer(toks[0], line_no);
        if (v < 1 || static_cast<std::size_t>(v) > g.vertex_count())
            throw ParseError(line_no, toks[0].column, "vertex id out of range 1.." + std::to_string(g.vertex_count()));
        code.insert(static_cast<Vertex>(v - 1));
    });
    return code;
}

inline void write_code(std::ostream& out, const CodeSet& code) {
    if (code.shape()) {
        for (Coord c : code.coords()) out << c.col << ' ' << c.row << '\n';
    } else {
        code.members().for_each([&](Vertex v) { out << v + 1 << '\n'; });
    }
}

}  // namespace idcode
