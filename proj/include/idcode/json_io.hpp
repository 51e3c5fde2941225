#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "idcode/code_set.hpp"
#include "idcode/constructions.hpp"
#include "idcode/formulas.hpp"
#include "idcode/solver.hpp"
#include "idcode/verify.hpp"

namespace idcode {

using Json = nlohmann::json;

/// Vertex encoding on the wire: `[i, j]` for products, a 1-based id otherwise.
class VertexCodec {
public:
    explicit VertexCodec(std::size_t vertex_count) : count_(vertex_count) {}
    explicit VertexCodec(const Graph& g) : count_(g.vertex_count()) {}
    explicit VertexCodec(const ProductGraph& p) : count_(p.vertex_count()), shape_(p.shape()) {}

    Json encode(Vertex v) const {
        if (shape_) return Json::array({static_cast<int>(v) / shape_->m + 1, static_cast<int>(v) % shape_->m + 1});
        return static_cast<long long>(v) + 1;
    }
    Vertex decode(const Json& j) const {
        if (shape_) {
            const int i = j.at(0).get<int>();
            const int r = j.at(1).get<int>();
            if (i < 1 || i > shape_->n || r < 1 || r > shape_->m) throw std::out_of_range("coordinate out of range");
            return static_cast<Vertex>((i - 1) * shape_->m + (r - 1));
        }
        const auto id = j.get<long long>();
        if (id < 1 || static_cast<std::size_t>(id) > count_) throw std::out_of_range("vertex id out of range");
        return static_cast<Vertex>(id - 1);
    }
    template <class Range>
    Json encode_all(const Range& vs) const {
        Json out = Json::array();
        for (Vertex v : vs) out.push_back(encode(v));
        return out;
    }
    std::vector<Vertex> decode_all(const Json& j) const {
        std::vector<Vertex> out;
        for (const auto& e : j) out.push_back(decode(e));
        return out;
    }

    Json owner() const {
        if (shape_) return {{"n", shape_->n}, {"m", shape_->m}};
        return {{"vertices", count_}};
    }

private:
    std::size_t count_;
    std::optional<ProductShape> shape_;
};

// --- GammaResult -----------------------------------------------------------

inline Json to_json(const GammaResult& g) {
    return {
        {"n", g.n},
        {"m", g.m},
        {"swapped", g.swapped},
        {"value", g.value ? Json(*g.value) : Json(nullptr)},
        {"regime", std::string(regime_name(g.regime))},
        {"rule", std::string(regime_rule(g.regime))},
        {"provenance", std::string(provenance_name(g.provenance))},
    };
}

inline GammaResult gamma_from_json(const Json& j) {
    GammaResult g;
    g.n = j.at("n").get<int>();
    g.m = j.at("m").get<int>();
    g.swapped = j.at("swapped").get<bool>();
    if (!j.at("value").is_null()) g.value = j.at("value").get<int>();
    const auto r = regime_from_name(j.at("regime").get<std::string>());
    const auto p = provenance_from_name(j.at("provenance").get<std::string>());
    if (!r || !p) throw std::invalid_argument("unknown regime or provenance");
    g.regime = *r;
    g.provenance = *p;
    return g;
}

// --- CodeStats / VerificationReport -----------------------------------------

inline Json to_json(const CodeStats& s, const VertexCodec& codec) {
    return {
        {"cs", s.cs},
        {"rs", s.rs},
        {"x", s.x},
        {"y", s.y},
        {"p", s.p},
        {"q", s.q},
        {"row_isolated", codec.encode_all(s.row_isolated)},
        {"column_isolated", codec.encode_all(s.column_isolated)},
        {"isolated", codec.encode_all(s.isolated)},
        {"neither", codec.encode_all(s.neither)},
    };
}

inline CodeStats stats_from_json(const Json& j, const VertexCodec& codec) {
    CodeStats s;
    s.cs = j.at("cs").get<int>();
    s.rs = j.at("rs").get<int>();
    s.x = j.at("x").get<int>();
    s.y = j.at("y").get<int>();
    s.p = j.at("p").get<int>();
    s.q = j.at("q").get<int>();
    s.row_isolated = codec.decode_all(j.at("row_isolated"));
    s.column_isolated = codec.decode_all(j.at("column_isolated"));
    s.isolated = codec.decode_all(j.at("isolated"));
    s.neither = codec.decode_all(j.at("neither"));
    return s;
}

inline Json to_json(const VerificationReport& r, const VertexCodec& codec) {
    Json unseparated = Json::array();
    for (const auto& pr : r.unseparated)
        unseparated.push_back({{"u", codec.encode(pr.u)}, {"v", codec.encode(pr.v)}, {"signature", codec.encode_all(pr.signature)}});
    Json signatures = Json::array();
    for (const auto& [sig, members] : r.signature_index)
        signatures.push_back({{"signature", codec.encode_all(sig)}, {"vertices", codec.encode_all(members)}});
    return {
        {"dominating", r.dominating},
        {"separating", r.separating},
        {"identifying", r.is_identifying_code()},
        {"undominated", codec.encode_all(r.undominated)},
        {"unseparated", std::move(unseparated)},
        {"stats", r.stats ? to_json(*r.stats, codec) : Json(nullptr)},
        {"signatures", std::move(signatures)},
    };
}

inline VerificationReport report_from_json(const Json& j, const VertexCodec& codec) {
    VerificationReport r;
    r.dominating = j.at("dominating").get<bool>();
    r.separating = j.at("separating").get<bool>();
    r.undominated = codec.decode_all(j.at("undominated"));
    for (const auto& e : j.at("unseparated"))
        r.unseparated.push_back({codec.decode(e.at("u")), codec.decode(e.at("v")), codec.decode_all(e.at("signature"))});
    if (!j.at("stats").is_null()) r.stats = stats_from_json(j.at("stats"), codec);
    if (j.contains("signatures"))
        for (const auto& e : j.at("signatures"))
            r.signature_index.emplace(codec.decode_all(e.at("signature")), codec.decode_all(e.at("vertices")));
    return r;
}

// --- SolveResult -----------------------------------------------------------

inline std::string_view status_name(SolveStatus s) {
    switch (s) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::infeasible_twins: return "infeasible-twins";
    case SolveStatus::timeout_with_bounds: return "timeout-with-bounds";
    }
    return "?";
}

inline SolveStatus status_from_name(std::string_view s) {
    for (SolveStatus st : {SolveStatus::optimal, SolveStatus::infeasible_twins, SolveStatus::timeout_with_bounds})
        if (status_name(st) == s) return st;
    throw std::invalid_argument("unknown solve status");
}

inline Json to_json(const SolveResult& r, const VertexCodec& codec) {
    return {
        {"status", std::string(status_name(r.status))},
        {"value", r.value ? Json(*r.value) : Json(nullptr)},
        {"witness", r.witness ? codec.encode_all(r.witness->vertices()) : Json(nullptr)},
        {"proven_lower", r.proven_lower},
        {"nodes", r.nodes_explored},
        {"seconds", r.wall_time},
        {"graph", codec.owner()},
    };
}

inline SolveResult solve_result_from_json(const Json& j) {
    SolveResult r;
    r.status = status_from_name(j.at("status").get<std::string>());
    if (!j.at("value").is_null()) r.value = j.at("value").get<int>();
    r.proven_lower = j.at("proven_lower").get<int>();
    r.nodes_explored = j.at("nodes").get<std::uint64_t>();
    r.wall_time = j.at("seconds").get<double>();
    if (!j.at("witness").is_null()) {
        const Json& owner = j.at("graph");
        if (owner.contains("n")) {
            const ProductGraph p(owner.at("n").get<int>(), owner.at("m").get<int>());
            const auto vs = VertexCodec(p).decode_all(j.at("witness"));
            r.witness = CodeSet(p, std::span<const Vertex>(vs));
        } else {
            const auto count = owner.at("vertices").get<std::size_t>();
            const auto vs = VertexCodec(count).decode_all(j.at("witness"));
            CodeSet code(count);
            for (Vertex v : vs) code.insert(v);
            r.witness = std::move(code);
        }
    }
    return r;
}

inline bool operator==(const SolveResult& a, const SolveResult& b) {
    return a.status == b.status && a.value == b.value && a.witness == b.witness && a.proven_lower == b.proven_lower &&
           a.nodes_explored == b.nodes_explored && a.wall_time == b.wall_time;
}

// --- Construction ----------------------------------------------------------

inline Json to_json(const Construction& c, int n, int m) {
    return {
        {"n", n},
        {"m", m},
        {"family", std::string(family_name(c.params.family))},
        {"a", c.params.a},
        {"b", c.params.b},
        {"transposed", c.transposed},
        {"size", c.code.size()},
        {"code", VertexCodec(ProductGraph(n, m)).encode_all(c.code.vertices())},
    };
}

}  // namespace idcode
