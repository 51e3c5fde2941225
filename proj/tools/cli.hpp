#pragma once

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "idcode/idcode.hpp"
#include "idcode/json_io.hpp"

namespace idcode::cli {

enum Exit : int { ok = 0, failed = 1, usage = 2, timeout = 3 };

class UsageError : public Error {
public:
    using Error::Error;
};

// Full signature bookkeeping is cheap up to this many vertices; larger
// products are checked from row/column counts only.
inline constexpr std::size_t kFullReportLimit = 4096;

namespace detail {

inline std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    return in;
}

template <class Read>
auto read_file(const std::string& path, Read&& read) {
    auto in = open_input(path);
    try {
        return read(in);
    } catch (const ParseError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

inline std::string coord_text(const ProductGraph& p, Vertex v) {
    const Coord c = p.coord(v);
    return "(" + std::to_string(c.col) + "," + std::to_string(c.row) + ")";
}

/// Space-separated vertices, at most `limit` shown.
template <class Name>
std::string list_text(const std::vector<Vertex>& vs, Name&& name, std::size_t limit = 24) {
    if (vs.empty()) return "-";
    std::string s;
    for (std::size_t k = 0; k < vs.size() && k < limit; ++k) {
        if (k) s += ' ';
        s += name(vs[k]);
    }
    if (vs.size() > limit) s += " ... (" + std::to_string(vs.size() - limit) + " more)";
    return s;
}

inline int default_threads() {
    const char* env = std::getenv("IDCODE_THREADS");
    if (!env || !*env) return 1;
    try {
        std::size_t used = 0;
        const int t = std::stoi(env, &used);
        if (used == std::string(env).size() && t >= 1) return t;
    } catch (const std::exception&) {
    }
    throw UsageError("IDCODE_THREADS must be a positive integer, got '" + std::string(env) + "'");
}

inline void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace detail

// --- subcommands -------------------------------------------------------------

inline int cmd_gamma(int n, int m, bool json, std::ostream& out) {
    const GammaResult g = gamma_id(n, m);
    if (json) {
        detail::print_json(out, to_json(g));
        return ok;
    }
    out << "gamma_ID(K" << n << " x K" << m << ") = ";
    if (g.value) out << *g.value << '\n';
    else out << "undefined\n";
    out << "regime: " << regime_name(g.regime) << '\n';
    out << "rule: " << regime_rule(g.regime) << '\n';
    out << "provenance: " << provenance_name(g.provenance) << '\n';
    if (g.swapped) out << "normalized to K" << g.n << " x K" << g.m << '\n';
    return ok;
}

inline int cmd_construct(int n, int m, const std::string& out_path, bool json, std::ostream& out, std::ostream& err) {
    Construction c = [&] {
        try {
            return construct_code(n, m);
        } catch (const NoConstruction& e) {
            throw UsageError(e.what());
        }
    }();
    const ProductGraph p(n, m);
    const bool identifying = is_identifying_code(p, c.code, ReportDetail::verdict).is_identifying_code();
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw UsageError("cannot write '" + out_path + "'");
        write_code(f, c.code);
    }
    if (json) {
        Json j = to_json(c, n, m);
        j["identifying"] = identifying;
        detail::print_json(out, j);
    } else {
        out << "# K" << n << " x K" << m << ": family " << family_name(c.params.family);
        if (c.params.a || c.params.b) out << " (a=" << c.params.a << ", b=" << c.params.b << ")";
        if (c.transposed) out << ", transposed";
        out << ", size " << c.code.size() << ", identifying: " << detail::yes_no(identifying) << '\n';
        if (out_path.empty()) write_code(out, c.code);
        else out << "# written to " << out_path << '\n';
    }
    if (!identifying) err << "construction failed verification\n";
    return identifying ? ok : failed;
}

inline void print_report(std::ostream& out, const VerificationReport& r, const auto& name) {
    out << "dominating: " << detail::yes_no(r.dominating) << '\n';
    out << "separating: " << detail::yes_no(r.separating) << '\n';
    out << "identifying: " << detail::yes_no(r.is_identifying_code()) << '\n';
    if (!r.undominated.empty()) out << "undominated: " << detail::list_text(r.undominated, name) << '\n';
    if (!r.unseparated.empty()) {
        out << "unseparated pairs: " << r.unseparated.size() << '\n';
        for (std::size_t k = 0; k < r.unseparated.size() && k < 24; ++k) {
            const auto& u = r.unseparated[k];
            out << "  " << name(u.u) << " ~ " << name(u.v) << "  N[.] & C = {" << detail::list_text(u.signature, name)
                << "}\n";
        }
        if (r.unseparated.size() > 24) out << "  ...\n";
    }
}

inline int cmd_verify_product(int n, int m, const std::string& code_path, bool json, std::ostream& out) {
    const ProductGraph p(n, m);
    const CodeSet code = detail::read_file(code_path, [&](std::istream& in) { return read_code(in, p); });
    const auto detail_level = p.vertex_count() <= kFullReportLimit ? ReportDetail::full : ReportDetail::verdict;
    const VerificationReport r = is_identifying_code(p, code, detail_level);
    if (json) {
        Json j = to_json(r, VertexCodec(p));
        j["graph"] = VertexCodec(p).owner();
        j["size"] = code.size();
        detail::print_json(out, j);
    } else {
        const auto name = [&](Vertex v) { return detail::coord_text(p, v); };
        out << "K" << n << " x K" << m << ", " << code.size() << " codewords\n";
        print_report(out, r, name);
        if (r.stats) {
            const CodeStats& s = *r.stats;
            out << "cs=" << s.cs << " rs=" << s.rs << " x=" << s.x << " y=" << s.y << " p=" << s.p << " q=" << s.q
                << '\n';
            out << "isolated: " << detail::list_text(s.isolated, name) << '\n';
        }
    }
    return r.is_identifying_code() ? ok : failed;
}

inline int cmd_verify_graph(const std::string& graph_path, const std::string& code_path, bool json,
                            std::ostream& out) {
    const Graph g = detail::read_file(graph_path, [](std::istream& in) { return read_graph(in); });
    const CodeSet code = detail::read_file(code_path, [&](std::istream& in) { return read_code(in, g); });
    const VerificationReport r = is_identifying_code(g, code);
    if (json) {
        Json j = to_json(r, VertexCodec(g));
        j["graph"] = VertexCodec(g).owner();
        j["size"] = code.size();
        detail::print_json(out, j);
    } else {
        out << g.vertex_count() << " vertices, " << g.edge_count() << " edges, " << code.size() << " codewords\n";
        print_report(out, r, [](Vertex v) { return std::to_string(v + 1); });
    }
    return r.is_identifying_code() ? ok : failed;
}

inline int solve_exit(const SolveResult& r) {
    switch (r.status) {
    case SolveStatus::optimal: return ok;
    case SolveStatus::infeasible_twins: return failed;
    case SolveStatus::timeout_with_bounds: return timeout;
    }
    return failed;
}

inline void print_solve(std::ostream& out, const SolveResult& r, const auto& name) {
    out << "status: " << status_name(r.status) << '\n';
    out << "value: " << (r.value ? std::to_string(*r.value) : std::string("-")) << '\n';
    if (r.witness) out << "witness: " << detail::list_text(r.witness->vertices(), name, 1000) << '\n';
    out << "proven lower bound: " << r.proven_lower << '\n';
    out << "nodes: " << r.nodes_explored << '\n';
    out << "seconds: " << std::fixed << std::setprecision(3) << r.wall_time << '\n';
    out.unsetf(std::ios::floatfield);
}

inline int cmd_solve_product(int n, int m, const SolveOptions& opts, bool json, std::ostream& out) {
    const ProductGraph p(n, m);
    const SolveResult r = min_id_code_product(n, m, opts);
    if (json) detail::print_json(out, to_json(r, VertexCodec(p)));
    else print_solve(out, r, [&](Vertex v) { return detail::coord_text(p, v); });
    return solve_exit(r);
}

inline int cmd_solve_graph(const std::string& graph_path, const SolveOptions& opts, bool json, std::ostream& out) {
    const Graph g = detail::read_file(graph_path, [](std::istream& in) { return read_graph(in); });
    const SolveResult r = min_id_code(g, opts);
    if (json) detail::print_json(out, to_json(r, VertexCodec(g)));
    else print_solve(out, r, [](Vertex v) { return std::to_string(v + 1); });
    return solve_exit(r);
}

inline int cmd_table(const SolveOptions& opts, bool json, std::ostream& out) {
    bool all_match = true;
    bool any_timeout = false;
    Json rows = Json::array();
    if (!json) out << " n  m  stored  solved  match  seconds\n";
    for (const auto& e : kSmallTable) {
        const SolveResult r = min_id_code_product(e.n, e.m, opts);
        const bool solved = r.status == SolveStatus::optimal;
        const bool match = solved && r.value == e.value;
        all_match = all_match && match;
        any_timeout = any_timeout || r.status == SolveStatus::timeout_with_bounds;
        if (json) {
            rows.push_back({{"n", e.n},
                            {"m", e.m},
                            {"stored", e.value},
                            {"solved", solved ? Json(*r.value) : Json(nullptr)},
                            {"status", std::string(status_name(r.status))},
                            {"match", match},
                            {"seconds", r.wall_time}});
        } else {
            std::ostringstream line;
            line << std::setw(2) << e.n << ' ' << std::setw(2) << e.m << ' ' << std::setw(7) << e.value << ' '
                 << std::setw(7) << (solved ? std::to_string(*r.value) : std::string("?")) << "  " << std::setw(5)
                 << (match ? "yes" : "NO") << "  " << std::fixed << std::setprecision(3) << r.wall_time;
            out << line.str() << '\n';
        }
    }
    if (json) detail::print_json(out, {{"entries", rows}, {"all_match", all_match}});
    else out << (all_match ? "all 12 entries match\n" : "MISMATCH\n");
    if (all_match) return ok;
    return any_timeout ? timeout : failed;
}

inline int cmd_render(int n, int m, const std::string& code_path, std::ostream& out) {
    const ProductGraph p(n, m);
    const CodeSet code = detail::read_file(code_path, [&](std::istream& in) { return read_code(in, p); });
    out << render_ascii(p, code);
    return ok;
}

// --- entry point ---------------------------------------------------------------

/// Runs one subcommand; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimum identifying codes of the direct product of two cliques", "idcode"};
    app.require_subcommand(1);
    app.fallthrough(false);

    int n = 0, m = 0;
    bool json = false;
    std::string out_path, code_path, graph_path;
    std::pair<int, int> product{0, 0};
    std::optional<double> time_limit;
    std::optional<int> threads;
    bool no_symmetry = false;

    const auto add_nm = [&](CLI::App* sub) {
        sub->add_option("--n", n, "order of the first clique")->required();
        sub->add_option("--m", m, "order of the second clique")->required();
    };
    const auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json, "emit one JSON document"); };
    const auto add_input = [&](CLI::App* sub) {
        auto* po = sub->add_option("--product", product, "clique orders N M");
        auto* go = sub->add_option("--graph", graph_path, "graph file");
        po->excludes(go);
        sub->require_option(1, 0);
    };
    const auto add_solver = [&](CLI::App* sub) {
        sub->add_option("--time-limit", time_limit, "seconds")->check(CLI::PositiveNumber);
        sub->add_option("--threads", threads, "worker threads (default $IDCODE_THREADS or 1)")
            ->check(CLI::PositiveNumber);
    };

    auto* gamma = app.add_subcommand("gamma", "closed-form minimum code size");
    add_nm(gamma);
    add_json(gamma);

    auto* construct = app.add_subcommand("construct", "explicit optimal code");
    add_nm(construct);
    construct->add_option("--out", out_path, "write the code file here");
    add_json(construct);

    auto* verify = app.add_subcommand("verify", "check a code file");
    add_input(verify);
    verify->add_option("--code", code_path, "code file")->required();
    add_json(verify);

    auto* solve = app.add_subcommand("solve", "exact minimum by search");
    add_input(solve);
    add_solver(solve);
    solve->add_flag("--no-symmetry", no_symmetry, "do not fix (1,1) in product searches");
    add_json(solve);

    auto* table = app.add_subcommand("table", "recompute the small-case table with the solver");
    add_solver(table);
    add_json(table);

    auto* render = app.add_subcommand("render", "ASCII grid of a product code");
    add_nm(render);
    render->add_option("--code", code_path, "code file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    try {
        const auto solver_options = [&] {
            SolveOptions o;
            o.time_limit = time_limit;
            o.thread_count = threads ? *threads : detail::default_threads();
            o.symmetry_breaking = !no_symmetry;
            return o;
        };
        const auto require_product = [&](CLI::App* sub) {
            if (sub->count("--product") && (product.first < 1 || product.second < 1))
                throw UsageError("--product orders must be positive");
        };
        if (*gamma) return cmd_gamma(n, m, json, out);
        if (*construct) return cmd_construct(n, m, out_path, json, out, err);
        if (*verify) {
            require_product(verify);
            if (verify->count("--product")) return cmd_verify_product(product.first, product.second, code_path, json, out);
            return cmd_verify_graph(graph_path, code_path, json, out);
        }
        if (*solve) {
            require_product(solve);
            if (solve->count("--product")) return cmd_solve_product(product.first, product.second, solver_options(), json, out);
            return cmd_solve_graph(graph_path, solver_options(), json, out);
        }
        if (*table) return cmd_table(solver_options(), json, out);
        if (*render) return cmd_render(n, m, code_path, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const InvalidOrder& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
    return usage;
}

}  // namespace idcode::cli
