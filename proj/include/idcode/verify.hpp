#pragma once

#include <algorithm>
#include <array>
#include <climits>
#include <cstddef>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "idcode/code_set.hpp"
#include "idcode/errors.hpp"
#include "idcode/graph.hpp"
#include "idcode/product_graph.hpp"
#include "idcode/vertex_set.hpp"

namespace idcode {

/// N[v] intersected with the code, as ascending vertex ids.
using Signature = std::vector<Vertex>;

struct UnseparatedPair {
    Vertex u = 0;
    Vertex v = 0;
    Signature signature;
    friend bool operator==(const UnseparatedPair&, const UnseparatedPair&) = default;
};

/// Row/column structure of a code in K_n x K_m.
struct CodeStats {
    int cs = 0;  // columns meeting the code
    int rs = 0;  // rows meeting the code
    std::vector<Vertex> row_isolated;     // A_c
    std::vector<Vertex> column_isolated;  // B_c
    int x = 0;                            // |A_c|
    int y = 0;                            // |B_c|
    std::vector<Vertex> isolated;         // A_c and B_c
    int p = 0;  // columns with >= 2 codewords, all row-isolated
    int q = 0;  // rows with >= 2 codewords, all column-isolated
    std::vector<Vertex> neither;          // codewords in neither A_c nor B_c
    friend bool operator==(const CodeStats&, const CodeStats&) = default;
};

struct VerificationReport {
    bool dominating = false;
    bool separating = false;
    std::vector<Vertex> undominated;
    std::vector<UnseparatedPair> unseparated;
    std::map<Signature, std::vector<Vertex>> signature_index;
    std::optional<CodeStats> stats;  // product inputs only

    bool is_identifying_code() const noexcept { return dominating && separating; }
    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

enum class ReportDetail {
    full,     // signatures, index and every failing vertex/pair
    verdict,  // flags from row/column counts; lists only filled on failure
};

// ---------------------------------------------------------------------------
// General graphs

inline bool is_dominating(const Graph& g, const CodeSet& s) {
    check_owner(g, s);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!s.contains(v) && !g.neighborhood(v).intersects(s.members())) return false;
    return true;
}

inline bool separates(const Graph& g, const CodeSet& s, Vertex u, Vertex v) {
    check_owner(g, s);
    if (u == v) throw InvalidPair("separation needs two distinct vertices");
    if (u >= g.vertex_count() || v >= g.vertex_count()) throw std::out_of_range("vertex outside the graph");
    return (g.closed_neighborhood(u) & s.members()) != (g.closed_neighborhood(v) & s.members());
}

namespace detail {

inline void fill_from_classes(VerificationReport& report, std::map<Signature, std::vector<Vertex>> classes) {
    report.dominating = true;
    report.separating = true;
    for (const auto& [sig, members] : classes) {
        if (sig.empty()) {
            report.dominating = false;
            report.undominated = members;
        }
        if (members.size() > 1) {
            report.separating = false;
            for (std::size_t a = 0; a < members.size(); ++a)
                for (std::size_t b = a + 1; b < members.size(); ++b)
                    report.unseparated.push_back({members[a], members[b], sig});
        }
    }
    std::sort(report.unseparated.begin(), report.unseparated.end(),
              [](const UnseparatedPair& a, const UnseparatedPair& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
    report.signature_index = std::move(classes);
}

}  // namespace detail

/// Checks the identifying-code property by grouping vertices on N[v] intersected with the code.
inline VerificationReport is_identifying_code(const Graph& g, const CodeSet& s) {
    check_owner(g, s);
    std::unordered_map<VertexSet, std::vector<Vertex>, VertexSetHash> groups;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        VertexSet sig = g.neighborhood(v) & s.members();
        if (s.contains(v)) sig.insert(v);
        groups[std::move(sig)].push_back(v);
    }
    std::map<Signature, std::vector<Vertex>> classes;
    for (auto& [sig, members] : groups) classes.emplace(sig.to_vector(), std::move(members));
    VerificationReport report;
    detail::fill_from_classes(report, std::move(classes));
    return report;
}

// ---------------------------------------------------------------------------
// Clique products

namespace detail {

struct LineCounts {
    std::vector<int> col;  // index 1..n
    std::vector<int> row;  // index 1..m
    std::vector<Coord> words;

    LineCounts(const ProductGraph& p, const CodeSet& s)
        : col(static_cast<std::size_t>(p.n()) + 1, 0), row(static_cast<std::size_t>(p.m()) + 1, 0), words(s.coords()) {
        for (Coord c : words) {
            ++col[static_cast<std::size_t>(c.col)];
            ++row[static_cast<std::size_t>(c.row)];
        }
    }
    int in_col(int i) const { return col[static_cast<std::size_t>(i)]; }
    int in_row(int r) const { return row[static_cast<std::size_t>(r)]; }
};

inline Signature product_signature(const ProductGraph& p, const std::vector<Coord>& words, Coord at) {
    Signature sig;
    for (Coord c : words)
        if ((c.col != at.col && c.row != at.row) || c == at) sig.push_back(p.vertex(c));
    return sig;
}

/// Domination from line counts: (i, r) outside the code sees nothing iff every
/// codeword lies in C_i or R_r, i.e. col[i] + row[r] == |C|.
inline bool product_dominating(const ProductGraph& p, const LineCounts& lc) {
    const int total = static_cast<int>(lc.words.size());
    std::vector<int> rows_with(static_cast<std::size_t>(total) + 1, 0);
    for (int r = 1; r <= p.m(); ++r) ++rows_with[static_cast<std::size_t>(lc.in_row(r))];
    // Codewords of C_i whose row has the target count are not candidates.
    std::vector<int> excluded(static_cast<std::size_t>(p.n()) + 1, 0);
    for (Coord c : lc.words)
        if (lc.in_row(c.row) == total - lc.in_col(c.col)) ++excluded[static_cast<std::size_t>(c.col)];
    for (int i = 1; i <= p.n(); ++i) {
        const int target = total - lc.in_col(i);
        if (rows_with[static_cast<std::size_t>(target)] - excluded[static_cast<std::size_t>(i)] > 0) return false;
    }
    return true;
}

struct LinePair {
    std::array<Coord, 2> w{};
    std::size_t k = 0;
    void push_back(Coord c) { w[k++] = c; }
    std::size_t size() const { return k; }
    const Coord& operator[](std::size_t i) const { return w[i]; }
};

/// Separation from line counts. Same-line pairs need at most one empty row and
/// column; a diagonal pair (i,r),(j,s) fails exactly when the codewords on the
/// four lines sit inside the four corners, which leaves the patterns checked below.
inline bool product_separating(const ProductGraph& p, const LineCounts& lc) {
    const int n = p.n();
    const int m = p.m();
    int empty_cols = 0;
    int empty_rows = 0;
    for (int i = 1; i <= n; ++i) empty_cols += lc.in_col(i) == 0;
    for (int r = 1; r <= m; ++r) empty_rows += lc.in_row(r) == 0;
    if (m >= 2 && empty_rows > 1) return false;
    if (n >= 2 && empty_cols > 1) return false;
    if (n < 2 || m < 2) return true;

    // Per line: the codewords it holds, as long as there are at most two.
    std::vector<LinePair> by_col(static_cast<std::size_t>(n) + 1);
    std::vector<LinePair> by_row(static_cast<std::size_t>(m) + 1);
    for (Coord c : lc.words) {
        if (lc.in_col(c.col) <= 2) by_col[static_cast<std::size_t>(c.col)].push_back(c);
        if (lc.in_row(c.row) <= 2) by_row[static_cast<std::size_t>(c.row)].push_back(c);
    }
    auto row_iso = [&](Coord c) { return lc.in_row(c.row) == 1; };
    auto col_iso = [&](Coord c) { return lc.in_col(c.col) == 1; };

    int isolated = 0;
    for (Coord c : lc.words) isolated += row_iso(c) && col_iso(c);
    // Two isolated codewords are opposite corners of their rectangle.
    if (isolated >= 2) return false;
    // One isolated corner with an empty row and column.
    if (isolated == 1 && empty_cols == 1 && empty_rows == 1) return false;

    for (int i = 1; i <= n; ++i) {
        const auto& cw = by_col[static_cast<std::size_t>(i)];
        if (cw.size() != 2) continue;
        // Two row-isolated corners in one column, the other column empty.
        if (empty_cols == 1 && row_iso(cw[0]) && row_iso(cw[1])) return false;
        // Full 2x2 block: both rows hold exactly this column plus one shared other column.
        const auto& r0 = by_row[static_cast<std::size_t>(cw[0].row)];
        const auto& r1 = by_row[static_cast<std::size_t>(cw[1].row)];
        if (r0.size() == 2 && r1.size() == 2) {
            const int j0 = r0[0].col == i ? r0[1].col : r0[0].col;
            const int j1 = r1[0].col == i ? r1[1].col : r1[0].col;
            if (j0 == j1 && lc.in_col(j0) == 2) return false;
        }
    }
    for (int r = 1; r <= m; ++r) {
        const auto& rw = by_row[static_cast<std::size_t>(r)];
        if (rw.size() == 2 && empty_rows == 1 && col_iso(rw[0]) && col_iso(rw[1])) return false;
    }
    // Three corners: a codeword whose column partner is row-isolated and whose
    // row partner is column-isolated.
    for (Coord c : lc.words) {
        if (lc.in_col(c.col) != 2 || lc.in_row(c.row) != 2) continue;
        const auto& cw = by_col[static_cast<std::size_t>(c.col)];
        const auto& rw = by_row[static_cast<std::size_t>(c.row)];
        const Coord up = cw[0] == c ? cw[1] : cw[0];
        const Coord side = rw[0] == c ? rw[1] : rw[0];
        if (row_iso(up) && col_iso(side)) return false;
    }
    return true;
}

}  // namespace detail

inline bool is_dominating(const ProductGraph& p, const CodeSet& s) {
    check_owner(p, s);
    return detail::product_dominating(p, detail::LineCounts(p, s));
}

inline bool separates(const ProductGraph& p, const CodeSet& s, Vertex u, Vertex v) {
    check_owner(p, s);
    if (u == v) throw InvalidPair("separation needs two distinct vertices");
    const auto words = s.coords();
    return detail::product_signature(p, words, p.coord(u)) != detail::product_signature(p, words, p.coord(v));
}

inline CodeStats code_statistics(const ProductGraph& p, const CodeSet& s) {
    check_owner(p, s);
    const detail::LineCounts lc(p, s);
    CodeStats st;
    for (int i = 1; i <= p.n(); ++i) st.cs += lc.in_col(i) > 0;
    for (int r = 1; r <= p.m(); ++r) st.rs += lc.in_row(r) > 0;
    // A line counts towards p (q) while every codeword on it is row- (column-) isolated.
    std::vector<bool> col_all_row_iso(static_cast<std::size_t>(p.n()) + 1, true);
    std::vector<bool> row_all_col_iso(static_cast<std::size_t>(p.m()) + 1, true);
    for (Coord c : lc.words) {
        const Vertex v = p.vertex(c);
        const bool ri = lc.in_row(c.row) == 1;
        const bool ci = lc.in_col(c.col) == 1;
        if (ri) st.row_isolated.push_back(v);
        if (ci) st.column_isolated.push_back(v);
        if (ri && ci) st.isolated.push_back(v);
        if (!ri && !ci) st.neither.push_back(v);
        if (!ri) col_all_row_iso[static_cast<std::size_t>(c.col)] = false;
        if (!ci) row_all_col_iso[static_cast<std::size_t>(c.row)] = false;
    }
    st.x = static_cast<int>(st.row_isolated.size());
    st.y = static_cast<int>(st.column_isolated.size());
    for (int i = 1; i <= p.n(); ++i) st.p += lc.in_col(i) >= 2 && col_all_row_iso[static_cast<std::size_t>(i)];
    for (int r = 1; r <= p.m(); ++r) st.q += lc.in_row(r) >= 2 && row_all_col_iso[static_cast<std::size_t>(r)];
    return st;
}

inline VerificationReport is_identifying_code(const ProductGraph& p, const CodeSet& s,
                                              ReportDetail detail = ReportDetail::full) {
    check_owner(p, s);
    VerificationReport report;
    if (detail == ReportDetail::verdict) {
        const detail::LineCounts lc(p, s);
        report.dominating = detail::product_dominating(p, lc);
        report.separating = detail::product_separating(p, lc);
        if (report.is_identifying_code()) {
            report.stats = code_statistics(p, s);
            return report;
        }
    }
    const auto words = s.coords();
    std::map<Signature, std::vector<Vertex>> classes;
    for (Vertex v = 0; v < p.vertex_count(); ++v)
        classes[detail::product_signature(p, words, p.coord(v))].push_back(v);
    report = {};
    detail::fill_from_classes(report, std::move(classes));
    if (detail == ReportDetail::verdict) report.signature_index.clear();
    report.stats = code_statistics(p, s);
    return report;
}

/// Whether the code meets C_i, C_j, R_r or R_s outside the corners {i,j} x {r,s}.
inline bool four_corners_holds(const ProductGraph& p, const CodeSet& s, int i, int j, int r, int s_row) {
    check_owner(p, s);
    if (i == j || r == s_row) throw IndexClash("corner columns and rows must be distinct");
    if (i < 1 || j < 1 || i > p.n() || j > p.n() || r < 1 || s_row < 1 || r > p.m() || s_row > p.m())
        throw std::out_of_range("corner index outside K_n x K_m");
    for (Coord c : s.coords()) {
        const bool on_col = c.col == i || c.col == j;
        const bool on_row = c.row == r || c.row == s_row;
        if ((on_col || on_row) && !(on_col && on_row)) return true;
    }
    return false;
}

struct PropositionCheck {
    bool holds = false;
    std::vector<int> violated;  // condition numbers, ascending
};

namespace detail {

/// Three codewords strictly increasing in both column and row.
inline bool has_increasing_triple(std::vector<Coord> words) {
    std::sort(words.begin(), words.end(), [](Coord a, Coord b) {
        return a.col != b.col ? a.col < b.col : a.row > b.row;
    });
    int best1 = INT_MAX;  // smallest row ending a chain of length 1
    int best2 = INT_MAX;  // smallest row ending a chain of length 2
    for (Coord c : words) {
        if (c.row > best2) return true;
        if (c.row > best1) best2 = std::min(best2, c.row);
        best1 = std::min(best1, c.row);
    }
    return false;
}

struct SpanConditions {
    bool chain;
    bool each_line_isolated;
    bool at_most_one_isolated;
    CodeStats stats;
};

inline SpanConditions span_conditions(const ProductGraph& p, const CodeSet& s) {
    SpanConditions sc{detail::has_increasing_triple(s.coords()), true, true, code_statistics(p, s)};
    sc.each_line_isolated = sc.stats.neither.empty();
    sc.at_most_one_isolated = sc.stats.isolated.size() <= 1;
    return sc;
}

}  // namespace detail

/// Sufficient conditions for an identifying code when the code spans every row and column.
inline PropositionCheck satisfies_fullspan(const ProductGraph& p, const CodeSet& s) {
    check_owner(p, s);
    const auto sc = detail::span_conditions(p, s);
    PropositionCheck out;
    if (!sc.chain) out.violated.push_back(1);
    if (!sc.each_line_isolated) out.violated.push_back(2);
    if (!(sc.stats.rs == p.m() && sc.stats.cs == p.n())) out.violated.push_back(3);
    if (!sc.at_most_one_isolated) out.violated.push_back(4);
    out.holds = out.violated.empty();
    return out;
}

/// Sufficient conditions for an identifying code that misses exactly one row.
inline PropositionCheck satisfies_partialspan(const ProductGraph& p, const CodeSet& s) {
    check_owner(p, s);
    const auto sc = detail::span_conditions(p, s);
    PropositionCheck out;
    if (!sc.chain) out.violated.push_back(1);
    if (!sc.each_line_isolated) out.violated.push_back(2);
    if (!(sc.stats.rs == p.m() - 1 && sc.stats.cs == p.n())) out.violated.push_back(3);
    if (!sc.at_most_one_isolated) out.violated.push_back(4);

    // Condition 5 ranges over nonempty rows: a row whose codewords are all
    // column-isolated and none row-isolated must hold at least three.
    const detail::LineCounts lc(p, s);
    std::vector<bool> qualifies(static_cast<std::size_t>(p.m()) + 1, true);
    for (Coord c : lc.words)
        if (!(lc.in_col(c.col) == 1 && lc.in_row(c.row) >= 2)) qualifies[static_cast<std::size_t>(c.row)] = false;
    for (int r = 1; r <= p.m(); ++r)
        if (lc.in_row(r) > 0 && qualifies[static_cast<std::size_t>(r)] && lc.in_row(r) < 3) {
            out.violated.push_back(5);
            break;
        }
    out.holds = out.violated.empty();
    return out;
}

}  // namespace idcode
