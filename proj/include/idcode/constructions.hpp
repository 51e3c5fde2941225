#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "idcode/code_set.hpp"
#include "idcode/errors.hpp"
#include "idcode/formulas.hpp"
#include "idcode/product_graph.hpp"
#include "idcode/verify.hpp"

namespace idcode {

enum class Family {
    k2_small,        // K2 x K3: one full column
    k2_large,        // K2 x Km, m >= 5
    wide,            // m >= 2n
    mod0,            // n+m = 0 mod 3
    mod2,            // n+m = 2 mod 3, m != 2n-1
    m_2n_minus_1,
    m_2n_minus_5,
    mod1,            // n+m = 1 mod 3, m not in {2n-2, 2n-5}
    m_2n_minus_2,
    table_witness,   // stored solver-derived code
};

struct ConstructionParams {
    Family family = Family::table_witness;
    int a = 0;
    int b = 0;
    friend bool operator==(const ConstructionParams&, const ConstructionParams&) = default;
};

struct Construction {
    CodeSet code;
    ConstructionParams params;
    bool transposed = false;  // built for (m, n) and mapped back
};

inline std::string_view family_name(Family f) {
    switch (f) {
    case Family::k2_small: return "K2Small";
    case Family::k2_large: return "K2Large";
    case Family::wide: return "Wide";
    case Family::mod0: return "D1_mod0";
    case Family::mod2: return "D2_mod2";
    case Family::m_2n_minus_1: return "D3_m2nMinus1";
    case Family::m_2n_minus_5: return "D_2nMinus5";
    case Family::mod1: return "D1_mod1";
    case Family::m_2n_minus_2: return "D2_m2nMinus2";
    case Family::table_witness: return "TableWitness";
    }
    return "?";
}

/// Which sufficient condition certifies a family, if any.
enum class Certificate { fullspan, partialspan, none };

inline Certificate certificate(Family f) {
    switch (f) {
    case Family::mod0:
    case Family::mod2:
    case Family::m_2n_minus_1:
    case Family::mod1:
    case Family::m_2n_minus_2: return Certificate::fullspan;
    case Family::wide:
    case Family::m_2n_minus_5: return Certificate::partialspan;
    case Family::k2_small:
    case Family::k2_large:
    case Family::table_witness: return Certificate::none;
    }
    return Certificate::none;
}

namespace detail {

struct StoredWitness {
    int n;
    int m;
    std::vector<Coord> code;
};

/// Lexicographically least optimal codes found by the exact solver.
inline const std::vector<StoredWitness>& stored_witnesses() {
    static const std::vector<StoredWitness> table{
        {2, 4, {{1, 1}, {1, 2}, {1, 3}, {1, 4}}},
        {3, 3, {{1, 1}, {1, 2}, {1, 3}, {2, 1}}},
        {3, 4, {{1, 1}, {1, 2}, {1, 3}, {2, 1}}},
        {3, 5, {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 1}}},
        {4, 4, {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {3, 1}}},
        {4, 5, {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 1}, {3, 1}}},
        {4, 6, {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 1}, {3, 1}}},
        {4, 7, {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {3, 4}, {3, 5}, {3, 6}}},
        {5, 5, {{1, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}}},
        {5, 6, {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 5}, {4, 6}}},
        {5, 7, {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 6}, {3, 6}, {4, 7}}},
        {5, 8, {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 7}, {3, 7}, {4, 8}}},
        {5, 9, {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {3, 4}, {3, 5}, {4, 6}, {4, 7}, {5, 8}}},
    };
    return table;
}

inline const StoredWitness* find_witness(int n, int m) {
    for (const auto& w : stored_witnesses())
        if (w.n == n && w.m == m) return &w;
    return nullptr;
}

inline int exact_third(int numerator) {
    if (numerator % 3 != 0 || numerator < 0)
        throw ConstructionBug("construction parameter is not a nonnegative integer");
    return numerator / 3;
}

/// Family and parameters for normalized n <= m.
inline ConstructionParams select_family(int n, int m) {
    switch (regime(n, m)) {
    case Regime::too_small_factor:
        throw NoConstruction("no identifying-code construction when a factor is K1");
    case Regime::twins:
        throw NoConstruction("K2 x K2 has twins and no identifying code");
    case Regime::k2_small:
        return {m == 3 ? Family::k2_small : Family::table_witness, 0, 0};
    case Regime::k2_large:
        return {Family::k2_large, 0, 0};
    case Regime::small_table:
        return {Family::table_witness, 0, 0};
    case Regime::wide:
        return {Family::wide, 0, 0};
    case Regime::exception_2n_minus_5:
        return {Family::m_2n_minus_5, 0, 0};
    case Regime::mod0_or_2:
        if ((n + m) % 3 == 0) return {Family::mod0, exact_third(2 * m - n), exact_third(2 * n - m)};
        if (m == 2 * n - 1) return {Family::m_2n_minus_1, 0, 0};
        return {Family::mod2, exact_third(2 * m - n - 1), exact_third(2 * n - m - 1)};
    case Regime::mod1:
        if (m == 2 * n - 2) return {Family::m_2n_minus_2, 0, 0};
        return {Family::mod1, exact_third(2 * m - n - 2), exact_third(2 * n - m + 1)};
    }
    throw ConstructionBug("unhandled regime");
}

/// Pairs (i, 2i-1), (i, 2i) for i in [1, count].
inline void add_pairs_odd_start(std::vector<Coord>& out, int count) {
    for (int i = 1; i <= count; ++i) {
        out.push_back({i, 2 * i - 1});
        out.push_back({i, 2 * i});
    }
}

/// Codewords for normalized n <= m.
inline std::vector<Coord> family_codewords(int n, int m, const ConstructionParams& prm) {
    std::vector<Coord> out;
    const int a = prm.a;
    const int b = prm.b;
    switch (prm.family) {
    case Family::k2_small:
        out = {{1, 1}, {1, 2}, {1, 3}};
        break;
    case Family::k2_large:
        out = {{1, 1}, {1, 2}};
        for (int r = 3; r <= m - 1; ++r) out.push_back({2, r});
        break;
    case Family::wide:
        add_pairs_odd_start(out, n - 1);
        for (int j = 2 * n - 1; j <= m - 1; ++j) out.push_back({n, j});
        break;
    case Family::mod0:
    case Family::mod2:
        add_pairs_odd_start(out, a);
        for (int j = 1; j <= b; ++j) {
            out.push_back({a + 2 * j - 1, 2 * a + j});
            out.push_back({a + 2 * j, 2 * a + j});
        }
        if (prm.family == Family::mod2) out.push_back({n, m});
        break;
    case Family::m_2n_minus_1:
        add_pairs_odd_start(out, n - 1);
        out.push_back({n, 2 * n - 1});
        break;
    case Family::m_2n_minus_5:
        add_pairs_odd_start(out, n - 4);
        out.push_back({n - 3, 2 * n - 7});
        out.push_back({n - 2, 2 * n - 7});
        out.push_back({n - 1, 2 * n - 7});
        out.push_back({n, 2 * n - 6});
        break;
    case Family::mod1:
        out.push_back({1, 1});
        for (int i = 1; i <= a; ++i) {
            out.push_back({i, 2 * i});
            out.push_back({i, 2 * i + 1});
        }
        for (int j = 1; j <= b; ++j) {
            out.push_back({a + 2 * j - 1, 2 * a + j + 1});
            out.push_back({a + 2 * j, 2 * a + j + 1});
        }
        break;
    case Family::m_2n_minus_2:
        out.push_back({1, 1});
        for (int i = 1; i <= n - 2; ++i) {
            out.push_back({i, 2 * i});
            out.push_back({i, 2 * i + 1});
        }
        out.push_back({n - 1, 2 * n - 2});
        out.push_back({n, 2 * n - 2});
        break;
    case Family::table_witness: {
        const auto* w = find_witness(n, m);
        if (!w) throw ConstructionBug("missing stored witness for " + std::to_string(n) + "x" + std::to_string(m));
        out = w->code;
        break;
    }
    }
    return out;
}

inline int family_size(int n, int m, const ConstructionParams& prm) {
    switch (prm.family) {
    case Family::k2_small: return 3;
    case Family::k2_large:
    case Family::wide: return m - 1;
    case Family::mod0: return 2 * prm.a + 2 * prm.b;
    case Family::mod2: return 2 * prm.a + 2 * prm.b + 1;
    case Family::m_2n_minus_1: return 2 * n - 1;
    case Family::m_2n_minus_5: return 2 * n - 4;
    case Family::mod1: return 1 + 2 * prm.a + 2 * prm.b;
    case Family::m_2n_minus_2: return 2 * n - 1;
    case Family::table_witness: {
        const auto* w = find_witness(n, m);
        if (!w) throw ConstructionBug("missing stored witness");
        return static_cast<int>(w->code.size());
    }
    }
    throw ConstructionBug("unhandled family");
}

}  // namespace detail

/// An optimal identifying code of K_n x K_m, verified before it is returned.
inline Construction construct_code(int n, int m) {
    if (n < 1 || m < 1) throw InvalidOrder("clique orders must be positive");
    const auto [lo, hi] = normalize(n, m);
    const ConstructionParams prm = detail::select_family(lo, hi);
    const ProductGraph p(lo, hi);
    const auto words = detail::family_codewords(lo, hi, prm);
    CodeSet code(p, std::span<const Coord>(words));

    const GammaResult g = gamma_id(lo, hi);
    if (!g.value || static_cast<int>(code.size()) != *g.value)
        throw ConstructionBug("construction size " + std::to_string(code.size()) + " differs from the optimum for " +
                              std::to_string(lo) + "x" + std::to_string(hi));
    if (!is_identifying_code(p, code, ReportDetail::verdict).is_identifying_code())
        throw ConstructionBug("construction for " + std::to_string(lo) + "x" + std::to_string(hi) +
                              " is not an identifying code");
    if (n > m) return {code.transposed(), prm, true};
    return {std::move(code), prm, false};
}

/// |construct_code(n, m)| without building the set.
inline int construction_size(int n, int m) {
    if (n < 1 || m < 1) throw InvalidOrder("clique orders must be positive");
    const auto [lo, hi] = normalize(n, m);
    return detail::family_size(lo, hi, detail::select_family(lo, hi));
}

}  // namespace idcode
