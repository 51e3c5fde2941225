#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>

#include "idcode/errors.hpp"

namespace idcode {

enum class Regime {
    too_small_factor,     // min(n, m) < 2
    twins,                // (2, 2)
    k2_small,             // n = 2, m in {3, 4}
    k2_large,             // n = 2, m >= 5
    small_table,          // 3 <= n <= 5, n <= m <= 2n-1
    wide,                 // n >= 3, m >= 2n
    mod0_or_2,            // 6 <= n <= m <= 2n-1, n+m = 0,2 mod 3
    exception_2n_minus_5, // n >= 6, m = 2n-5
    mod1,                 // 6 <= n <= m <= 2n-2, n+m = 1 mod 3, m != 2n-5
};

enum class Provenance { formula, table, undefined_twins, out_of_scope };

struct GammaResult {
    int n = 0;  // normalized, n <= m
    int m = 0;
    bool swapped = false;  // inputs arrived as (m, n)
    std::optional<int> value;
    Regime regime = Regime::too_small_factor;
    Provenance provenance = Provenance::out_of_scope;
    friend bool operator==(const GammaResult&, const GammaResult&) = default;
};

struct TableEntry {
    int n;
    int m;
    int value;
};

/// Computer-derived minimum code sizes for 3 <= n <= 5, n <= m <= 2n-1.
inline constexpr std::array<TableEntry, 12> kSmallTable{{
    {3, 3, 4}, {3, 4, 4}, {3, 5, 5},
    {4, 4, 5}, {4, 5, 6}, {4, 6, 7}, {4, 7, 7},
    {5, 5, 6}, {5, 6, 7}, {5, 7, 8}, {5, 8, 9}, {5, 9, 9},
}};

inline std::optional<int> small_table_value(int n, int m) {
    for (const auto& e : kSmallTable)
        if (e.n == n && e.m == m) return e.value;
    return std::nullopt;
}

inline std::pair<int, int> normalize(int n, int m) { return {std::min(n, m), std::max(n, m)}; }

inline Regime regime(int n, int m) {
    if (n < 1 || m < 1) throw InvalidOrder("clique orders must be positive");
    std::tie(n, m) = normalize(n, m);
    if (n < 2) return Regime::too_small_factor;
    if (n == 2) {
        if (m == 2) return Regime::twins;
        return m <= 4 ? Regime::k2_small : Regime::k2_large;
    }
    if (m >= 2 * n) return Regime::wide;
    if (n <= 5) return Regime::small_table;
    // Checked before the mod-1 rule: m = 2n-5 always has n+m = 1 mod 3.
    if (m == 2 * n - 5) return Regime::exception_2n_minus_5;
    return (n + m) % 3 == 1 ? Regime::mod1 : Regime::mod0_or_2;
}

inline GammaResult gamma_id(int n, int m) {
    GammaResult out;
    out.regime = regime(n, m);
    out.swapped = n > m;
    std::tie(out.n, out.m) = normalize(n, m);
    const int a = out.n;
    const int b = out.m;
    out.provenance = Provenance::formula;
    switch (out.regime) {
    case Regime::too_small_factor:
        out.provenance = Provenance::out_of_scope;
        break;
    case Regime::twins:
        out.provenance = Provenance::undefined_twins;
        break;
    case Regime::k2_small:
        out.value = b;
        break;
    case Regime::k2_large:
    case Regime::wide:
        out.value = b - 1;
        break;
    case Regime::small_table:
        out.value = small_table_value(a, b);
        out.provenance = Provenance::table;
        break;
    case Regime::mod0_or_2:
        out.value = 2 * (a + b) / 3;
        break;
    case Regime::exception_2n_minus_5:
        out.value = 2 * a - 4;
        break;
    case Regime::mod1:
        out.value = (2 * (a + b) + 2) / 3;
        break;
    }
    return out;
}

/// Every identifying code of K_n x K_m (n <= m) meets all but at most one row,
/// so it has at least m-1 codewords.
inline int lower_bound(int n, int m) {
    const Regime r = regime(n, m);
    if (r == Regime::too_small_factor || r == Regime::twins)
        throw std::domain_error("no identifying-code bound for this pair");
    return std::max(n, m) - 1;
}

inline std::string_view regime_name(Regime r) {
    switch (r) {
    case Regime::too_small_factor: return "TooSmallFactor";
    case Regime::twins: return "Twins";
    case Regime::k2_small: return "K2Small";
    case Regime::k2_large: return "K2Large";
    case Regime::small_table: return "SmallTable";
    case Regime::wide: return "Wide";
    case Regime::mod0_or_2: return "Mod0or2";
    case Regime::exception_2n_minus_5: return "Exception2nMinus5";
    case Regime::mod1: return "Mod1";
    }
    return "?";
}

inline std::optional<Regime> regime_from_name(std::string_view s) {
    for (Regime r : {Regime::too_small_factor, Regime::twins, Regime::k2_small, Regime::k2_large,
                     Regime::small_table, Regime::wide, Regime::mod0_or_2, Regime::exception_2n_minus_5,
                     Regime::mod1})
        if (regime_name(r) == s) return r;
    return std::nullopt;
}

/// Human-readable rule behind a regime's value.
inline std::string_view regime_rule(Regime r) {
    switch (r) {
    case Regime::too_small_factor: return "a factor is K1; outside the two-nontrivial-cliques setting";
    case Regime::twins: return "K2 x K2 has twins, so no identifying code exists";
    case Regime::k2_small: return "K2 x Km with m in {3,4}: value m";
    case Regime::k2_large: return "K2 x Km with m >= 5: value m-1";
    case Regime::small_table: return "3 <= n <= 5, n <= m <= 2n-1: computer-derived table value";
    case Regime::wide: return "n >= 3, m >= 2n: value m-1";
    case Regime::mod0_or_2: return "6 <= n <= m <= 2n-1, n+m = 0,2 (mod 3): value floor(2(n+m)/3)";
    case Regime::exception_2n_minus_5: return "n >= 6, m = 2n-5: value 2n-4";
    case Regime::mod1: return "6 <= n <= m <= 2n-2, n+m = 1 (mod 3), m != 2n-5: value ceil(2(n+m)/3)";
    }
    return "?";
}

inline std::string_view provenance_name(Provenance p) {
    switch (p) {
    case Provenance::formula: return "formula";
    case Provenance::table: return "table";
    case Provenance::undefined_twins: return "undefined-twins";
    case Provenance::out_of_scope: return "out-of-paper-scope";
    }
    return "?";
}

inline std::optional<Provenance> provenance_from_name(std::string_view s) {
    for (Provenance p : {Provenance::formula, Provenance::table, Provenance::undefined_twins,
                         Provenance::out_of_scope})
        if (provenance_name(p) == s) return p;
    return std::nullopt;
}

}  // namespace idcode
