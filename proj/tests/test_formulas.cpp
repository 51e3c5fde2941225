#include <gtest/gtest.h>

#include "idcode/idcode.hpp"
#include "support/oracle.hpp"

using namespace idcode;

namespace {

// Regime membership written out independently from the dispatcher.
std::vector<Regime> matching_regimes(int a, int b) {
    const int n = std::min(a, b), m = std::max(a, b);
    std::vector<Regime> out;
    if (n < 2) out.push_back(Regime::too_small_factor);
    if (n == 2 && m == 2) out.push_back(Regime::twins);
    if (n == 2 && (m == 3 || m == 4)) out.push_back(Regime::k2_small);
    if (n == 2 && m >= 5) out.push_back(Regime::k2_large);
    if (3 <= n && n <= 5 && m <= 2 * n - 1) out.push_back(Regime::small_table);
    if (n >= 3 && m >= 2 * n) out.push_back(Regime::wide);
    if (n >= 6 && m <= 2 * n - 1 && (n + m) % 3 != 1) out.push_back(Regime::mod0_or_2);
    if (n >= 6 && m == 2 * n - 5) out.push_back(Regime::exception_2n_minus_5);
    if (n >= 6 && m <= 2 * n - 2 && (n + m) % 3 == 1 && m != 2 * n - 5) out.push_back(Regime::mod1);
    return out;
}

}  // namespace

TEST(Gamma, Examples) {
    EXPECT_EQ(gamma_id(2, 5).value, 4);
    EXPECT_EQ(gamma_id(4, 6).value, 7);
    EXPECT_EQ(gamma_id(6, 6).value, 8);
    EXPECT_EQ(gamma_id(6, 8).value, 9);
    EXPECT_EQ(gamma_id(7, 9).value, 10);
    EXPECT_EQ(gamma_id(7, 9).regime, Regime::exception_2n_minus_5);
    EXPECT_EQ(gamma_id(8, 8).value, 11);
    EXPECT_EQ(gamma_id(6, 10).value, 11);
    EXPECT_EQ(gamma_id(3, 10).value, 9);
    EXPECT_EQ(gamma_id(3, 10).regime, Regime::wide);
    EXPECT_EQ(gamma_id(2, 3).value, 3);
    EXPECT_EQ(gamma_id(2, 4).value, 4);
}

TEST(Gamma, SpecialProvenances) {
    const auto twins = gamma_id(2, 2);
    EXPECT_FALSE(twins.value);
    EXPECT_EQ(twins.provenance, Provenance::undefined_twins);
    EXPECT_EQ(twins.regime, Regime::twins);
    const auto small = gamma_id(1, 5);
    EXPECT_FALSE(small.value);
    EXPECT_EQ(small.provenance, Provenance::out_of_scope);
    EXPECT_EQ(small.regime, Regime::too_small_factor);
    EXPECT_EQ(gamma_id(4, 5).provenance, Provenance::table);
    EXPECT_EQ(gamma_id(6, 9).provenance, Provenance::formula);
    EXPECT_THROW(gamma_id(0, 3), InvalidOrder);
}

TEST(Gamma, SymmetricUnderSwap) {
    for (int n = 1; n <= 30; ++n)
        for (int m = 1; m <= 30; ++m) {
            const auto a = gamma_id(n, m), b = gamma_id(m, n);
            ASSERT_EQ(a.value, b.value);
            ASSERT_EQ(a.regime, b.regime);
            ASSERT_EQ(a.n, std::min(n, m));
            ASSERT_EQ(a.m, std::max(n, m));
            ASSERT_EQ(a.swapped, n > m);
        }
    EXPECT_EQ(gamma_id(5, 3).value, 5);
}

TEST(Regime, ExactlyOneMatchesEveryPair) {
    for (int n = 1; n <= 200; ++n)
        for (int m = 1; m <= 200; ++m) {
            const auto all = matching_regimes(n, m);
            ASSERT_EQ(all.size(), 1u) << n << "x" << m;
            ASSERT_EQ(regime(n, m), all.front()) << n << "x" << m;
        }
}

TEST(Regime, Examples) {
    EXPECT_EQ(regime(2, 2), Regime::twins);
    EXPECT_EQ(regime(2, 4), Regime::k2_small);
    EXPECT_EQ(regime(2, 9), Regime::k2_large);
    EXPECT_EQ(regime(5, 9), Regime::small_table);
    EXPECT_EQ(regime(5, 10), Regime::wide);
    EXPECT_EQ(regime(6, 7), Regime::exception_2n_minus_5);
    EXPECT_EQ(regime(8, 8), Regime::mod1);
    EXPECT_EQ(regime(6, 11), Regime::mod0_or_2);
    EXPECT_EQ(regime(1, 5), Regime::too_small_factor);
}

TEST(Regime, NamesRoundTrip) {
    for (Regime r : {Regime::too_small_factor, Regime::twins, Regime::k2_small, Regime::k2_large, Regime::small_table,
                     Regime::wide, Regime::mod0_or_2, Regime::exception_2n_minus_5, Regime::mod1}) {
        EXPECT_EQ(regime_from_name(regime_name(r)), r);
        EXPECT_FALSE(regime_rule(r).empty());
    }
    EXPECT_EQ(regime_name(Regime::exception_2n_minus_5), "Exception2nMinus5");
    EXPECT_FALSE(regime_from_name("nope"));
    for (Provenance p : {Provenance::formula, Provenance::table, Provenance::undefined_twins, Provenance::out_of_scope})
        EXPECT_EQ(provenance_from_name(provenance_name(p)), p);
    EXPECT_EQ(provenance_name(Provenance::out_of_scope), "out-of-paper-scope");
}

TEST(Gamma, ValuePresentExactlyForFormulaOrTable) {
    for (int n = 1; n <= 60; ++n)
        for (int m = 1; m <= 60; ++m) {
            const auto g = gamma_id(n, m);
            const bool valued = g.provenance == Provenance::formula || g.provenance == Provenance::table;
            ASSERT_EQ(g.value.has_value(), valued);
        }
}

TEST(Gamma, WithinTheTwoThirdsBand) {
    for (int n = 6; n <= 50; ++n)
        for (int m = n; m <= 2 * n - 1; ++m) {
            const int v = *gamma_id(n, m).value;
            const int lo = (2 * (n + m)) / 3, hi = (2 * (n + m) + 2) / 3;
            ASSERT_GE(v, lo) << n << "x" << m;
            ASSERT_LE(v, hi) << n << "x" << m;
        }
}

TEST(Gamma, AtLeastTheLowerBound) {
    for (int n = 2; n <= 80; ++n)
        for (int m = n; m <= 160; ++m) {
            if (n == 2 && m == 2) continue;
            ASSERT_GE(*gamma_id(n, m).value, lower_bound(n, m));
        }
}

TEST(LowerBound, Examples) {
    EXPECT_EQ(lower_bound(6, 6), 5);
    EXPECT_EQ(lower_bound(2, 9), 8);
    EXPECT_EQ(lower_bound(3, 3), 2);
    EXPECT_EQ(lower_bound(9, 2), 8);
    EXPECT_THROW(lower_bound(2, 2), std::domain_error);
    EXPECT_THROW(lower_bound(1, 4), std::domain_error);
}

TEST(Gamma, TableValuesStored) {
    EXPECT_EQ(kSmallTable.size(), 12u);
    const std::vector<std::array<int, 3>> expected{{3, 3, 4}, {3, 4, 4}, {3, 5, 5}, {4, 4, 5}, {4, 5, 6}, {4, 6, 7},
                                                   {4, 7, 7}, {5, 5, 6}, {5, 6, 7}, {5, 7, 8}, {5, 8, 9}, {5, 9, 9}};
    for (const auto& [n, m, v] : expected) {
        EXPECT_EQ(gamma_id(n, m).value, v) << n << "x" << m;
        EXPECT_EQ(gamma_id(n, m).regime, Regime::small_table);
    }
}

TEST(Gamma, MatchesExhaustiveSearchOnSmallProducts) {
    // Subset enumeration, independent of the library solver.
    for (int n = 2; n <= 5; ++n)
        for (int m = n; n * m <= 20; ++m) {
            const auto brute = oracle::min_identifying_size(oracle::clique_product(n, m));
            EXPECT_EQ(brute, gamma_id(n, m).value) << n << "x" << m;
        }
}
