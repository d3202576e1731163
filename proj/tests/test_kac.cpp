#include <doctest.h>

#include "gln/kac.hpp"

using namespace gln;

static Weight W(const std::string& s) { return parse_weight(s); }

TEST_CASE("constituents of the Kac module of the trivial module") {
    CHECK(kac_constituent(2, 0) == trivial_weight(2));
    CHECK(kac_constituent(2, 1) == W("[0,-1]"));
    CHECK(kac_constituent(2, 2) == berezin(2, -2));
    CHECK(kac_constituent(1, 1) == berezin(1, -1));
    for (int n = 1; n <= 4; ++n) {
        auto cons = kac_one_constituents(n);
        CHECK((int)cons.size() == n + 1);
        for (size_t i = 0; i < cons.size(); ++i)
            for (size_t j = i + 1; j < cons.size(); ++j) CHECK(cons[i] != cons[j]);
        // Ber^a (x) L_a is basic
        for (int a = 0; a <= n; ++a)
            CHECK(is_basic(berezin_twist(kac_constituent(n, a), a)));
    }
}

TEST_CASE("invariants I_a") {
    CHECK(kac_invariant(2, 0) == trivial_weight(1));
    CHECK(kac_invariant(2, 1) == berezin(1, -2));
    CHECK(kac_invariant(3, 1) == W("[0,-2]"));
    for (int n = 2; n <= 4; ++n) {
        CHECK(kac_invariant(n, 0) == trivial_weight(n - 1));
        CHECK(kac_invariant(n, n - 1) == berezin(n - 1, -(Int)n));
    }
}

TEST_CASE("cohomology of the constituents is concentrated in degree -a") {
    for (int n = 1; n <= 4; ++n)
        for (int a = 0; a <= n; ++a) {
            auto img = ds(kac_constituent(n, a));
            auto expect = l_a_cohomology(n, a);
            REQUIRE(img.size() == expect.summands.size());
            std::vector<Weight> got;
            for (const auto& s : img) {
                // the table lists cohomological degrees in the delta
                // normalization: ds(L_a) sits at delta = -a
                CHECK(s.delta == expect.degree);
                got.push_back(s.w);
            }
            std::sort(got.begin(), got.end());
            auto want = expect.summands;
            std::sort(want.begin(), want.end());
            CHECK(got == want);
        }
}

TEST_CASE("derivative of the Kac module vanishes") {
    for (int n = 1; n <= 4; ++n) {
        K0Element total;
        for (const auto& w : kac_one_constituents(n))
            total = k0_sum(total, derivative_k0(w));
        CHECK(total.empty());
    }
}

TEST_CASE("Q-module tables are d-additive") {
    for (int n = 1; n <= 4; ++n)
        for (int a = 0; a <= n; ++a) {
            // alternating sum over the cohomology table...
            K0Element table;
            for (const auto& g : q_a_cohomology(n, a)) {
                Int sign = (g.degree % 2 == 0) ? 1 : -1;
                for (const auto& w : g.summands) k0_add(table, w, sign);
            }
            // ...equals the derivative of the constituent sum L_0 + .. + L_a
            K0Element der;
            for (int b = 0; b <= a; ++b)
                der = k0_sum(der, derivative_k0(kac_constituent(n, b)));
            CHECK(table == der);
            // Dirac table: a single invariant in degree -a, zero for Q_n
            auto dg = q_a_dirac(n, a);
            CHECK(dg.degree == -a);
            if (a == n)
                CHECK(dg.summands.empty());
            else
                CHECK(dg.summands == std::vector<Weight>{kac_invariant(n, a)});
        }
}

TEST_CASE("hooks") {
    CHECK(hook_weight(3, 1) == sym_power(3, 1));
    CHECK(hook_weight(3, 3) == berezin_twist(sym_power(3, 2), 1));
    CHECK(hooks(3).back() == W("[0,0,-1]"));
    for (int n = 1; n <= 5; ++n) {
        auto hs = hooks(n);
        CHECK((int)hs.size() == n + 1);
        for (size_t i = 0; i < hs.size(); ++i)
            for (size_t j = i + 1; j < hs.size(); ++j) CHECK(hs[i] != hs[j]);
    }
}

TEST_CASE("hooks form a chain under the functor") {
    for (int n = 2; n <= 5; ++n)
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                auto img = ds_iter(hook_weight(n, i), n - j);
                REQUIRE(img.size() == 1);
                CHECK(img[0].w == hook_weight(j, i));
            }
}
