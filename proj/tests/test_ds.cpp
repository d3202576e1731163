#include <doctest.h>

#include <random>

#include "gln/ds.hpp"

using namespace gln;

static Weight W(const std::string& s) { return parse_weight(s); }

static std::vector<DsSummand> S(std::initializer_list<std::pair<const char*, Int>> xs) {
    std::vector<DsSummand> out;
    for (auto& [w, d] : xs) out.push_back({parse_weight(w), d});
    std::sort(out.begin(), out.end());
    return out;
}

static std::vector<DsSummand> sorted_ds(const Weight& w) {
    auto v = ds(w);
    std::sort(v.begin(), v.end());
    return v;
}

TEST_CASE("functor on worked examples") {
    CHECK(sorted_ds(W("[3,0,0]")) == S({{"[3,0]", 0}, {"[-1,-1]", 1}}));
    CHECK(sorted_ds(W("[6,4,4,1]")) == S({{"[6,4,4]", 1}, {"[6,4,0]", 3}, {"[3,3,0]", 3}}));
    CHECK(ds(W("(2,0|-1,-1)")).empty());  // typical weights die
}

TEST_CASE("functor on Berezin and symmetric powers") {
    for (int n = 2; n <= 5; ++n)
        for (Int k = -3; k <= 3; ++k)
            CHECK(sorted_ds(berezin(n, k)) ==
                  std::vector<DsSummand>{{berezin(n - 1, k), k}});
    for (int n = 2; n <= 5; ++n)
        for (Int i = 1; i <= 2 * n; ++i) {
            auto got = sorted_ds(sym_power(n, i));
            if (i < n - 1) {
                CHECK(got == std::vector<DsSummand>{{sym_power(n - 1, i), 0}});
            } else {
                std::vector<DsSummand> want;
                want.push_back({sym_power(n - 1, i), 0});
                want.push_back({berezin(n - 1, -1), i - n + 1});
                std::sort(want.begin(), want.end());
                CHECK(got == want);
            }
        }
}

TEST_CASE("Berezin twist covariance") {
    for (const auto& w : enumerate_maximal_atypical(3, 2)) {
        auto base = sorted_ds(w);
        auto twisted = sorted_ds(berezin_twist(w, 1));
        REQUIRE(base.size() == twisted.size());
        for (size_t i = 0; i < base.size(); ++i) {
            CHECK(twisted[i].w == berezin_twist(base[i].w, 1));
            CHECK(twisted[i].delta == base[i].delta + 1);
        }
    }
}

TEST_CASE("degrees are weakly increasing sector by sector") {
    for (const auto& w : enumerate_maximal_atypical(3, 3)) {
        auto v = ds(w);
        for (size_t i = 1; i < v.size(); ++i) CHECK(v[i - 1].delta <= v[i].delta);
    }
}

TEST_CASE("parity law for the degrees") {
    for (int n = 2; n <= 3; ++n)
        for (const auto& w : enumerate_dominant(n, 2)) {
            for (const auto& s : ds(w)) {
                int lhs = (s.delta % 2 == 0) ? 1 : -1;
                CHECK(lhs == epsilon(w) * epsilon(s.w));
            }
        }
}

TEST_CASE("functor commutes with the block equivalence") {
    for (const auto& w : enumerate_dominant(3, 2)) {
        if (atypicality(w) == 0) continue;
        auto lhs = ds(phi_map(w));
        auto rhs = ds(w);
        REQUIRE(lhs.size() == rhs.size());
        std::vector<DsSummand> l = lhs, r;
        for (const auto& s : rhs) r.push_back({phi_map(s.w), s.delta});
        std::sort(l.begin(), l.end());
        std::sort(r.begin(), r.end());
        CHECK(l == r);
    }
}

TEST_CASE("iterated functor accumulates degrees") {
    auto two = ds_iter(W("[3,0,0]"), 2);
    std::vector<DsSummand> direct;
    for (const auto& s : ds(W("[3,0,0]")))
        for (const auto& t : ds(s.w)) direct.push_back({t.w, s.delta + t.delta});
    std::sort(direct.begin(), direct.end());
    CHECK(two == direct);
    // full flattening of [3,0,0]: units in degrees 3, 1, -1
    Laurent h = hilbert_poly(W("[3,0,0]"), 3);
    Laurent expect;
    expect.add_term(3, 1);
    expect.add_term(1, 1);
    expect.add_term(-1, 1);
    CHECK(h == expect);
}

TEST_CASE("Grothendieck derivative on hand-checked values") {
    auto D = [](const char* s) { return derivative_k0(parse_weight(s)); };
    auto E = [](std::initializer_list<std::pair<const char*, Int>> xs) {
        K0Element e;
        for (auto& [w, c] : xs) k0_add(e, parse_weight(w), c);
        return e;
    };
    CHECK(D("[2,1,0]") == E({{"[2,1]", 1}, {"[2,-1]", 1}, {"[0,-1]", 1}}));
    CHECK(D("[2,2,0]") == E({{"[2,2]", 1}, {"[2,-1]", -1}}));
    CHECK(D("[2,-1,-1]") == E({{"[2,-1]", -1}, {"[-2,-2]", 1}}));
    CHECK(D("[1,1,0]") == E({{"[1,1]", 1}, {"[1,-1]", 1}}));
    CHECK(D("[2,0,0]") == E({{"[2,0]", 1}, {"[-1,-1]", 1}}));
    CHECK(D("[3,1,0]") == E({{"[3,1]", 1}, {"[3,-1]", 1}, {"[0,-1]", -1}}));
    CHECK(D("[0,-1,-1]") == E({{"[0,-1]", -1}}));
    CHECK(D("[2,1]") == E({{"[2]", -1}, {"[0]", -1}}));
    CHECK(D("[2,-1]") == E({{"[2]", -1}, {"[-2]", -1}}));
    CHECK(D("[2,0]") == E({{"[2]", 1}, {"[-1]", -1}}));
    CHECK(D("[0,-1]") == E({{"[0]", -1}, {"[-2]", -1}}));
    CHECK(D("[-1,-1]") == E({{"[-1]", -1}}));
    for (Int k = -3; k <= 3; ++k) {
        K0Element unit;
        k0_add(unit, Weight{}, (k % 2 == 0) ? 1 : -1);
        CHECK(derivative_k0(berezin(1, k)) == unit);
    }
}

TEST_CASE("core and multiplicity") {
    auto cd = core_and_multiplicity(W("[3,0,0]"));
    CHECK(cd.core.n == 0);
    CHECK(cd.mult == 3);

    // atypicality-1 example: core keeps the cross/circle pair
    Diagram d;
    d.n = 2;
    d.downs = {3};
    d.crosses = {0};
    d.circles = {1};
    auto cd2 = core_and_multiplicity(from_diagram(d));
    CHECK(cd2.core == make_weight({0}, {-1}));
    CHECK(cd2.mult == 1);
}

TEST_CASE("typical superdimension values") {
    CHECK(typical_sdim(make_weight({1}, {0})) == Fraction(1));
    CHECK(typical_sdim(make_weight({2, -4}, {5, -5})) == Fraction(77, 240));
    CHECK(typical_sdim(make_weight({3, -4}, {5, -5})) == Fraction(22, 45));
    CHECK_THROWS_AS(typical_sdim(W("[3,0,0]")), domain_error);
}

TEST_CASE("modified superdimension") {
    auto s = modified_sdim(W("[3,0,0]"));
    CHECK(s.sign == -1);
    CHECK(s.magnitude == Fraction(3));
    CHECK(modified_sdim(trivial_weight(4)).value() == Fraction(1));
    CHECK(modified_sdim(W("[3,0,-1,-1]")).magnitude == Fraction(8));
    // superdimension is omega at -1 on maximal atypical weights
    for (const auto& w : enumerate_maximal_atypical(3, 3))
        CHECK(modified_sdim(w).value() == Fraction((Int)epsilon(w) * multiplicity(w)));
}

TEST_CASE("ground states of arbitrary blocks") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 2 + (int)(rng() % 4);             // rank 2..5
        int i = 1 + (int)(rng() % n);             // atypicality 1..n
        int marks = n - i;
        PosSet crosses, circles, used;
        while ((int)crosses.size() < marks) {
            Int p = (Int)(rng() % 13) - 2;        // in [-2, 10]
            if (!used.count(p)) { crosses.insert(p); used.insert(p); }
        }
        while ((int)circles.size() < marks) {
            Int p = (Int)(rng() % 13) - 2;
            if (!used.count(p)) { circles.insert(p); used.insert(p); }
        }
        Int min_block = used.empty() ? 100 : *used.begin();
        Int shift = min_block + n - i - 1 - (Int)(rng() % 5);
        Weight gs = ground_state(n, crosses, circles, shift);
        // single sector, delta_1 = shift
        CHECK(delta_vector(gs) == std::vector<Int>{shift});
        auto img = ds(gs);
        REQUIRE(img.size() == 1);
        CHECK(img[0].delta == shift);
        if (i >= 2) CHECK(img[0].w == ground_state(n - 1, crosses, circles, shift));
    }
}
