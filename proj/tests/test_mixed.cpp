#include <doctest.h>

#include "gln/mixed.hpp"

using namespace gln;

static Bipartition B(const std::string& s) { return parse_bipartition(s); }

static std::vector<std::vector<Int>> partitions_up_to(Int maxpart, Int maxlen) {
    std::vector<std::vector<Int>> out{{}};
    std::vector<Int> cur;
    auto rec = [&](auto&& self, Int hi) -> void {
        if ((Int)cur.size() == maxlen) return;
        for (Int v = hi; v >= 1; --v) {
            cur.push_back(v);
            out.push_back(cur);
            self(self, v);
            cur.pop_back();
        }
    };
    rec(rec, maxpart);
    return out;
}

TEST_CASE("bipartition parsing and invariants") {
    CHECK(format_bipartition(B("((3,1),(2))")) == "((3,1),(2))");
    CHECK(B("((),())") == make_bipartition({}, {}));
    auto inv = mixed_invariants(B("((1),(1,1))"));
    CHECK(inv.crosses == 1);
    CHECK(inv.defect == 0);
    CHECK(inv.k() == 1);
    CHECK(inv.loewy_length() == 1);
    // the symmetric-power family has defect one
    auto sp = mixed_invariants(B("((3),(1,1,1))"));
    CHECK(sp.crosses == 0);
    CHECK(sp.defect == 1);
    CHECK(mixed_invariants(B("((),()) ")).k() == 0);
}

TEST_CASE("dictionary on the worked example") {
    CHECK(theta(B("((1),(1,1))"), 2) == make_weight({1, 0}, {0, -2}));
    CHECK(theta_inverse(make_weight({1, 0}, {0, -2})) == B("((1),(1,1))"));
    CHECK(theta(B("((),())"), 3) == trivial_weight(3));
}

TEST_CASE("symmetric-power family") {
    for (int n = 2; n <= 4; ++n)
        for (Int i = 1; i <= n; ++i) {
            std::vector<Int> ones((size_t)i, 1);
            Bipartition b = make_bipartition({i}, ones);
            CHECK(mixed_invariants(b).defect == 1);
            CHECK(theta(b, n) == sym_power(n, i - 1));
        }
    // ((2),(1,1)) is the i = 2 member of the family
    CHECK(theta(B("((2),(1,1))"), 5) == sym_power(5, 1));
    // defect two, outside the family: no closed form implemented
    CHECK(mixed_invariants(B("((2,1),(2,1))")).defect == 2);
    CHECK_THROWS_AS((void)theta(B("((2,1),(2,1))"), 8), domain_error);
}

TEST_CASE("round trip over small defect-zero cross bipartitions") {
    auto parts = partitions_up_to(4, 4);
    int checked = 0;
    for (int n = 1; n <= 4; ++n)
        for (const auto& l : parts)
            for (const auto& r : parts) {
                Bipartition b = make_bipartition(l, r);
                auto inv = mixed_invariants(b);
                if (inv.defect != 0 || inv.k() > n) continue;
                Weight w = theta(b, n);
                CHECK(atypicality(w) == n - inv.k());
                CHECK(theta_inverse(w) == b);
                ++checked;
            }
    CHECK(checked > 100);
}

TEST_CASE("functor on mixed tensors") {
    // non-projective irreducible mixed tensors survive with one summand
    auto parts = partitions_up_to(3, 3);
    for (int n = 2; n <= 4; ++n)
        for (const auto& l : parts)
            for (const auto& r : parts) {
                Bipartition b = make_bipartition(l, r);
                auto inv = mixed_invariants(b);
                if (inv.defect != 0 || inv.k() > n) continue;
                Weight w = theta(b, n);
                if (inv.k() == n) {
                    CHECK(ds_mixed_vanishes(b, n));
                    CHECK(ds(w).empty());
                } else {
                    CHECK(!ds_mixed_vanishes(b, n));
                    auto img = ds(w);
                    REQUIRE(img.size() == 1);
                    // same bipartition one rank down
                    CHECK(theta_inverse(img[0].w) == b);
                    CHECK(img[0].w == theta(b, n - 1));
                }
            }
}
