#include <doctest.h>

#include "gln/plot.hpp"

using namespace gln;

TEST_CASE("derivatives of sectors") {
    PosSet K{-2, -1, 2, 3};
    auto secs = plot_sectors(K);
    REQUIRE(secs.size() == 2);
    CHECK(secs[0].a == -2);
    CHECK(secs[0].b == 1);
    CHECK(secs[1].a == 2);
    CHECK(secs[1].b == 5);
    auto ders = plot_derivatives(K);
    REQUIRE(ders.size() == 2);
    CHECK(ders[0] == PosSet{-1, 2, 3});
    CHECK(ders[1] == PosSet{-2, -1, 3});
    CHECK_THROWS_AS(derive_sector(K, -1), domain_error);  // not a sector start
}

TEST_CASE("integrals of segments") {
    PosSet K{-2, -1, 2, 3};
    CHECK(integrate_segment(K, -2) == PosSet{-3, -2, -1, 2, 3});
    CHECK(integrate_segment(PosSet{-2, -1, 3}, 3) == PosSet{-2, -1, 2, 3});
    // empty segment: integral creates a fresh rank-1 sector
    CHECK(integrate_segment(PosSet{}, 1) == PosSet{0});
    CHECK_THROWS_AS(integrate_segment(K, 0), domain_error);  // inside a sector interval
}

TEST_CASE("melting adjacent sectors") {
    CHECK(melt_sectors(PosSet{-2, -1, 2, 3}, 1) == PosSet{-2, -1, 1, 3});
    CHECK(melt_sectors(PosSet{0, 2}, 1) == PosSet{0, 1});
    CHECK_THROWS_AS(melt_sectors(PosSet{0, 4}, 1), domain_error);  // not adjacent
}

TEST_CASE("lowering a sector") {
    CHECK(lower_sector(PosSet{0, 2}, 2) == PosSet{0, 1});
    CHECK(lower_sector(PosSet{-2, -1, 2, 3}, 2) == PosSet{-2, -1, 1, 3});
}

TEST_CASE("derivative sectors stay contiguous") {
    // the sectors of a derivative of a single sector form one segment
    auto check_contiguous = [](const PosSet& K) {
        for (const auto& der : plot_derivatives(K)) {
            if (der.empty()) continue;
            auto segs = plot_segments(plot_sectors(der));
            (void)segs;
        }
    };
    check_contiguous(PosSet{-3, -2, -1});
    PosSet big{-4, -3, -1, 3};
    for (const auto& s : plot_sectors(big)) {
        PosSet in(s.supp.begin(), s.supp.end());
        auto der = derive_sector(in, s.a);
        if (der.empty()) continue;
        auto segs = plot_segments(plot_sectors(der));
        CHECK(segs.size() == 1);  // contiguous chain
    }
}
