#pragma once

// Plot calculus: derivatives, integrals, melting and lowering of sectors.
// A plot is a finite set of vee positions; sectors/segments come from core.hpp.

#include "gln/core.hpp"

namespace gln {

inline Sector sector_of(const PosSet& supp, Int a) {
    for (const auto& s : plot_sectors(supp))
        if (s.a == a) return s;
    throw domain_error("no sector starting at " + std::to_string(a));
}

inline bool is_sector_start(const PosSet& supp, Int a) {
    for (const auto& s : plot_sectors(supp))
        if (s.a == a) return true;
    return false;
}

// derivative of one sector: drop its leftmost vee
inline PosSet derive_sector(const PosSet& supp, Int a) {
    require(is_sector_start(supp, a), "derivative needs a sector start");
    PosSet out = supp;
    out.erase(a);
    return out;
}

// derivative of the whole plot: one plot per sector
inline std::vector<PosSet> plot_derivatives(const PosSet& supp) {
    std::vector<PosSet> out;
    for (const auto& s : plot_sectors(supp)) out.push_back(derive_sector(supp, s.a));
    return out;
}

// integral of a segment starting at a: grow it by a vee at a-1.
// The empty segment at [i+1, i] integrates to the sector ([i, i+1], {i}).
inline PosSet integrate_segment(const PosSet& supp, Int a) {
    if (!supp.empty()) {
        auto secs = plot_sectors(supp);
        auto segs = plot_segments(secs);
        bool found = false;
        for (auto [f, l] : segs)
            if (secs[f].a == a) found = true;
        if (found) {
            PosSet out = supp;
            out.insert(a - 1);
            return out;
        }
        // otherwise an empty segment: a-1 must not collide with anything
        for (const auto& s : secs)
            require(a - 1 > s.b || a < s.a, "integral target overlaps a sector");
    }
    PosSet out = supp;
    out.insert(a - 1);
    return out;
}

// melt two adjacent sectors (first one ends at i, next starts at i+1)
inline PosSet melt_sectors(const PosSet& supp, Int i) {
    auto secs = plot_sectors(supp);
    int first = -1, second = -1;
    for (size_t k = 0; k + 1 < secs.size(); ++k)
        if (secs[k].b == i && secs[k + 1].a == i + 1) {
            first = (int)k;
            second = (int)k + 1;
        }
    require(first >= 0, "melt needs adjacent sectors meeting at the boundary");
    PosSet out = supp;
    out.insert(i);
    out.erase(i + 1);
    (void)second;
    return out;
}

// lowering of a sector: shift its leading vee one step left
inline PosSet lower_sector(const PosSet& supp, Int a) {
    require(is_sector_start(supp, a), "lowering needs a sector start");
    PosSet out = supp;
    out.erase(a);
    out.insert(a - 1);
    return out;
}

}  // namespace gln
