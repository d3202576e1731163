#pragma once

// Duals of irreducible modules in the three encodings: weight diagrams
// (swap the labels of every cup, then reflect at 1/2), plots and spaced forests.

#include "gln/forest.hpp"

namespace gln {

inline Weight dual_weight(const Weight& w) {
    Diagram d = weight_diagram(w);
    auto cups = cup_diagram(d);
    require((int)cups.size() == (int)d.downs.size(), "every vee must close a cup");
    Diagram nd;
    nd.n = w.n;
    for (Int s : d.crosses) nd.crosses.insert(1 - s);
    for (Int s : d.circles) nd.circles.insert(1 - s);
    for (const auto& c : cups) nd.downs.insert(1 - c.b);  // wedge foot becomes the vee
    return from_diagram(nd);
}

inline PosSet dual_plot(const PosSet& supp) {
    PosSet out;
    for (const auto& s : plot_sectors(supp)) {
        PosSet in(s.supp.begin(), s.supp.end());
        for (Int p = s.a; p <= s.b; ++p)
            if (!in.count(p)) out.insert(1 - p);
    }
    return out;
}

inline Tree mirror_tree(const Tree& t) {
    Tree out;
    for (auto it = t.children.rbegin(); it != t.children.rend(); ++it)
        out.children.push_back(mirror_tree(*it));
    return out;
}

inline SpacedForest dual_spaced_forest(const SpacedForest& f) {
    SpacedForest out;
    Int total = f.d0;
    for (size_t i = 0; i + 1 < f.trees.size(); ++i) total += f.gaps[i];
    out.d0 = -total;
    for (auto it = f.trees.rbegin(); it != f.trees.rend(); ++it)
        out.trees.push_back(mirror_tree(*it));
    // gaps reverse: gap after dual tree i is the original gap d_{k-i}
    size_t k = f.trees.size();
    for (size_t i = 0; i + 1 < k; ++i) out.gaps.push_back(f.gaps[k - 2 - i]);
    out.gaps.push_back(0);
    return out;
}

// partition transpose, used for the basic-weight duality tests
inline std::vector<Int> transpose_partition(std::vector<Int> p, int len) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    std::vector<Int> out(len, 0);
    for (int i = 0; i < len; ++i)
        for (Int x : p)
            if (x > i) ++out[i];
    return out;
}

}  // namespace gln
