#pragma once

// Spaced forests attached to atypical weights, the multiplicity |F|!/F!
// and the quantum forest formula for the Laurent polynomial omega.

#include "gln/laurent.hpp"

namespace gln {

struct Tree {
    std::vector<Tree> children;

    Int size() const {
        Int s = 1;
        for (const auto& c : children) s += c.size();
        return s;
    }
    bool operator==(const Tree& o) const { return children == o.children; }
    bool operator!=(const Tree& o) const { return !(*this == o); }
};

struct SpacedForest {
    Int d0 = 0;
    std::vector<Tree> trees;
    std::vector<Int> gaps;  // gap after tree i (i < trees.size()-1); last entry is 0

    Int rank() const {
        Int s = 0;
        for (const auto& t : trees) s += t.size();
        return s;
    }
    bool operator==(const SpacedForest& o) const {
        return d0 == o.d0 && trees == o.trees && gaps == o.gaps;
    }
};

// tree of a single sector: root plus, recursively, the sectors of the derivative
inline Tree sector_tree(const std::vector<Int>& supp) {
    Tree t;
    PosSet rest(supp.begin() + 1, supp.end());
    for (const auto& s : plot_sectors(rest)) t.children.push_back(sector_tree(s.supp));
    return t;
}

inline SpacedForest spaced_forest(const Weight& w) {
    require(atypicality(w) >= 1, "spaced forest needs an atypical weight");
    SpacedForest f;
    f.d0 = d0_value(w);
    auto secs = plot_sectors(compressed_support(weight_diagram(w)));
    for (const auto& s : secs) f.trees.push_back(sector_tree(s.supp));
    f.gaps = sector_gaps(secs);
    f.gaps.push_back(0);
    return f;
}

// place the tree's sector starting at a; returns the vee positions
inline void place_tree(const Tree& t, Int a, PosSet& supp) {
    supp.insert(a);
    Int pos = a + 1;
    for (const auto& c : t.children) {
        place_tree(c, pos, supp);
        pos += 2 * c.size();
    }
}

// maximally atypical weight with the given spaced forest
inline Weight weight_from_spaced_forest(const SpacedForest& f) {
    Int r = f.rank();
    PosSet supp;
    Int start = f.d0 - r + 1;
    for (size_t i = 0; i < f.trees.size(); ++i) {
        place_tree(f.trees[i], start, supp);
        start += 2 * f.trees[i].size() + (i < f.gaps.size() ? f.gaps[i] : 0);
    }
    return bracket_from_support(supp);
}

// product over all nodes of (subtree size), resp. quantum [subtree size]_t
inline Int tree_factorial(const Tree& t) {
    Int f = t.size();
    for (const auto& c : t.children) f *= tree_factorial(c);
    return f;
}

inline Laurent quantum_tree_factorial(const Tree& t) {
    Laurent f = quantum_int(t.size());
    for (const auto& c : t.children) f = f * quantum_tree_factorial(c);
    return f;
}

inline Int factorial(Int m) {
    Int f = 1;
    for (Int k = 2; k <= m; ++k) f *= k;
    return f;
}

// multiplicity m(w) = |F|! / F! over the nesting forest of all cups
inline Int multiplicity(const Weight& w) {
    int i = atypicality(w);
    if (i == 0) return 1;
    SpacedForest f = spaced_forest(w);
    Int ffact = 1;
    for (const auto& t : f.trees) ffact *= tree_factorial(t);
    require(factorial(i) % ffact == 0, "forest factorial does not divide |F|!");
    return factorial(i) / ffact;
}

// omega(w, t) = t^D [n]_t! / [forest of basic(w)]_t!, D = sum of rank * delta
inline Laurent omega(const Weight& w) {
    require(is_maximal_atypical(w), "omega needs a maximally atypical weight");
    int n = w.n;
    if (n == 0) return Laurent::one();
    auto secs = plot_sectors(compressed_support(weight_diagram(w)));
    auto deltas = delta_vector(w);
    Int D = 0;
    for (size_t i = 0; i < secs.size(); ++i) D += secs[i].rank() * deltas[i];
    Laurent denom = Laurent::one();
    for (const auto& s : secs) denom = denom * quantum_tree_factorial(sector_tree(s.supp));
    Laurent q = divide_exact(quantum_factorial(n), denom);
    return Laurent::monomial(D) * q;
}

}  // namespace gln
