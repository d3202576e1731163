#pragma once

// Closed-form tables around the Kac module of the trivial module:
// its constituents L_a, the invariants I_a, the cohomology tables of the
// modules Q_a, and the hook irreducibles with self-extensions.

#include "gln/dual.hpp"
#include "gln/ds.hpp"

namespace gln {

// L_a = Ber^{-a} (x) [a,..,a,0,..,0] with a repeated n-a times, for a = 0..n
inline Weight kac_constituent(int n, int a) {
    require(a >= 0 && a <= n, "constituent index out of range");
    std::vector<Int> l(n, 0);
    for (int i = 0; i < n - a; ++i) l[i] = a;
    return berezin_twist(bracket_weight(l), -a);
}

// I_a = Ber^{-a-1} (x) [(a+1)^(n-a-1), 0^a] of rank n-1, for a = 0..n-1
inline Weight kac_invariant(int n, int a) {
    require(a >= 0 && a <= n - 1, "invariant index out of range");
    std::vector<Int> l(n - 1, 0);
    for (int i = 0; i < n - 1 - a; ++i) l[i] = a + 1;
    return berezin_twist(bracket_weight(l), -a - 1);
}

inline std::vector<Weight> kac_one_constituents(int n) {
    std::vector<Weight> out;
    for (int a = 0; a <= n; ++a) out.push_back(kac_constituent(n, a));
    return out;
}

struct GradedPiece {
    Int degree = 0;                 // cohomological degree
    std::vector<Weight> summands;   // semisimple content
};

// cohomology of L_a is concentrated in degree -a: I_a + I_{a-1}
inline GradedPiece l_a_cohomology(int n, int a) {
    GradedPiece g;
    g.degree = -a;
    if (a <= n - 1) g.summands.push_back(kac_invariant(n, a));
    if (a >= 1 && a - 1 <= n - 1) g.summands.push_back(kac_invariant(n, a - 1));
    return g;
}

// H^{-nu}(Q_a) = I_nu + I_{nu-1} for nu = 0..a, zero elsewhere
inline std::vector<GradedPiece> q_a_cohomology(int n, int a) {
    require(a >= 0 && a <= n, "Q index out of range");
    std::vector<GradedPiece> out;
    for (int nu = 0; nu <= a; ++nu) {
        GradedPiece g = l_a_cohomology(n, nu);
        if (!g.summands.empty()) out.push_back(std::move(g));
    }
    return out;
}

// Dirac cohomology of Q_a: I_a in degree -a (for a <= n-1), zero for Q_n = V(1)
inline GradedPiece q_a_dirac(int n, int a) {
    require(a >= 0 && a <= n, "Q index out of range");
    GradedPiece g;
    g.degree = -a;
    if (a <= n - 1) g.summands.push_back(kac_invariant(n, a));
    return g;
}

// ---------------------------------------------------------------------------
// hooks: the n+1 irreducibles with nontrivial self-extension class

// L_n(i) = [i, 1^(i-1), 0^(n-i)] for i = 1..n (so L_n(1) = S^1, L_n(n) = Ber (x) S^{n-1})
inline Weight hook_weight(int n, int i) {
    require(i >= 1 && i <= n, "hook index out of range");
    std::vector<Int> l(n, 0);
    l[0] = i;
    for (int j = 1; j < i; ++j) l[j] = 1;
    return bracket_weight(l);
}

inline std::vector<Weight> hooks(int n) {
    std::vector<Weight> out;
    for (int i = 1; i <= n; ++i) out.push_back(hook_weight(n, i));
    out.push_back(dual_weight(hook_weight(n, n)));  // = [0,..,0,-1]
    return out;
}

}  // namespace gln
