#pragma once

// The cohomological tensor functor from Gl(n|n) to Gl(n-1|n-1) on irreducible
// modules, with its full integer grading, iterated versions, the induced
// derivative on the Grothendieck group, and (modified) superdimensions.

#include "gln/forest.hpp"
#include "gln/rational.hpp"

namespace gln {

struct DsSummand {
    Weight w;     // irreducible summand, rank n-1
    Int delta;    // sits in degree -delta (reported as <-delta>), parity (-1)^delta
    bool operator==(const DsSummand& o) const { return w == o.w && delta == o.delta; }
    bool operator<(const DsSummand& o) const {
        if (delta != o.delta) return delta < o.delta;
        return w < o.w;
    }
};

inline std::vector<DsSummand> ds(const Weight& w) {
    require(w.n >= 1, "ds needs positive rank");
    Diagram d = weight_diagram(w);
    auto del = deleted_positions(d);
    PosSet K = compressed_support(d);
    auto secs = plot_sectors(K);
    std::vector<Int> deltas = K.empty() ? std::vector<Int>{} : delta_vector(w);
    std::vector<DsSummand> out;
    for (size_t i = 0; i < secs.size(); ++i) {
        PosSet rest = K;
        rest.erase(secs[i].a);  // drop the leftmost vee of the sector
        Diagram nd;
        nd.n = w.n - 1;
        nd.crosses = d.crosses;
        nd.circles = d.circles;
        for (Int q : rest) nd.downs.insert(uncompress_pos(q, del));
        out.push_back({from_diagram(nd), deltas[i]});
    }
    return out;
}

// iterated functor with accumulated degrees
inline std::vector<DsSummand> ds_iter(const Weight& w, int times) {
    std::vector<DsSummand> cur{{w, 0}};
    for (int r = 0; r < times; ++r) {
        std::vector<DsSummand> next;
        for (const auto& s : cur)
            for (const auto& t : ds(s.w)) next.push_back({t.w, s.delta + t.delta});
        cur = std::move(next);
    }
    std::sort(cur.begin(), cur.end());
    return cur;
}

// Hilbert polynomial of the full flattening down to rank w.n - times
inline Laurent hilbert_poly(const Weight& w, int times) {
    Laurent p;
    for (const auto& s : ds_iter(w, times)) p.add_term(s.delta, 1);
    return p;
}

// ---------------------------------------------------------------------------
// Grothendieck-group derivative

using K0Element = std::map<Weight, Int>;  // finite integer combination of irreducibles

inline void k0_add(K0Element& e, const Weight& w, Int c) {
    auto it = e.find(w);
    if (it == e.end()) {
        if (c != 0) e[w] = c;
    } else {
        it->second += c;
        if (it->second == 0) e.erase(it);
    }
}

inline K0Element k0_scale(const K0Element& e, Int c) {
    K0Element out;
    for (auto& [w, v] : e) k0_add(out, w, v * c);
    return out;
}

inline K0Element k0_sum(const K0Element& a, const K0Element& b) {
    K0Element out = a;
    for (auto& [w, v] : b) k0_add(out, w, v);
    return out;
}

inline K0Element derivative_k0(const Weight& w) {
    K0Element out;
    for (const auto& s : ds(w)) k0_add(out, s.w, (s.delta % 2 == 0) ? 1 : -1);
    return out;
}

inline std::string k0_str(const K0Element& e) {
    if (e.empty()) return "0";
    std::string s;
    for (auto& [w, v] : e) {
        if (s.empty())
            s += (v < 0 ? "-" : "");
        else
            s += (v < 0 ? " - " : " + ");
        Int a = v < 0 ? -v : v;
        if (a != 1) s += std::to_string(a) + "*";
        s += format_weight(w);
    }
    return s;
}

// ---------------------------------------------------------------------------
// core and multiplicity, superdimensions

struct CoreData {
    Weight core;  // typical weight of rank n - atypicality
    Int mult;     // multiplicity m(w)
};

inline CoreData core_and_multiplicity(const Weight& w) {
    Diagram d = weight_diagram(w);
    Diagram cd;
    cd.n = w.n - (int)d.downs.size();
    cd.crosses = d.crosses;
    cd.circles = d.circles;
    return {from_diagram(cd), multiplicity(w)};
}

// exact superdimension-type scalar of a typical weight:
// product of Weyl ratios for both even halves over the odd factors
inline Fraction typical_sdim(const Weight& w) {
    require(atypicality(w) == 0, "typical_sdim needs a typical weight");
    int m = w.n;
    Fraction val(1);
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            val = val * Fraction(w.left[i - 1] - w.left[j - 1] + j - i, j - i);
            val = val * Fraction(w.right[i - 1] - w.right[j - 1] + j - i, j - i);
        }
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            Int odd = w.left[i - 1] + w.right[j - 1] + m + 1 - i - j;
            require(odd != 0, "vanishing odd factor on a typical weight");
            val = val / Fraction(odd);
        }
    return val;
}

struct ModifiedSdim {
    int sign = 1;        // epsilon(w) * sign of the core value
    Fraction magnitude;  // m(w) * |typical_sdim(core)|
    Fraction value() const { return magnitude * Fraction(sign); }
};

inline ModifiedSdim modified_sdim(const Weight& w) {
    CoreData cd = core_and_multiplicity(w);
    Fraction core_val = (cd.core.n == 0) ? Fraction(1) : typical_sdim(cd.core);
    ModifiedSdim out;
    out.sign = epsilon(w) * core_val.sign();
    out.magnitude = core_val.abs() * Fraction(cd.mult);
    return out;
}

// ---------------------------------------------------------------------------
// ground states of an arbitrary block

inline Weight ground_state(int n, const PosSet& crosses, const PosSet& circles, Int shift) {
    require(crosses.size() == circles.size(), "block needs equal cross/circle counts");
    int i = n - (int)crosses.size();
    require(i >= 1 && i <= n, "block has no atypical ground state at this rank");
    Diagram d;
    d.n = n;
    d.crosses = crosses;
    d.circles = circles;
    for (Int k = 1; k <= i; ++k) d.downs.insert(shift - n + k);
    Int min_block = 0;
    if (!crosses.empty() || !circles.empty()) {
        min_block = crosses.empty() ? *circles.begin()
                 : circles.empty() ? *crosses.begin()
                 : std::min(*crosses.begin(), *circles.begin());
        require(shift - n + i < min_block, "ground state vees must sit left of the block symbols");
    }
    return from_diagram(d);
}

}  // namespace gln
