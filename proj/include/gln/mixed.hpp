#pragma once

// Mixed tensors: bipartitions, their diagrams and invariants (a, d, k),
// the dictionary theta to dominant weights (defect-zero case) and the
// behaviour of mixed tensors under the cohomological functor.

#include "gln/ds.hpp"

namespace gln {

struct Bipartition {
    std::vector<Int> L, R;  // two partitions (weakly decreasing, positive parts)

    bool operator==(const Bipartition& o) const { return L == o.L && R == o.R; }
    bool operator<(const Bipartition& o) const { return std::tie(L, R) < std::tie(o.L, o.R); }
};

inline std::vector<Int> normalize_partition(std::vector<Int> p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    require(weakly_decreasing(p) && (p.empty() || p.back() > 0), "not a partition");
    return p;
}

inline Bipartition make_bipartition(std::vector<Int> l, std::vector<Int> r) {
    return {normalize_partition(std::move(l)), normalize_partition(std::move(r))};
}

// "((3,1),(2))" -> L = (3,1), R = (2); "()" denotes the empty partition
inline Bipartition parse_bipartition(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace((unsigned char)c)) s += c;
    require(s.size() >= 6 && s.front() == '(' && s.back() == ')',
            "bipartition must look like ((..),(..))");
    int depth = 0;
    size_t split = 0;
    for (size_t i = 1; i + 1 < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')') --depth;
        else if (s[i] == ',' && depth == 0) split = i;
    }
    require(split != 0, "bipartition needs two components");
    auto strip = [](std::string t) {
        require(t.size() >= 2 && t.front() == '(' && t.back() == ')',
                "component must be parenthesised");
        return t.substr(1, t.size() - 2);
    };
    return make_bipartition(parse_int_list(strip(s.substr(1, split - 1))),
                            parse_int_list(strip(s.substr(split + 1, s.size() - split - 2))));
}

inline std::string format_bipartition(const Bipartition& b) {
    return "((" + join_ints(b.L) + "),(" + join_ints(b.R) + "))";
}

// label of position s in the bipartition diagram
// wedge set {L_i - i + 1}, vee set {i - R_i}, i >= 1 with trailing zeros
enum class MixedLabel { Wedge, Vee, Cross, Circle };

inline bool mixed_in_wedge(const Bipartition& b, Int s) {
    Int len = (Int)b.L.size();
    if (s <= -len) return true;  // tail: L_i = 0 gives position 1 - i
    for (Int i = 1; i <= len; ++i)
        if (b.L[i - 1] - i + 1 == s) return true;
    return false;
}

inline bool mixed_in_vee(const Bipartition& b, Int s) {
    Int len = (Int)b.R.size();
    if (s > len) return true;  // tail: R_i = 0 gives position i
    for (Int i = 1; i <= len; ++i)
        if (i - b.R[i - 1] == s) return true;
    return false;
}

inline MixedLabel mixed_label(const Bipartition& b, Int s) {
    bool w = mixed_in_wedge(b, s), v = mixed_in_vee(b, s);
    if (w && v) return MixedLabel::Cross;
    if (w) return MixedLabel::Wedge;
    if (v) return MixedLabel::Vee;
    return MixedLabel::Circle;
}

// window containing every cross, circle and matched cup of the diagram
inline std::pair<Int, Int> mixed_window(const Bipartition& b) {
    Int span = (Int)b.L.size() + (Int)b.R.size() + 2;
    if (!b.L.empty()) span += b.L[0];
    if (!b.R.empty()) span += b.R[0];
    return {-span, span};
}

struct MixedInvariants {
    Int crosses = 0;  // a
    Int defect = 0;   // d
    Int k() const { return crosses + defect; }
    Int loewy_length() const { return 2 * defect + 1; }
};

inline MixedInvariants mixed_invariants(const Bipartition& b) {
    auto [lo, hi] = mixed_window(b);
    MixedInvariants out;
    Int stack = 0;
    for (Int s = lo; s <= hi; ++s) {
        switch (mixed_label(b, s)) {
            case MixedLabel::Cross: ++out.crosses; break;
            case MixedLabel::Vee: ++stack; break;
            case MixedLabel::Wedge:
                if (stack > 0) {
                    --stack;
                    ++out.defect;
                }
                break;
            case MixedLabel::Circle: break;
        }
    }
    return out;
}

inline bool is_cross_bipartition(const Bipartition& b, int n) {
    return mixed_invariants(b).k() <= n;
}
inline bool mixed_irreducible(const Bipartition& b) { return mixed_invariants(b).defect == 0; }
inline bool mixed_projective(const Bipartition& b, int n) { return mixed_invariants(b).k() == n; }

// the functor kills an irreducible mixed tensor exactly when it is projective
inline bool ds_mixed_vanishes(const Bipartition& b, int n) {
    require(is_cross_bipartition(b, n), "not a cross bipartition for this rank");
    return mixed_invariants(b).k() == n;
}

// ---------------------------------------------------------------------------
// the dictionary theta for defect-zero bipartitions (plus the S-family)

struct SwitchPlan {
    Int t = 0;      // toggle every free label at position >= t
    Int count = 0;  // and this many free labels below t, walking down from t - 1
};

inline SwitchPlan switch_plan(Int k, bool has_marks, Int max_mark, int n) {
    Int m1 = has_marks ? max_mark + 1 : k + 1;
    SwitchPlan sp;
    sp.t = std::max(k + 1, m1);
    Int s = (m1 <= k + 1) ? 0 : max_mark - k;
    sp.count = s + (Int)n - k;
    require(sp.count >= 0, "switch count went negative");
    return sp;
}

// shared toggle engine: flips labels on a map position -> is-vee
inline void apply_switch(std::map<Int, bool>& is_vee, const SwitchPlan& sp) {
    for (auto& [pos, vee] : is_vee)
        if (pos >= sp.t) vee = !vee;
    Int todo = sp.count;
    for (auto it = is_vee.rbegin(); it != is_vee.rend() && todo > 0; ++it) {
        if (it->first >= sp.t) continue;
        it->second = !it->second;
        --todo;
    }
    require(todo == 0, "ran out of free labels while switching");
}

inline Weight theta(const Bipartition& b, int n) {
    MixedInvariants inv = mixed_invariants(b);
    require(inv.k() <= n, "theta needs a cross bipartition");
    if (inv.defect > 0) {
        // only the symmetric-power family is supported beyond defect zero
        if (b.L.size() == 1 && (Int)b.R.size() == b.L[0] &&
            std::all_of(b.R.begin(), b.R.end(), [](Int x) { return x == 1; }))
            return sym_power(n, b.L[0] - 1);
        throw domain_error("theta is unsupported for defect > 0 bipartitions");
    }
    auto [lo, hi] = mixed_window(b);
    // widen so that every label touched by the switching stays in the window
    hi = std::max(hi, inv.k() + (Int)n + 2);
    lo = lo - (Int)n - hi - 8;
    PosSet crosses, circles;
    std::map<Int, bool> is_vee;
    for (Int s = lo; s <= hi; ++s) {
        switch (mixed_label(b, s)) {
            case MixedLabel::Cross: crosses.insert(s); break;
            case MixedLabel::Circle: circles.insert(s); break;
            case MixedLabel::Vee: is_vee[s] = true; break;
            case MixedLabel::Wedge: is_vee[s] = false; break;
        }
    }
    bool has_marks = !crosses.empty() || !circles.empty();
    Int max_mark = 0;
    if (has_marks) {
        max_mark = crosses.empty() ? *circles.rbegin()
                 : circles.empty() ? *crosses.rbegin()
                 : std::max(*crosses.rbegin(), *circles.rbegin());
    }
    apply_switch(is_vee, switch_plan(inv.k(), has_marks, max_mark, n));
    Diagram d;
    d.n = n;
    d.crosses = crosses;
    d.circles = circles;
    for (auto& [pos, vee] : is_vee)
        if (vee) d.downs.insert(pos);
    require((int)(d.downs.size() + d.crosses.size()) == n,
            "switching produced a bad vee count");
    return from_diagram(d);
}

inline Bipartition theta_inverse(const Weight& w) {
    Diagram d = weight_diagram(w);
    Int k = (Int)w.n - (Int)d.downs.size();  // a + d with d = 0
    bool has_marks = !d.crosses.empty() || !d.circles.empty();
    Int max_mark = 0;
    if (has_marks) {
        max_mark = d.crosses.empty() ? *d.circles.rbegin()
                 : d.circles.empty() ? *d.crosses.rbegin()
                 : std::max(*d.crosses.rbegin(), *d.circles.rbegin());
    }
    SwitchPlan sp = switch_plan(k, has_marks, max_mark, w.n);
    Int span = 2 * ((Int)w.n + k) + 8;
    auto widen = [&](Int p) { span = std::max(span, (p < 0 ? -p : p) + (Int)w.n + 4); };
    for (Int p : d.downs) widen(p);
    for (Int p : d.crosses) widen(p);
    for (Int p : d.circles) widen(p);
    widen(sp.t);
    Int lo = -span, hi = span;
    std::map<Int, bool> is_vee;
    for (Int s = lo; s <= hi; ++s) {
        if (d.crosses.count(s) || d.circles.count(s)) continue;
        is_vee[s] = d.downs.count(s) > 0;
    }
    apply_switch(is_vee, sp);
    // wedge set = wedges and crosses (descending), vee set = vees and crosses
    std::vector<Int> wedge_pos, vee_pos;
    for (Int s = hi; s >= lo; --s)
        if (d.crosses.count(s) || (is_vee.count(s) && !is_vee.at(s))) wedge_pos.push_back(s);
    for (Int s = lo; s <= hi; ++s)
        if (d.crosses.count(s) || (is_vee.count(s) && is_vee.at(s))) vee_pos.push_back(s);
    auto read_partition = [](const std::vector<Int>& pos, bool left) {
        std::vector<Int> parts;
        bool tail = false;
        for (size_t i = 1; i <= pos.size(); ++i) {
            Int v = left ? pos[i - 1] + (Int)i - 1 : (Int)i - pos[i - 1];
            require(v >= 0, "inverse switching did not yield a partition");
            if (v == 0) tail = true;
            else {
                require(!tail, "inverse switching did not yield a partition");
                parts.push_back(v);
            }
        }
        require(weakly_decreasing(parts), "inverse switching did not yield a partition");
        return parts;
    };
    return make_bipartition(read_partition(wedge_pos, true), read_partition(vee_pos, false));
}

}  // namespace gln
