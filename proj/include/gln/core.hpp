#pragma once

// Core combinatorics for highest weights of Gl(n|n): dominant weights, weight
// diagrams (crosses / circles / vees), cup matching, sector decompositions,
// Berezin twists and the block equivalence to the maximally atypical block.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gln {

using Int = long long;
using PosSet = std::set<Int>;

struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw domain_error(msg);
}

// ---------------------------------------------------------------------------
// weights

struct Weight {
    int n = 0;                     // gl(n|n)
    std::vector<Int> left, right;  // lambda_1..lambda_n ; lambda_{n+1}..lambda_{2n}

    bool operator==(const Weight& o) const {
        return n == o.n && left == o.left && right == o.right;
    }
    bool operator!=(const Weight& o) const { return !(*this == o); }
    bool operator<(const Weight& o) const {
        if (n != o.n) return n < o.n;
        if (left != o.left) return left < o.left;
        return right < o.right;
    }
};

inline bool weakly_decreasing(const std::vector<Int>& v) {
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] < v[i]) return false;
    return true;
}

inline bool is_dominant(const Weight& w) {
    return (int)w.left.size() == w.n && (int)w.right.size() == w.n &&
           weakly_decreasing(w.left) && weakly_decreasing(w.right);
}

inline Weight make_weight(std::vector<Int> left, std::vector<Int> right) {
    Weight w;
    w.n = (int)left.size();
    w.left = std::move(left);
    w.right = std::move(right);
    require(is_dominant(w), "weight is not dominant");
    return w;
}

// bracket weight [l1..ln] = (l1..ln ; -ln..-l1)
inline Weight bracket_weight(std::vector<Int> left) {
    std::vector<Int> right(left.size());
    for (size_t i = 0; i < left.size(); ++i)
        right[i] = -left[left.size() - 1 - i];
    return make_weight(std::move(left), std::move(right));
}

inline bool is_bracket(const Weight& w) {
    for (int i = 0; i < w.n; ++i)
        if (w.right[i] != -w.left[w.n - 1 - i]) return false;
    return true;
}

inline Weight berezin(int n, Int k) {  // Ber^k
    return make_weight(std::vector<Int>(n, k), std::vector<Int>(n, -k));
}

inline Weight berezin_twist(const Weight& w, Int k) {  // Ber^k (x) w
    Weight r = w;
    for (auto& x : r.left) x += k;
    for (auto& x : r.right) x -= k;
    return r;
}

inline Weight sym_power(int n, Int i) {  // S^i, i >= 1; S^0 = trivial
    require(i >= 0, "S^i needs i >= 0");
    std::vector<Int> l(n, 0);
    if (n > 0) l[0] = i;
    return bracket_weight(l);
}

inline Weight trivial_weight(int n) { return bracket_weight(std::vector<Int>(n, 0)); }

// total weight p = sum of the right half (degree of the top of omega)
inline Int p_value(const Weight& w) {
    Int s = 0;
    for (auto x : w.right) s += x;
    return -s;  // for brackets: sum of the left half
}

// ---------------------------------------------------------------------------
// parsing / formatting

inline std::vector<Int> parse_int_list(const std::string& s) {
    std::vector<Int> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(std::stoll(cur));
            cur.clear();
        } else if (!isspace((unsigned char)c)) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(std::stoll(cur));
    return out;
}

inline Weight parse_weight(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace((unsigned char)c)) s += c;
    require(!s.empty(), "empty weight");
    if (s.front() == '[') {
        require(s.back() == ']', "unbalanced bracket weight");
        return bracket_weight(parse_int_list(s.substr(1, s.size() - 2)));
    }
    require(s.front() == '(' && s.back() == ')', "weight must look like [..] or (..|..)");
    auto bar = s.find('|');
    require(bar != std::string::npos, "full-form weight needs a '|'");
    auto left = parse_int_list(s.substr(1, bar - 1));
    auto right = parse_int_list(s.substr(bar + 1, s.size() - bar - 2));
    require(left.size() == right.size(), "halves of the weight differ in length");
    return make_weight(std::move(left), std::move(right));
}

inline std::string join_ints(const std::vector<Int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

inline std::string format_weight(const Weight& w) {
    if (is_bracket(w)) return "[" + join_ints(w.left) + "]";
    return "(" + join_ints(w.left) + "|" + join_ints(w.right) + ")";
}

// ---------------------------------------------------------------------------
// weight diagrams

struct Diagram {
    int n = 0;
    PosSet crosses, circles, downs;  // x, o, vee; everything else is a wedge
};

inline Diagram weight_diagram(const Weight& w) {
    require(is_dominant(w), "weight is not dominant");
    PosSet ix, io;
    for (int i = 1; i <= w.n; ++i) {
        ix.insert(w.left[i - 1] - i + 1);
        io.insert((Int)i - w.n - w.right[i - 1]);
    }
    require((int)ix.size() == w.n && (int)io.size() == w.n, "coordinates collide");
    Diagram d;
    d.n = w.n;
    for (Int p : ix) (io.count(p) ? d.downs : d.crosses).insert(p);
    for (Int p : io)
        if (!ix.count(p)) d.circles.insert(p);
    return d;
}

inline Weight from_diagram(const Diagram& d) {
    require((int)(d.crosses.size() + d.downs.size()) == d.n &&
                (int)(d.circles.size() + d.downs.size()) == d.n,
            "diagram has wrong symbol counts for the rank");
    std::vector<Int> ix(d.crosses.begin(), d.crosses.end());
    ix.insert(ix.end(), d.downs.begin(), d.downs.end());
    std::sort(ix.rbegin(), ix.rend());
    std::vector<Int> io(d.circles.begin(), d.circles.end());
    io.insert(io.end(), d.downs.begin(), d.downs.end());
    std::sort(io.begin(), io.end());
    std::vector<Int> left(d.n), right(d.n);
    for (int i = 1; i <= d.n; ++i) {
        left[i - 1] = ix[i - 1] + i - 1;
        right[i - 1] = (Int)i - d.n - io[i - 1];
    }
    return make_weight(std::move(left), std::move(right));
}

inline int atypicality(const Weight& w) { return (int)weight_diagram(w).downs.size(); }
inline bool is_maximal_atypical(const Weight& w) { return atypicality(w) == w.n; }

// ---------------------------------------------------------------------------
// cup matching: scan left to right, vees open, free wedges close.

struct Cup {
    Int a = 0, b = 0;  // vee at a, wedge at b
    int parent = -1;   // index of the innermost enclosing cup, -1 if outer
};

inline std::vector<Cup> match_cups(const PosSet& downs, const PosSet& blocked) {
    std::vector<Cup> cups;
    if (downs.empty()) return cups;
    Int lo = *downs.begin();
    Int hi = *downs.rbegin() + (Int)downs.size() + (Int)blocked.size() + 1;
    std::vector<Int> stack;
    for (Int s = lo; s <= hi; ++s) {
        if (downs.count(s)) {
            stack.push_back(s);
        } else if (!blocked.count(s) && !stack.empty()) {
            cups.push_back({stack.back(), s, -1});
            stack.pop_back();
        }
    }
    require(stack.empty(), "unmatched vee in cup diagram");
    std::sort(cups.begin(), cups.end(),
              [](const Cup& x, const Cup& y) { return x.a < y.a; });
    for (size_t i = 0; i < cups.size(); ++i) {
        int best = -1;
        for (size_t j = 0; j < cups.size(); ++j) {
            if (j == i) continue;
            if (cups[j].a < cups[i].a && cups[i].b < cups[j].b &&
                (best < 0 || cups[(size_t)best].a < cups[j].a))
                best = (int)j;
        }
        cups[i].parent = best;
    }
    return cups;
}

inline std::vector<Cup> cup_diagram(const Diagram& d) {
    PosSet blocked;
    blocked.insert(d.crosses.begin(), d.crosses.end());
    blocked.insert(d.circles.begin(), d.circles.end());
    return match_cups(d.downs, blocked);
}

// ---------------------------------------------------------------------------
// compression: delete crosses and circles, renumber the remaining vertices.

inline std::vector<Int> deleted_positions(const Diagram& d) {
    std::vector<Int> del(d.crosses.begin(), d.crosses.end());
    del.insert(del.end(), d.circles.begin(), d.circles.end());
    std::sort(del.begin(), del.end());
    return del;
}

inline Int compress_pos(Int p, const std::vector<Int>& del) {
    auto it = std::lower_bound(del.begin(), del.end(), p);
    return p - (Int)(it - del.begin());
}

inline Int uncompress_pos(Int q, const std::vector<Int>& del) {
    for (Int p = q;; ++p) {
        if (std::binary_search(del.begin(), del.end(), p)) continue;
        if (compress_pos(p, del) == q) return p;
    }
}

inline PosSet compressed_support(const Diagram& d) {
    auto del = deleted_positions(d);
    PosSet out;
    for (Int p : d.downs) out.insert(compress_pos(p, del));
    return out;
}

// weight of rank |supp| whose vees sit exactly at supp
inline Weight bracket_from_support(const PosSet& supp) {
    std::vector<Int> xs(supp.begin(), supp.end());
    std::sort(xs.rbegin(), xs.rend());
    std::vector<Int> left(xs.size());
    for (size_t k = 0; k < xs.size(); ++k) left[k] = xs[k] + (Int)k;
    return bracket_weight(std::move(left));
}

// phi-tilde: the maximally atypical weight of Gl(i|i) in the image block
inline Weight phi_tilde(const Weight& w) {
    return bracket_from_support(compressed_support(weight_diagram(w)));
}

// phi = Ber^{n-i} (x) phi-tilde
inline Weight phi_map(const Weight& w) {
    Weight t = phi_tilde(w);
    return berezin_twist(t, w.n - t.n);
}

inline int epsilon(const Weight& w) {  // sign (-1)^{p(phi(w))}
    Weight f = phi_map(w);
    Int p = 0;
    for (auto x : f.right) p += x;
    return (p % 2 == 0) ? 1 : -1;
}

// ---------------------------------------------------------------------------
// sectors and segments of a plot (a finite set of vee positions, no blockers)

struct Sector {
    Int a = 0, b = 0;        // interval [a, b], b determined by the +-1 walk
    std::vector<Int> supp;   // vee positions inside, ascending
    Int rank() const { return (Int)supp.size(); }
};

inline std::vector<Sector> plot_sectors(const PosSet& supp) {
    std::vector<Sector> out;
    auto it = supp.begin();
    while (it != supp.end()) {
        Sector s;
        s.a = *it;
        Int depth = 0, p = s.a;
        for (;; ++p) {
            if (supp.count(p)) {
                ++depth;
                s.supp.push_back(p);
            } else {
                --depth;
            }
            if (depth == 0) break;
        }
        s.b = p;
        out.push_back(std::move(s));
        it = supp.upper_bound(p);
    }
    return out;
}

// maximal runs of sectors at mutual distance zero
inline std::vector<std::pair<size_t, size_t>> plot_segments(const std::vector<Sector>& secs) {
    std::vector<std::pair<size_t, size_t>> out;  // [first, last] sector index
    size_t i = 0;
    while (i < secs.size()) {
        size_t j = i;
        while (j + 1 < secs.size() && secs[j + 1].a == secs[j].b + 1) ++j;
        out.push_back({i, j});
        i = j + 1;
    }
    return out;
}

// gap distances between consecutive sectors (d_1 .. d_{k-1})
inline std::vector<Int> sector_gaps(const std::vector<Sector>& secs) {
    std::vector<Int> out;
    for (size_t i = 1; i < secs.size(); ++i)
        out.push_back(secs[i].a - secs[i - 1].b - 1);
    return out;
}

// d_0 of an atypical weight: last bracket coefficient of phi(w)
inline Int d0_value(const Weight& w) {
    require(atypicality(w) >= 1, "d0 needs an atypical weight");
    return phi_map(w).left.back();
}

// full distance vector (d_0, d_1, .., d_{k-1}) over the compressed plot
inline std::vector<Int> distance_vector(const Weight& w) {
    std::vector<Int> out{d0_value(w)};
    auto gaps = sector_gaps(plot_sectors(compressed_support(weight_diagram(w))));
    out.insert(out.end(), gaps.begin(), gaps.end());
    return out;
}

// delta_i = d_0 + d_1 + .. + d_{i-1}, one entry per sector
inline std::vector<Int> delta_vector(const Weight& w) {
    auto d = distance_vector(w);
    std::vector<Int> out(d.size());
    Int acc = 0;
    for (size_t i = 0; i < d.size(); ++i) {
        acc += d[i];
        out[i] = acc;
    }
    return out;
}

// ---------------------------------------------------------------------------
// basic weights

inline bool is_basic(const Weight& w) {
    if (!is_bracket(w)) return false;
    if (w.n == 0) return true;
    if (w.left[w.n - 1] != 0) return false;
    for (int i = 1; i <= w.n; ++i)
        if (w.left[i - 1] > w.n - i) return false;
    return true;
}

// close all gaps (including d_0) of the compressed plot, keeping sector shapes
inline Weight basic_weight(const Weight& w) {
    int i = atypicality(w);
    require(i >= 1, "basic weight needs an atypical weight");
    auto secs = plot_sectors(compressed_support(weight_diagram(w)));
    PosSet supp;
    Int start = 1 - (Int)i;
    for (const auto& s : secs) {
        Int off = start - s.a;
        for (Int p : s.supp) supp.insert(p + off);
        start += s.b - s.a + 1;
    }
    return bracket_from_support(supp);
}

// all basic weights of rank n (counted by the Catalan number C_n)
inline std::vector<Weight> enumerate_basic(int n) {
    std::vector<Weight> out;
    std::vector<Int> cur(n);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            out.push_back(bracket_weight(cur));
            return;
        }
        Int hi = (i == n - 1) ? 0 : (Int)(n - 1 - i);
        Int cap = (i == 0) ? hi : std::min<Int>(hi, cur[i - 1]);
        for (Int v = cap; v >= 0; --v) {
            cur[i] = v;
            self(self, i + 1);
        }
    };
    if (n == 0)
        out.push_back(Weight{});
    else
        rec(rec, 0);
    return out;
}

// all dominant weights with every entry in [-bound, bound]
inline std::vector<std::vector<Int>> decreasing_tuples(int n, Int bound) {
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur(n);
    auto rec = [&](auto&& self, int i, Int hi) -> void {
        if (i == n) {
            out.push_back(cur);
            return;
        }
        for (Int v = hi; v >= -bound; --v) {
            cur[i] = v;
            self(self, i + 1, v);
        }
    };
    rec(rec, 0, bound);
    return out;
}

inline std::vector<Weight> enumerate_dominant(int n, Int bound) {
    auto halves = decreasing_tuples(n, bound);
    std::vector<Weight> out;
    for (const auto& l : halves)
        for (const auto& r : halves) out.push_back(make_weight(l, r));
    return out;
}

inline std::vector<Weight> enumerate_maximal_atypical(int n, Int bound) {
    std::vector<Weight> out;
    for (auto& l : decreasing_tuples(n, bound)) out.push_back(bracket_weight(l));
    return out;
}

}  // namespace gln
