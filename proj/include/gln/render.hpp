#pragma once

// Text and JSON presentation of diagrams, functor output, forests and plots.

#include <json.hpp>

#include "gln/ds.hpp"
#include "gln/forest.hpp"
#include "gln/translation.hpp"

namespace gln {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// ASCII cup diagrams

inline std::string render_diagram(const Diagram& d, Int lo, Int hi) {
    require(lo <= hi, "empty window");
    auto cups = cup_diagram(d);
    int maxdepth = 0;
    auto depth_of = [&](const Cup& c) {
        int k = 0;
        for (int p = c.parent; p >= 0; p = cups[(size_t)p].parent) ++k;
        return k;
    };
    for (const auto& c : cups) maxdepth = std::max(maxdepth, depth_of(c));

    size_t width = 2;
    for (Int p = lo; p <= hi; ++p) width = std::max(width, std::to_string(p).size());
    size_t colw = width + 1;
    auto col = [&](Int p) { return (size_t)(p - lo) * colw + width - 1; };

    std::string ruler, labels;
    for (Int p = lo; p <= hi; ++p) {
        std::string t = std::to_string(p);
        ruler += std::string(colw - t.size(), ' ') + t;
        char lab = d.crosses.count(p) ? 'x' : d.circles.count(p) ? 'o'
                   : d.downs.count(p) ? 'v' : '^';
        labels += std::string(colw - 1, ' ');
        labels += lab;
    }
    std::vector<std::string> rows((size_t)maxdepth + 1,
                                  std::string((size_t)(hi - lo + 1) * colw, ' '));
    for (const auto& c : cups) {
        if (c.a < lo || c.b > hi) continue;  // cup leaves the window
        size_t row = (size_t)(maxdepth - depth_of(c));
        for (size_t x = col(c.a) + 1; x < col(c.b); ++x) rows[row][x] = '-';
        rows[row][col(c.a)] = '+';
        rows[row][col(c.b)] = '+';
        for (size_t r = 0; r < row; ++r) {
            rows[r][col(c.a)] = '|';
            rows[r][col(c.b)] = '|';
        }
    }
    std::string out = ruler + "\n" + labels + "\n";
    for (auto& r : rows) {
        while (!r.empty() && r.back() == ' ') r.pop_back();
        if (!r.empty()) out += r + "\n";
    }
    return out;
}

inline std::pair<Int, Int> default_window(const Diagram& d) {
    PosSet all;
    all.insert(d.crosses.begin(), d.crosses.end());
    all.insert(d.circles.begin(), d.circles.end());
    all.insert(d.downs.begin(), d.downs.end());
    if (all.empty()) return {-1, 1};
    Int hi = *all.rbegin();
    for (const auto& c : cup_diagram(d)) hi = std::max(hi, c.b);
    return {*all.begin() - 1, hi + 1};
}

// ---------------------------------------------------------------------------
// JSON encodings

inline json to_json(const PosSet& s) {
    json a = json::array();
    for (Int p : s) a.push_back(p);
    return a;
}

inline json diagram_json(const Weight& w) {
    Diagram d = weight_diagram(w);
    json j;
    j["weight"] = format_weight(w);
    j["crosses"] = to_json(d.crosses);
    j["circles"] = to_json(d.circles);
    j["downs"] = to_json(d.downs);
    json cups = json::array();
    for (const auto& c : cup_diagram(d)) cups.push_back({c.a, c.b});
    j["cups"] = cups;
    json sectors = json::array();
    for (const auto& s : plot_sectors(compressed_support(d))) {
        json js;
        js["interval"] = {s.a, s.b};
        js["support"] = s.supp;
        sectors.push_back(js);
    }
    j["sectors"] = sectors;
    if (!d.downs.empty()) j["distances"] = distance_vector(w);
    return j;
}

inline json plot_json(const PosSet& supp) {
    json j;
    j["support"] = to_json(supp);
    return j;
}

inline json ds_json(const std::vector<DsSummand>& summands) {
    json arr = json::array();
    for (const auto& s : summands) {
        json js;
        js["weight"] = format_weight(s.w);
        js["degree"] = -s.delta;
        js["parity_shift"] = (int)(((s.delta % 2) + 2) % 2);
        arr.push_back(js);
    }
    json j;
    j["summands"] = arr;
    return j;
}

inline std::string ds_str(const std::vector<DsSummand>& summands) {
    if (summands.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < summands.size(); ++i) {
        if (i) s += " (+) ";
        s += format_weight(summands[i].w) + "<" + std::to_string(-summands[i].delta) + ">";
    }
    return s;
}

inline json tree_json(const Tree& t) {
    json a = json::array();
    for (const auto& c : t.children) a.push_back(tree_json(c));
    return a;
}

inline std::string tree_str(const Tree& t) {
    std::string s = "[";
    for (size_t i = 0; i < t.children.size(); ++i) {
        if (i) s += ",";
        s += tree_str(t.children[i]);
    }
    return s + "]";
}

inline json forest_json(const SpacedForest& f) {
    json j;
    j["d0"] = f.d0;
    json arr = json::array();
    for (size_t i = 0; i < f.trees.size(); ++i) {
        json jt;
        jt["tree"] = tree_json(f.trees[i]);
        jt["gap"] = f.gaps[i];
        arr.push_back(jt);
    }
    j["trees"] = arr;
    return j;
}

inline std::string forest_str(const SpacedForest& f) {
    std::string s = "d0=" + std::to_string(f.d0);
    for (size_t i = 0; i < f.trees.size(); ++i) {
        s += "; " + tree_str(f.trees[i]);
        if (i + 1 < f.trees.size()) s += " gap " + std::to_string(f.gaps[i]);
    }
    return s;
}

inline json laurent_json(const Laurent& p) {
    json j = json::object();
    for (auto [e, v] : p.c) j[std::to_string(e)] = v;
    return j;
}

inline json triple_json(const LoewyTriple& t) {
    json j;
    j["socle"] = format_weight(t.socle);
    json mid = json::array();
    for (const auto& m : t.middle) mid.push_back(format_weight(m));
    j["middle"] = mid;
    j["top"] = format_weight(t.top);
    return j;
}

}  // namespace gln
