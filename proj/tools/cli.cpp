// Command-line front end for the Gl(n|n) combinatorics library.

#include <CLI11.hpp>
#include <iostream>

#include "gln/dual.hpp"
#include "gln/kac.hpp"
#include "gln/mixed.hpp"
#include "gln/render.hpp"

using namespace gln;

namespace {

std::pair<Int, Int> parse_window(const std::string& s) {
    auto dots = s.find("..");
    require(dots != std::string::npos, "window must look like a..b");
    return {std::stoll(s.substr(0, dots)), std::stoll(s.substr(dots + 2))};
}

void cmd_diagram(const std::string& wtext, const std::string& window, bool as_json) {
    Weight w = parse_weight(wtext);
    Diagram d = weight_diagram(w);
    if (as_json) {
        std::cout << diagram_json(w).dump(2) << "\n";
        return;
    }
    auto [lo, hi] = window.empty() ? default_window(d) : parse_window(window);
    std::cout << render_diagram(d, lo, hi);
    if (!d.downs.empty()) {
        auto dist = distance_vector(w);
        std::cout << "distances: (" << join_ints(dist) << ")\n";
    }
    std::cout << "atypicality: " << d.downs.size() << "\n";
}

void cmd_ds(const std::string& wtext, int iterate, bool as_json) {
    Weight w = parse_weight(wtext);
    require(iterate >= 1 && iterate <= w.n, "iteration count out of range");
    auto summands = ds_iter(w, iterate);
    if (as_json)
        std::cout << ds_json(summands).dump(2) << "\n";
    else
        std::cout << ds_str(summands) << "\n";
}

void cmd_cohomology(const std::string& wtext, int iterate, bool as_json) {
    Weight w = parse_weight(wtext);
    require(iterate >= 1 && iterate <= w.n, "iteration count out of range");
    auto summands = ds_iter(w, iterate);
    if (as_json) {
        std::cout << ds_json(summands).dump(2) << "\n";
        return;
    }
    std::map<Int, std::vector<Weight>> by_degree;
    for (const auto& s : summands) by_degree[-s.delta].push_back(s.w);
    if (by_degree.empty()) std::cout << "0\n";
    for (auto& [deg, ws] : by_degree) {
        std::cout << "H^(" << deg << ") = ";
        for (size_t i = 0; i < ws.size(); ++i)
            std::cout << (i ? " (+) " : "") << format_weight(ws[i]);
        std::cout << "\n";
    }
}

void cmd_omega(const std::string& wtext, bool as_json) {
    Laurent p = omega(parse_weight(wtext));
    if (as_json)
        std::cout << laurent_json(p).dump(2) << "\n";
    else
        std::cout << p.str() << "\n";
}

void cmd_sdim(const std::string& wtext, bool as_json) {
    Weight w = parse_weight(wtext);
    ModifiedSdim s = modified_sdim(w);
    if (as_json) {
        json j;
        j["sign"] = s.sign;
        j["magnitude"] = s.magnitude.str();
        j["value"] = s.value().str();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << s.value().str() << "\n";
    }
}

void cmd_dual(const std::string& wtext, bool as_json) {
    Weight w = parse_weight(wtext);
    Weight dw = dual_weight(w);
    if (as_json) {
        json j;
        j["dual"] = format_weight(dw);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << format_weight(dw) << "\n";
    }
}

void cmd_forest(const std::string& wtext, bool as_json) {
    SpacedForest f = spaced_forest(parse_weight(wtext));
    if (as_json)
        std::cout << forest_json(f).dump(2) << "\n";
    else
        std::cout << forest_str(f) << "\n";
}

void cmd_theta(const std::string& text, int n, bool as_json) {
    std::string s;
    for (char c : text)
        if (!isspace((unsigned char)c)) s += c;
    if (s.rfind("((", 0) == 0) {
        Bipartition b = parse_bipartition(s);
        Weight w = theta(b, n);
        if (as_json) {
            json j;
            j["weight"] = format_weight(w);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << format_weight(w) << "\n";
        }
    } else {
        Weight w = parse_weight(s);
        Bipartition b = theta_inverse(w);
        if (as_json) {
            json j;
            j["bipartition"] = format_bipartition(b);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << format_bipartition(b) << "\n";
        }
    }
}

void cmd_translate(const std::string& wtext, Int i, bool as_json) {
    LoewyTriple t = translation_structure(parse_weight(wtext), i);
    if (as_json) {
        std::cout << triple_json(t).dump(2) << "\n";
        return;
    }
    std::cout << "top:    " << format_weight(t.top) << "\n";
    std::cout << "middle:";
    for (const auto& m : t.middle) std::cout << " " << format_weight(m);
    std::cout << "\n";
    std::cout << "socle:  " << format_weight(t.socle) << "\n";
}

void cmd_kac_table(int n, bool as_json) {
    if (as_json) {
        json j;
        json cons = json::array();
        for (const auto& w : kac_one_constituents(n)) cons.push_back(format_weight(w));
        j["constituents"] = cons;
        json qs = json::array();
        for (int a = 0; a <= n; ++a) {
            json rows = json::array();
            for (const auto& g : q_a_cohomology(n, a)) {
                json r;
                r["degree"] = g.degree;
                json sum = json::array();
                for (const auto& w : g.summands) sum.push_back(format_weight(w));
                r["summands"] = sum;
                rows.push_back(r);
            }
            auto dg = q_a_dirac(n, a);
            json q;
            q["a"] = a;
            q["cohomology"] = rows;
            q["dirac_degree"] = dg.degree;
            json ds = json::array();
            for (const auto& w : dg.summands) ds.push_back(format_weight(w));
            q["dirac"] = ds;
            qs.push_back(q);
        }
        j["q_modules"] = qs;
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << "constituents of the Kac module of the trivial module (n = " << n << "):\n";
    for (int a = 0; a <= n; ++a)
        std::cout << "  L_" << a << " = " << format_weight(kac_constituent(n, a)) << "\n";
    for (int a = 0; a <= n; ++a) {
        std::cout << "Q_" << a << ":";
        for (const auto& g : q_a_cohomology(n, a)) {
            std::cout << "  H^(" << g.degree << ") =";
            for (const auto& w : g.summands) std::cout << " " << format_weight(w);
            std::cout << ";";
        }
        auto dg = q_a_dirac(n, a);
        std::cout << "  Dirac: ";
        if (dg.summands.empty())
            std::cout << "0";
        else
            std::cout << format_weight(dg.summands[0]) << " in degree " << dg.degree;
        std::cout << "\n";
    }
}

void cmd_hooks(int n, bool as_json) {
    auto hs = hooks(n);
    if (as_json) {
        json arr = json::array();
        for (const auto& w : hs) arr.push_back(format_weight(w));
        json j;
        j["hooks"] = arr;
        std::cout << j.dump(2) << "\n";
        return;
    }
    for (const auto& w : hs) std::cout << format_weight(w) << "\n";
}

void cmd_check(const std::string& wtext, Int i, bool as_json) {
    CommutationReport r = check_commutation(parse_weight(wtext), i);
    if (as_json) {
        json j;
        j["algorithm"] = r.algorithm;
        j["supported"] = r.supported;
        j["tilde_ok"] = r.tilde_ok;
        j["commute_ok"] = r.commute_ok;
        j["combined_ok"] = r.combined_ok;
        j["ok"] = r.ok();
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << "algorithm: " << r.algorithm << "\n";
    std::cout << "socle identity: " << (r.tilde_ok ? "ok" : "FAIL") << "\n";
    if (r.supported) {
        std::cout << "commutation:    " << (r.commute_ok ? "ok" : "FAIL") << "\n";
        std::cout << "combined:       " << (r.combined_ok ? "ok" : "FAIL") << "\n";
    } else {
        std::cout << "commutation:    skipped (context outside both algorithms)\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorial representation theory of Gl(n|n)"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of text");

    std::string wtext, window, bip;
    int iterate = 1, n = 1;
    Int pos = 0;

    auto* c_diagram = app.add_subcommand("diagram", "weight diagram with cups");
    c_diagram->add_option("weight", wtext)->required();
    c_diagram->add_option("--window", window, "positions a..b to draw");

    auto* c_ds = app.add_subcommand("ds", "apply the cohomological functor");
    c_ds->add_option("weight", wtext)->required();
    c_ds->add_option("--iterate", iterate, "apply the functor this many times");

    auto* c_coh = app.add_subcommand("cohomology", "functor output grouped by degree");
    c_coh->add_option("weight", wtext)->required();
    c_coh->add_option("--iterate", iterate, "apply the functor this many times");

    auto* c_omega = app.add_subcommand("omega", "quantum forest polynomial");
    c_omega->add_option("weight", wtext)->required();

    auto* c_sdim = app.add_subcommand("sdim", "modified superdimension");
    c_sdim->add_option("weight", wtext)->required();

    auto* c_dual = app.add_subcommand("dual", "dual irreducible");
    c_dual->add_option("weight", wtext)->required();

    auto* c_forest = app.add_subcommand("forest", "spaced forest of a weight");
    c_forest->add_option("weight", wtext)->required();

    auto* c_theta = app.add_subcommand("theta", "mixed-tensor dictionary (both ways)");
    c_theta->add_option("input", bip, "bipartition ((..),(..)) or weight")->required();
    c_theta->add_option("-n,--rank", n, "rank n of Gl(n|n)")->required();

    auto* c_tr = app.add_subcommand("translate", "Loewy structure of a translation functor");
    c_tr->add_option("weight", wtext)->required();
    c_tr->add_option("position", pos, "vee position i")->required();

    auto* c_kac = app.add_subcommand("kac-table", "Kac-module tables");
    c_kac->add_option("n", n)->required();

    auto* c_hooks = app.add_subcommand("hooks", "irreducibles with self-extensions");
    c_hooks->add_option("n", n)->required();

    auto* c_check = app.add_subcommand("check", "commutation audit at one context");
    c_check->add_option("weight", wtext)->required();
    c_check->add_option("position", pos, "vee position i")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (c_diagram->parsed()) cmd_diagram(wtext, window, as_json);
        else if (c_ds->parsed()) cmd_ds(wtext, iterate, as_json);
        else if (c_coh->parsed()) cmd_cohomology(wtext, iterate, as_json);
        else if (c_omega->parsed()) cmd_omega(wtext, as_json);
        else if (c_sdim->parsed()) cmd_sdim(wtext, as_json);
        else if (c_dual->parsed()) cmd_dual(wtext, as_json);
        else if (c_forest->parsed()) cmd_forest(wtext, as_json);
        else if (c_theta->parsed()) cmd_theta(bip, n, as_json);
        else if (c_tr->parsed()) cmd_translate(wtext, pos, as_json);
        else if (c_kac->parsed()) cmd_kac_table(n, as_json);
        else if (c_hooks->parsed()) cmd_hooks(n, as_json);
        else if (c_check->parsed()) cmd_check(wtext, pos, as_json);
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
