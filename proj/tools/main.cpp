#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gns/enumeration.hpp"
#include "gns/gapset.hpp"
#include "gns/invariants.hpp"
#include "gns/io.hpp"
#include "gns/theorems.hpp"

namespace {

using namespace gns;

constexpr int kExitParse = 1;    // unreadable or malformed input document
constexpr int kExitInvalid = 2;  // gaps parse but the complement is not a semigroup
constexpr int kExitRefuted = 3;  // a verification found counterexamples
constexpr int kExitUsage = 64;   // bad flags

int usage(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return kExitUsage;
}

// "4,3" -> (4,3)
Point parse_point(const std::string& text) {
    std::vector<int> coords;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad coordinate \"" + tok + "\" in \"" + text + "\"");
        }
        while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
        if (used != tok.size() || v < 0)
            throw std::invalid_argument("bad coordinate \"" + tok + "\" in \"" + text + "\"");
        coords.push_back(v);
    }
    if (coords.empty()) throw std::invalid_argument("empty point in \"" + text + "\"");
    return Point(std::move(coords));
}

// "2,2;3,3" -> {(2,2),(3,3)}; "" -> {}
std::vector<Point> parse_points(const std::string& text) {
    std::vector<Point> pts;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ';'))
        if (!tok.empty()) pts.push_back(parse_point(tok));
    return pts;
}

int run_analyze(const std::string& input, bool inline_given, const std::string& inline_gaps,
                int dim, const std::string& plot_path) {
    if (!input.empty() && inline_given) return usage("give an input file or --gaps, not both");
    if (input.empty() && !inline_given) return usage("an input file or --gaps is required");

    std::optional<GapSet> gs;
    if (!input.empty()) {
        std::ifstream f(input);
        if (!f) {
            std::cerr << "error: cannot read " << input << "\n";
            return kExitParse;
        }
        std::stringstream buf;
        buf << f.rdbuf();
        try {
            gs = gapset_from_json_text(buf.str());
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitParse;
        }
    } else {
        try {
            std::vector<Point> pts = parse_points(inline_gaps);
            if (pts.empty()) {
                if (dim < 1) return usage("empty --gaps needs --dim to fix the ambient dimension");
                gs = GapSet(dim, {});
            } else {
                const int d = pts.front().dim();
                gs = GapSet(d, std::move(pts));
            }
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitParse;
        }
    }

    if (!plot_path.empty() && gs->dim() != 2) return usage("--plot draws d = 2 lattices only");
    if (const auto v = closure_violation(*gs)) {
        std::cerr << "not a semigroup: " << v->str() << "\n";
        return kExitInvalid;
    }

    const GnsProfile p = analyze(*gs);
    if (!plot_path.empty()) {
        std::ofstream out(plot_path);
        if (!out) {
            std::cerr << "error: cannot write " << plot_path << "\n";
            return kExitParse;
        }
        out << to_svg(*gs, p);
    }
    std::cout << dump(to_json(p));
    return 0;
}

int run_enumerate(const std::string& corner, const std::string& avoid, const std::string& order,
                  bool dedup, const std::string& format) {
    try {
        const FamilyQuery q{parse_point(corner), parse_points(avoid), parse_order(order), dedup};
        const EnumTree t = enumerate_family(q);
        std::cout << (format == "dot" ? to_dot(t) : dump(to_json(t)));
        return 0;
    } catch (const std::invalid_argument& e) {
        return usage(e.what());
    }
}

int run_maximals(const std::string& corner, const std::string& avoid, const std::string& order) {
    try {
        const FamilyQuery q{parse_point(corner), parse_points(avoid), parse_order(order), true};
        std::cout << dump(maximals_json(q, maximal_elements(q)));
        return 0;
    } catch (const std::invalid_argument& e) {
        return usage(e.what());
    }
}

int run_verify(const std::string& id, const std::string& bound, const std::string& g1,
               const std::string& g2, bool timing) {
    const auto& reg = verification_registry();
    if (std::none_of(reg.begin(), reg.end(), [&](const RegistryEntry& e) { return e.id == id; })) {
        std::cerr << "error: unknown statement id \"" << id << "\"\n"
                  << "registered statements:\n";
        for (const RegistryEntry& e : reg)
            std::cerr << "  " << e.id << ": " << e.summary
                      << (e.expects_counterexamples ? " (expected counterexamples)" : "") << "\n";
        return kExitUsage;
    }

    const bool instance = !g1.empty() || !g2.empty();
    if (instance) {
        if (id != "teo-ani") return usage("--g1/--g2 run the single-instance check; that is --id teo-ani");
        if (g1.empty() || g2.empty()) return usage("--g1 and --g2 go together");
        if (!bound.empty()) return usage("give --bound or --g1/--g2, not both");
    } else if (bound.empty()) {
        return usage("--bound is required (or --g1/--g2 for teo-ani)");
    }

    try {
        const VerificationReport rep = instance
            ? verify_teo_ani({parse_point(g1), parse_point(g2)})
            : verify_proposition(id, parse_point(bound));
        json doc = to_json(rep);
        if (!timing) doc.erase("ms");
        std::cout << dump(doc);
        std::cerr << rep.id << ": checked " << rep.checked << ", vacuous " << rep.vacuous
                  << ", counterexamples " << rep.counterexamples.size() << " (" << rep.ms << " ms)\n";
        return rep.passed() ? 0 : kExitRefuted;
    } catch (const std::invalid_argument& e) {
        return usage(e.what());
    }
}

int run_fixtures(const std::string& out_dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) {
        std::cerr << "error: cannot create " << out_dir << ": " << ec.message() << "\n";
        return kExitParse;
    }
    const auto write = [&](const char* name, const std::string& text) {
        const fs::path path = fs::path(out_dir) / name;
        std::ofstream f(path);
        if (!f) {
            std::cerr << "error: cannot write " << path.string() << "\n";
            return false;
        }
        f << text;
        std::cout << path.string() << "\n";
        return true;
    };

    // the worked examples: a Frobenius-free profile, an irreducible gap set
    // whose corner special gaps survive, a two-special-gap non-atom, the two
    // seven-member trees, and the 14- and 22-member maximal families
    const GapSet corner43(2, {{0, 1}, {1, 0}, {1, 1}, {1, 2}, {3, 0}});
    const GapSet corner53(2, {{1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {4, 0}, {4, 1}, {4, 2}});
    const GapSet corner44(2, {{1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}, {2, 3},
                              {3, 0}, {3, 1}, {3, 2}, {3, 3}});
    const FamilyQuery keep21{Point{3, 2}, {Point{2, 1}}, MonomialOrder::lex, true};
    const FamilyQuery keep20{Point{3, 2}, {Point{2, 0}}, MonomialOrder::lex, true};
    const FamilyQuery keep2233{Point{4, 4}, {Point{2, 2}, Point{3, 3}}, MonomialOrder::lex, true};
    const FamilyQuery keep1133{Point{4, 4}, {Point{1, 1}, Point{3, 3}}, MonomialOrder::lex, true};
    const EnumTree tree21 = enumerate_family(keep21);
    const EnumTree tree20 = enumerate_family(keep20);

    const bool ok = write("gapset-corner-4-3.json", dump(to_json(corner43)))
        && write("gapset-corner-5-3-irreducible.json", dump(to_json(corner53)))
        && write("gapset-corner-4-4-non-atom.json", dump(to_json(corner44)))
        && write("tree-corner-3-2-keep-2-1.json", dump(to_json(tree21)))
        && write("tree-corner-3-2-keep-2-1.dot", to_dot(tree21))
        && write("tree-corner-3-2-keep-2-0.json", dump(to_json(tree20)))
        && write("tree-corner-3-2-keep-2-0.dot", to_dot(tree20))
        && write("maximals-corner-4-4-keep-2-2-3-3.json",
                 dump(maximals_json(keep2233, maximal_elements(keep2233))))
        && write("maximals-corner-4-4-keep-1-1-3-3.json",
                 dump(maximals_json(keep1133, maximal_elements(keep1133))));
    return ok ? 0 : kExitParse;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gap-set toolkit for generalized numerical semigroups"};
    app.require_subcommand(1);

    std::string an_input, an_gaps, an_plot;
    int an_dim = 0;
    CLI::App* an = app.add_subcommand("analyze", "invariant profile of a single gap set");
    an->add_option("input", an_input, "gap set document (JSON object with \"d\" and \"gaps\")");
    CLI::Option* an_gaps_opt = an->add_option("--gaps", an_gaps, "inline gaps, e.g. \"0,1;1,0;1,1\"");
    an->add_option("--dim", an_dim, "ambient dimension when --gaps is empty");
    an->add_option("--plot", an_plot, "also write an SVG lattice diagram (d = 2 only)");

    std::string en_corner, en_avoid, en_order = "lex", en_dedup = "on", en_format = "json";
    CLI::App* en = app.add_subcommand("enumerate", "tree of the family F(corner; avoid)");
    en->add_option("--corner", en_corner, "corner, e.g. 3,2")->required();
    en->add_option("--avoid", en_avoid, "forced gaps, e.g. \"2,1\" or \"2,2;3,3\"");
    en->add_option("--order", en_order, "extension query order")
        ->check(CLI::IsMember({"lex", "grlex"}));
    en->add_option("--dedup", en_dedup, "duplicate-free rule (on) or visited set (off)")
        ->check(CLI::IsMember({"on", "off"}));
    en->add_option("--format", en_format, "output document")
        ->check(CLI::IsMember({"json", "dot"}));

    std::string mx_corner, mx_avoid, mx_order = "lex";
    CLI::App* mx = app.add_subcommand("maximals", "maximal elements of F(corner; avoid)");
    mx->add_option("--corner", mx_corner, "corner, e.g. 4,4")->required();
    mx->add_option("--avoid", mx_avoid, "forced gaps, e.g. \"2,2;3,3\"");
    mx->add_option("--order", mx_order, "extension query order")
        ->check(CLI::IsMember({"lex", "grlex"}));

    std::string vf_id, vf_bound, vf_g1, vf_g2;
    bool vf_timing = false;
    CLI::App* vf = app.add_subcommand("verify", "exhaustively check a registered statement");
    vf->add_option("--id", vf_id, "statement id (bad ids print the registry)")->required();
    vf->add_option("--bound", vf_bound, "sweep bound, e.g. 3,3 (or 7 for d = 1)");
    vf->add_option("--g1", vf_g1, "lower gap of a single teo-ani instance");
    vf->add_option("--g2", vf_g2, "upper gap of a single teo-ani instance");
    vf->add_flag("--timing", vf_timing, "keep the ms field in the report");

    std::string fx_out = "fixtures";
    CLI::App* fx = app.add_subcommand("fixtures", "write the worked-example documents");
    fx->add_option("--out", fx_out, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (*an) return run_analyze(an_input, an_gaps_opt->count() > 0, an_gaps, an_dim, an_plot);
    if (*en) return run_enumerate(en_corner, en_avoid, en_order, en_dedup == "on", en_format);
    if (*mx) return run_maximals(mx_corner, mx_avoid, mx_order);
    if (*vf) return run_verify(vf_id, vf_bound, vf_g1, vf_g2, vf_timing);
    if (*fx) return run_fixtures(fx_out);
    return kExitUsage;
}
