#include "gordian/coloring.hpp"
#include "gordian/covers.hpp"
#include "gordian/diagram.hpp"
#include "gordian/error.hpp"
#include "gordian/json_io.hpp"
#include "gordian/paths.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace gordian;
using nlohmann::json;

bool is_path_arg(const std::string& arg) {
    if (arg == "-") return false;
    std::size_t i = 0;
    while (i < arg.size() && std::isspace(static_cast<unsigned char>(arg[i]))) ++i;
    return i == arg.size() || (arg[i] != '{' && arg[i] != '[');
}

// Re-raise parse failures with the offending source attached.
std::string slurp_named(const std::string& arg, const char* what) {
    try {
        return slurp_input(arg);
    } catch (const Error& e) {
        fail(e.kind(), std::string(what) + ": " + e.what());
    }
}

template <typename F>
auto parse_named(const std::string& arg, const char* what, F parse) {
    std::string text = slurp_named(arg, what);
    try {
        return parse(text);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::ParseError && is_path_arg(arg))
            fail(e.kind(), arg + ": " + e.what());
        throw;
    }
}

// Diagram input shared by most verbs: --pd or --braid (closed to a knot),
// defaulting to a diagram on stdin so builders pipe straight in.
struct Input {
    std::string pd, braid;

    void attach(CLI::App* cmd) {
        cmd->add_option("--pd", pd, "planar diagram (file, inline JSON, or - for stdin)");
        cmd->add_option("--braid", braid, "braid word to close (file, inline JSON, or -)");
    }

    PlanarDiagram diagram() const {
        if (!pd.empty() && !braid.empty())
            fail(ErrorKind::ParseError, "give --pd or --braid, not both");
        if (!braid.empty())
            return braid_closure(parse_named(braid, "--braid", braid_from_json));
        return parse_named(pd.empty() ? "-" : pd, "--pd", diagram_from_json);
    }

    // Report label: file stem when the input came from a file.
    std::string label() const {
        const std::string& arg = braid.empty() ? pd : braid;
        if (arg.empty() || arg == "-") return "-";
        if (!is_path_arg(arg)) return "inline";
        return std::filesystem::path(arg).stem().string();
    }
};

void emit(const json& j) { std::cout << j.dump() << "\n"; }

std::string class_adjective(const ClassSpec& spec) {
    return spec.cls == ClassKind::transpositions ? "transposition" : "three-cycle";
}

struct BuildOpts {
    std::string kind;
    std::vector<int> args;
    Input in;
};

int run_build(const BuildOpts& o) {
    auto want = [&](std::size_t n) {
        if (o.args.size() != n)
            fail(ErrorKind::ParseError,
                 o.kind + " takes " + std::to_string(n) + " integer argument(s)");
    };
    PlanarDiagram d;
    if (o.kind == "trefoil-sum") {
        want(1);
        d = braid_closure(trefoil_sum_braid(o.args[0]));
    } else if (o.kind == "whitehead") {
        want(1);
        d = whitehead_double_diagram(o.args[0]);
    } else if (o.kind == "pretzel") {
        want(3);
        d = pretzel_knot(o.args[0], o.args[1], o.args[2]);
    } else if (o.kind == "closure") {
        want(0);
        if (o.in.braid.empty()) fail(ErrorKind::ParseError, "closure needs --braid");
        d = o.in.diagram();
    } else if (o.kind == "mirror") {
        want(0);
        d = mirror(o.in.diagram());
    } else {
        fail(ErrorKind::ParseError, "unknown builder \"" + o.kind +
                                        "\" (trefoil-sum, whitehead, pretzel, closure, mirror)");
    }
    std::cout << diagram_to_json(d) << "\n";
    return 0;
}

struct ColorOpts {
    Input in;
    std::string group = "S3";
    std::string cls = "transpositions";
    std::size_t max = 0;
    long long node_limit = -1;
    bool json_out = false;
};

int run_color(const ColorOpts& o) {
    PlanarDiagram d = o.in.diagram();
    ClassSpec spec = spec_from_names(o.group, o.cls);
    SolveOptions sopts;
    sopts.node_limit = o.node_limit;
    sopts.max_solutions = o.max;
    SolveResult res = solve_class_colorings(d, spec, sopts);
    // A user-requested solution cap also leaves the search incomplete, but
    // only a node-limit stop is a budget event.
    bool truncated = !res.complete && !(o.max > 0 && res.colorings.size() >= o.max);
    if (o.json_out) {
        json j;
        j["group"] = group_name(spec);
        j["class"] = class_name(spec);
        j["count"] = res.colorings.size();
        j["complete"] = res.complete;
        j["colorings"] = json::array();
        for (const ClassColoring& c : res.colorings)
            j["colorings"].push_back(json::parse(coloring_to_json(c)));
        emit(j);
    } else {
        std::cout << res.colorings.size() << " surjective " << class_adjective(spec)
                  << " coloring(s) in " << group_name(spec) << " up to conjugation\n";
        for (std::size_t i = 0; i < res.colorings.size(); ++i) {
            std::cout << "#" << i << ":";
            for (const Perm& p : res.colorings[i].assignment) std::cout << " " << p.cycle_string();
            std::cout << "\n";
        }
        if (truncated) std::cout << "search truncated: the count is a lower bound\n";
    }
    return truncated ? 3 : 0;
}

struct PnumOpts {
    Input in;
    int n_max = 0;
    long long node_limit = -1;
    bool json_out = false;
};

int run_pnum(const PnumOpts& o) {
    PnumResult r = permutation_number(o.in.diagram(), o.n_max, o.node_limit);
    if (o.json_out) {
        json j;
        j["p"] = r.p;
        j["exact"] = r.exact;
        emit(j);
    } else {
        std::cout << (r.exact ? "p = " : "p >= ") << r.p
                  << (r.exact ? "" : " (search truncated)") << "\n";
    }
    return r.exact ? 0 : 3;
}

struct GnOpts {
    Input in;
    int n = 2;
    long long node_limit = -1;
    bool json_out = false;
};

int run_gn(const GnOpts& o) {
    bool member = gn_member(o.in.diagram(), o.n, o.node_limit);
    if (o.json_out) {
        json j;
        j["n"] = o.n;
        j["member"] = member;
        emit(j);
    } else {
        std::cout << "member of G_" << o.n << ": " << (member ? "yes" : "no") << "\n";
    }
    return 0;
}

struct FoxOpts {
    Input in;
    int p = 3;
    bool json_out = false;
};

int run_fox(const FoxOpts& o) {
    FoxSpace s = fox_coloring_space(o.in.diagram(), o.p);
    if (o.json_out) {
        std::cout << fox_space_to_json(s) << "\n";
    } else {
        std::cout << "dimension " << s.dimension << " over F_" << s.p << "\n";
        if (s.p == 3)
            std::cout << "twice 3-colorable: " << (twice_three_colorable(s) ? "yes" : "no") << "\n";
    }
    return 0;
}

struct RewriteOpts {
    Input in;
    std::string section, coloring;
    int budget = 8;
    bool json_out = false;
};

int run_rewrite(const RewriteOpts& o) {
    PlanarDiagram d = o.in.diagram();
    ClaspSection s = parse_named(o.section, "--section", [&](const std::string& text) {
        return section_from_json(text, d);
    });
    ClassColoring col = parse_named(o.coloring, "--coloring", coloring_from_json);
    SynthesisResult r = synthesize_k1_tilde(s, col, o.budget);
    if (o.json_out) {
        json j;
        j["label"] = case_label_name(r.label);
        j["identity_rewrite"] = r.identity_rewrite;
        j["descended"] = r.descended;
        j["diagram"] = json::parse(diagram_to_json(r.normalized));
        j["coloring"] = json::parse(coloring_to_json(r.coloring));
        j["arc_map"] = r.arc_map;
        j["split_tail"] = r.split_tail;
        emit(j);
    } else {
        std::cout << "case " << case_label_name(r.label) << "\n"
                  << "identity rewrite: " << (r.identity_rewrite ? "yes" : "no") << "\n"
                  << "coloring carried arc by arc: " << (r.descended ? "yes" : "no") << "\n"
                  << r.normalized.crossing_count() << " crossings, " << r.normalized.arc_count
                  << " arcs\n";
    }
    return 0;
}

struct HomologyOpts {
    Input in;
    std::string coloring;
    long long node_limit = -1;
    bool json_out = false;
};

int run_homology(const HomologyOpts& o) {
    PlanarDiagram d = o.in.diagram();
    if (!o.coloring.empty()) {
        ClassColoring c = parse_named(o.coloring, "--coloring", coloring_from_json);
        std::string h1 = abelian_group_string(branched_homology(d, c));
        if (o.json_out) {
            json j;
            j["h1"] = h1;
            emit(j);
        } else {
            std::cout << "H1 = " << h1 << "\n";
        }
        return 0;
    }
    SolveOptions sopts;
    sopts.node_limit = o.node_limit;
    SolveResult res = solve_class_colorings(d, symmetric_transpositions(3), sopts);
    if (o.json_out) {
        json j;
        j["complete"] = res.complete;
        j["classes"] = json::array();
        for (const ClassColoring& c : res.colorings) {
            json entry;
            entry["coloring"] = json::parse(coloring_to_json(c));
            entry["h1"] = abelian_group_string(branched_homology(d, c));
            j["classes"].push_back(entry);
        }
        emit(j);
    } else {
        if (res.colorings.empty()) std::cout << "no surjective 3-colorings\n";
        for (std::size_t i = 0; i < res.colorings.size(); ++i)
            std::cout << "class " << i << ": "
                      << abelian_group_string(branched_homology(d, res.colorings[i])) << "\n";
        if (!res.complete) std::cout << "search truncated: the class list is incomplete\n";
    }
    return res.complete ? 0 : 3;
}

struct LkOpts {
    Input in;
    long long node_limit = -1;
    bool json_out = false;
};

json linking_report(const std::string& label, const LinkingSet& s) {
    json j;
    j["knot"] = label;
    j["lk"] = json::array();
    for (const Rat& v : s.values) j["lk"].push_back(rational_string(v));
    j["undefined"] = s.undefined;
    return j;
}

void print_linking_line(const std::string& label, const LinkingSet& s) {
    std::cout << "lk(" << label << ") = {";
    for (std::size_t i = 0; i < s.values.size(); ++i)
        std::cout << (i ? ", " : "") << rational_string(s.values[i]);
    std::cout << "}";
    if (s.undefined > 0) std::cout << " (" << s.undefined << " undefined)";
    std::cout << "\n";
}

int run_lk(const LkOpts& o) {
    LinkingSet s = linking_set(o.in.diagram(), o.node_limit);
    if (o.json_out)
        emit(linking_report(o.in.label(), s));
    else
        print_linking_line(o.in.label(), s);
    return 0;
}

struct ObstructOpts {
    Input in;
    std::string pd2;
    long long node_limit = -1;
    bool json_out = false;
};

int run_obstruct(const ObstructOpts& o) {
    PlanarDiagram a = o.in.diagram();
    PlanarDiagram b = parse_named(o.pd2, "--pd2", diagram_from_json);
    if (!twice_three_colorable(fox_coloring_space(b, 3)))
        fail(ErrorKind::SpecMismatch,
             "the --pd2 knot must be twice 3-colorable for the obstruction to apply");
    ObstructionReport r = lk_obstruction(a, b, o.node_limit);
    std::string label2 =
        is_path_arg(o.pd2) ? std::filesystem::path(o.pd2).stem().string() : "inline";
    if (o.json_out) {
        json j;
        j["left"] = linking_report(o.in.label(), r.left);
        j["right"] = linking_report(label2, r.right);
        j["common"] = json::array();
        for (const Rat& v : r.common) j["common"].push_back(rational_string(v));
        j["obstructed"] = r.obstructed;
        emit(j);
    } else {
        print_linking_line(o.in.label(), r.left);
        print_linking_line(label2, r.right);
        std::cout << "common: {";
        for (std::size_t i = 0; i < r.common.size(); ++i)
            std::cout << (i ? ", " : "") << rational_string(r.common[i]);
        std::cout << "}\n";
        std::cout << "obstructed: "
                  << (r.obstructed ? "yes (conditional on monochromatic crossing changes "
                                     "preserving linking numbers)"
                                   : "no")
                  << "\n";
    }
    return 0;
}

// The solver runs sequentially, so any positive cap is already honored; a
// set value is still validated so typos fail loudly.
void check_thread_env() {
    const char* v = std::getenv("GORDIAN_COLORS_THREADS");
    if (!v) return;
    char* end = nullptr;
    long n = std::strtol(v, &end, 10);
    if (*v == '\0' || *end != '\0' || n < 1)
        fail(ErrorKind::ParseError, "GORDIAN_COLORS_THREADS must be a positive integer");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"symmetric-group knot colorings, clasp rewriting, and dihedral linking"};
    app.require_subcommand(1);

    BuildOpts build;
    CLI::App* cmd_build = app.add_subcommand("build", "emit a named diagram as JSON");
    cmd_build->add_option("kind", build.kind, "trefoil-sum | whitehead | pretzel | closure | mirror")
        ->required();
    cmd_build->add_option("args", build.args, "builder integer arguments");
    build.in.attach(cmd_build);

    ColorOpts color;
    CLI::App* cmd_color = app.add_subcommand("color", "solve conjugacy-class colorings");
    color.in.attach(cmd_color);
    cmd_color->add_option("--group", color.group, "S<n> or A<n> (default S3)");
    cmd_color->add_option("--class", color.cls, "transpositions or three_cycles");
    cmd_color->add_option("--max", color.max, "stop after this many colorings (0 = all)");
    cmd_color->add_option("--node-limit", color.node_limit, "search node cap (-1 = unlimited)");
    cmd_color->add_flag("--json", color.json_out, "emit a JSON report");

    PnumOpts pnum;
    CLI::App* cmd_pnum = app.add_subcommand("pnum", "largest S_n with a surjective coloring");
    pnum.in.attach(cmd_pnum);
    cmd_pnum->add_option("--max-n", pnum.n_max, "largest n to try (0 = overpasses + 1)");
    cmd_pnum->add_option("--node-limit", pnum.node_limit, "search node cap (-1 = unlimited)");
    cmd_pnum->add_flag("--json", pnum.json_out, "emit a JSON report");

    GnOpts gn;
    CLI::App* cmd_gn = app.add_subcommand("gn", "Gordian filtration membership");
    gn.in.attach(cmd_gn);
    cmd_gn->add_option("--n", gn.n, "filtration layer")->required();
    cmd_gn->add_option("--node-limit", gn.node_limit, "search node cap (-1 = unlimited)");
    cmd_gn->add_flag("--json", gn.json_out, "emit a JSON report");

    FoxOpts fox;
    CLI::App* cmd_fox = app.add_subcommand("fox", "mod-p coloring space");
    fox.in.attach(cmd_fox);
    cmd_fox->add_option("--p", fox.p, "odd prime modulus (default 3)");
    cmd_fox->add_flag("--json", fox.json_out, "emit a JSON report");

    RewriteOpts rewrite;
    CLI::App* cmd_rewrite =
        app.add_subcommand("rewrite", "synthesize the colored clasp rewrite of a section");
    rewrite.in.attach(cmd_rewrite);
    cmd_rewrite->add_option("--section", rewrite.section, "section marks JSON")->required();
    cmd_rewrite->add_option("--coloring", rewrite.coloring, "coloring JSON")->required();
    cmd_rewrite->add_option("--budget", rewrite.budget, "crossing budget (default 8)");
    cmd_rewrite->add_flag("--json", rewrite.json_out, "emit a JSON report");

    HomologyOpts homology;
    CLI::App* cmd_homology =
        app.add_subcommand("homology", "branched dihedral cover homology per coloring class");
    homology.in.attach(cmd_homology);
    cmd_homology->add_option("--coloring", homology.coloring, "restrict to one coloring JSON");
    cmd_homology->add_option("--node-limit", homology.node_limit,
                             "search node cap (-1 = unlimited)");
    cmd_homology->add_flag("--json", homology.json_out, "emit a JSON report");

    LkOpts lk;
    CLI::App* cmd_lk = app.add_subcommand("lk", "dihedral linking number set");
    lk.in.attach(cmd_lk);
    cmd_lk->add_option("--node-limit", lk.node_limit, "search node cap (-1 = unlimited)");
    cmd_lk->add_flag("--json", lk.json_out, "emit a JSON report");

    ObstructOpts obstruct;
    CLI::App* cmd_obstruct =
        app.add_subcommand("obstruct", "compare linking sets of two diagrams");
    obstruct.in.attach(cmd_obstruct);
    cmd_obstruct->add_option("--pd2", obstruct.pd2, "second planar diagram")->required();
    cmd_obstruct->add_option("--node-limit", obstruct.node_limit,
                             "search node cap (-1 = unlimited)");
    cmd_obstruct->add_flag("--json", obstruct.json_out, "emit a JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        check_thread_env();
        if (*cmd_build) return run_build(build);
        if (*cmd_color) return run_color(color);
        if (*cmd_pnum) return run_pnum(pnum);
        if (*cmd_gn) return run_gn(gn);
        if (*cmd_fox) return run_fox(fox);
        if (*cmd_rewrite) return run_rewrite(rewrite);
        if (*cmd_homology) return run_homology(homology);
        if (*cmd_lk) return run_lk(lk);
        if (*cmd_obstruct) return run_obstruct(obstruct);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    }
    return 0;
}
