#include "cli_main.hpp"

#include "taufan/check.hpp"
#include "taufan/decompose.hpp"
#include "taufan/errors.hpp"
#include "taufan/json_io.hpp"
#include "taufan/render.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <string>

namespace taufan {

namespace {

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write \"" + path + "\"");
    out << bytes;
}

int run_enumerate(const std::string& file, int cap, std::ostream& out) {
    const AlgebraPresentation pres = parse_algebra_path(file);
    Workspace w;
    w.alg = std::make_unique<Algebra>(build_algebra(pres));
    w.aop = std::make_unique<Algebra>(build_opposite(*w.alg));
    w.enumeration = enumerate_pairs(*w.alg, *w.aop, cap);
    out << enumeration_to_json(w.enumeration);
    return 0;
}

int run_fan(const std::string& file, int cap, const std::string& svg_path,
            bool want_svg, std::ostream& out) {
    Workspace w = build_workspace(parse_algebra_path(file), cap);
    if (want_svg) {
        const std::string svg = fan_to_svg(w.enumeration, w.fan);
        if (svg_path.empty()) {
            out << svg;
        } else {
            write_file(svg_path, svg);
        }
        return 0;
    }
    out << fan_to_json(w.enumeration, w.fan);
    return 0;
}

int run_category(const std::string& file, int cap, const std::string& which,
                 bool dot, bool checked, std::ostream& out) {
    Workspace w = build_workspace(parse_algebra_path(file), cap);
    CategoryTable cat;
    bool poset = false;
    if (which == "tf") {
        cat = build_tf_poset(w.enumeration, w.fan, checked);
        poset = true;
    } else if (which == "pairs") {
        cat = build_pair_poset(w.enumeration);
        poset = true;
    } else if (which == "geom") {
        cat = build_geom_category(w.enumeration, w.fan, checked);
    } else if (which == "pairquot") {
        cat = build_pair_quotient(w.enumeration, w.fan);
    } else {
        cat = build_tcm(w.enumeration, w.fan);
    }
    if (dot) {
        out << category_to_dot(w.enumeration, cat, poset);
    } else {
        out << category_to_json(cat);
    }
    return 0;
}

int run_check(const std::string& file, int cap, bool checked, std::ostream& out,
              std::ostream& err) {
    Workspace w = build_workspace(parse_algebra_path(file), cap);
    const RunReport report = run_checks(w, checked);
    for (const CheckLine& line : report.checks) {
        err << (line.ok ? "[ ok ] " : "[FAIL] ") << line.name;
        if (!line.ok) err << ": " << line.detail;
        err << " (" << line.millis << " ms)\n";
    }
    err << (report.ok ? "all checks passed\n" : "checks FAILED\n");
    out << report_to_json(report);
    return report.ok ? 0 : 3;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
    CLI::App app{"exact tau-tilting pairs, g-vector fans, and the attached "
                 "categories for bound quiver algebras"};
    app.require_subcommand(1);

    std::string file;
    int cap = 10000;
    unsigned long long seed = 0;
    std::string svg_path;
    std::string which = "pairs";
    bool want_json = false, want_dot = false, want_svg = false;
    bool checked = false, unchecked = false;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "algebra description (JSON)")->required();
        cmd->add_option("--cap", cap, "enumeration cap on complete pairs");
        cmd->add_option("--seed", seed, "decomposition search seed");
    };

    CLI::App* cmd_enumerate = app.add_subcommand(
        "enumerate", "list the basic pairs reachable by mutation");
    add_common(cmd_enumerate);
    cmd_enumerate->add_flag("--json", want_json, "emit JSON (the default)");

    CLI::App* cmd_fan = app.add_subcommand("fan", "emit the g-vector fan");
    add_common(cmd_fan);
    cmd_fan->add_flag("--json", want_json, "emit JSON (the default)");
    CLI::Option* fan_svg =
        cmd_fan->add_option("--svg", svg_path, "write the rank-2 picture here");
    fan_svg->expected(0, 1);

    CLI::App* cmd_category =
        app.add_subcommand("category", "emit one of the category tables");
    add_common(cmd_category);
    cmd_category
        ->add_option("--which", which, "tf | pairs | geom | pairquot | tcm")
        ->check(CLI::IsMember({"tf", "pairs", "geom", "pairquot", "tcm"}));
    cmd_category->add_flag("--json", want_json, "emit JSON (the default)");
    cmd_category->add_flag("--dot", want_dot, "emit DOT instead of JSON");
    cmd_category->add_flag("--checked", checked,
                           "cross-validate the order geometrically");

    CLI::App* cmd_check =
        app.add_subcommand("check", "run the full verification suite");
    add_common(cmd_check);
    cmd_check->add_flag("--unchecked", unchecked,
                        "skip the geometric cross-validation of the order");

    CLI::App* cmd_render =
        app.add_subcommand("render", "shorthand for fan --svg");
    add_common(cmd_render);
    CLI::Option* render_svg =
        cmd_render->add_option("--svg", svg_path, "write the picture here");
    render_svg->expected(0, 1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& pe) {
        return app.exit(pe, out, err);
    }

    try {
        if (seed != 0) set_decompose_seed(seed);
        if (cmd_enumerate->parsed()) return run_enumerate(file, cap, out);
        if (cmd_fan->parsed()) {
            return run_fan(file, cap, svg_path, fan_svg->count() > 0, out);
        }
        if (cmd_category->parsed()) {
            return run_category(file, cap, which, want_dot, checked, out);
        }
        if (cmd_check->parsed()) return run_check(file, cap, !unchecked, out, err);
        if (cmd_render->parsed()) return run_fan(file, cap, svg_path, true, out);
        err << "error: no command\n";
        return 1;
    } catch (const ParseError& ex) {
        err << "error: " << ex.what() << "\n";
        return 1;
    } catch (const NotAdmissible& ex) {
        err << "error: " << ex.what() << "\n";
        return 1;
    } catch (const InconsistentRelation& ex) {
        err << "error: " << ex.what() << "\n";
        return 1;
    } catch (const NotFiniteDimensional& ex) {
        err << "error: " << ex.what() << "\n";
        return 1;
    } catch (const CapExceeded& ex) {
        err << "error: " << ex.what() << " (cap " << ex.cap << ")\n";
        return 2;
    } catch (const Error& ex) {
        err << "error: " << ex.what() << "\n";
        return 3;
    }
}

}  // namespace taufan
