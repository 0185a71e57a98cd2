// lrfsim: command-line front end for the LRF sensor-layout library.
//
// Exit codes: 0 success, 2 input parse error, 3 domain precondition
// violation, 4 I/O failure.

#include <lrf/geometry.hpp>
#include <lrf/io.hpp>
#include <lrf/partition.hpp>
#include <lrf/render.hpp>
#include <lrf/simulation.hpp>

#include <CLI11.hpp>

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace
{
    using lrf::io::json;

    constexpr int kExitParse = 2;
    constexpr int kExitDomain = 3;
    constexpr int kExitIo = 4;

    double parse_double (const std::string &s, const std::string &what)
    {
        const char *begin = s.c_str ();
        char *end = nullptr;
        errno = 0;
        const double v = std::strtod (begin, &end);
        if (end == begin || *end != '\0' || errno == ERANGE || !std::isfinite (v))
            throw lrf::io::InputError (what + ": cannot parse \"" + s + "\" as a number");
        return v;
    }

    lrf::Point2 parse_point (const std::string &s)
    {
        const auto comma = s.find (',');
        if (comma == std::string::npos || s.find (',', comma + 1) != std::string::npos)
            throw lrf::io::InputError ("--point: expected X,Y, got \"" + s + "\"");
        return {parse_double (s.substr (0, comma), "--point x"), parse_double (s.substr (comma + 1), "--point y")};
    }

    void emit (const std::string &text, const std::string &out_path)
    {
        if (out_path.empty ())
            std::cout << text;
        else
            lrf::io::write_file (out_path, text);
    }

    lrf::Layout build_layout (const lrf::io::Config &c)
    {
        return lrf::make_layout (c.model, c.robot, lrf::compute_expansion (c.robot, c.human));
    }

    struct Options
    {
        std::string config;
        std::string scenario;
        std::string format = "json";
        std::string out;
        std::string csv;
        std::vector<std::string> points;
        std::optional<double> window;
        double resolution = 0.05;
        bool no_virtual = false;
        bool no_real = false;
        bool no_restricted = false;
        bool no_lines = false;
        bool no_lrf = false;
    };

    void cmd_expand (const Options &o)
    {
        const auto c = lrf::io::load_config (o.config);
        std::cout << lrf::io::dump (lrf::io::to_json (lrf::compute_expansion (c.robot, c.human)));
    }

    void cmd_layout (const Options &o)
    {
        const auto c = lrf::io::load_config (o.config);
        const auto layout = build_layout (c);
        if (o.format == "csv")
        {
            emit (lrf::io::layout_csv (layout), o.out);
            return;
        }
        json doc = lrf::io::layout_to_json (layout, c);
        doc["validation"] = lrf::io::to_json (lrf::validate_layout (layout, c.human));
        emit (lrf::io::dump (doc), o.out);
    }

    void cmd_classify (const Options &o)
    {
        const auto c = lrf::io::load_config (o.config);
        if (o.points.empty ())
            throw lrf::io::InputError ("--point is required");
        const auto layout = build_layout (c);
        json out = json::array ();
        for (const auto &s : o.points)
        {
            const lrf::Point2 p = parse_point (s);
            json a = lrf::io::to_json (lrf::assign (layout, p));
            a["point"] = {lrf::io::round12 (p.x), lrf::io::round12 (p.y)};
            out.push_back (std::move (a));
        }
        std::cout << lrf::io::dump (out.size () == 1 ? out[0] : out);
    }

    void cmd_simulate (const Options &o)
    {
        const auto scenario = lrf::io::load_scenario (o.scenario);
        const auto report = lrf::run_scenario (scenario);
        const std::string doc = lrf::io::dump (lrf::io::report_to_json (report));
        if (!o.csv.empty ())
            lrf::io::write_file (o.csv, lrf::io::report_csv (report));
        emit (doc, o.out);
    }

    void cmd_coverage (const Options &o)
    {
        const auto c = lrf::io::load_config (o.config);
        const auto layout = build_layout (c);
        const lrf::Rect window = o.window ? lrf::Rect::centered ({0.0, 0.0}, *o.window, *o.window)
                                          : lrf::default_window (layout);
        const auto grid = lrf::coverage_map (layout, window, o.resolution);
        if (!o.out.empty ())
            lrf::io::write_file (o.out, lrf::io::coverage_csv (grid));
        std::cout << lrf::io::dump (lrf::io::coverage_summary_json (grid));
    }

    void cmd_render (const Options &o)
    {
        const auto c = lrf::io::load_config (o.config);
        lrf::RenderSpec spec;
        spec.virtual_rect = !o.no_virtual;
        spec.real_rect = !o.no_real;
        spec.restricted = !o.no_restricted;
        spec.partition_lines = !o.no_lines;
        spec.lrf_units = !o.no_lrf;
        for (const auto &s : o.points)
            spec.points.push_back (parse_point (s));
        if (!spec.any_overlay ())
            throw lrf::io::InputError ("render: every overlay is disabled");
        lrf::io::write_file (o.out, lrf::render_svg (build_layout (c), spec));
    }
}  // namespace

int main (int argc, char **argv)
{
    CLI::App app{"LRF sensor layout, partition and coverage simulator"};
    app.require_subcommand (1);
    Options o;

    auto *expand = app.add_subcommand ("expand", "Resolve scale-expansion parameters");
    expand->add_option ("config", o.config, "Config JSON")->required ();

    auto *layout = app.add_subcommand ("layout", "Key points, rectangles and LRF placements");
    layout->add_option ("config", o.config, "Config JSON")->required ();
    layout->add_option ("--format", o.format, "json or csv")->check (CLI::IsMember ({"json", "csv"}));
    layout->add_option ("--out", o.out, "Output file (default stdout)");

    auto *classify = app.add_subcommand ("classify", "Region and responsible LRF units for points");
    classify->add_option ("config", o.config, "Config JSON")->required ();
    classify->add_option ("--point", o.points, "X,Y (repeatable)")->required ();

    auto *simulate = app.add_subcommand ("simulate", "Replay a trajectory scenario");
    simulate->add_option ("scenario", o.scenario, "Scenario JSON")->required ();
    simulate->add_option ("--out", o.out, "Report JSON (default stdout)");
    simulate->add_option ("--csv", o.csv, "Per-step CSV");

    auto *coverage = app.add_subcommand ("coverage", "Grid coverage multiplicity analysis");
    coverage->add_option ("config", o.config, "Config JSON")->required ();
    coverage->add_option ("--window", o.window, "Side length of a square window centered at the origin (m)");
    coverage->add_option ("--resolution", o.resolution, "Maximum cell edge (m)");
    coverage->add_option ("--out", o.out, "Grid CSV");

    auto *render = app.add_subcommand ("render", "SVG diagram of the layout");
    render->add_option ("config", o.config, "Config JSON")->required ();
    render->add_option ("--out", o.out, "SVG file")->required ();
    render->add_option ("--point", o.points, "Sample point X,Y (repeatable)");
    render->add_flag ("--no-virtual", o.no_virtual, "Hide the virtual robot");
    render->add_flag ("--no-real", o.no_real, "Hide the real robot");
    render->add_flag ("--no-restricted", o.no_restricted, "Hide the restricted area");
    render->add_flag ("--no-lines", o.no_lines, "Hide rays / side extensions");
    render->add_flag ("--no-lrf", o.no_lrf, "Hide LRF markers");

    try
    {
        app.parse (argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit (e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit (e);
        return kExitParse;
    }

    try
    {
        if (expand->parsed ())
            cmd_expand (o);
        else if (layout->parsed ())
            cmd_layout (o);
        else if (classify->parsed ())
            cmd_classify (o);
        else if (simulate->parsed ())
            cmd_simulate (o);
        else if (coverage->parsed ())
            cmd_coverage (o);
        else if (render->parsed ())
            cmd_render (o);
    }
    catch (const lrf::io::InputError &e)
    {
        std::cerr << "error: " << e.what () << "\n";
        return kExitParse;
    }
    catch (const lrf::Error &e)
    {
        std::cerr << "error: " << lrf::to_string (e.code ()) << ": " << e.what () << "\n";
        return kExitDomain;
    }
    catch (const lrf::io::IoError &e)
    {
        std::cerr << "error: " << e.what () << "\n";
        return kExitIo;
    }
    return 0;
}
