#include <lrf/io.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <initializer_list>
#include <sstream>

namespace lrf::io
{
    namespace
    {
        std::string field (const std::string &where, const std::string &key)
        {
            return where.empty () ? key : where + "." + key;
        }

        void require_object (const json &j, const std::string &where)
        {
            if (!j.is_object ())
                throw InputError (where + ": expected a JSON object");
        }

        void reject_unknown (const json &obj, std::initializer_list<std::string_view> allowed, const std::string &where)
        {
            for (const auto &[key, value] : obj.items ())
                if (std::find (allowed.begin (), allowed.end (), key) == allowed.end ())
                    throw InputError (field (where, key) + ": unknown field");
        }

        const json &member (const json &obj, const std::string &key, const std::string &where)
        {
            auto it = obj.find (key);
            if (it == obj.end ())
                throw InputError (field (where, key) + ": missing required field");
            return *it;
        }

        double as_number (const json &v, const std::string &name)
        {
            if (!v.is_number ())
                throw InputError (name + ": expected a number");
            const double d = v.get<double> ();
            if (!std::isfinite (d))
                throw InputError (name + ": expected a finite number");
            return d;
        }

        double number (const json &obj, const std::string &key, const std::string &where)
        {
            return as_number (member (obj, key, where), field (where, key));
        }

        void optional_number (const json &obj, const std::string &key, const std::string &where, double &out)
        {
            if (obj.contains (key))
                out = as_number (obj.at (key), field (where, key));
        }

        std::string string_field (const json &obj, const std::string &key, const std::string &where)
        {
            const json &v = member (obj, key, where);
            if (!v.is_string ())
                throw InputError (field (where, key) + ": expected a string");
            return v.get<std::string> ();
        }

        RobotSpec parse_robot (const json &j, const std::string &where)
        {
            require_object (j, where);
            reject_unknown (j, {"wrfb", "wrlr", "xi", "epsilon", "k2_threshold", "p_min", "p_max"}, where);
            RobotSpec r;
            r.wrfb = number (j, "wrfb", where);
            r.wrlr = number (j, "wrlr", where);
            r.xi = number (j, "xi", where);
            r.epsilon = number (j, "epsilon", where);
            optional_number (j, "k2_threshold", where, r.k2_threshold);
            optional_number (j, "p_min", where, r.p_min);
            optional_number (j, "p_max", where, r.p_max);
            return r;
        }

        HumanSpec parse_human (const json &j, const std::string &where)
        {
            require_object (j, where);
            reject_unknown (j, {"whfb", "whlr"}, where);
            return HumanSpec{number (j, "whfb", where), number (j, "whlr", where)};
        }

        Config parse_config_at (const json &doc, const std::string &where)
        {
            require_object (doc, where.empty () ? "config" : where);
            reject_unknown (doc, {"robot", "human", "model", "lock_mode"}, where);
            Config c;
            c.robot = parse_robot (member (doc, "robot", where), field (where, "robot"));
            c.human = parse_human (member (doc, "human", where), field (where, "human"));
            try
            {
                c.model = parse_model (string_field (doc, "model", where));
                if (doc.contains ("lock_mode"))
                    c.lock_mode = parse_lock_mode (string_field (doc, "lock_mode", where));
            }
            catch (const InputError &e)
            {
                throw InputError (where.empty () ? e.what () : where + "." + e.what ());
            }
            return c;
        }

        json num (double v) { return round12 (v); }

        json point_json (Point2 p) { return json{{"x", num (p.x)}, {"y", num (p.y)}}; }

        json rect_json (const Rect &r)
        {
            return json{{"xmin", num (r.xmin)}, {"xmax", num (r.xmax)}, {"ymin", num (r.ymin)}, {"ymax", num (r.ymax)}};
        }

        json groups_json (const std::vector<LrfGroup> &groups)
        {
            json out = json::array ();
            for (LrfGroup g : groups)
                out.push_back (std::string (to_string (g)));
            return out;
        }

        std::string join_groups (const std::vector<LrfGroup> &groups)
        {
            std::string s;
            for (std::size_t i = 0; i < groups.size (); ++i)
            {
                if (i > 0)
                    s += ';';
                s += to_string (groups[i]);
            }
            return s;
        }
    }  // namespace

    SensorModel parse_model (const std::string &name)
    {
        if (name == "corner")
            return SensorModel::FourCorner;
        if (name == "center")
            return SensorModel::FourSideCenter;
        throw InputError ("model: expected \"corner\" or \"center\", got \"" + name + "\"");
    }

    LockMode parse_lock_mode (const std::string &name)
    {
        if (name == "containment")
            return LockMode::Containment;
        if (name == "center_point")
            return LockMode::CenterPoint;
        throw InputError ("lock_mode: expected \"containment\" or \"center_point\", got \"" + name + "\"");
    }

    Config parse_config (const json &doc) { return parse_config_at (doc, ""); }

    Config load_config (const std::filesystem::path &path)
    {
        return parse_config (parse_json_text (read_file (path)));
    }

    Scenario parse_scenario (const json &doc)
    {
        require_object (doc, "scenario");
        reject_unknown (doc, {"config", "trajectory"}, "");
        const Config c = parse_config_at (member (doc, "config", ""), "config");

        Scenario s;
        s.robot = c.robot;
        s.human = c.human;
        s.model = c.model;
        s.lock_mode = c.lock_mode;

        const json &traj = member (doc, "trajectory", "");
        if (!traj.is_array ())
            throw InputError ("trajectory: expected an array of [t, x, y] triples");
        for (std::size_t i = 0; i < traj.size (); ++i)
        {
            const std::string name = "trajectory[" + std::to_string (i) + "]";
            const json &row = traj[i];
            if (!row.is_array () || row.size () != 3)
                throw InputError (name + ": expected [t, x, y]");
            s.trajectory.push_back ({as_number (row[0], name + "[0]"), as_number (row[1], name + "[1]"),
                                     as_number (row[2], name + "[2]")});
        }
        return s;
    }

    Scenario load_scenario (const std::filesystem::path &path)
    {
        return parse_scenario (parse_json_text (read_file (path)));
    }

    json parse_json_text (const std::string &text)
    {
        try
        {
            return json::parse (text);
        }
        catch (const json::parse_error &e)
        {
            throw InputError (std::string ("malformed JSON: ") + e.what ());
        }
    }

    std::string read_file (const std::filesystem::path &path)
    {
        std::ifstream in (path, std::ios::binary);
        if (!in)
            throw IoError ("cannot open " + path.string () + " for reading");
        std::ostringstream ss;
        ss << in.rdbuf ();
        return ss.str ();
    }

    void write_file (const std::filesystem::path &path, const std::string &content)
    {
        std::ofstream out (path, std::ios::binary | std::ios::trunc);
        if (!out)
            throw IoError ("cannot open " + path.string () + " for writing");
        out << content;
        out.flush ();
        if (!out)
            throw IoError ("failed writing " + path.string ());
    }

    double round12 (double v)
    {
        if (!std::isfinite (v))
            return v;
        char buf[32];
        std::snprintf (buf, sizeof buf, "%.12g", v);
        const double r = std::strtod (buf, nullptr);
        return r == 0.0 ? 0.0 : r;  // drop negative zero
    }

    std::string format_number (double v)
    {
        char buf[32];
        std::snprintf (buf, sizeof buf, "%.12g", round12 (v));
        return buf;
    }

    std::string dump (const json &doc) { return doc.dump (2) + "\n"; }

    json to_json (const ExpansionResult &e)
    {
        return json{{"p", num (e.p)},         {"p_unclamped", num (e.p_unclamped)},
                    {"k1", num (e.k1)},       {"k2", num (e.k2)},
                    {"expanded", e.expanded}, {"clamped", e.clamped},
                    {"vwrfb", num (e.vwrfb)}, {"vwrlr", num (e.vwrlr)},
                    {"wfb", num (e.wfb)},     {"wlr", num (e.wlr)}};
    }

    json to_json (const Assignment &a)
    {
        json units = json::array ();
        for (const auto &u : a.units)
            units.push_back ({{"group", std::string (to_string (u.group))}, {"unit", u.unit_index}});
        return json{{"region", to_string (a.region)},
                    {"groups", groups_json (a.groups ())},
                    {"units", units},
                    {"double", a.double_detected},
                    {"interior", a.interior}};
    }

    json to_json (const ValidationReport &r)
    {
        json checks = json::array ();
        for (const auto &c : r.checks)
            checks.push_back ({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        return json{{"all_passed", r.all_passed ()}, {"checks", checks}};
    }

    json layout_to_json (const Layout &layout, const Config &config)
    {
        const auto &r = config.robot;
        json inputs{{"robot",
                     {{"wrfb", r.wrfb},
                      {"wrlr", r.wrlr},
                      {"xi", r.xi},
                      {"epsilon", r.epsilon},
                      {"k2_threshold", r.k2_threshold},
                      {"p_min", r.p_min},
                      {"p_max", r.p_max}}},
                    {"human", {{"whfb", config.human.whfb}, {"whlr", config.human.whlr}}}};

        json keys = json::object ();
        for (KeyPoint k : kAllKeyPoints)
            keys[std::string (to_string (k))] = point_json (layout.key (k));

        json units = json::array ();
        for (const auto &u : layout.lrf_units)
            units.push_back ({{"group", std::string (to_string (u.group))},
                              {"unit", u.unit_index},
                              {"x", num (u.position.x)},
                              {"y", num (u.position.y)},
                              {"real_x", num (u.real_position.x)},
                              {"real_y", num (u.real_position.y)}});

        return json{{"model", std::string (to_string (layout.model))},
                    {"inputs", inputs},
                    {"expansion", to_json (layout.expansion)},
                    {"shift", num (layout.shift)},
                    {"virtual_rect", rect_json (layout.virtual_rect)},
                    {"real_rect", rect_json (layout.real_rect)},
                    {"restricted_rect", rect_json (layout.restricted_rect)},
                    {"key_points", keys},
                    {"lrf_units", units}};
    }

    Layout layout_from_json (const json &doc)
    {
        require_object (doc, "layout");
        const SensorModel model = parse_model (string_field (doc, "model", ""));
        const json &inputs = member (doc, "inputs", "");
        require_object (inputs, "inputs");
        const RobotSpec robot = parse_robot (member (inputs, "robot", "inputs"), "inputs.robot");
        const HumanSpec human = parse_human (member (inputs, "human", "inputs"), "inputs.human");

        Layout layout = make_layout (model, robot, compute_expansion (robot, human));

        const json &keys = member (doc, "key_points", "");
        require_object (keys, "key_points");
        for (KeyPoint k : kAllKeyPoints)
        {
            const std::string where = "key_points." + std::string (to_string (k));
            const json &p = member (keys, std::string (to_string (k)), "key_points");
            require_object (p, where);
            const Point2 expect = layout.key (k);
            if (std::abs (number (p, "x", where) - expect.x) > kCoordTolerance ||
                std::abs (number (p, "y", where) - expect.y) > kCoordTolerance)
                throw InputError (where + ": does not match the layout rebuilt from inputs");
        }
        return layout;
    }

    std::string layout_csv (const Layout &layout)
    {
        std::string out = "name,x,y\n";
        for (KeyPoint k : kAllKeyPoints)
        {
            const Point2 p = layout.key (k);
            out += std::string (to_string (k)) + "," + format_number (p.x) + "," + format_number (p.y) + "\n";
        }
        for (const auto &u : layout.lrf_units)
            out += std::string (to_string (u.group)) + "/" + std::to_string (u.unit_index) + "," +
                   format_number (u.position.x) + "," + format_number (u.position.y) + "\n";
        return out;
    }

    json report_to_json (const SimReport &report)
    {
        json records = json::array ();
        for (const auto &r : report.records)
            records.push_back ({{"t", num (r.sample.t)},
                                {"x", num (r.sample.x)},
                                {"y", num (r.sample.y)},
                                {"region", to_string (r.region)},
                                {"lock", std::string (to_string (r.lock))},
                                {"groups", groups_json (r.groups)},
                                {"double", r.double_detected}});
        json transitions = json::array ();
        for (const auto &t : report.transitions)
            transitions.push_back ({{"t", num (t.t)},
                                    {"from", std::string (to_string (t.from))},
                                    {"to", std::string (to_string (t.to))}});
        return json{{"model", std::string (to_string (report.layout.model))},
                    {"expansion", to_json (report.layout.expansion)},
                    {"records", records},
                    {"transitions", transitions},
                    {"summary",
                     {{"steps", report.summary.steps},
                      {"locked_fraction", num (report.summary.locked_fraction)},
                      {"transitions", report.summary.transition_count}}}};
    }

    std::string report_csv (const SimReport &report)
    {
        std::string out = "t,x,y,region,lock,groups,double\n";
        for (const auto &r : report.records)
            out += format_number (r.sample.t) + "," + format_number (r.sample.x) + "," + format_number (r.sample.y) +
                   "," + to_string (r.region) + "," + std::string (to_string (r.lock)) + "," + join_groups (r.groups) +
                   "," + (r.double_detected ? "true" : "false") + "\n";
        return out;
    }

    json coverage_summary_json (const CoverageGrid &grid)
    {
        const auto &s = grid.summary;
        return json{{"window", rect_json (grid.window)},
                    {"resolution", num (grid.resolution)},
                    {"nx", grid.nx},
                    {"ny", grid.ny},
                    {"cells", grid.cells.size ()},
                    {"cell_width", num (grid.cell_width)},
                    {"cell_height", num (grid.cell_height)},
                    {"overlap_cells", s.overlap_cells},
                    {"separate_cells", s.separate_cells},
                    {"interior_cells", s.interior_cells},
                    {"overlap_area", num (s.overlap_area)},
                    {"separate_area", num (s.separate_area)},
                    {"interior_area", num (s.interior_area)},
                    {"ratio", s.separate_cells > 0 ? json (num (s.ratio)) : json (nullptr)}};
    }

    std::string coverage_csv (const CoverageGrid &grid)
    {
        std::string out = "cell_x,cell_y,region,multiplicity\n";
        out.reserve (grid.cells.size () * 40);
        for (const auto &c : grid.cells)
            out += format_number (c.center.x) + "," + format_number (c.center.y) + "," + to_string (c.region) + "," +
                   std::to_string (c.multiplicity) + "\n";
        return out;
    }

}  // namespace lrf::io
