#include <lrf/geometry.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

namespace lrf
{
    namespace
    {
        bool near (double a, double b, double tol = kCoordTolerance) { return std::abs (a - b) <= tol; }

        bool finite_positive (double v) { return std::isfinite (v) && v > 0.0; }

        std::string fmt (double v)
        {
            std::ostringstream os;
            os.precision (12);
            os << v;
            return os.str ();
        }

        void check_expansion (const RobotSpec &robot, const ExpansionResult &e)
        {
            robot.validate ();
            const bool ratios_ok = std::isfinite (e.p) && e.p >= 1.0 && near (e.vwrfb, e.p * robot.wrfb) &&
                                   near (e.vwrlr, e.p * robot.wrlr) && near (e.wlr, e.vwrlr) &&
                                   near (e.wfb, robot.epsilon * e.wlr);
            const bool branch_ok = e.expanded ? (e.p >= robot.p_min - kCoordTolerance && e.p <= robot.p_max + kCoordTolerance)
                                              : e.p == 1.0;
            if (!ratios_ok || !branch_ok)
                throw Error (ErrorCode::InvalidExpansion, "expansion result is inconsistent with the robot spec");
        }

        LrfUnit make_unit (LrfGroup g, int index, Point2 virt, Point2 real) { return LrfUnit{g, index, virt, real}; }

        // Shared by both models: real rect at the origin, virtual rect raised by s.
        Layout frame (SensorModel model, const RobotSpec &robot, const ExpansionResult &exp)
        {
            check_expansion (robot, exp);
            Layout out;
            out.model = model;
            out.expansion = exp;
            out.shift = 0.5 * (exp.vwrfb - robot.wrfb);
            out.real_rect = Rect{-0.5 * robot.wrlr, 0.5 * robot.wrlr, -0.5 * robot.wrfb, 0.5 * robot.wrfb};
            return out;
        }
    }  // namespace

    std::string_view to_string (ErrorCode code)
    {
        switch (code)
        {
        case ErrorCode::NonPositiveDimension: return "NonPositiveDimension";
        case ErrorCode::DegenerateHuman: return "DegenerateHuman";
        case ErrorCode::InvalidParameter: return "InvalidParameter";
        case ErrorCode::InvalidExpansion: return "InvalidExpansion";
        case ErrorCode::ModelMismatch: return "ModelMismatch";
        case ErrorCode::InvalidScenario: return "InvalidScenario";
        case ErrorCode::ResolutionTooCoarse: return "ResolutionTooCoarse";
        }
        return "Unknown";
    }

    std::string_view to_string (SensorModel model)
    {
        return model == SensorModel::FourCorner ? "corner" : "center";
    }

    std::string_view to_string (LrfGroup group)
    {
        switch (group)
        {
        case LrfGroup::FrontLeftCorner: return "front_left_corner";
        case LrfGroup::FrontRightCorner: return "front_right_corner";
        case LrfGroup::BackLeftCorner: return "back_left_corner";
        case LrfGroup::BackRightCorner: return "back_right_corner";
        case LrfGroup::Front: return "front";
        case LrfGroup::Back: return "back";
        case LrfGroup::Left: return "left";
        case LrfGroup::Right: return "right";
        }
        return "unknown";
    }

    LrfGroup mirror (LrfGroup group)
    {
        switch (group)
        {
        case LrfGroup::FrontLeftCorner: return LrfGroup::FrontRightCorner;
        case LrfGroup::FrontRightCorner: return LrfGroup::FrontLeftCorner;
        case LrfGroup::BackLeftCorner: return LrfGroup::BackRightCorner;
        case LrfGroup::BackRightCorner: return LrfGroup::BackLeftCorner;
        case LrfGroup::Left: return LrfGroup::Right;
        case LrfGroup::Right: return LrfGroup::Left;
        default: return group;
        }
    }

    std::string_view to_string (KeyPoint k)
    {
        static constexpr std::array<std::string_view, 6> names{"P1", "P2", "P3", "P4", "Pa", "Pb"};
        return names[static_cast<std::size_t> (k)];
    }

    Rect Rect::make (double xmin, double xmax, double ymin, double ymax)
    {
        const bool finite = std::isfinite (xmin) && std::isfinite (xmax) && std::isfinite (ymin) && std::isfinite (ymax);
        if (!finite || !(xmin < xmax) || !(ymin < ymax))
            throw Error (ErrorCode::InvalidParameter, "rectangle bounds must be finite with min < max");
        return Rect{xmin, xmax, ymin, ymax};
    }

    Rect Rect::centered (Point2 c, double width, double height)
    {
        return make (c.x - 0.5 * width, c.x + 0.5 * width, c.y - 0.5 * height, c.y + 0.5 * height);
    }

    void RobotSpec::validate () const
    {
        if (!finite_positive (wrfb) || !finite_positive (wrlr))
            throw Error (ErrorCode::NonPositiveDimension, "robot widths wrfb and wrlr must be positive");
        if (!finite_positive (epsilon))
            throw Error (ErrorCode::InvalidParameter, "epsilon must be positive");
        if (!std::isfinite (xi) || !std::isfinite (k2_threshold))
            throw Error (ErrorCode::InvalidParameter, "xi and k2_threshold must be finite");
        if (!(p_min >= 1.0) || !(p_min <= p_max) || !std::isfinite (p_max))
            throw Error (ErrorCode::InvalidParameter, "p bounds must satisfy 1 <= p_min <= p_max");
    }

    const LrfUnit &Layout::unit (LrfGroup g, int index) const
    {
        auto it = std::find_if (lrf_units.begin (), lrf_units.end (),
                                [&] (const LrfUnit &u) { return u.group == g && u.unit_index == index; });
        if (it == lrf_units.end ())
            throw Error (ErrorCode::ModelMismatch, std::string ("layout has no LRF unit ") + std::string (to_string (g)));
        return *it;
    }

    ExpansionResult compute_expansion (const RobotSpec &robot, const HumanSpec &human)
    {
        if (human.whlr == 0.0)
            throw Error (ErrorCode::DegenerateHuman, "human left-right width is zero");
        if (!finite_positive (human.whfb) || !finite_positive (human.whlr))
            throw Error (ErrorCode::NonPositiveDimension, "human widths whfb and whlr must be positive");
        robot.validate ();

        ExpansionResult r;
        r.k1 = robot.wrfb / human.whfb;
        r.k2 = robot.wrlr / human.whlr;
        r.expanded = r.k2 <= robot.k2_threshold;
        if (r.expanded)
        {
            r.p_unclamped = robot.xi + r.k2;
            r.p = std::clamp (r.p_unclamped, robot.p_min, robot.p_max);
            r.clamped = r.p != r.p_unclamped;
        }
        r.vwrfb = r.p * robot.wrfb;
        r.vwrlr = r.p * robot.wrlr;
        r.wlr = r.p * robot.wrlr;
        r.wfb = robot.epsilon * r.wlr;
        return r;
    }

    Layout corner_layout (const RobotSpec &robot, const ExpansionResult &exp)
    {
        Layout out = frame (SensorModel::FourCorner, robot, exp);
        const double s = out.shift;

        // Coordinates before the shift, centered on the virtual robot.
        const double half_w = 0.5 * exp.wlr;
        const double front0 = 0.5 * exp.vwrfb;
        const double rear0 = -0.5 * exp.vwrfb;
        const double restricted0 = -(exp.wfb + 0.5 * exp.vwrfb);

        out.key_points = {Point2{-half_w, front0 + s}, Point2{half_w, front0 + s},      Point2{-half_w, rear0 + s},
                          Point2{half_w, rear0 + s},   Point2{-half_w, restricted0 + s}, Point2{half_w, restricted0 + s}};

        out.virtual_rect = Rect{-0.5 * exp.vwrlr, 0.5 * exp.vwrlr, rear0 + s, front0 + s};
        out.restricted_rect = Rect{-half_w, half_w, restricted0 + s, rear0 + s};

        const Rect &r = out.real_rect;
        const std::array<std::tuple<LrfGroup, KeyPoint, Point2>, 4> corners{{
            {LrfGroup::FrontLeftCorner, KeyPoint::P1, {r.xmin, r.ymax}},
            {LrfGroup::FrontRightCorner, KeyPoint::P2, {r.xmax, r.ymax}},
            {LrfGroup::BackLeftCorner, KeyPoint::P3, {r.xmin, r.ymin}},
            {LrfGroup::BackRightCorner, KeyPoint::P4, {r.xmax, r.ymin}},
        }};
        for (const auto &[g, k, real] : corners)
            for (int i = 0; i < 2; ++i)
                out.lrf_units.push_back (make_unit (g, i, out.key (k), real));
        return out;
    }

    Layout center_layout (const RobotSpec &robot, const ExpansionResult &exp)
    {
        Layout out = frame (SensorModel::FourSideCenter, robot, exp);
        const double s = out.shift;

        const double half_w = 0.5 * exp.vwrlr;
        const double front0 = 0.5 * exp.vwrfb;
        const double rear0 = -0.5 * exp.vwrfb;
        const double restricted0 = -(0.5 * exp.vwrfb + exp.wfb);

        out.key_points = {Point2{0.0, front0 + s},     Point2{half_w, s},  Point2{0.0, rear0 + s},
                          Point2{-half_w, s},          Point2{-half_w, restricted0 + s},
                          Point2{half_w, restricted0 + s}};

        out.virtual_rect = Rect{-half_w, half_w, rear0 + s, front0 + s};
        out.restricted_rect = Rect{-0.5 * exp.wlr, 0.5 * exp.wlr, restricted0 + s, rear0 + s};

        const Rect &r = out.real_rect;
        const std::array<std::tuple<LrfGroup, KeyPoint, Point2>, 4> sides{{
            {LrfGroup::Front, KeyPoint::P1, {0.0, r.ymax}},
            {LrfGroup::Right, KeyPoint::P2, {r.xmax, 0.0}},
            {LrfGroup::Back, KeyPoint::P3, {0.0, r.ymin}},
            {LrfGroup::Left, KeyPoint::P4, {r.xmin, 0.0}},
        }};
        for (const auto &[g, k, real] : sides)
            for (int i = 0; i < 2; ++i)
                out.lrf_units.push_back (make_unit (g, i, out.key (k), real));
        return out;
    }

    Layout make_layout (SensorModel model, const RobotSpec &robot, const ExpansionResult &exp)
    {
        return model == SensorModel::FourCorner ? corner_layout (robot, exp) : center_layout (robot, exp);
    }

    bool ValidationReport::all_passed () const
    {
        return std::all_of (checks.begin (), checks.end (), [] (const ValidationCheck &c) { return c.passed; });
    }

    const ValidationCheck *ValidationReport::find (std::string_view name) const
    {
        for (const auto &c : checks)
            if (c.name == name)
                return &c;
        return nullptr;
    }

    ValidationReport validate_layout (const Layout &layout, const HumanSpec &human)
    {
        ValidationReport report;
        const auto &e = layout.expansion;
        const auto &rr = layout.restricted_rect;
        const auto &vr = layout.virtual_rect;

        report.checks.push_back ({"restricted_width", e.wlr > human.whlr,
                                  "wlr " + fmt (e.wlr) + " vs human whlr " + fmt (human.whlr)});
        report.checks.push_back ({"restricted_depth", e.wfb > human.whfb,
                                  "wfb " + fmt (e.wfb) + " vs human whfb " + fmt (human.whfb)});
        report.checks.push_back ({"rear_alignment", near (vr.ymin, layout.real_rect.ymin),
                                  "virtual ymin " + fmt (vr.ymin) + ", real ymin " + fmt (layout.real_rect.ymin)});

        const bool flush = near (rr.ymax, vr.ymin) && near (rr.height (), e.wfb) && near (rr.width (), e.wlr) &&
                           near (rr.xmin, -rr.xmax);
        report.checks.push_back ({"restricted_flush", flush, "restricted area sits on the virtual rear edge"});

        bool symmetric = near (vr.xmin, -vr.xmax) && near (layout.real_rect.xmin, -layout.real_rect.xmax);
        for (const auto &u : layout.lrf_units)
        {
            const LrfGroup partner = mirror (u.group);
            auto it = std::find_if (layout.lrf_units.begin (), layout.lrf_units.end (), [&] (const LrfUnit &v) {
                return v.group == partner && v.unit_index == u.unit_index;
            });
            symmetric = symmetric && it != layout.lrf_units.end () && near (it->position.x, -u.position.x) &&
                        near (it->position.y, u.position.y) && near (it->real_position.x, -u.real_position.x) &&
                        near (it->real_position.y, u.real_position.y);
        }
        const auto pair_ok = [&] (KeyPoint a, KeyPoint b) {
            return near (layout.key (a).x, -layout.key (b).x) && near (layout.key (a).y, layout.key (b).y);
        };
        if (layout.model == SensorModel::FourCorner)
            symmetric = symmetric && pair_ok (KeyPoint::P1, KeyPoint::P2) && pair_ok (KeyPoint::P3, KeyPoint::P4);
        else
            symmetric = symmetric && pair_ok (KeyPoint::P2, KeyPoint::P4) && near (layout.key (KeyPoint::P1).x, 0.0) &&
                        near (layout.key (KeyPoint::P3).x, 0.0);
        symmetric = symmetric && pair_ok (KeyPoint::Pa, KeyPoint::Pb);
        report.checks.push_back ({"mirror_symmetry", symmetric, "layout is mirror-symmetric about the Y axis"});
        return report;
    }

}  // namespace lrf
