#include <lrf/partition.hpp>

#include <algorithm>
#include <initializer_list>

namespace lrf
{
    namespace
    {
        using CK = CornerRegion::Kind;
        using ZK = CenterRegion::Kind;

        // Distance outside [lo, hi]; zero on or within the span.
        double outside (double v, double lo, double hi)
        {
            if (v < lo)
                return lo - v;
            if (v > hi)
                return v - hi;
            return 0.0;
        }

        void require_model (const Layout &layout, SensorModel model)
        {
            if (layout.model != model)
                throw Error (ErrorCode::ModelMismatch,
                             "layout is a " + std::string (to_string (layout.model)) + " layout, expected " +
                                 std::string (to_string (model)));
        }

        void add_group (std::vector<UnitRef> &units, LrfGroup g)
        {
            units.push_back ({g, 0});
            units.push_back ({g, 1});
        }

        std::vector<UnitRef> groups_of (std::initializer_list<LrfGroup> gs)
        {
            std::vector<UnitRef> units;
            for (LrfGroup g : gs)
                add_group (units, g);
            return units;
        }

        std::vector<UnitRef> corner_units (const CornerRegion &r)
        {
            std::vector<UnitRef> units;
            if (r.kind == CK::Interior)
                return units;
            if (r.kind == CK::OnDiagonal)
            {
                add_group (units, r.corner);
                return units;
            }
            for (LrfGroup g : {LrfGroup::FrontLeftCorner, LrfGroup::FrontRightCorner, LrfGroup::BackLeftCorner,
                               LrfGroup::BackRightCorner})
                for (int i = 0; i < 2; ++i)
                    if (corner_unit_area (g, i) == r.kind)
                        units.push_back ({g, i});
            return units;
        }

        std::vector<UnitRef> center_units (const CenterRegion &r)
        {
            using G = LrfGroup;
            switch (r.kind)
            {
            case ZK::Area1Front: return groups_of ({G::Front});
            case ZK::Area2FrontRight: return groups_of ({G::Front, G::Right});
            case ZK::Area3Right: return groups_of ({G::Right});
            case ZK::Area4BackRight: return groups_of ({G::Back, G::Right});
            case ZK::Area5Back: return groups_of ({G::Back});
            case ZK::Area6BackLeft: return groups_of ({G::Back, G::Left});
            case ZK::Area7Left: return groups_of ({G::Left});
            case ZK::Area8FrontLeft: return groups_of ({G::Front, G::Left});
            case ZK::Interior: return {};
            case ZK::OnBoundary: break;
            }
            // A boundary half-line separates a strip from the overlap quadrant it
            // touches; the union of both is that quadrant's two groups.
            switch (r.line)
            {
            case SideExtension::FrontEdgeLeftward:
            case SideExtension::LeftEdgeForward: return groups_of ({G::Front, G::Left});
            case SideExtension::FrontEdgeRightward:
            case SideExtension::RightEdgeForward: return groups_of ({G::Front, G::Right});
            case SideExtension::BackEdgeLeftward:
            case SideExtension::LeftEdgeRearward: return groups_of ({G::Back, G::Left});
            case SideExtension::BackEdgeRightward:
            case SideExtension::RightEdgeRearward: return groups_of ({G::Back, G::Right});
            }
            return {};
        }
    }  // namespace

    std::string to_string (const CornerRegion &r)
    {
        switch (r.kind)
        {
        case CK::Area1Front: return "area1_front";
        case CK::Area2Right: return "area2_right";
        case CK::Area3Back: return "area3_back";
        case CK::Area4Left: return "area4_left";
        case CK::Interior: return "interior";
        case CK::OnDiagonal: break;
        }
        // "on_diagonal_front_left" from "front_left_corner"
        std::string corner (to_string (r.corner));
        corner.resize (corner.size () - std::string_view ("_corner").size ());
        return "on_diagonal_" + corner;
    }

    std::string to_string (const CenterRegion &r)
    {
        switch (r.kind)
        {
        case ZK::Area1Front: return "area1_front";
        case ZK::Area2FrontRight: return "area2_front_right";
        case ZK::Area3Right: return "area3_right";
        case ZK::Area4BackRight: return "area4_back_right";
        case ZK::Area5Back: return "area5_back";
        case ZK::Area6BackLeft: return "area6_back_left";
        case ZK::Area7Left: return "area7_left";
        case ZK::Area8FrontLeft: return "area8_front_left";
        case ZK::Interior: return "interior";
        case ZK::OnBoundary: break;
        }
        return "boundary_" + std::string (to_string (r.line));
    }

    std::string to_string (const Region &r)
    {
        return std::visit ([] (const auto &v) { return to_string (v); }, r);
    }

    std::string_view to_string (SideExtension line)
    {
        switch (line)
        {
        case SideExtension::FrontEdgeLeftward: return "front_edge_leftward";
        case SideExtension::FrontEdgeRightward: return "front_edge_rightward";
        case SideExtension::BackEdgeLeftward: return "back_edge_leftward";
        case SideExtension::BackEdgeRightward: return "back_edge_rightward";
        case SideExtension::LeftEdgeForward: return "left_edge_forward";
        case SideExtension::LeftEdgeRearward: return "left_edge_rearward";
        case SideExtension::RightEdgeForward: return "right_edge_forward";
        case SideExtension::RightEdgeRearward: return "right_edge_rearward";
        }
        return "unknown";
    }

    SideExtension mirror (SideExtension line)
    {
        switch (line)
        {
        case SideExtension::FrontEdgeLeftward: return SideExtension::FrontEdgeRightward;
        case SideExtension::FrontEdgeRightward: return SideExtension::FrontEdgeLeftward;
        case SideExtension::BackEdgeLeftward: return SideExtension::BackEdgeRightward;
        case SideExtension::BackEdgeRightward: return SideExtension::BackEdgeLeftward;
        case SideExtension::LeftEdgeForward: return SideExtension::RightEdgeForward;
        case SideExtension::LeftEdgeRearward: return SideExtension::RightEdgeRearward;
        case SideExtension::RightEdgeForward: return SideExtension::LeftEdgeForward;
        case SideExtension::RightEdgeRearward: return SideExtension::LeftEdgeRearward;
        }
        return line;
    }

    CornerRegion mirror (const CornerRegion &r)
    {
        CornerRegion out = r;
        if (r.kind == CK::Area2Right)
            out.kind = CK::Area4Left;
        else if (r.kind == CK::Area4Left)
            out.kind = CK::Area2Right;
        out.corner = mirror (r.corner);
        return out;
    }

    CenterRegion mirror (const CenterRegion &r)
    {
        CenterRegion out = r;
        switch (r.kind)
        {
        case ZK::Area2FrontRight: out.kind = ZK::Area8FrontLeft; break;
        case ZK::Area8FrontLeft: out.kind = ZK::Area2FrontRight; break;
        case ZK::Area3Right: out.kind = ZK::Area7Left; break;
        case ZK::Area7Left: out.kind = ZK::Area3Right; break;
        case ZK::Area4BackRight: out.kind = ZK::Area6BackLeft; break;
        case ZK::Area6BackLeft: out.kind = ZK::Area4BackRight; break;
        default: break;
        }
        out.line = mirror (r.line);
        return out;
    }

    std::vector<LrfGroup> Assignment::groups () const
    {
        std::vector<LrfGroup> out;
        for (const auto &u : units)
            if (std::find (out.begin (), out.end (), u.group) == out.end ())
                out.push_back (u.group);
        std::sort (out.begin (), out.end ());
        return out;
    }

    std::string_view to_string (LockMode m) { return m == LockMode::Containment ? "containment" : "center_point"; }

    std::string_view to_string (LockState s) { return s == LockState::Locked ? "locked" : "disengaged"; }

    CornerRegion::Kind corner_unit_area (LrfGroup corner, int unit_index)
    {
        const bool front = corner == LrfGroup::FrontLeftCorner || corner == LrfGroup::FrontRightCorner;
        const bool left = corner == LrfGroup::FrontLeftCorner || corner == LrfGroup::BackLeftCorner;
        if (unit_index == 0)
            return front ? CK::Area1Front : CK::Area3Back;
        return left ? CK::Area4Left : CK::Area2Right;
    }

    CornerRegion classify_corner (const Layout &layout, Point2 p)
    {
        require_model (layout, SensorModel::FourCorner);
        const Rect &v = layout.virtual_rect;

        // The virtual corners are the origins of the rays.
        if ((p.x == v.xmin || p.x == v.xmax) && (p.y == v.ymin || p.y == v.ymax))
        {
            const bool front = p.y == v.ymax;
            const bool left = p.x == v.xmin;
            const LrfGroup c = front ? (left ? LrfGroup::FrontLeftCorner : LrfGroup::FrontRightCorner)
                                     : (left ? LrfGroup::BackLeftCorner : LrfGroup::BackRightCorner);
            return {CK::OnDiagonal, c};
        }

        const double ex = outside (p.x, v.xmin, v.xmax);
        const double ey = outside (p.y, v.ymin, v.ymax);
        const bool front = p.y > v.ymax;
        const bool right = p.x > v.xmax;

        if (ex == 0.0 && ey == 0.0)
            return {CK::Interior};
        // Points level with a side (including on a side's extension line) go
        // to the area that side faces.
        if (ex == 0.0)
            return {front ? CK::Area1Front : CK::Area3Back};
        if (ey == 0.0)
            return {right ? CK::Area2Right : CK::Area4Left};

        if (ey > ex)
            return {front ? CK::Area1Front : CK::Area3Back};
        if (ex > ey)
            return {right ? CK::Area2Right : CK::Area4Left};

        const LrfGroup c = front ? (right ? LrfGroup::FrontRightCorner : LrfGroup::FrontLeftCorner)
                                 : (right ? LrfGroup::BackRightCorner : LrfGroup::BackLeftCorner);
        return {CK::OnDiagonal, c};
    }

    CenterRegion classify_center (const Layout &layout, Point2 p)
    {
        require_model (layout, SensorModel::FourSideCenter);
        const Rect &v = layout.virtual_rect;

        if (v.contains (p))
            return {ZK::Interior};

        if (p.x == v.xmin)
            return {ZK::OnBoundary, p.y > v.ymax ? SideExtension::LeftEdgeForward : SideExtension::LeftEdgeRearward};
        if (p.x == v.xmax)
            return {ZK::OnBoundary, p.y > v.ymax ? SideExtension::RightEdgeForward : SideExtension::RightEdgeRearward};
        if (p.y == v.ymax)
            return {ZK::OnBoundary, p.x < v.xmin ? SideExtension::FrontEdgeLeftward : SideExtension::FrontEdgeRightward};
        if (p.y == v.ymin)
            return {ZK::OnBoundary, p.x < v.xmin ? SideExtension::BackEdgeLeftward : SideExtension::BackEdgeRightward};

        const int col = p.x < v.xmin ? -1 : (p.x > v.xmax ? 1 : 0);
        const int row = p.y < v.ymin ? -1 : (p.y > v.ymax ? 1 : 0);

        // Indexed [row + 1][col + 1]; the center cell is unreachable here.
        static constexpr ZK table[3][3] = {
            {ZK::Area6BackLeft, ZK::Area5Back, ZK::Area4BackRight},
            {ZK::Area7Left, ZK::Interior, ZK::Area3Right},
            {ZK::Area8FrontLeft, ZK::Area1Front, ZK::Area2FrontRight},
        };
        return {table[row + 1][col + 1]};
    }

    Region classify (const Layout &layout, Point2 p)
    {
        if (layout.model == SensorModel::FourCorner)
            return classify_corner (layout, p);
        return classify_center (layout, p);
    }

    Assignment assign (const Layout &layout, Point2 p)
    {
        Assignment a;
        if (layout.model == SensorModel::FourCorner)
        {
            const CornerRegion r = classify_corner (layout, p);
            a.region = r;
            a.units = corner_units (r);
            a.interior = r.kind == CK::Interior;
        }
        else
        {
            const CenterRegion r = classify_center (layout, p);
            a.region = r;
            a.units = center_units (r);
            a.interior = r.kind == ZK::Interior;
        }
        std::sort (a.units.begin (), a.units.end ());
        a.double_detected = a.groups ().size () >= 2;
        return a;
    }

    Rect human_rect_at (const HumanSpec &human, Point2 center)
    {
        return Rect::centered (center, human.whlr, human.whfb);
    }

    LockState lock_state (const Layout &layout, const Rect &human_rect, LockMode mode)
    {
        const bool inside = mode == LockMode::Containment ? layout.restricted_rect.contains (human_rect)
                                                          : layout.restricted_rect.contains (human_rect.center ());
        return inside ? LockState::Locked : LockState::Disengaged;
    }

}  // namespace lrf
