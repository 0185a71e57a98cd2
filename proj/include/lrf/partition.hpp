#pragma once
/**
 * @file    partition.hpp
 * @brief   Detection-region classification, LRF assignment and lock state.
 *
 * Corner model: four 45-degree rays leave the virtual corners and split
 * the exterior plane into front / right / back / left wedges. Each wedge
 * is served by one unit from each of its two adjacent corner groups.
 *
 * Side-center model: the four virtual sides are extended to infinite
 * lines, giving eight exterior areas. Corner quadrants (2, 4, 6, 8) are
 * overlap areas served by two side groups; strips (1, 3, 5, 7) are
 * separate areas served by one.
 *
 * All boundary tests are exact floating-point comparisons.
 */

#include <lrf/geometry.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace lrf
{
    struct CornerRegion
    {
        enum class Kind : std::uint8_t
        {
            Area1Front,
            Area2Right,
            Area3Back,
            Area4Left,
            OnDiagonal,
            Interior,
        };

        Kind kind = Kind::Interior;
        /// Which corner's ray; meaningful only for OnDiagonal.
        LrfGroup corner = LrfGroup::FrontLeftCorner;

        friend bool operator== (const CornerRegion &a, const CornerRegion &b)
        {
            return a.kind == b.kind && (a.kind != Kind::OnDiagonal || a.corner == b.corner);
        }
    };

    /// Half-line extensions of the virtual sides, named by side then direction.
    enum class SideExtension : std::uint8_t
    {
        FrontEdgeLeftward,
        FrontEdgeRightward,
        BackEdgeLeftward,
        BackEdgeRightward,
        LeftEdgeForward,
        LeftEdgeRearward,
        RightEdgeForward,
        RightEdgeRearward,
    };

    struct CenterRegion
    {
        enum class Kind : std::uint8_t
        {
            Area1Front,
            Area2FrontRight,
            Area3Right,
            Area4BackRight,
            Area5Back,
            Area6BackLeft,
            Area7Left,
            Area8FrontLeft,
            OnBoundary,
            Interior,
        };

        Kind kind = Kind::Interior;
        /// Meaningful only for OnBoundary.
        SideExtension line = SideExtension::FrontEdgeLeftward;

        [[nodiscard]] bool is_overlap () const
        {
            return kind == Kind::Area2FrontRight || kind == Kind::Area4BackRight || kind == Kind::Area6BackLeft ||
                   kind == Kind::Area8FrontLeft;
        }
        [[nodiscard]] bool is_separate () const
        {
            return kind == Kind::Area1Front || kind == Kind::Area3Right || kind == Kind::Area5Back ||
                   kind == Kind::Area7Left;
        }

        friend bool operator== (const CenterRegion &a, const CenterRegion &b)
        {
            return a.kind == b.kind && (a.kind != Kind::OnBoundary || a.line == b.line);
        }
    };

    using Region = std::variant<CornerRegion, CenterRegion>;

    std::string to_string (const CornerRegion &r);
    std::string to_string (const CenterRegion &r);
    std::string to_string (const Region &r);
    std::string_view to_string (SideExtension line);

    CornerRegion mirror (const CornerRegion &r);
    CenterRegion mirror (const CenterRegion &r);
    SideExtension mirror (SideExtension line);

    struct UnitRef
    {
        LrfGroup group = LrfGroup::Front;
        int unit_index = 0;

        friend auto operator<=> (const UnitRef &, const UnitRef &) = default;
    };

    struct Assignment
    {
        Region region;
        std::vector<UnitRef> units;  ///< sorted by (group, unit_index)
        bool double_detected = false;
        bool interior = false;

        /// Distinct groups among `units`, in enum order.
        [[nodiscard]] std::vector<LrfGroup> groups () const;
    };

    enum class LockMode : std::uint8_t
    {
        Containment,
        CenterPoint,
    };

    enum class LockState : std::uint8_t
    {
        Locked,
        Disengaged,
    };

    std::string_view to_string (LockMode m);
    std::string_view to_string (LockState s);

    /// Area a corner-model unit is dedicated to. Unit 0 serves the front or
    /// back wedge, unit 1 the left or right wedge.
    CornerRegion::Kind corner_unit_area (LrfGroup corner, int unit_index);

    CornerRegion classify_corner (const Layout &layout, Point2 p);
    CenterRegion classify_center (const Layout &layout, Point2 p);
    Region classify (const Layout &layout, Point2 p);

    Assignment assign (const Layout &layout, Point2 p);

    /// Human footprint (whlr wide along X, whfb deep along Y) centered on `center`.
    Rect human_rect_at (const HumanSpec &human, Point2 center);

    LockState lock_state (const Layout &layout, const Rect &human_rect, LockMode mode = LockMode::Containment);

}  // namespace lrf
