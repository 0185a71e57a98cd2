#pragma once
/**
 * @file    geometry.hpp
 * @brief   Scale-expansion parameters and coordinate layouts for the
 *          four-corner and four-side-center LRF sensor models.
 *
 * Conventions:
 * - Robot body frame, +Y forward, +X right, meters.
 * - The real robot rectangle is centered at the origin. The virtual
 *   (scaled) robot is raised by the shift s = (VWrfb - Wrfb) / 2 so that
 *   both rectangles share the same rear edge.
 * - Every LRF group holds two units stacked along Z; both units share one
 *   2D position here.
 */

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lrf
{
    /// Absolute tolerance (meters) for invariant checks on constructed coordinates.
    inline constexpr double kCoordTolerance = 1e-9;

    enum class ErrorCode : std::uint8_t
    {
        NonPositiveDimension,
        DegenerateHuman,
        InvalidParameter,
        InvalidExpansion,
        ModelMismatch,
        InvalidScenario,
        ResolutionTooCoarse,
    };

    std::string_view to_string (ErrorCode code);

    /// Domain precondition violation. Carries a machine-readable code.
    class Error : public std::runtime_error
    {
      public:
        Error (ErrorCode code, const std::string &what) : std::runtime_error (what), code_ (code) {}
        [[nodiscard]] ErrorCode code () const noexcept { return code_; }

      private:
        ErrorCode code_;
    };

    struct Point2
    {
        double x = 0.0;
        double y = 0.0;

        friend bool operator== (const Point2 &, const Point2 &) = default;
    };

    /// Axis-aligned rectangle, closed.
    struct Rect
    {
        double xmin = 0.0;
        double xmax = 0.0;
        double ymin = 0.0;
        double ymax = 0.0;

        /// Throws InvalidParameter unless xmin < xmax and ymin < ymax (all finite).
        static Rect make (double xmin, double xmax, double ymin, double ymax);
        /// Rectangle of the given size centered on `c`.
        static Rect centered (Point2 c, double width, double height);

        [[nodiscard]] double width () const { return xmax - xmin; }
        [[nodiscard]] double height () const { return ymax - ymin; }
        [[nodiscard]] double area () const { return width () * height (); }
        [[nodiscard]] Point2 center () const { return {0.5 * (xmin + xmax), 0.5 * (ymin + ymax)}; }
        [[nodiscard]] bool contains (Point2 p) const { return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax; }
        [[nodiscard]] bool contains (const Rect &r) const
        {
            return r.xmin >= xmin && r.xmax <= xmax && r.ymin >= ymin && r.ymax <= ymax;
        }

        friend bool operator== (const Rect &, const Rect &) = default;
    };

    /// Physical and calibration constants of one robot build.
    struct RobotSpec
    {
        double wrfb = 0.0;  ///< real robot front-back width
        double wrlr = 0.0;  ///< real robot left-right width
        double xi = 0.0;
        double epsilon = 0.0;         ///< restricted area depth / width
        double k2_threshold = 1.2;    ///< expand iff k2 <= threshold
        double p_min = 1.2;
        double p_max = 2.0;

        /// Throws NonPositiveDimension / InvalidParameter on a bad spec.
        void validate () const;
    };

    /// Measured footprint of the followed person.
    struct HumanSpec
    {
        double whfb = 0.0;
        double whlr = 0.0;
    };

    struct ExpansionResult
    {
        double p = 1.0;
        double p_unclamped = 1.0;  ///< xi + k2 when expanded, 1 otherwise
        double k1 = 0.0;
        double k2 = 0.0;
        bool expanded = false;
        bool clamped = false;
        double vwrfb = 0.0;  ///< virtual robot front-back width
        double vwrlr = 0.0;  ///< virtual robot left-right width
        double wfb = 0.0;    ///< restricted area depth
        double wlr = 0.0;    ///< restricted area width
    };

    enum class SensorModel : std::uint8_t
    {
        FourCorner,
        FourSideCenter,
    };

    /// LRF mounting groups. The first four belong to the corner model, the
    /// last four to the side-center model.
    enum class LrfGroup : std::uint8_t
    {
        FrontLeftCorner,
        FrontRightCorner,
        BackLeftCorner,
        BackRightCorner,
        Front,
        Back,
        Left,
        Right,
    };

    std::string_view to_string (SensorModel model);
    std::string_view to_string (LrfGroup group);
    /// Left/right swap; front/back groups map to themselves.
    LrfGroup mirror (LrfGroup group);

    struct LrfUnit
    {
        LrfGroup group = LrfGroup::Front;
        int unit_index = 0;  ///< 0 or 1
        Point2 position;       ///< on the virtual robot boundary
        Point2 real_position;  ///< on the real robot boundary

        friend bool operator== (const LrfUnit &, const LrfUnit &) = default;
    };

    /// Named key points. Corner model: P1..P4 are the virtual corners
    /// (front-left, front-right, back-left, back-right). Side-center model:
    /// P1 front, P2 right, P3 back, P4 left side midpoints. Both: Pa / Pb
    /// are the rear-left / rear-right corners of the restricted area.
    enum class KeyPoint : std::uint8_t
    {
        P1,
        P2,
        P3,
        P4,
        Pa,
        Pb,
    };

    inline constexpr std::array<KeyPoint, 6> kAllKeyPoints{KeyPoint::P1, KeyPoint::P2, KeyPoint::P3,
                                                           KeyPoint::P4, KeyPoint::Pa, KeyPoint::Pb};

    std::string_view to_string (KeyPoint k);

    struct Layout
    {
        SensorModel model = SensorModel::FourCorner;
        ExpansionResult expansion;
        Rect virtual_rect;
        Rect real_rect;
        Rect restricted_rect;
        std::vector<LrfUnit> lrf_units;
        double shift = 0.0;
        std::array<Point2, 6> key_points{};

        [[nodiscard]] Point2 key (KeyPoint k) const { return key_points[static_cast<std::size_t> (k)]; }
        [[nodiscard]] const LrfUnit &unit (LrfGroup g, int index) const;
    };

    /// Resolves p, k1, k2 and the virtual / restricted widths from the measured human.
    ExpansionResult compute_expansion (const RobotSpec &robot, const HumanSpec &human);

    Layout corner_layout (const RobotSpec &robot, const ExpansionResult &exp);
    Layout center_layout (const RobotSpec &robot, const ExpansionResult &exp);
    Layout make_layout (SensorModel model, const RobotSpec &robot, const ExpansionResult &exp);

    struct ValidationCheck
    {
        std::string name;
        bool passed = false;
        std::string detail;
    };

    struct ValidationReport
    {
        std::vector<ValidationCheck> checks;

        [[nodiscard]] bool all_passed () const;
        [[nodiscard]] const ValidationCheck *find (std::string_view name) const;
    };

    /// Design-intent checks. Never throws; failures are reported, not enforced.
    ValidationReport validate_layout (const Layout &layout, const HumanSpec &human);

}  // namespace lrf
