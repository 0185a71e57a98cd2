#pragma once
/**
 * @file    simulation.hpp
 * @brief   Trajectory replay with lock-state tracking, and grid coverage
 *          analysis of detection multiplicity.
 */

#include <lrf/geometry.hpp>
#include <lrf/partition.hpp>

#include <cstddef>
#include <vector>

namespace lrf
{
    struct TrajectorySample
    {
        double t = 0.0;
        double x = 0.0;  ///< human rectangle center, robot frame
        double y = 0.0;
    };

    struct Scenario
    {
        RobotSpec robot;
        HumanSpec human;
        SensorModel model = SensorModel::FourSideCenter;
        LockMode lock_mode = LockMode::Containment;
        std::vector<TrajectorySample> trajectory;

        /// Throws InvalidScenario on an empty or non-increasing trajectory.
        void validate () const;
    };

    struct StepRecord
    {
        TrajectorySample sample;
        Region region;
        LockState lock = LockState::Disengaged;
        std::vector<LrfGroup> groups;
        bool double_detected = false;
    };

    struct Transition
    {
        double t = 0.0;
        LockState from = LockState::Locked;
        LockState to = LockState::Disengaged;
    };

    struct SimSummary
    {
        std::size_t steps = 0;
        double locked_fraction = 0.0;
        std::size_t transition_count = 0;
    };

    struct SimReport
    {
        Layout layout;
        std::vector<StepRecord> records;
        std::vector<Transition> transitions;
        SimSummary summary;
    };

    SimReport run_scenario (const Scenario &scenario);

    /// Multiplicity bucket of a grid cell: distinct responsible groups.
    struct CoverageCell
    {
        Point2 center;
        Region region;
        int multiplicity = 0;  ///< 0, 1 or 2
    };

    struct CoverageSummary
    {
        std::size_t overlap_cells = 0;   ///< >= 2 groups
        std::size_t separate_cells = 0;  ///< exactly 1 group
        std::size_t interior_cells = 0;  ///< no group
        double overlap_area = 0.0;
        double separate_area = 0.0;
        double interior_area = 0.0;
        /// overlap / separate; 0 when no separate cell exists.
        double ratio = 0.0;
    };

    /// Cells tile the window exactly: nx = ceil(width / resolution) columns of
    /// width width / nx (same for rows), so the realized cell edge never
    /// exceeds `resolution`.
    struct CoverageGrid
    {
        Rect window;
        double resolution = 0.0;
        std::size_t nx = 0;
        std::size_t ny = 0;
        double cell_width = 0.0;
        double cell_height = 0.0;
        std::vector<CoverageCell> cells;  ///< row-major, row 0 at window.ymin
        CoverageSummary summary;

        [[nodiscard]] const CoverageCell &at (std::size_t ix, std::size_t iy) const { return cells[iy * nx + ix]; }
    };

    /// Square of half-width 3 * max(vwrfb, vwrlr) around the virtual robot center.
    Rect default_window (const Layout &layout);

    /// Throws InvalidParameter for a non-positive resolution, ResolutionTooCoarse
    /// when fewer than four cells fit.
    CoverageGrid coverage_map (const Layout &layout, const Rect &window, double resolution);

}  // namespace lrf
