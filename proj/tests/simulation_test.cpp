#include <lrf/simulation.hpp>

#include "oracle/baseline.hpp"
#include "oracle/brute_force.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace
{
    lrf::Scenario scenario (std::vector<lrf::TrajectorySample> traj, lrf::SensorModel m = lrf::SensorModel::FourSideCenter)
    {
        lrf::Scenario s;
        s.robot = baseline::robot ();
        s.human = baseline::human ();
        s.model = m;
        s.trajectory = std::move (traj);
        return s;
    }

    lrf::Layout baseline_layout (lrf::SensorModel m)
    {
        const auto r = baseline::robot ();
        return lrf::make_layout (m, r, lrf::compute_expansion (r, baseline::human ()));
    }
}  // namespace

TEST (RunScenario, StationaryLocked)
{
    const auto rep = lrf::run_scenario (scenario ({{0, 0, -0.6}, {1, 0, -0.6}}));
    ASSERT_EQ (rep.records.size (), 2u);
    for (const auto &r : rep.records)
    {
        EXPECT_EQ (r.lock, lrf::LockState::Locked);
        EXPECT_EQ (lrf::to_string (r.region), "area5_back");
    }
    EXPECT_TRUE (rep.transitions.empty ());
    EXPECT_EQ (rep.summary.locked_fraction, 1.0);
    EXPECT_EQ (rep.summary.transition_count, 0u);
}

TEST (RunScenario, LockBreak)
{
    const auto rep = lrf::run_scenario (scenario ({{0, 0, -0.6}, {1, 0, 0.9}}));
    ASSERT_EQ (rep.transitions.size (), 1u);
    EXPECT_EQ (rep.transitions[0].t, 1.0);
    EXPECT_EQ (rep.transitions[0].from, lrf::LockState::Locked);
    EXPECT_EQ (rep.transitions[0].to, lrf::LockState::Disengaged);
    EXPECT_EQ (rep.summary.locked_fraction, 0.5);
}

TEST (RunScenario, SingleSample)
{
    for (double y : {-0.6, 2.0})
    {
        const auto rep = lrf::run_scenario (scenario ({{0, 0, y}}));
        EXPECT_TRUE (rep.summary.locked_fraction == 0.0 || rep.summary.locked_fraction == 1.0);
        EXPECT_TRUE (rep.transitions.empty ());
    }
}

TEST (RunScenario, InvalidTrajectories)
{
    try
    {
        lrf::run_scenario (scenario ({}));
        FAIL ();
    }
    catch (const lrf::Error &e)
    {
        EXPECT_EQ (e.code (), lrf::ErrorCode::InvalidScenario);
    }
    EXPECT_THROW (lrf::run_scenario (scenario ({{1, 0, 0}, {1, 0, 0}})), lrf::Error);
    EXPECT_THROW (lrf::run_scenario (scenario ({{1, 0, 0}, {0.5, 0, 0}})), lrf::Error);
}

TEST (RunScenario, TransitionsMatchRecords)
{
    std::vector<lrf::TrajectorySample> traj;
    for (int i = 0; i < 200; ++i)
        traj.push_back ({0.1 * i, 0.3 * std::sin (0.2 * i), -0.6 + 0.5 * std::cos (0.13 * i)});
    const auto rep = lrf::run_scenario (scenario (traj, lrf::SensorModel::FourCorner));

    std::size_t locked = 0, flips = 0;
    for (std::size_t i = 0; i < rep.records.size (); ++i)
    {
        locked += rep.records[i].lock == lrf::LockState::Locked;
        if (i > 0 && rep.records[i].lock != rep.records[i - 1].lock)
        {
            ASSERT_LT (flips, rep.transitions.size ());
            EXPECT_EQ (rep.transitions[flips].t, rep.records[i].sample.t);
            ++flips;
        }
    }
    EXPECT_EQ (flips, rep.transitions.size ());
    EXPECT_GT (flips, 0u);
    EXPECT_DOUBLE_EQ (rep.summary.locked_fraction, double (locked) / 200.0);
}

TEST (Coverage, CenterMultiplicityMatchesStripOracle)
{
    const auto l = baseline_layout (lrf::SensorModel::FourSideCenter);
    const auto g = lrf::coverage_map (l, lrf::Rect{-3, 3, -3, 3}, 0.05);
    EXPECT_EQ (g.nx, 120u);
    EXPECT_EQ (g.ny, 120u);
    ASSERT_EQ (g.cells.size (), 14400u);
    const oracle::Box b{-0.375, 0.375, -0.3, 0.6};
    for (const auto &c : g.cells)
    {
        const auto labels = oracle::center_labels (b, c.center.x, c.center.y);
        ASSERT_EQ (labels.size (), 1u);
        EXPECT_EQ (lrf::to_string (c.region), labels[0]);
        EXPECT_EQ (c.multiplicity, oracle::center_multiplicity (labels[0]));
        const bool quadrant = std::abs (c.center.x) > 0.375 + 1e-9 && (c.center.y > 0.6 + 1e-9 || c.center.y < -0.3 - 1e-9);
        if (quadrant)
            EXPECT_EQ (c.multiplicity, 2);
    }
    EXPECT_GT (g.summary.overlap_area, g.summary.separate_area);
    EXPECT_NEAR (g.summary.overlap_area + g.summary.separate_area + g.summary.interior_area, 36.0, 1e-9);
}

TEST (Coverage, MultiplicityEqualsAssignGroups)
{
    const auto l = baseline_layout (lrf::SensorModel::FourCorner);
    const auto g = lrf::coverage_map (l, lrf::default_window (l), 0.04);
    for (const auto &c : g.cells)
        EXPECT_EQ (c.multiplicity, int (lrf::assign (l, c.center).groups ().size ()));
}

TEST (Coverage, CornerWedgeCellsHaveTwoUnits)
{
    const auto l = baseline_layout (lrf::SensorModel::FourCorner);
    const auto g = lrf::coverage_map (l, lrf::Rect{-3, 3, -3, 3}, 0.05);
    for (const auto &c : g.cells)
    {
        const auto a = lrf::assign (l, c.center);
        if (!a.interior && std::get<lrf::CornerRegion> (a.region).kind != lrf::CornerRegion::Kind::OnDiagonal)
        {
            EXPECT_EQ (a.units.size (), 2u);
            EXPECT_EQ (c.multiplicity, 2);
        }
    }
}

TEST (Coverage, TooCoarse)
{
    const auto l = baseline_layout (lrf::SensorModel::FourSideCenter);
    try
    {
        lrf::coverage_map (l, lrf::Rect{-3, 3, -3, 3}, 10.0);
        FAIL ();
    }
    catch (const lrf::Error &e)
    {
        EXPECT_EQ (e.code (), lrf::ErrorCode::ResolutionTooCoarse);
    }
    // Exactly four cells is enough.
    EXPECT_EQ (lrf::coverage_map (l, lrf::Rect{-3, 3, -3, 3}, 3.0).cells.size (), 4u);
    EXPECT_THROW (lrf::coverage_map (l, lrf::Rect{-3, 3, -3, 3}, 0.0), lrf::Error);
}

TEST (Coverage, NonDividingResolutionStillTilesWindow)
{
    const auto l = baseline_layout (lrf::SensorModel::FourSideCenter);
    const auto g = lrf::coverage_map (l, lrf::Rect{-2, 2.5, -1, 2}, 0.07);
    EXPECT_EQ (g.nx, std::size_t (std::ceil (4.5 / 0.07)));
    EXPECT_LE (g.cell_width, 0.07);
    const auto &s = g.summary;
    EXPECT_NEAR (s.overlap_area + s.separate_area + s.interior_area, 4.5 * 3.0, 1e-9);
}

TEST (Coverage, WindowAdditivity)
{
    // Tiles whose edges fall on cell boundaries reproduce the whole-window counts.
    const auto l = baseline_layout (lrf::SensorModel::FourSideCenter);
    const auto whole = lrf::coverage_map (l, lrf::Rect{-2, 2, -2, 2}, 0.0625);
    std::size_t overlap = 0, separate = 0, interior = 0;
    for (auto [x0, y0] : {std::pair{-2.0, -2.0}, {0.0, -2.0}, {-2.0, 0.0}, {0.0, 0.0}})
    {
        const auto tile = lrf::coverage_map (l, lrf::Rect{x0, x0 + 2, y0, y0 + 2}, 0.0625);
        overlap += tile.summary.overlap_cells;
        separate += tile.summary.separate_cells;
        interior += tile.summary.interior_cells;
    }
    EXPECT_EQ (overlap, whole.summary.overlap_cells);
    EXPECT_EQ (separate, whole.summary.separate_cells);
    EXPECT_EQ (interior, whole.summary.interior_cells);
}

TEST (Coverage, InteriorAreaConvergesAtFirstOrder)
{
    // Off-grid robot dimensions so no cell center lands on an edge.
    lrf::RobotSpec r{0.537, 0.461, 0.41, 0.77};
    const auto l = lrf::center_layout (r, lrf::compute_expansion (r, {0.3, 0.52}));
    const double exact = l.expansion.vwrfb * l.expansion.vwrlr;
    const double perimeter = 2.0 * (l.expansion.vwrfb + l.expansion.vwrlr);

    double prev_bound = 0.0;
    for (double h : {0.04, 0.02, 0.01})
    {
        const auto g = lrf::coverage_map (l, lrf::Rect{-2, 2, -2, 2}, h);
        const double err = std::abs (g.summary.interior_area - exact);
        // Cell-center sampling misplaces at most one row/column strip per edge.
        const double bound = 0.5 * perimeter * h + h * h;
        EXPECT_LE (err, bound) << "h = " << h;
        if (prev_bound > 0.0)
            EXPECT_NEAR (bound / prev_bound, 0.5, 0.01);
        prev_bound = bound;
    }
}

TEST (Coverage, DefaultWindowCentersOnVirtualRobot)
{
    const auto l = baseline_layout (lrf::SensorModel::FourSideCenter);
    const auto w = lrf::default_window (l);
    EXPECT_NEAR (w.center ().x, 0.0, 1e-12);
    EXPECT_NEAR (w.center ().y, 0.15, 1e-12);
    EXPECT_NEAR (w.width (), 6.0 * 0.9, 1e-12);
}
