#include <lrf/simulation.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace lrf
{
    namespace
    {
        std::size_t cells_along (double extent, double resolution)
        {
            // Guard against quotients such as 6 / 0.05 landing a hair above an integer.
            const double q = extent / resolution;
            const double n = std::ceil (q - 1e-9 * std::max (1.0, q));
            return static_cast<std::size_t> (std::max (1.0, n));
        }
    }  // namespace

    void Scenario::validate () const
    {
        if (trajectory.empty ())
            throw Error (ErrorCode::InvalidScenario, "trajectory is empty");
        for (std::size_t i = 0; i < trajectory.size (); ++i)
        {
            const auto &s = trajectory[i];
            if (!std::isfinite (s.t) || !std::isfinite (s.x) || !std::isfinite (s.y))
                throw Error (ErrorCode::InvalidScenario, "trajectory sample " + std::to_string (i) + " is not finite");
            if (i > 0 && !(s.t > trajectory[i - 1].t))
                throw Error (ErrorCode::InvalidScenario,
                             "trajectory timestamps must be strictly increasing (sample " + std::to_string (i) + ")");
        }
    }

    SimReport run_scenario (const Scenario &scenario)
    {
        scenario.validate ();
        const ExpansionResult exp = compute_expansion (scenario.robot, scenario.human);

        SimReport report;
        report.layout = make_layout (scenario.model, scenario.robot, exp);
        report.records.reserve (scenario.trajectory.size ());

        std::size_t locked = 0;
        for (const auto &s : scenario.trajectory)
        {
            const Point2 c{s.x, s.y};
            const Assignment a = assign (report.layout, c);

            StepRecord rec;
            rec.sample = s;
            rec.region = a.region;
            rec.lock = lock_state (report.layout, human_rect_at (scenario.human, c), scenario.lock_mode);
            rec.groups = a.groups ();
            rec.double_detected = a.double_detected;

            if (!report.records.empty () && report.records.back ().lock != rec.lock)
                report.transitions.push_back ({s.t, report.records.back ().lock, rec.lock});
            locked += rec.lock == LockState::Locked ? 1 : 0;
            report.records.push_back (std::move (rec));
        }

        report.summary.steps = report.records.size ();
        report.summary.locked_fraction = static_cast<double> (locked) / static_cast<double> (report.records.size ());
        report.summary.transition_count = report.transitions.size ();
        return report;
    }

    Rect default_window (const Layout &layout)
    {
        const double half = 3.0 * std::max (layout.expansion.vwrfb, layout.expansion.vwrlr);
        return Rect::centered (layout.virtual_rect.center (), 2.0 * half, 2.0 * half);
    }

    CoverageGrid coverage_map (const Layout &layout, const Rect &window, double resolution)
    {
        if (!std::isfinite (resolution) || !(resolution > 0.0))
            throw Error (ErrorCode::InvalidParameter, "resolution must be positive");
        const Rect w = Rect::make (window.xmin, window.xmax, window.ymin, window.ymax);

        CoverageGrid grid;
        grid.window = w;
        grid.resolution = resolution;
        grid.nx = cells_along (w.width (), resolution);
        grid.ny = cells_along (w.height (), resolution);
        if (grid.nx * grid.ny < 4)
            throw Error (ErrorCode::ResolutionTooCoarse,
                         "only " + std::to_string (grid.nx * grid.ny) + " cell(s) fit the window; need at least 4");
        grid.cell_width = w.width () / static_cast<double> (grid.nx);
        grid.cell_height = w.height () / static_cast<double> (grid.ny);

        grid.cells.reserve (grid.nx * grid.ny);
        for (std::size_t iy = 0; iy < grid.ny; ++iy)
        {
            const double cy = w.ymin + (static_cast<double> (iy) + 0.5) * grid.cell_height;
            for (std::size_t ix = 0; ix < grid.nx; ++ix)
            {
                const double cx = w.xmin + (static_cast<double> (ix) + 0.5) * grid.cell_width;
                const Assignment a = assign (layout, {cx, cy});
                const int m = static_cast<int> (a.groups ().size ());
                grid.cells.push_back ({{cx, cy}, a.region, m});

                auto &s = grid.summary;
                if (m >= 2)
                    ++s.overlap_cells;
                else if (m == 1)
                    ++s.separate_cells;
                else
                    ++s.interior_cells;
            }
        }

        auto &s = grid.summary;
        const double cell_area = grid.cell_width * grid.cell_height;
        s.overlap_area = static_cast<double> (s.overlap_cells) * cell_area;
        s.separate_area = static_cast<double> (s.separate_cells) * cell_area;
        s.interior_area = static_cast<double> (s.interior_cells) * cell_area;
        s.ratio = s.separate_cells > 0 ? s.overlap_area / s.separate_area : 0.0;
        return grid;
    }

}  // namespace lrf
