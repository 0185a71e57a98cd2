// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <lrf/geometry.hpp>
#include <lrf/io.hpp>
#include <lrf/partition.hpp>
#include <lrf/simulation.hpp>

#include "oracle/baseline.hpp"
#include "oracle/brute_force.hpp"
#include "oracle/generators.hpp"
#include "support/run.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace
{
    using lrf::KeyPoint;

    constexpr double kRatioTol = 1e-12;   // relative, expansion identities
    constexpr double kClosedTol = 1e-12;  // center-layout closed forms
    constexpr double kFixtureTol = 1e-12;
    constexpr double kInvariantTol = lrf::kCoordTolerance;
    constexpr std::uint64_t kSeed = 20180501;

    struct Outcome
    {
        bool passed = true;
        std::string detail;

        void fail (const std::string &why)
        {
            if (passed)
                detail = why;
            passed = false;
        }
    };

    bool rel_close (double got, double want, double tol)
    {
        return std::abs (got - want) <= tol * std::max (1.0, std::abs (want));
    }

    std::string str (double v)
    {
        std::ostringstream os;
        os.precision (17);
        os << v;
        return os.str ();
    }

    std::vector<gen::Case> expanding_cases (int n)
    {
        std::mt19937_64 rng (kSeed);
        std::vector<gen::Case> out;
        for (int i = 0; i < n; ++i)
            out.push_back (gen::expanding (rng));
        return out;
    }

    lrf::Layout baseline_layout (lrf::SensorModel m)
    {
        const auto r = baseline::robot ();
        return lrf::make_layout (m, r, lrf::compute_expansion (r, baseline::human ()));
    }

    Outcome ratio_identities ()
    {
        Outcome o;
        int clamped = 0;
        for (const auto &c : expanding_cases (100))
        {
            const auto e = lrf::compute_expansion (c.robot, c.human);
            if (!e.expanded)
            {
                o.fail ("case did not expand");
                continue;
            }
            clamped += e.clamped;
            const double k2 = c.robot.wrlr / c.human.whlr;
            const bool ok = rel_close (e.vwrfb / c.robot.wrfb, e.p, kRatioTol) &&
                            rel_close (e.vwrlr / c.robot.wrlr, e.p, kRatioTol) &&
                            rel_close (e.wlr / c.robot.wrlr, e.p, kRatioTol) &&
                            rel_close (e.k1, c.robot.wrfb / c.human.whfb, kRatioTol) && rel_close (e.k2, k2, kRatioTol) &&
                            rel_close (e.wfb / e.wlr, c.robot.epsilon, kRatioTol) &&
                            rel_close (e.p_unclamped, c.robot.xi + k2, kRatioTol) &&
                            rel_close (e.p, std::clamp (c.robot.xi + k2, c.robot.p_min, c.robot.p_max), kRatioTol);
            if (!ok)
                o.fail ("ratio identity violated for wrfb=" + str (c.robot.wrfb));
        }
        if (o.passed)
            o.detail = "100 cases (" + std::to_string (clamped) + " clamped), tol 1e-12 relative";
        return o;
    }

    Outcome center_closed_forms ()
    {
        Outcome o;
        double min_gap = 1e300;
        for (const auto &c : expanding_cases (100))
        {
            const auto e = lrf::compute_expansion (c.robot, c.human);
            const auto l = lrf::center_layout (c.robot, e);
            const double wrfb = c.robot.wrfb;
            const auto P1 = l.key (KeyPoint::P1), P2 = l.key (KeyPoint::P2), P3 = l.key (KeyPoint::P3),
                       P4 = l.key (KeyPoint::P4), Pa = l.key (KeyPoint::Pa), Pb = l.key (KeyPoint::Pb);

            const double half_vwrlr = 0.5 * e.vwrlr;
            const double y1 = e.vwrfb - 0.5 * wrfb;
            const double y24 = 0.5 * (e.vwrfb - wrfb);
            const double yab = -(0.5 * wrfb + e.wfb);
            const double y3_corrected = -0.5 * wrfb;
            const double y3_printed = -wrfb;

            const std::vector<std::pair<double, double>> pairs{
                {P1.x, 0.0},        {P3.x, 0.0},   {P2.x, half_vwrlr}, {-P4.x, half_vwrlr}, {Pb.x, half_vwrlr},
                {-Pa.x, half_vwrlr}, {P1.y, y1},   {P2.y, y24},        {P4.y, y24},         {Pa.y, yab},
                {Pb.y, yab},        {P3.y, y3_corrected}};
            for (auto [got, want] : pairs)
                if (!rel_close (got, want, kClosedTol))
                    o.fail ("closed form mismatch: got " + str (got) + " want " + str (want));

            // The printed simplification y3 = -Wrfb must NOT hold.
            const double gap = std::abs (P3.y - y3_printed);
            min_gap = std::min (min_gap, gap);
            if (gap <= 1e-6)
                o.fail ("rear midpoint unexpectedly equals -Wrfb");
        }
        if (o.passed)
            o.detail = "100 cases match to 1e-12; y3 = -Wrfb/2, printed -Wrfb off by >= " + str (min_gap);
        return o;
    }

    Outcome baseline_fixture ()
    {
        Outcome o;
        const auto e = lrf::compute_expansion (baseline::robot (), baseline::human ());
        if (std::abs (e.p - baseline::p) > kFixtureTol)
            o.fail ("p = " + str (e.p));
        for (auto m : {lrf::SensorModel::FourCorner, lrf::SensorModel::FourSideCenter})
        {
            const auto l = baseline_layout (m);
            const auto &r = l.restricted_rect;
            const auto &want = baseline::restricted_rect;
            if (std::abs (r.xmin - want.xmin) > kFixtureTol || std::abs (r.xmax - want.xmax) > kFixtureTol ||
                std::abs (r.ymin - want.ymin) > kFixtureTol || std::abs (r.ymax - want.ymax) > kFixtureTol)
                o.fail ("restricted area mismatch");
            const auto *keys = m == lrf::SensorModel::FourCorner ? baseline::corner_keys : baseline::center_keys;
            for (std::size_t i = 0; i < 6; ++i)
                if (std::abs (l.key_points[i].x - keys[i].x) > kFixtureTol ||
                    std::abs (l.key_points[i].y - keys[i].y) > kFixtureTol)
                    o.fail (std::string (to_string (m)) + " " + std::string (to_string (lrf::kAllKeyPoints[i])) +
                            " mismatch");
        }
        if (o.passed)
            o.detail = "p=1.5, restricted [-0.375,0.375]x[-0.9,-0.3], corner P1=(-0.375,0.6), center P1=(0,0.6)";
        return o;
    }

    Outcome rear_alignment_and_mirror ()
    {
        Outcome o;
        std::mt19937_64 rng (kSeed + 1);
        for (int i = 0; i < 1000; ++i)
        {
            const auto c = gen::any (rng);
            const auto e = lrf::compute_expansion (c.robot, c.human);
            for (auto m : {lrf::SensorModel::FourCorner, lrf::SensorModel::FourSideCenter})
            {
                const auto l = lrf::make_layout (m, c.robot, e);
                if (std::abs (l.virtual_rect.ymin - l.real_rect.ymin) > kInvariantTol)
                    o.fail ("rear edges differ");
                // Every unit has a mirror partner at (-x, y) with left/right swapped.
                for (const auto &u : l.lrf_units)
                {
                    const auto &v = l.unit (lrf::mirror (u.group), u.unit_index);
                    if (std::abs (v.position.x + u.position.x) > kInvariantTol ||
                        std::abs (v.position.y - u.position.y) > kInvariantTol ||
                        std::abs (v.real_position.x + u.real_position.x) > kInvariantTol ||
                        std::abs (v.real_position.y - u.real_position.y) > kInvariantTol)
                        o.fail ("unit mirror partner mismatch");
                }
                // The mirrored key-point set equals the original set.
                for (const auto &k : l.key_points)
                {
                    bool found = false;
                    for (const auto &q : l.key_points)
                        found = found || (std::abs (q.x + k.x) <= kInvariantTol && std::abs (q.y - k.y) <= kInvariantTol);
                    if (!found)
                        o.fail ("key point has no mirror image");
                }
            }
        }
        if (o.passed)
            o.detail = "1000 random specs x 2 models, tol 1e-9";
        return o;
    }

    template <typename Classify, typename Oracle>
    void grid_agreement (Outcome &o, const lrf::Layout &l, Classify classify, Oracle oracle_fn, std::size_t &n)
    {
        const oracle::Box b{l.virtual_rect.xmin, l.virtual_rect.xmax, l.virtual_rect.ymin, l.virtual_rect.ymax};
        for (int i = 0; i <= 200; ++i)
            for (int j = 0; j <= 200; ++j)
            {
                const double x = -3.0 + 6.0 * i / 200.0, y = -3.0 + 6.0 * j / 200.0;
                const auto labels = oracle_fn (b, x, y);
                if (labels.size () != 1)
                    o.fail ("point (" + str (x) + "," + str (y) + ") has " + std::to_string (labels.size ()) + " labels");
                else if (lrf::to_string (classify (l, lrf::Point2{x, y})) != labels[0])
                    o.fail ("disagreement at (" + str (x) + "," + str (y) + ")");
                ++n;
            }
    }

    Outcome classification_oracle ()
    {
        Outcome o;
        std::size_t n = 0;
        grid_agreement (o, baseline_layout (lrf::SensorModel::FourCorner), lrf::classify_corner, oracle::corner_labels, n);
        grid_agreement (o, baseline_layout (lrf::SensorModel::FourSideCenter), lrf::classify_center,
                        oracle::center_labels, n);
        if (o.passed)
            o.detail = std::to_string (n) + " grid points, 100% agreement, one label each";
        return o;
    }

    Outcome multiplicity ()
    {
        Outcome o;
        const auto corner = baseline_layout (lrf::SensorModel::FourCorner);
        const auto center = baseline_layout (lrf::SensorModel::FourSideCenter);
        std::size_t corner_pts = 0, quad = 0, strip = 0;
        for (int i = 0; i <= 200; ++i)
            for (int j = 0; j <= 200; ++j)
            {
                const lrf::Point2 q{-3.0 + 6.0 * i / 200.0, -3.0 + 6.0 * j / 200.0};

                const auto a = lrf::assign (corner, q);
                const auto kind = std::get<lrf::CornerRegion> (a.region).kind;
                if (!a.interior && kind != lrf::CornerRegion::Kind::OnDiagonal)
                {
                    ++corner_pts;
                    if (a.units.size () != 2 || a.groups ().size () != 2)
                        o.fail ("corner point without 2 units from 2 groups");
                }

                const auto &v = center.virtual_rect;
                const bool out_x = q.x < v.xmin || q.x > v.xmax;
                const bool out_y = q.y < v.ymin || q.y > v.ymax;
                const auto b = lrf::assign (center, q);
                if (out_x && out_y)
                {
                    ++quad;
                    if (b.groups ().size () != 2)
                        o.fail ("center quadrant point without 2 groups");
                }
                else if (out_x != out_y)
                {
                    const bool on_line = q.x == v.xmin || q.x == v.xmax || q.y == v.ymin || q.y == v.ymax;
                    if (!on_line)
                    {
                        ++strip;
                        if (b.groups ().size () != 1)
                            o.fail ("center strip point without exactly 1 group");
                    }
                }
            }
        if (o.passed)
            o.detail = "corner " + std::to_string (corner_pts) + " exterior pts; center " + std::to_string (quad) +
                       " quadrant / " + std::to_string (strip) + " strip pts";
        return o;
    }

    Outcome coverage_claim ()
    {
        Outcome o;
        const auto g = lrf::coverage_map (baseline_layout (lrf::SensorModel::FourSideCenter), lrf::Rect{-3, 3, -3, 3}, 0.05);
        const auto &s = g.summary;
        if (!(s.overlap_area > s.separate_area))
            o.fail ("overlap " + str (s.overlap_area) + " <= separate " + str (s.separate_area));
        o.detail = "overlap " + lrf::io::format_number (s.overlap_area) + " m^2, separate " +
                   lrf::io::format_number (s.separate_area) + " m^2, ratio " + lrf::io::format_number (s.ratio) +
                   (o.passed ? "" : " | " + o.detail);
        return o;
    }

    Outcome simulation_determinism ()
    {
        Outcome o;
        const auto dir = cli::scratch_dir ();
        std::string json_runs[2], csv_runs[2];
        for (int i = 0; i < 2; ++i)
        {
            const auto jp = (dir / ("ac8_" + std::to_string (i) + ".json")).string ();
            const auto cp = (dir / ("ac8_" + std::to_string (i) + ".csv")).string ();
            const auto r = cli::run ("simulate " + cli::fixture ("scenario_lock_break.json") + " --out " + jp + " --csv " + cp);
            if (r.exit_code != 0)
                o.fail ("simulate exited " + std::to_string (r.exit_code) + ": " + r.err);
            json_runs[i] = cli::slurp (jp);
            csv_runs[i] = cli::slurp (cp);
        }
        if (json_runs[0].empty () || json_runs[0] != json_runs[1] || csv_runs[0] != csv_runs[1])
            o.fail ("outputs differ between runs");
        if (o.passed)
        {
            const auto j = lrf::io::json::parse (json_runs[0]);
            const auto &t = j["transitions"];
            if (t.size () != 1 || t[0]["t"] != 1.0 || t[0]["from"] != "locked" || t[0]["to"] != "disengaged")
                o.fail ("transitions = " + t.dump ());
        }
        if (o.passed)
            o.detail = "byte-identical JSON and CSV; transitions = [(1, locked, disengaged)]";
        return o;
    }

    Outcome cli_exit_codes ()
    {
        Outcome o;
        const auto check = [&] (const std::string &args, int want, const char *what) {
            const auto r = cli::run (args);
            if (r.exit_code != want)
                o.fail (std::string (what) + " exited " + std::to_string (r.exit_code) + ", want " + std::to_string (want));
        };
        check ("expand " + cli::fixture ("malformed.json"), 2, "malformed JSON");
        check ("expand " + cli::fixture ("zero_width.json"), 3, "zero width");
        check ("render " + cli::fixture ("baseline_corner.json") + " --out /nonexistent/dir/fig.svg", 4, "unwritable path");
        if (o.passed)
            o.detail = "malformed JSON -> 2, zero width -> 3, unwritable path -> 4";
        return o;
    }
}  // namespace

int main ()
{
    const std::vector<std::pair<const char *, std::function<Outcome ()>>> criteria{
        {"AC1 expansion ratio identities", ratio_identities},
        {"AC2 center layout closed forms", center_closed_forms},
        {"AC3 baseline fixture", baseline_fixture},
        {"AC4 rear alignment and mirror symmetry", rear_alignment_and_mirror},
        {"AC5 classification vs brute-force oracle", classification_oracle},
        {"AC6 detection multiplicity", multiplicity},
        {"AC7 overlap area exceeds separate area", coverage_claim},
        {"AC8 simulation determinism", simulation_determinism},
        {"AC9 CLI exit codes", cli_exit_codes},
    };

    const auto start = std::chrono::steady_clock::now ();
    int failures = 0;
    for (const auto &[name, fn] : criteria)
    {
        Outcome o;
        try
        {
            o = fn ();
        }
        catch (const std::exception &e)
        {
            o.fail (std::string ("exception: ") + e.what ());
        }
        failures += !o.passed;
        std::cout << (o.passed ? "PASS " : "FAIL ") << name << " -- " << o.detail << "\n";
    }
    const double secs = std::chrono::duration<double> (std::chrono::steady_clock::now () - start).count ();
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string (failures) + " criteria failed") << " in "
              << lrf::io::format_number (secs) << " s\n";
    return failures == 0 ? 0 : 1;
}
