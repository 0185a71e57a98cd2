#include <lrf/render.hpp>

#include <lrf/io.hpp>
#include <lrf/partition.hpp>
#include <lrf/simulation.hpp>

#include <algorithm>
#include <array>
#include <sstream>

namespace lrf
{
    namespace
    {
        constexpr double kUnitsPerMeter = 100.0;

        std::string n (double meters) { return io::format_number (meters * kUnitsPerMeter); }

        std::string label_y (double meters) { return io::format_number (-meters * kUnitsPerMeter); }

        void rect (std::ostringstream &os, const Rect &r, const char *cls, const char *style)
        {
            os << "    <rect class=\"" << cls << "\" x=\"" << n (r.xmin) << "\" y=\"" << n (r.ymin) << "\" width=\""
               << n (r.width ()) << "\" height=\"" << n (r.height ()) << "\" " << style << "/>\n";
        }

        void line (std::ostringstream &os, Point2 a, Point2 b, const char *cls)
        {
            os << "    <line class=\"" << cls << "\" x1=\"" << n (a.x) << "\" y1=\"" << n (a.y) << "\" x2=\"" << n (b.x)
               << "\" y2=\"" << n (b.y) << "\" stroke=\"#555555\" stroke-width=\"1\" stroke-dasharray=\"6,4\"/>\n";
        }

        // Point where the ray from `c` along (sx, sy) leaves the window.
        Point2 ray_end (Point2 c, double sx, double sy, const Rect &w)
        {
            const double tx = sx > 0 ? w.xmax - c.x : c.x - w.xmin;
            const double ty = sy > 0 ? w.ymax - c.y : c.y - w.ymin;
            const double t = std::max (0.0, std::min (tx, ty));
            return {c.x + sx * t, c.y + sy * t};
        }

        void partition_lines (std::ostringstream &os, const Layout &layout, const Rect &w)
        {
            const Rect &v = layout.virtual_rect;
            if (layout.model == SensorModel::FourCorner)
            {
                line (os, {v.xmin, v.ymax}, ray_end ({v.xmin, v.ymax}, -1, 1, w), "ray");
                line (os, {v.xmax, v.ymax}, ray_end ({v.xmax, v.ymax}, 1, 1, w), "ray");
                line (os, {v.xmin, v.ymin}, ray_end ({v.xmin, v.ymin}, -1, -1, w), "ray");
                line (os, {v.xmax, v.ymin}, ray_end ({v.xmax, v.ymin}, 1, -1, w), "ray");
                return;
            }
            // Each side extended past both of its ends.
            line (os, {v.xmin, v.ymax}, {w.xmin, v.ymax}, "extension");
            line (os, {v.xmax, v.ymax}, {w.xmax, v.ymax}, "extension");
            line (os, {v.xmin, v.ymin}, {w.xmin, v.ymin}, "extension");
            line (os, {v.xmax, v.ymin}, {w.xmax, v.ymin}, "extension");
            line (os, {v.xmin, v.ymax}, {v.xmin, w.ymax}, "extension");
            line (os, {v.xmin, v.ymin}, {v.xmin, w.ymin}, "extension");
            line (os, {v.xmax, v.ymax}, {v.xmax, w.ymax}, "extension");
            line (os, {v.xmax, v.ymin}, {v.xmax, w.ymin}, "extension");
        }
    }  // namespace

    std::string render_svg (const Layout &layout, const RenderSpec &spec)
    {
        if (!spec.any_overlay ())
            throw Error (ErrorCode::InvalidParameter, "render needs at least one overlay");
        const Rect w = spec.window ? *spec.window : default_window (layout);

        std::ostringstream os;
        os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << n (w.width ()) << "\" height=\""
           << n (w.height ()) << "\" viewBox=\"" << n (w.xmin) << " " << label_y (w.ymax) << " " << n (w.width ())
           << " " << n (w.height ()) << "\">\n";
        os << "  <title>" << to_string (layout.model) << " model, p = " << io::format_number (layout.expansion.p)
           << "</title>\n";
        os << "  <g id=\"geometry\" transform=\"scale(1,-1)\">\n";

        if (spec.restricted)
            rect (os, layout.restricted_rect, "restricted", "fill=\"#f4b183\" fill-opacity=\"0.5\" stroke=\"#c55a11\"");
        if (spec.virtual_rect)
            rect (os, layout.virtual_rect, "virtual", "fill=\"#d9d9d9\" fill-opacity=\"0.6\" stroke=\"#7f7f7f\"");
        if (spec.real_rect)
            rect (os, layout.real_rect, "real", "fill=\"#9dc3e6\" fill-opacity=\"0.8\" stroke=\"#2e75b6\"");
        if (spec.partition_lines)
            partition_lines (os, layout, w);
        if (spec.lrf_units)
            for (const auto &u : layout.lrf_units)
                os << "    <circle class=\"lrf\" data-group=\"" << to_string (u.group) << "\" data-unit=\""
                   << u.unit_index << "\" cx=\"" << n (u.position.x) << "\" cy=\"" << n (u.position.y) << "\" r=\""
                   << (u.unit_index == 0 ? 5 : 3) << "\" fill=\"" << (u.unit_index == 0 ? "#c00000" : "#ffffff")
                   << "\" stroke=\"#c00000\"/>\n";
        for (const auto &p : spec.points)
            os << "    <circle class=\"sample\" cx=\"" << n (p.x) << "\" cy=\"" << n (p.y)
               << "\" r=\"4\" fill=\"#00b050\"/>\n";
        os << "  </g>\n";

        // Text is placed in unflipped page coordinates so it reads upright.
        os << "  <g id=\"labels\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#000000\">\n";
        for (KeyPoint k : kAllKeyPoints)
        {
            const Point2 p = layout.key (k);
            os << "    <text class=\"key\" x=\"" << n (p.x) << "\" y=\"" << label_y (p.y) << "\">" << to_string (k)
               << "</text>\n";
        }
        for (const auto &p : spec.points)
            os << "    <text class=\"sample\" x=\"" << n (p.x) << "\" y=\"" << label_y (p.y) << "\">"
               << to_string (classify (layout, p)) << "</text>\n";
        os << "  </g>\n";
        os << "</svg>\n";
        return os.str ();
    }

}  // namespace lrf
