#pragma once
/**
 * @file    render.hpp
 * @brief   SVG diagrams of a layout: rectangles, partition lines, LRF
 *          positions and labelled sample points.
 *
 * 1 meter = 100 user units. Geometry is drawn in robot coordinates inside a
 * group flipped by scale(1,-1), so +Y points up on the page.
 */

#include <lrf/geometry.hpp>

#include <optional>
#include <string>
#include <vector>

namespace lrf
{
    struct RenderSpec
    {
        bool virtual_rect = true;
        bool real_rect = true;
        bool restricted = true;
        bool partition_lines = true;  ///< 45-degree rays or side extensions
        bool lrf_units = true;
        std::vector<Point2> points;  ///< labelled with their region
        std::optional<Rect> window;  ///< defaults to default_window()

        [[nodiscard]] bool any_overlay () const
        {
            return virtual_rect || real_rect || restricted || partition_lines || lrf_units || !points.empty ();
        }
    };

    /// Throws InvalidParameter when no overlay is enabled.
    std::string render_svg (const Layout &layout, const RenderSpec &spec);

}  // namespace lrf
