#pragma once

#include <gpcp/dataset.hpp>
#include <gpcp/draworder.hpp>
#include <gpcp/layout.hpp>

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace gpcp {

/// Okabe-Ito colorblind-safe colors.
std::vector<std::string> default_palette();

struct Margins
{
    double top    = 24.0;
    double right  = 40.0;
    double bottom = 48.0;
    double left   = 40.0;
};

struct RenderStyle
{
    double                   alpha       = 0.6;
    double                   line_width  = 1.0;
    std::vector<std::string> palette     = default_palette();
    int                      canvas_width  = 900;
    int                      canvas_height = 600;
    Margins                  margins;
    bool                     show_boxes       = true;
    bool                     show_labels      = true;
    bool                     show_axis_labels = true;
    std::string              background       = "#ffffff";
    double                   font_size        = 11.0;

    void validate() const;
};

struct PolylineItem
{
    std::size_t         row = 0;
    std::vector<Point2> points;
    std::string         color;
    double              opacity = 1.0;
    double              width   = 1.0;
};

struct RectItem
{
    Point2      min;
    Point2      max;
    std::string stroke;
    std::string fill;
    double      stroke_width = 1.0;
};

enum class TextAnchor { Start, Middle, End };

struct TextItem
{
    Point2      anchor;
    std::string text;
    double      size = 11.0;
    TextAnchor  align = TextAnchor::Middle;
};

/// Axis rule.
struct SegmentItem
{
    Point2      from;
    Point2      to;
    std::string stroke;
    double      width = 1.0;
};

using SceneItem = std::variant<PolylineItem, RectItem, TextItem, SegmentItem>;

/// Drawing list in screen coordinates (origin top-left); painted in order.
struct Scene
{
    int                    width  = 0;
    int                    height = 0;
    std::vector<SceneItem> items;

    template<typename T>
    std::size_t count() const
    {
        std::size_t n = 0;
        for (const auto& item : items) {
            n += std::holds_alternative<T>(item) ? 1 : 0;
        }
        return n;
    }
};

/// Maps unit layout coordinates onto the canvas plot area, flipping y.
class CanvasTransform
{
public:
    CanvasTransform(const Layout& layout, const RenderStyle& style);

    Point2 operator()(Point2 p) const { return {x(p.x), y(p.y)}; }
    double x(double ux) const { return m_left + (ux - m_x_min) / (m_x_max - m_x_min) * m_width; }
    double y(double uy) const { return m_top + (1.0 - uy) * m_height; }

private:
    double m_x_min = 0.0;
    double m_x_max = 1.0;
    double m_left  = 0.0;
    double m_top   = 0.0;
    double m_width = 0.0;
    double m_height = 0.0;
};

/// Layers, bottom to top: axis rules and level boxes, one polyline per row in
/// `order`, then level labels and axis labels. With `color_groups` each line
/// takes the palette entry of its group id; otherwise all lines use the first
/// palette entry.
Scene build_scene(const Layout& layout, const Frame& frame, std::span<const std::size_t> order,
                  const RenderStyle& style, const Grouping* color_groups = nullptr);

/// SVG 1.1 document. Coordinates use 6 decimals, so output is byte-stable.
/// Fixed chrome: the root element and a background rect.
std::string emit_svg(const Scene& scene, const RenderStyle& style);

} // namespace gpcp
