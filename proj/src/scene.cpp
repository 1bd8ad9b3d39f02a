#include <gpcp/scene.hpp>
#include <gpcp/error.hpp>

#include <algorithm>
#include <cstdio>

namespace gpcp {

std::vector<std::string> default_palette()
{
    return {"#E69F00", "#56B4E9", "#009E73", "#F0E442", "#0072B2", "#D55E00", "#CC79A7", "#000000"};
}

void RenderStyle::validate() const
{
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw ValidationError("alpha must satisfy 0 < alpha <= 1");
    }
    if (!(line_width > 0.0)) {
        throw ValidationError("line width must be positive");
    }
    if (canvas_width <= 0 || canvas_height <= 0) {
        throw ValidationError("canvas size must be positive");
    }
    if (margins.top < 0 || margins.right < 0 || margins.bottom < 0 || margins.left < 0) {
        throw ValidationError("margins must be non-negative");
    }
    if (margins.left + margins.right >= canvas_width || margins.top + margins.bottom >= canvas_height) {
        throw ValidationError("margins leave no plot area");
    }
    if (palette.empty()) {
        throw ValidationError("palette is empty");
    }
}

CanvasTransform::CanvasTransform(const Layout& layout, const RenderStyle& style)
    : m_left(style.margins.left)
    , m_top(style.margins.top)
    , m_width(style.canvas_width - style.margins.left - style.margins.right)
    , m_height(style.canvas_height - style.margins.top - style.margins.bottom)
{
    if (!layout.axes.empty()) {
        m_x_min = layout.axes.front().x_left;
        m_x_max = layout.axes.back().x_right;
    }
    if (!(m_x_max > m_x_min)) {
        m_x_min = 0.0;
        m_x_max = 1.0;
    }
}

namespace {

std::string format_value(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

} // namespace

Scene build_scene(const Layout& layout, const Frame& frame, std::span<const std::size_t> order,
                  const RenderStyle& style, const Grouping* color_groups)
{
    style.validate();
    if (order.size() != layout.n_rows() || frame.n_rows() != layout.n_rows()) {
        throw ValidationError("draw order, frame and layout disagree on the number of rows");
    }
    if (color_groups && color_groups->n_groups() > style.palette.size()) {
        throw ValidationError("palette has " + std::to_string(style.palette.size()) + " colors but there are "
                              + std::to_string(color_groups->n_groups()) + " groups");
    }

    const CanvasTransform to_canvas(layout, style);
    Scene scene;
    scene.width  = style.canvas_width;
    scene.height = style.canvas_height;

    // Axis rules and level boxes sit beneath the lines.
    for (const auto& axis : layout.axes) {
        if (axis.kind == ColumnKind::Numeric) {
            scene.items.emplace_back(SegmentItem{to_canvas({axis.x_center, 0.0}), to_canvas({axis.x_center, 1.0}),
                                                 "#444444", 1.0});
        }
        else if (style.show_boxes) {
            for (const auto& box : axis.boxes) {
                scene.items.emplace_back(RectItem{to_canvas({axis.x_left, box.y1}), to_canvas({axis.x_right, box.y0}),
                                                  "#333333", "none", 1.0});
            }
        }
    }

    for (std::size_t row : order) {
        PolylineItem line;
        line.row    = row;
        line.points = polyline_vertices(layout, row);
        for (auto& p : line.points) {
            p = to_canvas(p);
        }
        line.color   = style.palette[color_groups ? color_groups->group_of_row.at(row) : 0];
        line.opacity = style.alpha;
        line.width   = style.line_width;
        scene.items.emplace_back(std::move(line));
    }

    if (style.show_labels) {
        for (const auto& axis : layout.axes) {
            for (const auto& box : axis.boxes) {
                // Labels that do not fit the box height are dropped.
                const double height_px = to_canvas.y(box.y0) - to_canvas.y(box.y1);
                if (height_px < style.font_size) {
                    continue;
                }
                scene.items.emplace_back(TextItem{to_canvas({axis.x_center, 0.5 * (box.y0 + box.y1)}),
                                                  axis.levels[box.level], style.font_size, TextAnchor::Middle});
            }
        }
    }

    if (style.show_axis_labels) {
        const double bottom = to_canvas.y(0.0);
        const double top    = to_canvas.y(1.0);
        for (const auto& axis : layout.axes) {
            const double x = to_canvas.x(axis.x_center);
            if (axis.kind == ColumnKind::Numeric) {
                scene.items.emplace_back(TextItem{{x, bottom + 1.2 * style.font_size}, format_value(axis.domain.min),
                                                  style.font_size, TextAnchor::Middle});
                scene.items.emplace_back(TextItem{{x, std::max(0.0, top - 0.4 * style.font_size)},
                                                  format_value(axis.domain.max), style.font_size, TextAnchor::Middle});
            }
            scene.items.emplace_back(TextItem{{x, bottom + 2.6 * style.font_size}, axis.name, style.font_size,
                                              TextAnchor::Middle});
        }
    }
    return scene;
}

namespace {

class SvgWriter
{
public:
    void raw(std::string_view s) { m_out.append(s); }

    void number(double v)
    {
        char buf[48];
        const int len = std::snprintf(buf, sizeof buf, "%.6f", v);
        // Avoid "-0.000000".
        if (len > 0 && buf[0] == '-' && std::string_view(buf + 1).find_first_not_of("0.") == std::string_view::npos) {
            m_out.append(buf + 1, static_cast<std::size_t>(len - 1));
        }
        else {
            m_out.append(buf, static_cast<std::size_t>(len));
        }
    }

    void attr(std::string_view name, double v)
    {
        m_out.push_back(' ');
        m_out.append(name);
        m_out.append("=\"");
        number(v);
        m_out.push_back('"');
    }

    void attr(std::string_view name, std::string_view v)
    {
        m_out.push_back(' ');
        m_out.append(name);
        m_out.append("=\"");
        escaped(v);
        m_out.push_back('"');
    }

    void escaped(std::string_view s)
    {
        for (char ch : s) {
            switch (ch) {
                case '&':  m_out.append("&amp;"); break;
                case '<':  m_out.append("&lt;"); break;
                case '>':  m_out.append("&gt;"); break;
                case '"':  m_out.append("&quot;"); break;
                case '\'': m_out.append("&apos;"); break;
                default:   m_out.push_back(ch);
            }
        }
    }

    void operator()(const PolylineItem& line)
    {
        raw("<polyline points=\"");
        for (std::size_t i = 0; i < line.points.size(); ++i) {
            if (i) {
                m_out.push_back(' ');
            }
            number(line.points[i].x);
            m_out.push_back(',');
            number(line.points[i].y);
        }
        m_out.push_back('"');
        attr("fill", "none");
        attr("stroke", line.color);
        attr("stroke-width", line.width);
        attr("opacity", line.opacity);
        raw("/>\n");
    }

    void operator()(const RectItem& rect)
    {
        raw("<rect");
        attr("x", rect.min.x);
        attr("y", rect.min.y);
        attr("width", rect.max.x - rect.min.x);
        attr("height", rect.max.y - rect.min.y);
        attr("fill", rect.fill);
        attr("stroke", rect.stroke);
        attr("stroke-width", rect.stroke_width);
        raw("/>\n");
    }

    void operator()(const TextItem& text)
    {
        raw("<text");
        attr("x", text.anchor.x);
        attr("y", text.anchor.y);
        attr("font-size", text.size);
        attr("font-family", "sans-serif");
        attr("text-anchor", text.align == TextAnchor::Start ? "start" : text.align == TextAnchor::End ? "end" : "middle");
        attr("dominant-baseline", "central");
        raw(">");
        escaped(text.text);
        raw("</text>\n");
    }

    void operator()(const SegmentItem& seg)
    {
        raw("<line");
        attr("x1", seg.from.x);
        attr("y1", seg.from.y);
        attr("x2", seg.to.x);
        attr("y2", seg.to.y);
        attr("stroke", seg.stroke);
        attr("stroke-width", seg.width);
        raw("/>\n");
    }

    std::string take() { return std::move(m_out); }

private:
    std::string m_out;
};

} // namespace

std::string emit_svg(const Scene& scene, const RenderStyle& style)
{
    const int width  = scene.width > 0 ? scene.width : style.canvas_width;
    const int height = scene.height > 0 ? scene.height : style.canvas_height;

    SvgWriter w;
    w.raw("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    w.raw("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"");
    w.raw(" width=\"" + std::to_string(width) + "\" height=\"" + std::to_string(height) + "\"");
    w.raw(" viewBox=\"0 0 " + std::to_string(width) + " " + std::to_string(height) + "\">\n");
    w.raw("<rect x=\"0\" y=\"0\"");
    w.raw(" width=\"" + std::to_string(width) + "\" height=\"" + std::to_string(height) + "\"");
    w.attr("fill", style.background);
    w.raw("/>\n");
    for (const auto& item : scene.items) {
        std::visit(w, item);
    }
    w.raw("</svg>\n");
    return w.take();
}

} // namespace gpcp
