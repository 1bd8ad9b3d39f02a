#include <gpcp/layout.hpp>

#include <json.hpp>

#include <cstdio>

namespace gpcp {

namespace {

// Round-trip precision; the dump must reproduce every coordinate exactly.
std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string str(const std::string& s)
{
    return nlohmann::json(s).dump();
}

} // namespace

void write_layout_dump(std::ostream& out, const Layout& layout)
{
    const auto& p = layout.params;
    out << "{\n";
    out << "  \"format\": \"gpcp-layout/1\",\n";
    out << "  \"n_rows\": " << layout.n_rows() << ",\n";
    out << "  \"n_axes\": " << layout.n_axes() << ",\n";
    out << "  \"params\": {\"gap_total\": " << num(p.gap_total) << ", \"box_width\": " << num(p.box_width)
        << ", \"scale_method\": " << str(std::string(to_string(p.scale_method))) << "},\n";

    out << "  \"axes\": [";
    for (std::size_t a = 0; a < layout.n_axes(); ++a) {
        const auto& axis = layout.axes[a];
        out << (a ? ",\n" : "\n") << "    {\"axis\": " << a << ", \"column\": " << str(axis.name)
            << ", \"kind\": " << str(std::string(to_string(axis.kind)))
            << ", \"break_after\": " << (axis.break_after ? "true" : "false")
            << ", \"x_center\": " << num(axis.x_center) << ", \"x_left\": " << num(axis.x_left)
            << ", \"x_right\": " << num(axis.x_right);
        if (axis.kind == ColumnKind::Numeric) {
            out << ", \"domain\": [" << num(axis.domain.min) << ", " << num(axis.domain.max) << "]}";
            continue;
        }
        out << ", \"levels\": [";
        for (std::size_t i = 0; i < axis.levels.size(); ++i) {
            out << (i ? ", " : "") << str(axis.levels[i]);
        }
        out << "], \"boxes\": [";
        for (std::size_t i = 0; i < axis.boxes.size(); ++i) {
            const auto& box = axis.boxes[i];
            out << (i ? ", " : "") << "{\"axis\": " << box.axis << ", \"level\": " << box.level
                << ", \"y0\": " << num(box.y0) << ", \"y1\": " << num(box.y1) << ", \"count\": " << box.count << "}";
        }
        out << "]}";
    }
    out << "\n  ],\n";

    out << "  \"blocks\": [";
    for (std::size_t b = 0; b < layout.blocks.size(); ++b) {
        const auto& block = layout.blocks[b];
        out << (b ? ", " : "") << "{\"start\": " << block.start << ", \"end\": " << block.end << ", \"sub_blocks\": [";
        for (std::size_t s = 0; s < block.sub_blocks.size(); ++s) {
            out << (s ? ", " : "") << "{\"start\": " << block.sub_blocks[s].start
                << ", \"end\": " << block.sub_blocks[s].end << "}";
        }
        out << "]}";
    }
    out << "],\n";

    auto write_matrix = [&](const char* name, bool entry) {
        out << "    \"" << name << "\": [";
        for (std::size_t row = 0; row < layout.n_rows(); ++row) {
            out << (row ? ",\n      [" : "\n      [");
            for (std::size_t a = 0; a < layout.n_axes(); ++a) {
                out << (a ? ", " : "") << num(entry ? layout.points.y_in(row, a) : layout.points.y_out(row, a));
            }
            out << "]";
        }
        out << "\n    ]";
    };
    out << "  \"points\": {\n";
    write_matrix("y_in", true);
    out << ",\n";
    write_matrix("y_out", false);
    out << "\n  },\n";

    out << "  \"warnings\": [";
    for (std::size_t i = 0; i < layout.warnings.size(); ++i) {
        out << (i ? ", " : "") << str(layout.warnings[i]);
    }
    out << "]\n}\n";
}

} // namespace gpcp
