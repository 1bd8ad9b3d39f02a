#include <gpcp/layout.hpp>
#include <gpcp/error.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace gpcp {

std::string_view to_string(ScaleMethod method)
{
    switch (method) {
        case ScaleMethod::PerAxisMinMax: return "PerAxisMinMax";
        case ScaleMethod::GlobalMinMax:  return "GlobalMinMax";
        case ScaleMethod::Raw:           return "Raw";
    }
    return "?";
}

void LayoutParams::validate() const
{
    if (!(gap_total >= 0.0 && gap_total < 1.0)) {
        throw ValidationError("gap_total must satisfy 0 <= gap_total < 1");
    }
    if (!(box_width > 0.0 && box_width < 1.0)) {
        throw ValidationError("box_width must satisfy 0 < box_width < 1");
    }
}

PointMatrix::PointMatrix(std::size_t n_rows, std::size_t n_axes)
    : m_rows(n_rows)
    , m_axes(n_axes)
    , m_in(n_rows * n_axes, 0.0)
    , m_out(n_rows * n_axes, 0.0)
{
}

// ---------------------------------------------------------------------------

namespace {

ScaleDomain value_range(std::span<const double> values)
{
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    return {*lo, *hi};
}

// Stable counting sort of `perm` by level code. The per-level runs are
// written to `by_level` and concatenated back into `perm`.
void split_by_level(std::vector<std::size_t>& perm, const std::vector<LevelCode>& codes, std::size_t n_levels,
                    LevelOrder& by_level)
{
    by_level.assign(n_levels, {});
    for (std::size_t row : perm) {
        by_level[codes[row]].push_back(row);
    }
    perm.clear();
    for (const auto& rows : by_level) {
        perm.insert(perm.end(), rows.begin(), rows.end());
    }
}

std::vector<std::size_t> rows_by_key(const std::vector<double>& key)
{
    std::vector<std::size_t> perm(key.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });
    return perm;
}

} // namespace

std::vector<double> scale_numeric(std::span<const double> values, ScaleMethod method,
                                  std::optional<ScaleDomain> global)
{
    std::vector<double> out(values.size());
    if (values.empty()) {
        return out;
    }
    if (method == ScaleMethod::Raw) {
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (!(values[i] >= 0.0 && values[i] <= 1.0)) {
                throw ValidationError("raw scaling requires values in [0, 1]; found " + std::to_string(values[i])
                                      + " at row " + std::to_string(i + 1));
            }
            out[i] = values[i];
        }
        return out;
    }

    const ScaleDomain domain = (method == ScaleMethod::GlobalMinMax && global) ? *global : value_range(values);
    const double span = domain.max - domain.min;
    for (std::size_t i = 0; i < values.size(); ++i) {
        out[i] = span > 0.0 ? (values[i] - domain.min) / span : 0.5;
    }
    return out;
}

std::vector<FactorBlock> identify_factor_blocks(std::span<const ColumnKind> kinds, const std::vector<bool>& breaks)
{
    std::vector<FactorBlock> blocks;
    std::size_t a = 0;
    while (a < kinds.size()) {
        if (kinds[a] != ColumnKind::Categorical) {
            ++a;
            continue;
        }
        FactorBlock block;
        block.start = a;
        while (a + 1 < kinds.size() && kinds[a + 1] == ColumnKind::Categorical) {
            ++a;
        }
        block.end = a;
        std::size_t sub_start = block.start;
        for (std::size_t b = block.start + 1; b < block.end; ++b) {
            if (b < breaks.size() && breaks[b]) {
                block.sub_blocks.push_back({sub_start, b});
                sub_start = b;
            }
        }
        block.sub_blocks.push_back({sub_start, block.end});
        blocks.push_back(std::move(block));
        ++a;
    }
    return blocks;
}

std::vector<BoxExtent> level_boxes(std::span<const std::size_t> counts, double gap_total)
{
    const std::size_t n = std::accumulate(counts.begin(), counts.end(), std::size_t{0});
    if (n == 0) {
        throw ValidationError("level boxes need at least one observation");
    }
    const std::size_t k = counts.size();
    if (k == 1) {
        return {{0.0, 1.0}};
    }

    const double gap   = gap_total / static_cast<double>(k - 1);
    const double scale = (1.0 - gap_total) / static_cast<double>(n);
    std::vector<BoxExtent> boxes;
    boxes.reserve(k);
    std::size_t below = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const double offset = static_cast<double>(i) * gap;
        const double y0 = static_cast<double>(below) * scale + offset;
        below += counts[i];
        const double y1 = static_cast<double>(below) * scale + offset;
        boxes.push_back({y0, y1});
    }
    return boxes;
}

std::vector<LevelOrder> hierarchical_order(const Frame& frame, std::span<const std::size_t> axis_columns,
                                           SubBlock sub_block, std::optional<std::size_t> left_tiebreak,
                                           std::optional<std::size_t> right_tiebreak)
{
    const std::size_t n = frame.n_rows();
    const auto tiebreak = left_tiebreak ? left_tiebreak : right_tiebreak;

    std::vector<std::size_t> perm;
    if (tiebreak) {
        perm = rows_by_key(frame.column(*tiebreak).numeric_values());
    }
    else {
        perm.resize(n);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
    }

    // Right to left: each pass stably regroups the previous axis's global
    // order by this axis's level, so every axis inherits the ordering of
    // all categorical axes to its right.
    std::vector<LevelOrder> orders(sub_block.end - sub_block.start + 1);
    for (std::size_t a = sub_block.end + 1; a-- > sub_block.start;) {
        const auto& column = frame.column(axis_columns[a]);
        split_by_level(perm, column.level_codes(), column.levels().size(), orders[a - sub_block.start]);
    }
    return orders;
}

std::vector<double> assign_positions(std::span<const std::size_t> ordered_rows, BoxExtent box)
{
    const double n = static_cast<double>(ordered_rows.size());
    const double height = box.y1 - box.y0;
    std::vector<double> y(ordered_rows.size());
    for (std::size_t i = 0; i < ordered_rows.size(); ++i) {
        y[i] = box.y0 + (static_cast<double>(i) + 0.5) / n * height;
    }
    return y;
}

ReconciledPositions reconcile_breakpoint(const LevelOrder& left_order, const LevelOrder& right_order,
                                         std::span<const LevelBox> boxes, std::size_t n_rows)
{
    if (left_order.size() != boxes.size() || right_order.size() != boxes.size()) {
        throw std::logic_error("breakpoint reconciliation: level count mismatch");
    }
    ReconciledPositions out{std::vector<double>(n_rows, 0.0), std::vector<double>(n_rows, 0.0)};
    for (std::size_t level = 0; level < boxes.size(); ++level) {
        const auto& left  = left_order[level];
        const auto& right = right_order[level];
        auto l = left;
        auto r = right;
        std::sort(l.begin(), l.end());
        std::sort(r.begin(), r.end());
        if (l != r) {
            throw std::logic_error("breakpoint reconciliation: left and right orders cover different rows in level "
                                   + std::to_string(level));
        }
        const BoxExtent box{boxes[level].y0, boxes[level].y1};
        const auto y_left  = assign_positions(left, box);
        const auto y_right = assign_positions(right, box);
        for (std::size_t i = 0; i < left.size(); ++i) {
            out.y_in[left[i]]   = y_left[i];
            out.y_out[right[i]] = y_right[i];
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

void place_level_order(PointMatrix& points, std::size_t axis, const LevelOrder& order,
                       std::span<const LevelBox> boxes, bool entry, bool exit)
{
    for (std::size_t level = 0; level < order.size(); ++level) {
        const auto& rows = order[level];
        const auto y = assign_positions(rows, {boxes[level].y0, boxes[level].y1});
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (entry) {
                points.y_in(rows[i], axis) = y[i];
            }
            if (exit) {
                points.y_out(rows[i], axis) = y[i];
            }
        }
    }
}

// Entry order of a breakpoint axis seen from its left sub-block: rows in
// each level follow their exit position on the axis immediately to the left.
LevelOrder order_by_left_exit(const PointMatrix& points, std::size_t axis, const Column& column)
{
    std::vector<double> key(points.n_rows());
    for (std::size_t row = 0; row < key.size(); ++row) {
        key[row] = points.y_out(row, axis - 1);
    }
    auto perm = rows_by_key(key);
    LevelOrder order;
    split_by_level(perm, column.level_codes(), column.levels().size(), order);
    return order;
}

} // namespace

Layout compute_layout(const Frame& frame, const ResolvedSpec& spec, const LayoutParams& params)
{
    params.validate();
    const std::size_t m = spec.n_axes();
    const std::size_t n = frame.n_rows();
    if (m == 0) {
        throw ValidationError("layout needs at least one axis");
    }
    if (n == 0) {
        throw ValidationError("layout needs at least one row");
    }

    Layout layout;
    layout.params = params;
    layout.points = PointMatrix(n, m);

    const double spacing = m > 1 ? 1.0 / static_cast<double>(m - 1) : 1.0;
    std::vector<ColumnKind> kinds(m);
    std::optional<ScaleDomain> global;
    for (std::size_t a = 0; a < m; ++a) {
        const auto& column = frame.column(spec.axis_columns.at(a));
        kinds[a] = column.kind();
        if (column.is_numeric()) {
            const auto range = value_range(column.numeric_values());
            global = global ? ScaleDomain{std::min(global->min, range.min), std::max(global->max, range.max)} : range;
        }
    }

    for (std::size_t a = 0; a < m; ++a) {
        const auto& column = frame.column(spec.axis_columns[a]);
        AxisLayout axis;
        axis.column      = spec.axis_columns[a];
        axis.name        = column.name();
        axis.kind        = column.kind();
        axis.break_after = a < spec.break_after.size() && spec.break_after[a];
        axis.x_center    = m > 1 ? static_cast<double>(a) * spacing : 0.5;

        if (column.is_numeric()) {
            axis.x_left = axis.x_right = axis.x_center;
            const auto& values = column.numeric_values();
            switch (params.scale_method) {
                case ScaleMethod::PerAxisMinMax: axis.domain = value_range(values); break;
                case ScaleMethod::GlobalMinMax:  axis.domain = *global; break;
                case ScaleMethod::Raw:           axis.domain = {0.0, 1.0}; break;
            }
            const auto scaled = scale_numeric(values, params.scale_method, global);
            for (std::size_t row = 0; row < n; ++row) {
                layout.points.y_in(row, a) = layout.points.y_out(row, a) = scaled[row];
            }
        }
        else {
            const double half = 0.5 * params.box_width * spacing;
            axis.x_left  = axis.x_center - half;
            axis.x_right = axis.x_center + half;
            axis.levels  = column.levels();
            const auto counts = column.level_counts();
            const auto extents = level_boxes(counts, params.gap_total);
            for (std::size_t level = 0; level < counts.size(); ++level) {
                axis.boxes.push_back({a, static_cast<LevelCode>(level), extents[level].y0, extents[level].y1,
                                      counts[level]});
                if (counts[level] == 0) {
                    layout.warnings.push_back("axis " + std::to_string(a + 1) + " ('" + column.name() + "'): level '"
                                              + column.levels()[level] + "' has no observations");
                }
            }
        }
        layout.axes.push_back(std::move(axis));
    }

    layout.blocks = identify_factor_blocks(kinds, spec.break_after);

    auto numeric_axis = [&](std::size_t a) -> std::optional<std::size_t> {
        if (a < m && kinds[a] == ColumnKind::Numeric) {
            return spec.axis_columns[a];
        }
        return std::nullopt;
    };

    for (const auto& block : layout.blocks) {
        // Entry order of each breakpoint axis, produced by the sub-block on its left.
        std::map<std::size_t, LevelOrder> pending_entry;
        for (const auto& sub : block.sub_blocks) {
            const auto left_tb  = sub.start > 0 ? numeric_axis(sub.start - 1) : std::nullopt;
            const auto right_tb = numeric_axis(sub.end + 1);
            auto orders = hierarchical_order(frame, spec.axis_columns, sub, left_tb, right_tb);

            const bool starts_at_break = sub.start != block.start;
            const bool ends_at_break   = sub.end != block.end;
            for (std::size_t a = sub.start; a <= sub.end; ++a) {
                const auto& boxes = layout.axes[a].boxes;
                const auto& order = orders[a - sub.start];
                if (a == sub.start && starts_at_break) {
                    auto reconciled = reconcile_breakpoint(pending_entry.at(a), order, boxes, n);
                    for (std::size_t row = 0; row < n; ++row) {
                        layout.points.y_in(row, a)  = reconciled.y_in[row];
                        layout.points.y_out(row, a) = reconciled.y_out[row];
                    }
                }
                else if (a == sub.end && ends_at_break) {
                    // sub.end > sub.start here, so the left neighbor's exits are placed.
                    pending_entry[a] = order_by_left_exit(layout.points, a, frame.column(spec.axis_columns[a]));
                }
                else {
                    place_level_order(layout.points, a, order, boxes, true, true);
                }
            }
        }
    }
    return layout;
}

std::vector<Point2> polyline_vertices(const Layout& layout, std::size_t row)
{
    std::vector<Point2> vertices;
    vertices.reserve(2 * layout.n_axes());
    for (std::size_t a = 0; a < layout.n_axes(); ++a) {
        const auto& axis = layout.axes[a];
        if (axis.kind == ColumnKind::Numeric) {
            vertices.push_back({axis.x_center, layout.points.y_in(row, a)});
        }
        else {
            vertices.push_back({axis.x_left, layout.points.y_in(row, a)});
            vertices.push_back({axis.x_right, layout.points.y_out(row, a)});
        }
    }
    return vertices;
}

} // namespace gpcp
