#pragma once

#include <gpcp/dataset.hpp>
#include <gpcp/selection.hpp>

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace gpcp {

enum class ScaleMethod { PerAxisMinMax, GlobalMinMax, Raw };

std::string_view to_string(ScaleMethod method);

struct LayoutParams
{
    /// Vertical space reserved for gaps between level boxes on one axis.
    double      gap_total    = 0.10;
    /// Horizontal box extent as a fraction of the inter-axis spacing.
    double      box_width    = 0.1;
    ScaleMethod scale_method = ScaleMethod::PerAxisMinMax;

    /// Throws ValidationError unless 0 <= gap_total < 1 and 0 < box_width < 1.
    void validate() const;
};

struct ScaleDomain
{
    double min = 0.0;
    double max = 1.0;
};

/// Vertical extent of one level box in unit coordinates (y = 0 is the bottom).
struct BoxExtent
{
    double y0 = 0.0;
    double y1 = 0.0;
};

struct LevelBox
{
    std::size_t axis  = 0;
    LevelCode   level = 0;
    double      y0    = 0.0;
    double      y1    = 0.0;
    std::size_t count = 0;
};

/// Inclusive axis range.
struct SubBlock
{
    std::size_t start = 0;
    std::size_t end   = 0;

    bool operator==(const SubBlock&) const = default;
};

/// Maximal run of adjacent categorical axes, split at breakpoints into
/// sub-blocks that share their boundary axis.
struct FactorBlock
{
    std::size_t           start = 0;
    std::size_t           end   = 0;
    std::vector<SubBlock> sub_blocks;

    bool operator==(const FactorBlock&) const = default;
};

/// Entry and exit y of every row at every axis, row-major.
class PointMatrix
{
public:
    PointMatrix() = default;
    PointMatrix(std::size_t n_rows, std::size_t n_axes);

    std::size_t n_rows() const { return m_rows; }
    std::size_t n_axes() const { return m_axes; }

    double  y_in(std::size_t row, std::size_t axis) const { return m_in[row * m_axes + axis]; }
    double  y_out(std::size_t row, std::size_t axis) const { return m_out[row * m_axes + axis]; }
    double& y_in(std::size_t row, std::size_t axis) { return m_in[row * m_axes + axis]; }
    double& y_out(std::size_t row, std::size_t axis) { return m_out[row * m_axes + axis]; }

    bool operator==(const PointMatrix&) const = default;

private:
    std::size_t         m_rows = 0;
    std::size_t         m_axes = 0;
    std::vector<double> m_in;
    std::vector<double> m_out;
};

struct AxisLayout
{
    std::size_t column = 0;
    std::string name;
    ColumnKind  kind        = ColumnKind::Numeric;
    bool        break_after = false;
    double      x_center    = 0.0;
    double      x_left      = 0.0;
    double      x_right     = 0.0;

    // Numeric axes: the value range mapped onto [0, 1].
    ScaleDomain domain;

    // Categorical axes: level labels and one box per level, in level order.
    std::vector<std::string> levels;
    std::vector<LevelBox>    boxes;
};

struct Layout
{
    LayoutParams             params;
    std::vector<AxisLayout>  axes;
    PointMatrix              points;
    std::vector<FactorBlock> blocks;
    /// Non-fatal findings, e.g. declared levels with no observations.
    std::vector<std::string> warnings;

    std::size_t n_rows() const { return points.n_rows(); }
    std::size_t n_axes() const { return axes.size(); }
};

/// Rows of each level listed bottom to top, indexed by level code.
using LevelOrder = std::vector<std::vector<std::size_t>>;

struct Point2
{
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Point2&) const = default;
};

/// Maps values onto [0, 1]. GlobalMinMax uses `global` when given, else the
/// range of `values`. A degenerate range maps every value to 0.5.
std::vector<double> scale_numeric(std::span<const double> values, ScaleMethod method,
                                  std::optional<ScaleDomain> global = std::nullopt);

std::vector<FactorBlock> identify_factor_blocks(std::span<const ColumnKind> kinds, const std::vector<bool>& breaks);

/// Level boxes stacked bottom-to-top in level order, separated by equal gaps
/// that sum to `gap_total` (no gap for a single level).
std::vector<BoxExtent> level_boxes(std::span<const std::size_t> counts, double gap_total);

/// Within-level row order for each axis of `sub_block` (result[a - start]).
///
/// Rows of a level at axis a are sorted by their levels at a+1..end, then by
/// the tiebreak column (left if present, else right), then by row index. The
/// rightmost axis sorts by tiebreak and row index alone.
std::vector<LevelOrder> hierarchical_order(const Frame& frame, std::span<const std::size_t> axis_columns,
                                           SubBlock sub_block, std::optional<std::size_t> left_tiebreak,
                                           std::optional<std::size_t> right_tiebreak);

/// Uniform spread inside `box`: the i-th row (1-based) of n sits at
/// y0 + (i - 0.5) / n * (y1 - y0). Result is aligned with `ordered_rows`.
std::vector<double> assign_positions(std::span<const std::size_t> ordered_rows, BoxExtent box);

struct ReconciledPositions
{
    std::vector<double> y_in;
    std::vector<double> y_out;
};

/// Entry positions follow `left_order`, exit positions follow `right_order`;
/// both use the same slots of each box. Result vectors are indexed by row.
ReconciledPositions reconcile_breakpoint(const LevelOrder& left_order, const LevelOrder& right_order,
                                         std::span<const LevelBox> boxes, std::size_t n_rows);

Layout compute_layout(const Frame& frame, const ResolvedSpec& spec, const LayoutParams& params = {});

/// Anchor points of one row's polyline in unit coordinates: one vertex per
/// numeric axis, entry and exit vertices per categorical axis.
std::vector<Point2> polyline_vertices(const Layout& layout, std::size_t row);

/// Stable JSON serialization of a Layout. Numbers carry 17 significant digits.
void write_layout_dump(std::ostream& out, const Layout& layout);

} // namespace gpcp
