#pragma once

#include <gpcp/dataset.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gpcp {

struct AxisEntry
{
    std::string column_name;
    bool        break_after = false;

    bool operator==(const AxisEntry&) const = default;
};

/// Ordered axis list as written by the user. Columns may repeat.
struct AxisSpec
{
    std::vector<AxisEntry>     entries;
    std::optional<std::string> group_column;

    bool operator==(const AxisSpec&) const = default;
};

/// AxisSpec bound to a Frame's column indices.
struct ResolvedSpec
{
    std::vector<std::size_t>   axis_columns;
    std::vector<bool>          break_after;
    std::optional<std::size_t> group_index;

    std::size_t n_axes() const { return axis_columns.size(); }

    bool operator==(const ResolvedSpec&) const = default;
};

/// Parses `name ((","|"|") name)*`; a `|` separator marks a breakpoint after
/// the name on its left. Whitespace around names is ignored.
AxisSpec parse_spec(std::string_view text);

/// Canonical text form; parse_spec(render_spec(s)) == s for any valid s.
std::string render_spec(const AxisSpec& spec);

ResolvedSpec resolve(const AxisSpec& spec, const Frame& frame);

} // namespace gpcp
