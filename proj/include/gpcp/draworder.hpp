#pragma once

#include <gpcp/dataset.hpp>
#include <gpcp/layout.hpp>
#include <gpcp/selection.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gpcp {

/// Painting sequence of polylines.
enum class DrawPolicy {
    SmallOnTop,   ///< largest groups first, smallest painted last
    LargeOnTop,   ///< exact reverse of SmallOnTop at group granularity
    Hierarchical, ///< lexicographic by level codes across categorical axes
    DataOrder,    ///< input row order
};

std::string_view to_string(DrawPolicy policy);

struct Grouping
{
    /// Group id of each row.
    std::vector<std::size_t> group_of_row;
    /// Rows per group, indexed by group id.
    std::vector<std::size_t> sizes;
    /// Smallest row index in each group; n_rows for empty groups.
    std::vector<std::size_t> first_row;
    std::vector<std::string> labels;

    std::size_t n_groups() const { return sizes.size(); }
};

/// Groups rows by the levels of `group_index` (group id = level code) or,
/// without a grouping column, by the combination of levels across all
/// categorical axes of `spec` (ids in first-appearance order).
Grouping group_sizes(const Frame& frame, std::optional<std::size_t> group_index, const ResolvedSpec& spec);

/// Permutation of row indices, painted first to last.
std::vector<std::size_t> draw_order(const Grouping& groups, DrawPolicy policy, const Layout& layout,
                                    const Frame& frame);

} // namespace gpcp
