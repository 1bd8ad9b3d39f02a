#include <gpcp/draworder.hpp>
#include <gpcp/error.hpp>

#include <algorithm>
#include <map>
#include <numeric>

namespace gpcp {

std::string_view to_string(DrawPolicy policy)
{
    switch (policy) {
        case DrawPolicy::SmallOnTop:   return "SmallOnTop";
        case DrawPolicy::LargeOnTop:   return "LargeOnTop";
        case DrawPolicy::Hierarchical: return "Hierarchical";
        case DrawPolicy::DataOrder:    return "DataOrder";
    }
    return "?";
}

Grouping group_sizes(const Frame& frame, std::optional<std::size_t> group_index, const ResolvedSpec& spec)
{
    const std::size_t n = frame.n_rows();
    Grouping g;
    g.group_of_row.resize(n);

    if (group_index) {
        const auto& column = frame.column(*group_index);
        if (!column.is_categorical()) {
            throw ValidationError("grouping column '" + column.name() + "' must be categorical");
        }
        g.labels = column.levels();
        g.sizes.assign(g.labels.size(), 0);
        g.first_row.assign(g.labels.size(), n);
        for (std::size_t row = 0; row < n; ++row) {
            const std::size_t id = column.level_codes()[row];
            g.group_of_row[row] = id;
            ++g.sizes[id];
            g.first_row[id] = std::min(g.first_row[id], row);
        }
        return g;
    }

    std::vector<const Column*> categorical;
    for (std::size_t c : spec.axis_columns) {
        if (frame.column(c).is_categorical()) {
            categorical.push_back(&frame.column(c));
        }
    }
    std::map<std::vector<LevelCode>, std::size_t> ids;
    std::vector<LevelCode> key(categorical.size());
    for (std::size_t row = 0; row < n; ++row) {
        for (std::size_t i = 0; i < categorical.size(); ++i) {
            key[i] = categorical[i]->level_codes()[row];
        }
        auto [it, inserted] = ids.try_emplace(key, g.sizes.size());
        if (inserted) {
            std::string label;
            for (std::size_t i = 0; i < categorical.size(); ++i) {
                label += (i ? "/" : "") + categorical[i]->label(row);
            }
            g.labels.push_back(label.empty() ? "all" : label);
            g.sizes.push_back(0);
            g.first_row.push_back(row);
        }
        g.group_of_row[row] = it->second;
        ++g.sizes[it->second];
    }
    return g;
}

std::vector<std::size_t> draw_order(const Grouping& groups, DrawPolicy policy, const Layout& layout,
                                    const Frame& frame)
{
    const std::size_t n = groups.group_of_row.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});

    switch (policy) {
        case DrawPolicy::DataOrder:
            return order;

        case DrawPolicy::SmallOnTop:
        case DrawPolicy::LargeOnTop: {
            std::vector<std::size_t> sequence;
            for (std::size_t id = 0; id < groups.n_groups(); ++id) {
                if (groups.sizes[id] > 0) {
                    sequence.push_back(id);
                }
            }
            std::sort(sequence.begin(), sequence.end(), [&](std::size_t a, std::size_t b) {
                if (groups.sizes[a] != groups.sizes[b]) {
                    return groups.sizes[a] > groups.sizes[b];
                }
                return groups.first_row[a] < groups.first_row[b];
            });
            if (policy == DrawPolicy::LargeOnTop) {
                std::reverse(sequence.begin(), sequence.end());
            }
            std::vector<std::size_t> rank(groups.n_groups(), 0);
            for (std::size_t i = 0; i < sequence.size(); ++i) {
                rank[sequence[i]] = i;
            }
            std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                return rank[groups.group_of_row[a]] < rank[groups.group_of_row[b]];
            });
            return order;
        }

        case DrawPolicy::Hierarchical: {
            std::vector<const std::vector<LevelCode>*> codes;
            for (const auto& axis : layout.axes) {
                if (axis.kind == ColumnKind::Categorical) {
                    codes.push_back(&frame.column(axis.column).level_codes());
                }
            }
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                for (const auto* c : codes) {
                    if ((*c)[a] != (*c)[b]) {
                        return (*c)[a] < (*c)[b];
                    }
                }
                return a < b;
            });
            return order;
        }
    }
    return order;
}

} // namespace gpcp
