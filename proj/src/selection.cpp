#include <gpcp/selection.hpp>
#include <gpcp/error.hpp>

namespace gpcp {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

} // namespace

AxisSpec parse_spec(std::string_view text)
{
    if (trim(text).empty()) {
        throw ParseError("empty axis expression");
    }

    AxisSpec spec;
    std::size_t pos = 0;
    while (true) {
        const auto sep = text.find_first_of(",|", pos);
        const auto name = trim(text.substr(pos, sep == std::string_view::npos ? std::string_view::npos : sep - pos));
        if (name.empty()) {
            const bool at_break = (sep != std::string_view::npos && text[sep] == '|')
                               || (pos > 0 && text[pos - 1] == '|');
            throw ParseError(std::string(at_break ? "misplaced break token '|'" : "empty axis name")
                             + " at offset " + std::to_string(pos) + " in '" + std::string(text) + "'");
        }
        spec.entries.push_back({std::string(name), false});
        if (sep == std::string_view::npos) {
            break;
        }
        if (text[sep] == '|') {
            spec.entries.back().break_after = true;
        }
        pos = sep + 1;
    }
    return spec;
}

std::string render_spec(const AxisSpec& spec)
{
    std::string out;
    for (std::size_t i = 0; i < spec.entries.size(); ++i) {
        if (i > 0) {
            out += spec.entries[i - 1].break_after ? '|' : ',';
        }
        out += spec.entries[i].column_name;
    }
    return out;
}

ResolvedSpec resolve(const AxisSpec& spec, const Frame& frame)
{
    if (spec.entries.empty()) {
        throw ValidationError("axis specification has no entries");
    }

    ResolvedSpec out;
    for (const auto& entry : spec.entries) {
        const auto index = frame.find(entry.column_name);
        if (!index) {
            throw ValidationError("unknown column '" + entry.column_name + "'");
        }
        out.axis_columns.push_back(*index);
        out.break_after.push_back(entry.break_after);
    }

    const std::size_t m = out.axis_columns.size();
    auto categorical = [&](std::size_t axis) { return frame.column(out.axis_columns[axis]).is_categorical(); };
    for (std::size_t a = 0; a < m; ++a) {
        if (!out.break_after[a]) {
            continue;
        }
        const auto where = "axis " + std::to_string(a + 1) + " ('" + spec.entries[a].column_name + "')";
        if (!categorical(a)) {
            throw ValidationError("breakpoint on numeric axis: " + where);
        }
        if (a == 0 || a + 1 >= m || !categorical(a - 1) || !categorical(a + 1)) {
            throw ValidationError("breakpoint outside a factor block: " + where
                                  + " needs categorical axes on both sides");
        }
    }

    if (spec.group_column) {
        const auto index = frame.find(*spec.group_column);
        if (!index) {
            throw ValidationError("unknown grouping column '" + *spec.group_column + "'");
        }
        out.group_index = *index;
    }
    return out;
}

} // namespace gpcp
