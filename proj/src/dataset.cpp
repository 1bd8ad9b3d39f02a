#include <gpcp/dataset.hpp>
#include <gpcp/error.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>
#include <unordered_map>

namespace gpcp {

std::string_view to_string(ColumnKind kind)
{
    return kind == ColumnKind::Numeric ? "Numeric" : "Categorical";
}

// ---------------------------------------------------------------------------
// Column / Frame

Column Column::numeric(std::string name, std::vector<double> values)
{
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) {
            throw ValidationError("column '" + name + "': non-finite value at row " + std::to_string(i + 1));
        }
    }
    Column c;
    c.m_name   = std::move(name);
    c.m_kind   = ColumnKind::Numeric;
    c.m_values = std::move(values);
    return c;
}

Column Column::categorical(std::string name, std::vector<LevelCode> codes, std::vector<std::string> levels)
{
    std::set<std::string_view> seen;
    for (const auto& level : levels) {
        if (!seen.insert(level).second) {
            throw ValidationError("column '" + name + "': duplicate level '" + level + "'");
        }
    }
    for (std::size_t i = 0; i < codes.size(); ++i) {
        if (codes[i] >= levels.size()) {
            throw ValidationError("column '" + name + "': level code out of range at row " + std::to_string(i + 1));
        }
    }
    Column c;
    c.m_name   = std::move(name);
    c.m_kind   = ColumnKind::Categorical;
    c.m_codes  = std::move(codes);
    c.m_levels = std::move(levels);
    return c;
}

Column Column::categorical_from_labels(std::string name, std::span<const std::string> labels)
{
    std::unordered_map<std::string_view, LevelCode> index;
    std::vector<std::string> levels;
    std::vector<LevelCode> codes;
    codes.reserve(labels.size());
    for (const auto& label : labels) {
        auto [it, inserted] = index.try_emplace(label, static_cast<LevelCode>(levels.size()));
        if (inserted) {
            levels.push_back(label);
        }
        codes.push_back(it->second);
    }
    return categorical(std::move(name), std::move(codes), std::move(levels));
}

std::size_t Column::size() const
{
    return is_numeric() ? m_values.size() : m_codes.size();
}

std::vector<std::size_t> Column::level_counts() const
{
    std::vector<std::size_t> counts(m_levels.size(), 0);
    for (LevelCode code : m_codes) {
        ++counts[code];
    }
    return counts;
}

Frame::Frame(std::vector<Column> columns)
    : m_columns(std::move(columns))
{
    std::set<std::string_view> names;
    for (const auto& c : m_columns) {
        if (!names.insert(c.name()).second) {
            throw ValidationError("duplicate column name '" + c.name() + "'");
        }
    }
    if (!m_columns.empty()) {
        m_n_rows = m_columns.front().size();
        for (const auto& c : m_columns) {
            if (c.size() != m_n_rows) {
                throw ValidationError("column '" + c.name() + "' has " + std::to_string(c.size())
                                      + " rows, expected " + std::to_string(m_n_rows));
            }
        }
    }
}

std::optional<std::size_t> Frame::find(std::string_view name) const
{
    for (std::size_t i = 0; i < m_columns.size(); ++i) {
        if (m_columns[i].name() == name) {
            return i;
        }
    }
    return std::nullopt;
}

Frame Frame::with_column(std::size_t index, Column column) const
{
    if (column.name() != m_columns.at(index).name()) {
        throw ValidationError("replacement column must keep the name '" + m_columns[index].name() + "'");
    }
    auto columns = m_columns;
    columns[index] = std::move(column);
    return Frame(std::move(columns));
}

// ---------------------------------------------------------------------------
// Number parsing and kind inference

std::optional<double> parse_finite(std::string_view text)
{
    std::size_t i = 0;
    const std::size_t n = text.size();
    std::string_view body = text;
    if (i < n && (text[i] == '+' || text[i] == '-')) {
        if (text[i] == '+') {
            body = text.substr(1);
        }
        ++i;
    }
    std::size_t int_digits = 0;
    while (i < n && text[i] >= '0' && text[i] <= '9') {
        ++i;
        ++int_digits;
    }
    std::size_t frac_digits = 0;
    if (i < n && text[i] == '.') {
        ++i;
        while (i < n && text[i] >= '0' && text[i] <= '9') {
            ++i;
            ++frac_digits;
        }
    }
    if (int_digits + frac_digits == 0) {
        return std::nullopt;
    }
    if (i < n && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        if (i < n && (text[i] == '+' || text[i] == '-')) {
            ++i;
        }
        std::size_t exp_digits = 0;
        while (i < n && text[i] >= '0' && text[i] <= '9') {
            ++i;
            ++exp_digits;
        }
        if (exp_digits == 0) {
            return std::nullopt;
        }
    }
    if (i != n) {
        return std::nullopt;
    }

    double value = 0.0;
    const auto [end, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
    if (ec != std::errc{} || end != body.data() + body.size() || !std::isfinite(value)) {
        return std::nullopt;
    }
    return value;
}

ColumnKind infer_kind(std::span<const std::string> raw)
{
    const bool all_numeric = std::all_of(raw.begin(), raw.end(),
        [](const std::string& cell) { return parse_finite(cell).has_value(); });
    return all_numeric ? ColumnKind::Numeric : ColumnKind::Categorical;
}

// ---------------------------------------------------------------------------
// CSV

namespace {

struct Record
{
    std::vector<std::string> fields;
    std::size_t line = 0;
};

// RFC-4180 tokenizer. Quoted fields may contain delimiters, doubled quotes
// and line breaks; CRLF and LF line endings are both accepted.
std::vector<Record> tokenize(std::string_view text, char delimiter)
{
    std::vector<Record> records;
    Record current;
    std::string field;
    std::size_t line = 1;
    current.line = line;
    bool in_quotes = false;
    bool field_was_quoted = false;
    bool record_has_content = false;

    auto end_field = [&] {
        current.fields.push_back(std::move(field));
        field.clear();
        field_was_quoted = false;
    };
    auto end_record = [&] {
        end_field();
        records.push_back(std::move(current));
        current = Record{};
        record_has_content = false;
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (in_quotes) {
            if (ch == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                }
                else {
                    in_quotes = false;
                }
            }
            else {
                if (ch == '\n') {
                    ++line;
                }
                field.push_back(ch);
            }
            continue;
        }
        if (ch == '"') {
            if (!field.empty() || field_was_quoted) {
                throw ParseError("line " + std::to_string(line) + ": unexpected quote inside unquoted field");
            }
            in_quotes = true;
            field_was_quoted = true;
            record_has_content = true;
        }
        else if (ch == delimiter) {
            end_field();
            record_has_content = true;
        }
        else if (ch == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
            continue;
        }
        else if (ch == '\n') {
            end_record();
            ++line;
            current.line = line;
        }
        else {
            if (field_was_quoted) {
                throw ParseError("line " + std::to_string(line) + ": characters after closing quote");
            }
            field.push_back(ch);
            record_has_content = true;
        }
    }
    if (in_quotes) {
        throw ParseError("line " + std::to_string(current.line) + ": unterminated quoted field");
    }
    if (record_has_content || !field.empty()) {
        end_record();
    }
    // Trailing blank lines carry no data.
    while (!records.empty() && records.back().fields.size() == 1 && records.back().fields[0].empty()) {
        records.pop_back();
    }
    return records;
}

bool needs_quoting(std::string_view s, char delimiter)
{
    return s.empty() || s.find_first_of(std::string{delimiter, '"', '\n', '\r'}) != std::string_view::npos;
}

void write_field(std::ostream& out, std::string_view s, char delimiter)
{
    if (!needs_quoting(s, delimiter)) {
        out << s;
        return;
    }
    out << '"';
    for (char ch : s) {
        if (ch == '"') {
            out << '"';
        }
        out << ch;
    }
    out << '"';
}

std::string format_round_trip(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

Frame load_csv(std::istream& source, const CsvOptions& options)
{
    const std::string text{std::istreambuf_iterator<char>(source), std::istreambuf_iterator<char>()};
    auto records = tokenize(text, options.delimiter);
    if (records.empty()) {
        throw ParseError("empty input");
    }

    std::vector<std::string> names;
    std::size_t first_data = 0;
    if (options.has_header) {
        names = std::move(records.front().fields);
        first_data = 1;
    }
    else {
        for (std::size_t j = 0; j < records.front().fields.size(); ++j) {
            names.push_back("V" + std::to_string(j + 1));
        }
    }
    const std::size_t width = names.size();
    for (std::size_t j = 0; j < width; ++j) {
        if (names[j].empty()) {
            throw ParseError("header: column " + std::to_string(j + 1) + " has an empty name");
        }
    }
    for (const auto& [name, kind] : options.kind_overrides) {
        if (std::find(names.begin(), names.end(), name) == names.end()) {
            throw ValidationError("kind override for unknown column '" + name + "'");
        }
    }

    const std::size_t n_rows = records.size() - first_data;
    if (n_rows == 0) {
        throw ParseError("no data rows");
    }
    std::vector<std::vector<std::string>> cells(width);
    for (auto& col : cells) {
        col.reserve(n_rows);
    }
    for (std::size_t r = 0; r < n_rows; ++r) {
        auto& rec = records[first_data + r];
        const std::size_t row_number = r + 1;
        if (rec.fields.size() != width) {
            throw ParseError("row " + std::to_string(row_number) + " (line " + std::to_string(rec.line) + "): expected "
                             + std::to_string(width) + " fields, found " + std::to_string(rec.fields.size()));
        }
        for (std::size_t j = 0; j < width; ++j) {
            if (rec.fields[j].empty()) {
                throw ParseError("row " + std::to_string(row_number) + ", column '" + names[j]
                                 + "': missing value (missing data is not supported)");
            }
            cells[j].push_back(std::move(rec.fields[j]));
        }
    }

    std::vector<Column> columns;
    columns.reserve(width);
    for (std::size_t j = 0; j < width; ++j) {
        ColumnKind kind = infer_kind(cells[j]);
        if (auto it = options.kind_overrides.find(names[j]); it != options.kind_overrides.end()) {
            kind = it->second;
        }
        if (kind == ColumnKind::Numeric) {
            std::vector<double> values;
            values.reserve(n_rows);
            for (std::size_t r = 0; r < n_rows; ++r) {
                auto v = parse_finite(cells[j][r]);
                if (!v) {
                    throw ParseError("row " + std::to_string(r + 1) + ", column '" + names[j] + "': '" + cells[j][r]
                                     + "' is not a finite number");
                }
                values.push_back(*v);
            }
            columns.push_back(Column::numeric(names[j], std::move(values)));
        }
        else {
            columns.push_back(Column::categorical_from_labels(names[j], cells[j]));
        }
    }
    return Frame(std::move(columns));
}

Frame load_csv_file(const std::string& path, const CsvOptions& options)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ValidationError("cannot open input file '" + path + "'");
    }
    return load_csv(in, options);
}

void write_csv(std::ostream& out, const Frame& frame, const CsvOptions& options)
{
    const char d = options.delimiter;
    if (options.has_header) {
        for (std::size_t j = 0; j < frame.n_columns(); ++j) {
            if (j) {
                out << d;
            }
            write_field(out, frame.column(j).name(), d);
        }
        out << '\n';
    }
    for (std::size_t r = 0; r < frame.n_rows(); ++r) {
        for (std::size_t j = 0; j < frame.n_columns(); ++j) {
            if (j) {
                out << d;
            }
            const auto& c = frame.column(j);
            if (c.is_numeric()) {
                out << format_round_trip(c.numeric_values()[r]);
            }
            else {
                write_field(out, c.label(r), d);
            }
        }
        out << '\n';
    }
}

Column set_level_order(const Column& column, std::span<const std::string> order)
{
    if (!column.is_categorical()) {
        throw ValidationError("column '" + column.name() + "' is numeric; level order applies to categorical columns");
    }
    const auto& levels = column.levels();
    std::unordered_map<std::string_view, LevelCode> new_index;
    std::vector<std::string> extra;
    for (const auto& label : order) {
        const bool known = std::find(levels.begin(), levels.end(), label) != levels.end();
        if (!known || !new_index.try_emplace(label, static_cast<LevelCode>(new_index.size())).second) {
            extra.push_back(label);
        }
    }
    std::vector<std::string> missing;
    for (const auto& level : levels) {
        if (!new_index.contains(level)) {
            missing.push_back(level);
        }
    }
    if (!missing.empty() || !extra.empty()) {
        std::ostringstream msg;
        msg << "level order for column '" << column.name() << "' is not a permutation of its levels:";
        for (const auto& m : missing) {
            msg << " missing label " << m << ";";
        }
        for (const auto& e : extra) {
            msg << " extra label " << e << ";";
        }
        throw ValidationError(msg.str());
    }

    std::vector<LevelCode> remap(levels.size());
    for (std::size_t i = 0; i < levels.size(); ++i) {
        remap[i] = new_index.at(levels[i]);
    }
    std::vector<LevelCode> codes;
    codes.reserve(column.size());
    for (LevelCode code : column.level_codes()) {
        codes.push_back(remap[code]);
    }
    return Column::categorical(column.name(), std::move(codes), {order.begin(), order.end()});
}

} // namespace gpcp
