#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gpcp {

enum class ColumnKind { Numeric, Categorical };

std::string_view to_string(ColumnKind kind);

using LevelCode = std::uint32_t;

/// One typed column of a Frame.
///
/// Numeric columns carry finite values only. Categorical columns carry a
/// code per row indexing into `levels`; level order controls how boxes are
/// stacked on an axis (first level at the bottom).
class Column
{
public:
    static Column numeric(std::string name, std::vector<double> values);
    static Column categorical(std::string name, std::vector<LevelCode> codes, std::vector<std::string> levels);
    /// Builds codes and levels from raw labels; levels in first-appearance order.
    static Column categorical_from_labels(std::string name, std::span<const std::string> labels);

    const std::string& name() const { return m_name; }
    ColumnKind kind() const { return m_kind; }
    bool is_numeric() const { return m_kind == ColumnKind::Numeric; }
    bool is_categorical() const { return m_kind == ColumnKind::Categorical; }
    std::size_t size() const;

    const std::vector<double>& numeric_values() const { return m_values; }
    const std::vector<LevelCode>& level_codes() const { return m_codes; }
    const std::vector<std::string>& levels() const { return m_levels; }
    const std::string& label(std::size_t row) const { return m_levels[m_codes[row]]; }

    /// Per-level row counts in level order.
    std::vector<std::size_t> level_counts() const;

    bool operator==(const Column&) const = default;

private:
    Column() = default;

    std::string              m_name;
    ColumnKind               m_kind = ColumnKind::Numeric;
    std::vector<double>      m_values;
    std::vector<LevelCode>   m_codes;
    std::vector<std::string> m_levels;
};

class Frame
{
public:
    Frame() = default;
    explicit Frame(std::vector<Column> columns);

    std::size_t n_rows() const { return m_n_rows; }
    std::size_t n_columns() const { return m_columns.size(); }
    const std::vector<Column>& columns() const { return m_columns; }
    const Column& column(std::size_t index) const { return m_columns.at(index); }

    std::optional<std::size_t> find(std::string_view name) const;

    /// Returns a copy with column `index` replaced by `column` (same name and length).
    Frame with_column(std::size_t index, Column column) const;

    bool operator==(const Frame&) const = default;

private:
    std::vector<Column> m_columns;
    std::size_t         m_n_rows = 0;
};

struct CsvOptions
{
    char delimiter  = ',';
    bool has_header = true;
    std::map<std::string, ColumnKind, std::less<>> kind_overrides;
};

/// Strict finite decimal parse: optional sign, digits, optional fraction and
/// exponent. Rejects "nan", "inf", hex and surrounding whitespace.
std::optional<double> parse_finite(std::string_view text);

ColumnKind infer_kind(std::span<const std::string> raw);

Frame load_csv(std::istream& source, const CsvOptions& options = {});
Frame load_csv_file(const std::string& path, const CsvOptions& options = {});

/// Writes `frame` so that load_csv with the same options reproduces it
/// (numbers use round-trip precision, fields are quoted when needed).
void write_csv(std::ostream& out, const Frame& frame, const CsvOptions& options = {});

/// Reorders the levels of a categorical column without changing any row's label.
Column set_level_order(const Column& column, std::span<const std::string> order);

} // namespace gpcp
