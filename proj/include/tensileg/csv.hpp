#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace tensileg {

/// Shortest decimal string that round-trips to the same double. Locale
/// independent; used for every numeric emission so outputs are byte stable.
std::string format_double(double value);

/// Numeric table read from a comma-separated file with a header row.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> columns; // column major, equal lengths

    std::size_t rows() const { return columns.empty() ? 0 : columns.front().size(); }

    /// Index of a named column, or -1.
    int column_index(const std::string& name) const;

    /// Column by name; throws ConfigError naming the column when missing.
    const std::vector<double>& column(const std::string& name) const;
};

/// Parse a CSV file. Throws ConfigError naming the file, row and column for
/// missing headers, ragged rows, non-numeric cells or an empty file.
CsvTable read_csv(const std::filesystem::path& path);

/// Write columns under the given header, LF line endings, full round-trip
/// number formatting.
void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& columns);

/// Same, serialized to a string (stdout emission and tests).
std::string csv_to_string(const std::vector<std::string>& header,
                          const std::vector<std::vector<double>>& columns);

} // namespace tensileg
