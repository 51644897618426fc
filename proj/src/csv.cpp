#include "tensileg/csv.hpp"

#include "tensileg/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace tensileg {

namespace {

std::string trim(std::string_view s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) {
        return {};
    }
    const auto end = s.find_last_not_of(" \t\r");
    return std::string(s.substr(begin, end - begin + 1));
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        if (comma == std::string::npos) {
            cells.push_back(trim(std::string_view(line).substr(start)));
            break;
        }
        cells.push_back(trim(std::string_view(line).substr(start, comma - start)));
        start = comma + 1;
    }
    return cells;
}

} // namespace

std::string format_double(double value) {
    char buffer[32];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

int CsvTable::column_index(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

const std::vector<double>& CsvTable::column(const std::string& name) const {
    const int index = column_index(name);
    if (index < 0) {
        throw ConfigError("missing CSV column '" + name + "'");
    }
    return columns[static_cast<std::size_t>(index)];
}

CsvTable read_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open CSV file " + path.string());
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw ConfigError("empty CSV file " + path.string());
    }
    CsvTable table;
    table.header = split_line(line);
    table.columns.assign(table.header.size(), {});

    std::size_t row = 1; // header is row 1
    while (std::getline(in, line)) {
        ++row;
        if (trim(line).empty()) {
            continue;
        }
        const auto cells = split_line(line);
        if (cells.size() != table.header.size()) {
            throw ConfigError(path.string() + ": row " + std::to_string(row) + " has " +
                              std::to_string(cells.size()) + " cells, expected " +
                              std::to_string(table.header.size()));
        }
        for (std::size_t c = 0; c < cells.size(); ++c) {
            double value = 0.0;
            const auto* begin = cells[c].data();
            const auto* end = begin + cells[c].size();
            const auto parsed = std::from_chars(begin, end, value);
            if (parsed.ec != std::errc{} || parsed.ptr != end) {
                throw ConfigError(path.string() + ": row " + std::to_string(row) +
                                  ", column '" + table.header[c] + "': non-numeric cell '" +
                                  cells[c] + "'");
            }
            table.columns[c].push_back(value);
        }
    }
    if (table.rows() == 0) {
        throw ConfigError(path.string() + ": no data rows");
    }
    return table;
}

std::string csv_to_string(const std::vector<std::string>& header,
                          const std::vector<std::vector<double>>& columns) {
    std::ostringstream out;
    for (std::size_t i = 0; i < header.size(); ++i) {
        out << (i ? "," : "") << header[i];
    }
    out << '\n';
    const std::size_t rows = columns.empty() ? 0 : columns.front().size();
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            out << (c ? "," : "") << format_double(columns[c][r]);
        }
        out << '\n';
    }
    return out.str();
}

void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& columns) {
    std::ofstream out(path, std::ios::binary); // binary keeps LF endings everywhere
    if (!out) {
        throw ConfigError("cannot write CSV file " + path.string());
    }
    out << csv_to_string(header, columns);
}

} // namespace tensileg
