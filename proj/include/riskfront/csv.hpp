#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace riskfront::csv {

// Shortest decimal text that parses back to exactly the same double.
std::string format(double value);

// Parses a whole field as a finite double; returns false on any junk.
bool parse(std::string_view text, double& value);
bool parse(std::string_view text, long long& value);

std::vector<std::string> split_line(std::string_view line);

/// Header plus data rows. `line` keeps each row's 1-based line number in the
/// source file for error messages.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::size_t> line;

    // Index of a header column; throws InputError naming the file if absent.
    std::size_t column(std::string_view name) const;
    std::string source;
};

// Reads a comma-separated file with a header row. Blank lines are skipped.
Table read(const std::filesystem::path& path);

// Writes via a sibling temporary file and a rename.
void write_atomic(const std::filesystem::path& path, std::string_view content);

} // namespace riskfront::csv
