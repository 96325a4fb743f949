#include "riskfront/csv.hpp"
#include "riskfront/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

namespace riskfront::csv {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

} // namespace

std::string format(double value)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc{}) {
        throw InputError("cannot format number");
    }
    return std::string(buf, ptr);
}

bool parse(std::string_view text, double& value)
{
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    if (text.empty()) return false;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    return ec == std::errc{} && ptr == text.data() + text.size() && std::isfinite(value);
}

bool parse(std::string_view text, long long& value)
{
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    if (text.empty()) return false;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    return ec == std::errc{} && ptr == text.data() + text.size();
}

std::vector<std::string> split_line(std::string_view line)
{
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
        const auto comma = line.find(',', start);
        fields.emplace_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

std::size_t Table::column(std::string_view name) const
{
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return i;
    }
    throw InputError(source + ": missing column '" + std::string(name) + "'");
}

Table read(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open " + path.string());
    }
    Table t;
    t.source = path.string();
    std::string raw;
    std::size_t lineno = 0;
    bool have_header = false;
    while (std::getline(in, raw)) {
        ++lineno;
        if (trim(raw).empty()) continue;
        auto fields = split_line(raw);
        if (!have_header) {
            t.header = std::move(fields);
            have_header = true;
            continue;
        }
        if (fields.size() != t.header.size()) {
            throw InputError(t.source + ": row " + std::to_string(lineno) + " has " + std::to_string(fields.size()) +
                             " fields, header has " + std::to_string(t.header.size()));
        }
        t.rows.push_back(std::move(fields));
        t.line.push_back(lineno);
    }
    if (!have_header) {
        throw InputError(t.source + ": file is empty");
    }
    return t;
}

void write_atomic(const std::filesystem::path& path, std::string_view content)
{
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw InputError("cannot write " + tmp.string());
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) {
            throw InputError("failed writing " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw InputError("cannot move " + tmp.string() + " into place: " + ec.message());
    }
}

} // namespace riskfront::csv
