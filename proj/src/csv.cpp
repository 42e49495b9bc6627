#include "moo/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "moo/errors.hpp"

namespace moo::csv {

std::string format_double(double value) {
    char buffer[32];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    if (ec != std::errc()) throw Error("format_double: conversion failed");
    return std::string(buffer, ptr);
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

std::vector<std::vector<std::string>> read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("read_file: cannot open " + path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        rows.push_back(split_line(line));
    }
    return rows;
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);  // binary keeps LF endings everywhere
    if (!out) throw Error("write_file: cannot open " + path);
    out << contents;
    if (!out) throw Error("write_file: failed writing " + path);
}

std::string trace_to_csv(const std::vector<TraceRow>& trace, Index num_objectives) {
    std::ostringstream out;
    out << "round";
    for (Index i = 1; i <= num_objectives; ++i) out << ",f_" << i;
    for (Index i = 1; i <= num_objectives; ++i) out << ",lambda_" << i;
    out << ",tch_value,archive_size\n";
    for (const TraceRow& row : trace) {
        out << row.round;
        for (Index i = 0; i < num_objectives; ++i) out << ',' << format_double(row.objectives[i]);
        for (Index i = 0; i < num_objectives; ++i) out << ',' << format_double(row.lambda[i]);
        out << ',' << format_double(row.tch) << ',' << row.archive_size << "\n";
    }
    return out.str();
}

std::string archive_to_csv(const ParetoArchive& archive, Index num_objectives) {
    std::ostringstream out;
    out << "round_index,gamma";
    for (Index i = 1; i <= num_objectives; ++i) out << ",f_" << i;
    out << "\n";
    for (const ArchiveEntry& entry : archive.entries()) {
        out << entry.round << ',' << format_double(entry.weight);
        for (Index i = 0; i < num_objectives; ++i)
            out << ',' << format_double(entry.objectives[i]);
        out << "\n";
    }
    return out.str();
}

namespace {

double parse_double(const std::string& field) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size())
        throw Error("trace_from_csv: bad numeric field '" + field + "'");
    return value;
}

}  // namespace

std::vector<TraceRow> trace_from_csv(const std::string& contents, Index num_objectives) {
    std::istringstream in(contents);
    std::vector<TraceRow> trace;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (header) {
            header = false;
            continue;
        }
        if (line.empty()) continue;
        const std::vector<std::string> fields = split_line(line);
        if (fields.size() != static_cast<std::size_t>(2 * num_objectives + 3))
            throw Error("trace_from_csv: wrong field count");
        TraceRow row;
        row.round = static_cast<int>(parse_double(fields[0]));
        row.objectives.resize(num_objectives);
        row.lambda.resize(num_objectives);
        for (Index i = 0; i < num_objectives; ++i)
            row.objectives[i] = parse_double(fields[static_cast<std::size_t>(1 + i)]);
        for (Index i = 0; i < num_objectives; ++i)
            row.lambda[i] =
                parse_double(fields[static_cast<std::size_t>(1 + num_objectives + i)]);
        row.tch = parse_double(fields[fields.size() - 2]);
        row.archive_size = static_cast<std::size_t>(parse_double(fields.back()));
        trace.push_back(std::move(row));
    }
    return trace;
}

}  // namespace moo::csv
