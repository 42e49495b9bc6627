#pragma once

#include <string>
#include <vector>

#include "moo/solver.hpp"
#include "moo/types.hpp"

namespace moo::csv {

/// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double value);

/// Parses one CSV line (numeric fields, no quoting).
std::vector<std::string> split_line(const std::string& line);

/// Reads every row of a CSV file, header included.
std::vector<std::vector<std::string>> read_file(const std::string& path);

void write_file(const std::string& path, const std::string& contents);

/// Trace CSV: round,f_1..f_m,lambda_1..lambda_m,tch_value,archive_size.
std::string trace_to_csv(const std::vector<TraceRow>& trace, Index num_objectives);

/// Archive dump CSV: round_index,gamma,f_1..f_m.
std::string archive_to_csv(const ParetoArchive& archive, Index num_objectives);

/// Reconstructs trace rows from a written trace file (used to verify the
/// round-trip invariant).
std::vector<TraceRow> trace_from_csv(const std::string& contents, Index num_objectives);

}  // namespace moo::csv
