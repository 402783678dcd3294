// blocksplit - block-activated proximal splitting solvers
// Copyright 2026 The blocksplit authors
// Licensed under Apache 2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "blocksplit/trace.hpp"

namespace blocksplit {

/// Column header of every trace CSV, emitted verbatim.
extern const char* const kTraceCsvHeader;

/// Serializes one record as a CSV row (no trailing newline). Numeric
/// formatting is locale-independent and stable across runs.
std::string trace_csv_row(const TraceRecord& rec);

void write_trace_csv(std::ostream& out, const std::vector<TraceRecord>& trace);
void write_trace_csv_file(const std::string& path, const std::vector<TraceRecord>& trace);

}  // namespace blocksplit
