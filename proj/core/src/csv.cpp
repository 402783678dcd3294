// blocksplit - block-activated proximal splitting solvers
// Copyright 2026 The blocksplit authors
// Licensed under Apache 2.0

#include "blocksplit/csv.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "blocksplit/errors.hpp"

namespace blocksplit {

const char* const kTraceCsvHeader =
    "iteration,epochs,error_db,objective,kt_residual,activated_primal,activated_dual,"
    "wall_ms,macs";

namespace {

std::string fmt_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

std::string trace_csv_row(const TraceRecord& rec) {
  char head[64];
  std::snprintf(head, sizeof(head), "%" PRId64, rec.iteration);
  std::string row(head);
  row += ',';
  row += fmt_double(rec.epochs);
  row += ',';
  row += fmt_double(rec.error_db);
  row += ',';
  row += fmt_double(rec.objective);
  row += ',';
  row += fmt_double(rec.kt_residual);
  char counts[96];
  std::snprintf(counts, sizeof(counts), ",%" PRId64 ",%" PRId64,
                static_cast<std::int64_t>(rec.activated_primal),
                static_cast<std::int64_t>(rec.activated_dual));
  row += counts;
  row += ',';
  row += fmt_double(rec.wall_ms);
  char macs[40];
  std::snprintf(macs, sizeof(macs), ",%" PRIu64, rec.macs);
  row += macs;
  return row;
}

void write_trace_csv(std::ostream& out, const std::vector<TraceRecord>& trace) {
  out << kTraceCsvHeader << '\n';
  for (const TraceRecord& rec : trace) out << trace_csv_row(rec) << '\n';
}

void write_trace_csv_file(const std::string& path, const std::vector<TraceRecord>& trace) {
  std::ofstream out(path, std::ios::binary);
  detail::require(out.good(), "write_trace_csv_file: cannot open " + path);
  write_trace_csv(out, trace);
  out.flush();
  detail::require(out.good(), "write_trace_csv_file: write failed for " + path);
}

}  // namespace blocksplit
