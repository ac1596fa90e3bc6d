#pragma once

// CSV emission and axis-range parsing for the CLI. Numeric cells are printed
// with 17 significant digits ("%.17g", C locale), which round-trips doubles
// exactly; rows therefore reproduce bit-identically when recomputed.

#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cli {

inline std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// "start:stop:count" or a bare scalar; count >= 1, stop >= start.
struct AxisRange {
  double start = 0.0;
  double stop = 0.0;
  int count = 1;

  std::vector<double> expand() const {
    std::vector<double> values;
    values.reserve(count);
    if (count == 1) {
      values.push_back(start);
      return values;
    }
    const double step = (stop - start) / (count - 1);
    for (int i = 0; i < count; ++i)
      values.push_back(i == count - 1 ? stop : start + i * step);
    return values;
  }
};

class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline AxisRange parse_range(const std::string& text, const std::string& flag) {
  AxisRange r;
  const auto bad = [&](const char* why) {
    throw usage_error(flag + ": " + why + " (expected a number or start:stop:count)");
  };
  if (text.find(':') == std::string::npos) {
    char tail = 0;
    if (std::sscanf(text.c_str(), "%lf%c", &r.start, &tail) != 1) bad("not a number");
    r.stop = r.start;
    r.count = 1;
    return r;
  }
  char tail = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &r.start, &r.stop, &r.count, &tail) != 3)
    bad("malformed range");
  if (r.count < 1) bad("count must be >= 1");
  if (r.stop < r.start) bad("stop must be >= start");
  return r;
}

// Accumulates rows and writes them to a file or stdout with LF endings.
class CsvTable {
 public:
  explicit CsvTable(std::string header) : header_(std::move(header)) {}

  void add_row(const std::vector<std::string>& cells) {
    std::string row;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) row += ',';
      row += cells[i];
    }
    rows_.push_back(std::move(row));
  }

  void write(const std::optional<std::string>& path) const {
    std::FILE* out = stdout;
    if (path) {
      out = std::fopen(path->c_str(), "w");
      if (!out) throw std::runtime_error("cannot open output file: " + *path);
    }
    std::fprintf(out, "%s\n", header_.c_str());
    for (const auto& row : rows_) std::fprintf(out, "%s\n", row.c_str());
    if (path) std::fclose(out);
  }

  std::size_t size() const { return rows_.size(); }

 private:
  std::string header_;
  std::vector<std::string> rows_;
};

}  // namespace cli
