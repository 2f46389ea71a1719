#include "csv.hpp"

#include <cstdio>

#include "cgme/errors.hpp"

namespace cgme::csv {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Writer::Writer(const std::string& path, const std::vector<std::string>& header)
    : out_(path) {
  if (!out_) throw config_error("cannot open output file '" + path + "'");
  cells(header);
}

void Writer::row(const std::vector<double>& values) {
  std::vector<std::string> cells_;
  cells_.reserve(values.size());
  for (double v : values) cells_.push_back(fmt(v));
  cells(cells_);
}

void Writer::cells(const std::vector<std::string>& values) {
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out_ << ',';
    out_ << values[i];
  }
  out_ << '\n';
}

}  // namespace cgme::csv
