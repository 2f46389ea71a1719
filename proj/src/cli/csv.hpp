#pragma once
#include <fstream>
#include <string>
#include <vector>

namespace cgme::csv {

// %.17g rendering (round-trippable doubles).
std::string fmt(double v);

class Writer {
 public:
  Writer(const std::string& path, const std::vector<std::string>& header);
  void row(const std::vector<double>& values);
  // Pre-rendered cells (for mixed text/number rows).
  void cells(const std::vector<std::string>& values);

 private:
  std::ofstream out_;
};

}  // namespace cgme::csv
