#include "hspec/util.hpp"

#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <sstream>

namespace hspec {

std::string fmt12(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << std::showpoint << v;
  return os.str();
}

double round12(double v) {
  if (!std::isfinite(v)) return v;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

}  // namespace hspec
