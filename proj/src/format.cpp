#include "booth/format.hpp"

#include <cstdio>

namespace booth {

namespace {

std::string printf_double(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

}  // namespace

std::string fmt_sig(double v) { return printf_double("%.12g", v); }

std::string fmt_fixed(double v) { return printf_double("%.12f", v); }

}  // namespace booth
