#pragma once

// Fixed CSV number formatting: 17 significant digits, '.' decimal point,
// independent of the global locale.

#include <cstdio>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>

namespace susywell::csv {

inline std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  for (auto& c : s) {
    if (c == ',') c = '.';
  }
  return s;
}

inline std::string num(long long v) { return std::to_string(v); }
inline std::string num(long v) { return std::to_string(v); }
inline std::string num(unsigned long v) { return std::to_string(v); }
inline std::string num(int v) { return std::to_string(v); }

/// Writes cells separated by ',' and terminated by '\n'.
class Writer {
 public:
  explicit Writer(std::ostream& os) : os_(os) {}

  template <class... Cells>
  void row(const Cells&... cells) {
    bool first = true;
    ((write_cell(cells, first)), ...);
    os_ << '\n';
  }

 private:
  template <class T>
  void write_cell(const T& v, bool& first) {
    if (!first) os_ << ',';
    first = false;
    if constexpr (std::is_convertible_v<const T&, std::string_view>) {
      os_ << std::string_view(v);
    } else {
      os_ << num(v);
    }
  }

  std::ostream& os_;
};

}  // namespace susywell::csv
