#pragma once

#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace graycube {

/// Dimension cap for enumeration-heavy entry points (CLI sweeps, cube
/// builds). Overridable via the GRAYCUBE_MAX_DIM environment variable.
inline int max_dim() {
  if (const char* s = std::getenv("GRAYCUBE_MAX_DIM")) {
    try {
      return std::stoi(s);
    } catch (const std::exception&) {
      return 7;
    }
  }
  return 7;
}

/// When GRAYCUBE_AUDIT is set, trusted builders re-run the full poset
/// invariant check on everything they produce.
inline bool audit_enabled() {
  const char* s = std::getenv("GRAYCUBE_AUDIT");
  return s != nullptr && *s != '\0' && std::string(s) != "0";
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

template <typename It>
std::string join(It first, It last, const std::string& sep) {
  std::ostringstream os;
  for (It it = first; it != last; ++it) {
    if (it != first) os << sep;
    os << *it;
  }
  return os.str();
}

inline int parse_int(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed " + what + ": '" + s + "'");
  }
  if (pos != s.size())
    throw std::invalid_argument("malformed " + what + ": '" + s + "'");
  return v;
}

}  // namespace graycube
