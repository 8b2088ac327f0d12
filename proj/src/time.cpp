#include "transit/time.hpp"

#include <cctype>
#include <cstdio>

namespace transit {

std::optional<Minute> parse_minute(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) return std::nullopt;
  if (s == "inf" || s == "+inf") return kPosInf;
  if (s == "-inf") return kNegInf;
  auto colon = s.find(':');
  try {
    if (colon != std::string::npos) {
      int h = std::stoi(s.substr(0, colon));
      int m = std::stoi(s.substr(colon + 1));
      if (m < 0 || m > 59) return std::nullopt;
      int sign = (h < 0 || s[0] == '-') ? -1 : 1;
      return sign * (std::abs(h) * 60 + m);
    }
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) return std::nullopt;
    return v;
  } catch (...) {
    return std::nullopt;
  }
}

std::string format_minute(Minute t) {
  if (t <= kNegInf) return "-inf";
  if (t >= kPosInf) return "inf";
  char buf[32];
  if (t < 0) {
    std::snprintf(buf, sizeof buf, "-%d:%02d", (-t) / 60, (-t) % 60);
  } else {
    std::snprintf(buf, sizeof buf, "%d:%02d", t / 60, t % 60);
  }
  return buf;
}

}  // namespace transit
