#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>

namespace tempo::corpus {

struct Date {
  int year = 0;
  int month = 0;  // 1..12
  int day = 0;    // 1..31

  auto operator<=>(const Date&) const = default;
};

// Parses strict "YYYY-MM-DD". Throws on malformed input.
Date parse_date(const std::string& iso);
std::string format_date(const Date& d);

inline int month_index_of(const Date& d) { return d.year * 12 + (d.month - 1); }

struct Document {
  std::string id;
  Date timestamp;
  int month_index = 0;
  std::string text;
  std::string source;
  std::map<std::string, std::string> meta;
};

// Canonical ordering: (timestamp, id).
inline bool doc_before(const Document& a, const Document& b) {
  if (a.timestamp != b.timestamp) return a.timestamp < b.timestamp;
  return a.id < b.id;
}

}  // namespace tempo::corpus
